// JSON report assembly.  Schema, in fixed key order:
//   { command, config, seed, results{...}, timings_ms, version }
// Every numeric leaf that is not an integer count is rendered as a string —
// exact rationals as "p/q", reals to 50 significant digits (plus a parallel
// 6-decimal rendering for headline values) — so parsing a report and
// re-serializing it is byte-identical.

#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "zetagap/bound.hpp"
#include "zetagap/lemmas.hpp"
#include "zetagap/optimize.hpp"
#include "zetagap/qmc.hpp"

namespace zetagap {

using Json = nlohmann::ordered_json;

inline constexpr const char* kArtifactVersion = "1.0.0";

Json json_rat(const Rat& x);                 // "p/q" (or "p" when integral)
Json json_real(const Real& x, int significant_digits = 50);
Json json_real6(const Real& x);              // fixed 6-decimal rendering

Json to_json(const AmplifierParams& p);
Json to_json(const BoundParams& p);
Json to_json(const BoundResult& r);
Json to_json(const QmcEstimate& e);
Json to_json(const LemmaReport& r);

Json make_report(const std::string& command, Json config, std::uint64_t seed,
                 Json results, Json timings_ms);

// dump(2) plus trailing newline; the single rendering used everywhere.
std::string render_report(const Json& report);

}  // namespace zetagap
