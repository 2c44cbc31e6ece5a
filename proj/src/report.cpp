#include "zetagap/report.hpp"

#include <iomanip>
#include <sstream>

namespace zetagap {

Json json_rat(const Rat& x) { return rat_str(x); }

Json json_real(const Real& x, int significant_digits) {
    return real_str(x, significant_digits);
}

Json json_real6(const Real& x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << static_cast<double>(x);
    return os.str();
}

Json to_json(const AmplifierParams& p) {
    Json pc = Json::array();
    for (const auto& c : p.P_coeffs) pc.push_back(json_rat(c));
    return Json{{"r", p.r}, {"P_coeffs", pc}, {"theta", json_rat(p.theta)}};
}

Json to_json(const BoundParams& p) {
    return Json{{"amplifier", to_json(p.amplifier)},
                {"u", json_rat(p.u)},
                {"v", json_rat(p.v)}};
}

Json to_json(const BoundResult& r) {
    Json out{{"params", to_json(r.params)},
             {"c", json_rat(r.c_value)},
             {"c1", json_rat(r.c1_value)},
             {"c2", json_rat(r.c2_value)},
             {"lambda_squared", json_real(r.lambda_squared)},
             {"lambda", json_real(r.lambda)},
             {"lambda_6dp", json_real6(r.lambda)},
             {"provenance", r.provenance}};
    if (r.lambda_squared_exact)
        out["lambda_squared_exact"] = json_rat(*r.lambda_squared_exact);
    return out;
}

Json to_json(const QmcEstimate& e) {
    std::ostringstream mean, se;
    mean << std::setprecision(17) << e.mean;
    se << std::setprecision(17) << e.stderr_;
    return Json{{"mean", mean.str()},
                {"stderr", se.str()},
                {"accepted", e.accepted},
                {"raw", e.raw}};
}

Json to_json(const LemmaReport& r) {
    Json trend = Json::array();
    for (const auto& t : r.trend)
        trend.push_back(Json{{"y", t.y}, {"ratio", json_real(t.ratio, 20)}});
    Json out{{"lemma", r.lemma_id}};
    if (r.y1 == r.y2) {
        out["y"] = r.y1;
    } else {
        out["y1"] = r.y1;
        out["y2"] = r.y2;
    }
    out["lhs"] = json_real(r.lhs);
    out["rhs_main"] = json_real(r.rhs_main);
    out["ratio"] = json_real(r.ratio, 20);
    out["trend"] = trend;
    return out;
}

Json make_report(const std::string& command, Json config, std::uint64_t seed,
                 Json results, Json timings_ms) {
    return Json{{"command", command},   {"config", std::move(config)},
                {"seed", seed},         {"results", std::move(results)},
                {"timings_ms", std::move(timings_ms)},
                {"version", kArtifactVersion}};
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace zetagap
