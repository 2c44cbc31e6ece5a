// Seeded Monte-Carlo cross-checking oracle for the exact region pipeline.
//
// Points are drawn uniformly from [0,1]^16 and rejected against the four
// linear constraints; the accepted fraction times the sample mean estimates
// the integral over R.  Rejection keeps the estimator trivially unbiased at
// the price of the region's small volume (~7e-5), so generation cost is paid
// once per batch and many integrands are then evaluated on the same batch.
//
// Determinism contract: results depend only on (seed, stream_count), never on
// how many worker threads execute the streams.  Per-stream generators are
// seeded by a SplitMix64 hash of (seed, stream index).

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "zetagap/poly.hpp"

namespace zetagap {

struct QmcConfig {
    std::uint64_t sample_count = 100000;  // accepted samples to collect
    std::uint64_t seed = 20260821;
    unsigned stream_count = 16;
    unsigned threads = 1;
};

// One accepted point: coordinates indexed by Var (x1..x4, z1..z4, t1..t4,
// v1..v4 at indices 0..15).
using RegionPoint = std::array<double, 16>;

struct SampleBatch {
    std::vector<RegionPoint> points;  // the accepted samples, in stream order
    std::uint64_t raw_count = 0;      // total box points drawn across streams
    QmcConfig cfg;

    double acceptance_rate() const {
        return raw_count ? static_cast<double>(points.size()) / raw_count : 0.0;
    }
};

struct QmcEstimate {
    double mean = 0;       // estimate of the integral over R
    double stderr_ = 0;    // standard error of the mean
    std::uint64_t accepted = 0;
    std::uint64_t raw = 0;

    bool within_sigmas(double exact, double k) const {
        return std::abs(mean - exact) <= k * stderr_;
    }
};

// Draw batches until each stream holds its quota ceil(sample_count/streams).
SampleBatch sample_region(const QmcConfig& cfg);

// Estimate integral over R of an arbitrary evaluator on a shared batch.
QmcEstimate qmc_estimate(const std::function<double(const RegionPoint&)>& f,
                         const SampleBatch& batch);

// Estimate for a polynomial integrand (u and theta must not appear).
// Throws if the batch holds fewer than 100 accepted samples.
QmcEstimate qmc_estimate(const MultiPoly& p, const SampleBatch& batch);
QmcEstimate qmc_estimate(const MultiPoly& p, const QmcConfig& cfg);

// Compiled double-precision form of a polynomial over the 16 region
// variables; evaluation cost is one multiply per exponent unit per term.
class CompiledPoly {
  public:
    explicit CompiledPoly(const MultiPoly& p);
    double operator()(const RegionPoint& w) const;

  private:
    struct Term {
        double coeff;
        std::array<std::uint8_t, 16> e;
    };
    std::vector<Term> terms_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace zetagap
