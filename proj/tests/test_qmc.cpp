// Seeded sampling oracle: determinism, geometry of accepted points, compiled
// evaluation, and statistical agreement with the exact pipeline.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "zetagap/qmc.hpp"
#include "zetagap/region.hpp"

using namespace zetagap;

namespace {

QmcConfig small_config(std::uint64_t seed = 77001) {
    QmcConfig cfg;
    cfg.sample_count = 1000;
    cfg.seed = seed;
    return cfg;
}

bool inside_region(const RegionPoint& w) {
    for (double c : w)
        if (c < 0.0 || c > 1.0) return false;
    for (const auto& con : RegionSpec::constraints())
        if (w[con.ti] + w[con.tj] + w[con.xk] + w[con.zk] > 1.0) return false;
    return true;
}

}  // namespace

TEST_CASE("sampling is deterministic in the seed") {
    const QmcConfig cfg = small_config();
    const SampleBatch a = sample_region(cfg);
    const SampleBatch b = sample_region(cfg);
    CHECK(a.raw_count == b.raw_count);
    REQUIRE(a.points.size() == b.points.size());
    CHECK(a.points == b.points);

    const SampleBatch c = sample_region(small_config(77002));
    CHECK(c.points != a.points);
}

TEST_CASE("thread count never changes the sample stream") {
    QmcConfig cfg = small_config();
    const SampleBatch serial = sample_region(cfg);
    cfg.threads = 4;
    const SampleBatch parallel = sample_region(cfg);
    CHECK(serial.raw_count == parallel.raw_count);
    CHECK(serial.points == parallel.points);
}

TEST_CASE("accepted points satisfy every constraint") {
    const SampleBatch batch = sample_region(small_config());
    REQUIRE(batch.points.size() >= 1000);
    for (const auto& w : batch.points) CHECK(inside_region(w));
    // The region volume is ~6.8e-5 of the unit box.
    CHECK(batch.acceptance_rate() > 4e-5);
    CHECK(batch.acceptance_rate() < 1.1e-4);
}

TEST_CASE("compiled polynomials match exact evaluation") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const MultiPoly p =
        MultiPoly::variable(Var::X1, 2) * MultiPoly::variable(Var::V2) -
        MultiPoly::variable(Var::T3).scaled(Rat(3, 7)) +
        MultiPoly::constant(Rat(1, 4));
    const CompiledPoly cp(p);
    for (int trial = 0; trial < 50; ++trial) {
        RegionPoint w;
        std::map<int, Rat> pt;
        for (int i = 0; i < 16; ++i) {
            const Rat q(static_cast<int>(unif(rng) * 1000), 1000);
            w[i] = static_cast<double>(to_real(q));
            pt[i] = q;
        }
        const double exact = static_cast<double>(to_real(p.eval(pt)));
        CHECK(cp(w) == doctest::Approx(exact).epsilon(1e-12));
    }
}

TEST_CASE("estimates agree with exact integrals at three sigma") {
    const SampleBatch batch = sample_region(small_config());
    SUBCASE("volume") {
        const QmcEstimate est = qmc_estimate(MultiPoly::constant(1), batch);
        CHECK(est.accepted == batch.points.size());
        CHECK(est.raw == batch.raw_count);
        CHECK(est.mean == doctest::Approx(batch.acceptance_rate()));
        CHECK(est.within_sigmas(static_cast<double>(to_real(region_volume())),
                                3.0));
    }
    SUBCASE("a first moment") {
        const MultiPoly p = MultiPoly::variable(Var::X1);
        const double exact =
            static_cast<double>(to_real(integrate_region_scalar(p)));
        CHECK(qmc_estimate(p, batch).within_sigmas(exact, 3.0));
    }
    SUBCASE("functional and polynomial paths agree") {
        const MultiPoly p = MultiPoly::variable(Var::T2) *
                            MultiPoly::variable(Var::V4);
        const CompiledPoly cp(p);
        const QmcEstimate a = qmc_estimate(p, batch);
        const QmcEstimate b = qmc_estimate(
            [&](const RegionPoint& w) { return cp(w); }, batch);
        CHECK(a.mean == b.mean);
        CHECK(a.stderr_ == b.stderr_);
    }
}

TEST_CASE("estimator input validation") {
    SUBCASE("symbolic parameters are rejected") {
        const SampleBatch batch = sample_region(small_config());
        CHECK_THROWS_AS(
            qmc_estimate(MultiPoly::variable(Var::U), batch),
            std::invalid_argument);
    }
    SUBCASE("undersized batches are rejected") {
        SampleBatch tiny;
        tiny.points.resize(5);
        tiny.raw_count = 1000;
        CHECK_THROWS_AS(qmc_estimate(MultiPoly::constant(1), tiny),
                        std::exception);
    }
}

TEST_CASE("splitmix64 scrambles consecutive seeds") {
    CHECK(splitmix64(0) != 0);
    CHECK(splitmix64(0) != splitmix64(1));
    CHECK(splitmix64(1) != splitmix64(2));
}
