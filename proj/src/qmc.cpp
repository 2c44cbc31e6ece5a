#include "zetagap/qmc.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace zetagap {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

namespace {

double next_unit(std::mt19937_64& rng) {
    // 53-bit mantissa; uniform on [0,1).
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct StreamResult {
    std::vector<RegionPoint> points;
    std::uint64_t raw = 0;
};

StreamResult run_stream(std::uint64_t seed, unsigned stream,
                        std::uint64_t quota) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(stream)));
    StreamResult out;
    out.points.reserve(quota);
    while (out.points.size() < quota) {
        ++out.raw;
        RegionPoint w;
        double t1 = next_unit(rng), t2 = next_unit(rng);
        double t3 = next_unit(rng), t4 = next_unit(rng);
        if (t1 + t2 > 1 || t3 + t4 > 1 || t1 + t3 > 1 || t2 + t4 > 1) continue;
        w[T1] = t1;
        w[T2] = t2;
        w[T3] = t3;
        w[T4] = t4;
        bool ok = true;
        for (int k = 0; k < 4 && ok; ++k) {
            // Pair k's triangle: x_{k+1} + z_{k+1} <= 1 - t_i - t_j.
            static constexpr int ti[4] = {T1, T2, T1, T3};
            static constexpr int tj[4] = {T3, T4, T2, T4};
            double x = next_unit(rng), z = next_unit(rng);
            if (x + z > 1.0 - w[ti[k]] - w[tj[k]]) {
                ok = false;
                break;
            }
            w[X1 + k] = x;
            w[Z1 + k] = z;
        }
        if (!ok) continue;
        for (int k = 0; k < 4; ++k) w[V1 + k] = next_unit(rng);
        out.points.push_back(w);
    }
    return out;
}

}  // namespace

SampleBatch sample_region(const QmcConfig& cfg) {
    if (cfg.stream_count == 0)
        throw std::invalid_argument("stream_count must be positive");
    const std::uint64_t quota =
        (cfg.sample_count + cfg.stream_count - 1) / cfg.stream_count;
    std::vector<StreamResult> results(cfg.stream_count);
    unsigned workers = std::max(1u, std::min(cfg.threads, cfg.stream_count));
    if (workers == 1) {
        for (unsigned s = 0; s < cfg.stream_count; ++s)
            results[s] = run_stream(cfg.seed, s, quota);
    } else {
        std::vector<std::thread> pool;
        for (unsigned wkr = 0; wkr < workers; ++wkr)
            pool.emplace_back([&, wkr] {
                for (unsigned s = wkr; s < cfg.stream_count; s += workers)
                    results[s] = run_stream(cfg.seed, s, quota);
            });
        for (auto& th : pool) th.join();
    }
    SampleBatch batch;
    batch.cfg = cfg;
    for (auto& r : results) {
        batch.raw_count += r.raw;
        batch.points.insert(batch.points.end(), r.points.begin(),
                            r.points.end());
    }
    return batch;
}

QmcEstimate qmc_estimate(const std::function<double(const RegionPoint&)>& f,
                         const SampleBatch& batch) {
    if (batch.points.size() < 100)
        throw std::runtime_error("fewer than 100 accepted samples");
    double sum = 0, sum2 = 0;
    for (const auto& w : batch.points) {
        double v = f(w);
        sum += v;
        sum2 += v * v;
    }
    const double n = static_cast<double>(batch.raw_count);
    QmcEstimate est;
    est.accepted = batch.points.size();
    est.raw = batch.raw_count;
    // The indicator-weighted estimator over the full box: points outside R
    // contribute 0, so first and second moments come from accepted sums.
    est.mean = sum / n;
    double variance = sum2 / n - est.mean * est.mean;
    est.stderr_ = variance > 0 ? std::sqrt(variance / n) : 0.0;
    return est;
}

CompiledPoly::CompiledPoly(const MultiPoly& p) {
    if (p.contains_var(U) || p.contains_var(THETA))
        throw std::invalid_argument(
            "compiled integrands require u and theta substituted");
    for (const auto& [m, c] : p.terms()) {
        Term t;
        t.coeff = static_cast<double>(to_real(c));
        for (int v = 0; v < 16; ++v) t.e[v] = m.e[v];
        terms_.push_back(t);
    }
}

double CompiledPoly::operator()(const RegionPoint& w) const {
    double total = 0;
    for (const auto& t : terms_) {
        double val = t.coeff;
        for (int v = 0; v < 16; ++v)
            for (int k = 0; k < t.e[v]; ++k) val *= w[v];
        total += val;
    }
    return total;
}

QmcEstimate qmc_estimate(const MultiPoly& p, const SampleBatch& batch) {
    CompiledPoly cp(p);
    return qmc_estimate([&cp](const RegionPoint& w) { return cp(w); }, batch);
}

QmcEstimate qmc_estimate(const MultiPoly& p, const QmcConfig& cfg) {
    return qmc_estimate(p, sample_region(cfg));
}

}  // namespace zetagap
