// Command-line entry point.  Subcommands: reproduce-hall, reproduce-paper,
// integrate, optimize, verify-lemmas.  Every run emits one JSON report
// (stdout or --out) with schema {command, config, seed, results, timings_ms,
// version}; a short human summary goes to stderr.  Exit codes: 0 success,
// 1 result-assertion failure, 2 usage or parse error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zetagap/arith.hpp"
#include "zetagap/bound.hpp"
#include "zetagap/integrands.hpp"
#include "zetagap/lemmas.hpp"
#include "zetagap/optimize.hpp"
#include "zetagap/qmc.hpp"
#include "zetagap/region.hpp"
#include "zetagap/report.hpp"

namespace {

using namespace zetagap;
using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 t0)
        .count();
}

struct CommonOpts {
    std::string config_path, out_path;
    std::uint64_t seed = 20260821;
    unsigned threads = 1;
    bool qmc = false;
    std::uint64_t samples = 100000;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "JSON config file");
    cmd->add_option("--seed", o.seed, "seed for the sampling oracle");
    cmd->add_option("--threads", o.threads, "worker thread cap");
    cmd->add_flag("--qmc", o.qmc, "append Monte-Carlo cross-checks");
    cmd->add_option("--samples", o.samples,
                    "accepted samples per Monte-Carlo estimate");
    cmd->add_option("--out", o.out_path, "write the JSON report to this path");
}

Json load_config(const std::string& path) {
    if (path.empty()) return Json::object();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return Json::parse(in);
}

void emit(const Json& report, const CommonOpts& o) {
    const std::string text = render_report(report);
    if (o.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out_path);
        if (!f) throw std::runtime_error("cannot write " + o.out_path);
        f << text;
    }
}

void human(const std::string& k, const std::string& v) {
    std::cerr << "  " << k;
    for (std::size_t i = k.size(); i < 24; ++i) std::cerr << ' ';
    std::cerr << v << "\n";
}

Rat config_rat(const Json& cfg, const std::string& key, const Rat& dflt) {
    if (!cfg.contains(key)) return dflt;
    return parse_rational(cfg.at(key).get<std::string>());
}

QmcConfig make_qmc_config(const CommonOpts& o) {
    QmcConfig qc;
    qc.sample_count = o.samples;
    qc.seed = o.seed;
    qc.threads = o.threads;
    return qc;
}

// Monte-Carlo agreement block for the three constants at a parameter point.
Json qmc_crosscheck(const BoundParams& bp, const MomentConstants& mc,
                    const CommonOpts& o, Json& timings) {
    auto t0 = Clock::now();
    const SampleBatch batch = sample_region(make_qmc_config(o));
    timings["qmc_sampling"] = ms_since(t0);

    t0 = Clock::now();
    const MomentIntegrandEvaluator ev(bp.amplifier,
                                      static_cast<double>(to_real(bp.u)));
    const Rat& th = bp.amplifier.theta;
    struct Row {
        const char* name;
        Rat exact;
        std::function<double(const RegionPoint&)> f;
    };
    const Row rows[3] = {
        {"c", mc.eval_c(th), [&](const RegionPoint& w) { return ev.eval_c(w); }},
        {"c1", mc.eval_c1(bp.u, th),
         [&](const RegionPoint& w) { return ev.eval_c1(w); }},
        {"c2", mc.eval_c2(bp.u, th),
         [&](const RegionPoint& w) { return ev.eval_c2(w); }},
    };
    Json out = Json::object();
    bool all_ok = true;
    for (const auto& row : rows) {
        const QmcEstimate est = qmc_estimate(row.f, batch);
        const double exact = static_cast<double>(to_real(row.exact));
        const double sig =
            est.stderr_ > 0 ? std::abs(est.mean - exact) / est.stderr_ : 0.0;
        const bool ok = est.within_sigmas(exact, 3.0);
        all_ok = all_ok && ok;
        std::ostringstream sig_s;
        sig_s << std::fixed << std::setprecision(2) << sig;
        Json j = to_json(est);
        j["exact"] = json_rat(row.exact);
        j["sigmas"] = sig_s.str();
        j["within_3_sigma"] = ok;
        out[row.name] = std::move(j);
    }
    out["all_within_3_sigma"] = all_ok;
    timings["qmc_evaluation"] = ms_since(t0);
    return out;
}

bool trend_converging(const LemmaReport& rep) {
    for (std::size_t i = 1; i < rep.trend.size(); ++i)
        if (abs(rep.trend[i].ratio - 1) >= abs(rep.trend[i - 1].ratio - 1))
            return false;
    return rep.trend.size() >= 3;
}

int cmd_reproduce_hall(const CommonOpts& o) {
    Json timings = Json::object();
    auto t0 = Clock::now();
    AmplifierParams amp;  // r = 1, P = 1, theta = 0
    const MomentConstants mc = compute_moment_constants(amp);
    timings["integration"] = ms_since(t0);

    const Rat c = mc.eval_c(0);
    const Rat r1 = mc.eval_c1(Rat(1, 2), 0) / c;
    const Rat r2 = mc.eval_c2(Rat(1, 2), 0) / c;
    const bool ratios_exact = r1 == Rat(1, 560) && r2 == Rat(1, 60);

    // Sweep v over a grid containing 22/49 and locate the maximum.
    t0 = Clock::now();
    BoundParams bp;
    bp.u = Rat(1, 2);
    Rat v_star = 0;
    Real best = 0;
    bool have = false;
    for (int k = 0; k <= 980; ++k) {  // step 1/980; 22/49 = 440/980
        bp.v = Rat(k, 980);
        const BoundResult r = evaluate_bound(bp, mc);
        if (!have || r.lambda_squared > best) {
            have = true;
            best = r.lambda_squared;
            v_star = bp.v;
        }
    }
    timings["v_sweep"] = ms_since(t0);

    bp.v = v_star;
    const BoundResult at_star = evaluate_bound(bp, mc);
    const bool v_exact = v_star == Rat(22, 49);
    const bool lam_exact = at_star.lambda_squared_exact &&
                           *at_star.lambda_squared_exact == Rat(11, 2);

    Json results{
        {"c_at_theta_0", json_rat(c)},
        {"c1_over_c", json_rat(r1)},
        {"c2_over_c", json_rat(r2)},
        {"ratios_exact", ratios_exact},
        {"v_star", json_rat(v_star)},
        {"v_star_exact", v_exact},
        {"lambda_squared",
         at_star.lambda_squared_exact ? json_rat(*at_star.lambda_squared_exact)
                                      : json_real(at_star.lambda_squared)},
        {"lambda_squared_exact", lam_exact},
        {"bound", to_json(at_star)},
    };
    if (o.qmc) results["qmc"] = qmc_crosscheck(bp, mc, o, timings);

    emit(make_report("reproduce-hall", Json::object(), o.seed, results,
                     timings),
         o);
    human("c1/c", rat_str(r1));
    human("c2/c", rat_str(r2));
    human("v*", rat_str(v_star));
    human("Lambda^2", at_star.lambda_squared_exact
                          ? rat_str(*at_star.lambda_squared_exact)
                          : real_str(at_star.lambda_squared, 20));
    human("Lambda", static_cast<std::string>(json_real6(at_star.lambda)));
    return ratios_exact && v_exact && lam_exact ? 0 : 1;
}

int cmd_reproduce_paper(const CommonOpts& o) {
    Json timings = Json::object();
    auto t0 = Clock::now();
    AmplifierParams amp;
    amp.theta = Rat(1249, 10000);
    const MomentConstants mc = compute_moment_constants(amp);
    timings["integration"] = ms_since(t0);

    BoundParams bp;
    bp.amplifier = amp;
    bp.u = Rat(3, 5);
    bp.v = Rat(2, 5);
    const BoundResult r = evaluate_bound(bp, mc);
    const bool above = r.lambda > Real("2.64");

    Json results{
        {"bound", to_json(r)},
        {"lambda_6dp", json_real6(r.lambda)},
        {"lambda_above_2_64", above},
    };
    if (o.qmc) results["qmc"] = qmc_crosscheck(bp, mc, o, timings);

    emit(make_report("reproduce-paper", Json::object(), o.seed, results,
                     timings),
         o);
    human("Lambda", static_cast<std::string>(json_real6(r.lambda)));
    human("above 2.64", above ? "yes" : "no");
    human("provenance", r.provenance);
    return above ? 0 : 1;
}

int cmd_integrate(const CommonOpts& o, const Json& cfg,
                  const std::string& integrand_text,
                  const std::string& constant_name, int r,
                  const std::string& P_text, const std::string& theta_text,
                  const std::string& u_text) {
    Json timings = Json::object();
    Json config = cfg;
    Json results = Json::object();

    if (!integrand_text.empty()) {
        MultiPoly::ParseError err;
        const MultiPoly p = MultiPoly::parse(integrand_text, &err);
        if (!err.message.empty()) {
            std::cerr << "integrand parse error: line 1, column "
                      << err.position + 1 << ": " << err.message << "\n";
            return 2;
        }
        config["integrand"] = integrand_text;
        auto t0 = Clock::now();
        const MultiPoly exact = integrate_region(p);
        timings["integration"] = ms_since(t0);
        results["integrand"] = p.to_string();
        results["exact"] = exact.to_string();
        if (o.qmc) {
            t0 = Clock::now();
            const QmcEstimate est = qmc_estimate(p, make_qmc_config(o));
            const double ex = static_cast<double>(to_real(exact.constant_value()));
            Json j = to_json(est);
            j["exact"] = json_rat(exact.constant_value());
            j["within_3_sigma"] = est.within_sigmas(ex, 3.0);
            results["qmc"] = std::move(j);
            timings["qmc"] = ms_since(t0);
        }
        emit(make_report("integrate", config, o.seed, results, timings), o);
        human("exact", exact.to_string());
        return 0;
    }

    AmplifierParams amp;
    amp.r = r;
    amp.P_coeffs.clear();
    std::stringstream ps(P_text);
    std::string tok;
    while (std::getline(ps, tok, ','))
        amp.P_coeffs.push_back(parse_rational(tok));
    if (amp.P_coeffs.empty()) amp.P_coeffs.push_back(Rat(1));
    amp.validate();

    config["constant"] = constant_name;
    config["r"] = r;
    config["P"] = P_text;
    auto t0 = Clock::now();
    const MomentConstants mc = compute_moment_constants(amp);
    timings["integration"] = ms_since(t0);

    const MultiPoly& poly = constant_name == "c1"
                                ? mc.c1
                                : constant_name == "c2" ? mc.c2 : mc.c;
    results["constant"] = constant_name;
    results["polynomial"] = poly.to_string();
    if (!theta_text.empty()) {
        const Rat th = parse_rational(theta_text);
        if (th < 0 || th >= Rat(1, 8))
            throw CLI::ValidationError("--theta must lie in [0, 1/8)");
        config["theta"] = theta_text;
        const Rat u = u_text.empty() ? Rat(1, 2) : parse_rational(u_text);
        if (!u_text.empty()) config["u"] = u_text;
        const Rat val = constant_name == "c1"
                            ? mc.eval_c1(u, th)
                            : constant_name == "c2" ? mc.eval_c2(u, th)
                                                    : mc.eval_c(th);
        results["value"] = json_rat(val);
        results["value_6dp"] = json_real6(to_real(val));
    }
    emit(make_report("integrate", config, o.seed, results, timings), o);
    human("constant", constant_name);
    human("polynomial", poly.to_string());
    return 0;
}

int cmd_optimize(const CommonOpts& o, const Json& cfg,
                 std::string trace_path) {
    OptimizerConfig oc;
    oc.theta_min = config_rat(cfg, "theta_min", oc.theta_min);
    oc.theta_max = config_rat(cfg, "theta_max", oc.theta_max);
    oc.u_min = config_rat(cfg, "u_min", oc.u_min);
    oc.u_max = config_rat(cfg, "u_max", oc.u_max);
    oc.v_min = config_rat(cfg, "v_min", oc.v_min);
    oc.v_max = config_rat(cfg, "v_max", oc.v_max);
    oc.p_coeff_min = config_rat(cfg, "p_coeff_min", oc.p_coeff_min);
    oc.p_coeff_max = config_rat(cfg, "p_coeff_max", oc.p_coeff_max);
    oc.theta_steps = cfg.value("theta_steps", oc.theta_steps);
    oc.u_steps = cfg.value("u_steps", oc.u_steps);
    oc.v_steps = cfg.value("v_steps", oc.v_steps);
    oc.p_coeff_steps = cfg.value("p_coeff_steps", oc.p_coeff_steps);
    oc.max_iterations = cfg.value("max_iterations", oc.max_iterations);
    oc.shrink_tolerance = cfg.value("shrink_tolerance", oc.shrink_tolerance);
    oc.seed = o.seed;
    const int r = cfg.value("r", 1);
    const int P_degree = cfg.value("P_degree", 0);

    Json timings = Json::object();
    auto t0 = Clock::now();
    const OptimizeOutcome res = optimize_bound(oc, r, P_degree);
    timings["optimize"] = ms_since(t0);

    if (trace_path.empty() && !o.out_path.empty())
        trace_path = o.out_path + ".trace.csv";
    if (!trace_path.empty()) {
        std::ofstream csv(trace_path);
        csv << "phase,theta,u,v,lambda_squared,best_so_far\n";
        Real best = 0;
        bool have = false;
        for (const auto& e : res.trace) {
            if (!have || e.lambda_squared > best) best = e.lambda_squared;
            have = true;
            csv << e.phase << ',' << rat_str(e.theta) << ',' << rat_str(e.u)
                << ',' << rat_str(e.v) << ',' << real_str(e.lambda_squared, 20)
                << ',' << real_str(best, 20) << '\n';
        }
    }

    Json results{{"best", to_json(res.best)},
                 {"evaluations", res.evaluations},
                 {"trace_rows", res.trace.size()},
                 {"budget_exhausted", res.budget_exhausted}};
    if (!trace_path.empty()) results["trace_csv"] = trace_path;
    emit(make_report("optimize", cfg, o.seed, results, timings), o);
    human("best Lambda", static_cast<std::string>(json_real6(res.best.lambda)));
    human("at (theta,u,v)", rat_str(res.best.params.amplifier.theta) + ", " +
                                rat_str(res.best.params.u) + ", " +
                                rat_str(res.best.params.v));
    return 0;
}

int cmd_verify_lemmas(const CommonOpts& o, const Json& cfg,
                      std::uint64_t y_opt) {
    std::uint64_t y = y_opt ? y_opt : cfg.value("y", std::uint64_t{1000000});
    if (y < 200)
        throw CLI::ValidationError(
            "--y " + std::to_string(y) +
            " is too small for a trend (need y >= 200)");
    const std::uint64_t y22 =
        std::min<std::uint64_t>(cfg.value("y22", std::uint64_t{10000}), y);

    Json timings = Json::object();
    Json reports = Json::array();
    bool all_ok = true;
    const TestPoly one{Rat(1)};
    auto add = [&](const char* tag, const LemmaReport& rep) {
        const bool ok = trend_converging(rep);
        all_ok = all_ok && ok;
        Json j = to_json(rep);
        j["trend_converging"] = ok;
        reports.push_back(std::move(j));
        human(std::string("lemma ") + rep.lemma_id + " " + tag,
              std::string(ok ? "converging" : "NOT converging") + " (ratio " +
                  static_cast<std::string>(json_real6(rep.ratio)) + ")");
    };

    auto t0 = Clock::now();
    add("r=1", verify_lemma_21(1, y, y, one, one));
    add("r=2", verify_lemma_21(2, y, y, one, one));
    timings["lemma_21"] = ms_since(t0);
    t0 = Clock::now();
    add("r=1", verify_lemma_22(1, y22, {one, one, one, one}));
    timings["lemma_22"] = ms_since(t0);
    t0 = Clock::now();
    add("r=1 j=0 n=1", verify_lemma_23(1, 0, 1, y));
    add("r=2 j=0 n=1", verify_lemma_23(2, 0, 1, y));
    timings["lemma_23"] = ms_since(t0);

    Json results{{"reports", std::move(reports)},
                 {"all_trends_converging", all_ok}};
    Json config{{"y", y}, {"y22", y22}};
    emit(make_report("verify-lemmas", config, o.seed, results, timings), o);
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact moment-constant pipeline and gap lower bounds for the zeta "
        "zero spacing problem"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string integrand_text, constant_name = "c", P_text = "1";
    std::string theta_text, u_text, trace_path;
    int r = 1;
    std::uint64_t y_opt = 0;

    auto* hall = app.add_subcommand("reproduce-hall",
                                    "exact reduced bound: v* = 22/49, "
                                    "Lambda^2 = 11/2");
    add_common(hall, o);
    auto* paper = app.add_subcommand(
        "reproduce-paper", "exact bound at theta = 0.1249, u = 3/5, v = 2/5");
    add_common(paper, o);
    auto* integ = app.add_subcommand(
        "integrate", "exact region integration of a constant or polynomial");
    add_common(integ, o);
    integ->add_option("--integrand", integrand_text,
                      "polynomial text to integrate over the region");
    integ->add_option("--constant", constant_name,
                      "which moment constant: c, c1, or c2")
        ->check(CLI::IsMember({"c", "c1", "c2"}));
    integ->add_option("--r", r, "divisor order of the amplifier");
    integ->add_option("--P", P_text, "amplifier polynomial coefficients, "
                                     "comma-separated rationals");
    integ->add_option("--theta", theta_text, "evaluate at this theta");
    integ->add_option("--u", u_text, "evaluate at this u (default 1/2)");
    auto* opt = app.add_subcommand("optimize",
                                   "search (theta, u, v, P) for the best "
                                   "bound");
    add_common(opt, o);
    opt->add_option("--trace-out", trace_path, "write the search trace CSV "
                                               "to this path");
    auto* lem = app.add_subcommand("verify-lemmas",
                                   "brute-force divisor-sum trend checks");
    add_common(lem, o);
    lem->add_option("--y", y_opt, "top sum scale (>= 200)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Json cfg = load_config(o.config_path);
        if (hall->parsed()) return cmd_reproduce_hall(o);
        if (paper->parsed()) return cmd_reproduce_paper(o);
        if (integ->parsed())
            return cmd_integrate(o, cfg, integrand_text, constant_name, r,
                                 P_text, theta_text, u_text);
        if (opt->parsed()) return cmd_optimize(o, cfg, trace_path);
        if (lem->parsed()) return cmd_verify_lemmas(o, cfg, y_opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
