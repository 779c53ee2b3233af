#include "znt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <sstream>

#include "znt/calibration.hpp"
#include "znt/explicit_formula.hpp"
#include "znt/oracle_values.hpp"
#include "znt/perron.hpp"
#include "znt/selberg.hpp"
#include "znt/sieve.hpp"
#include "znt/typicality.hpp"
#include "znt/zeros.hpp"
#include "znt/zeta.hpp"
#include "znt/zeta_bounds.hpp"

namespace znt {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

struct Fixtures {
    VerifyOptions opts;
    SieveTable sieve;          // 1e6 (quick) or 1e7 (full)
    ZeroCache cache;           // [10, 2300]
    ZeroCache cache_big;       // [10, 10002], full mode only
    Calibration cal;
};

void note(const Fixtures& fx, const char* msg) {
    if (fx.opts.progress) std::fprintf(stderr, "[verify] %s\n", msg);
}

// ---------------------------------------------------------------- criterion 1

CriterionResult crit_selberg(const Fixtures& fx) {
    CriterionResult r{1, "selberg-suite", true, ""};
    int sandwich_n = fx.opts.quick ? 2000 : 10000;
    double worst_l1 = -1e18, worst_fhat = 0.0, worst_beurling = 0.0;
    long long violations = 0;
    for (auto [h, delta] : std::vector<std::pair<double, double>>{
             {1.0, 1.0}, {1.0, 8.0}, {0.25, 16.0}}) {
        SelbergPair p{h, delta};
        double span = 2.0 * h + 10.0 / delta + 5.0;
        for (int k = 0; k < sandwich_n; ++k) {
            double u = -span + (k + 0.383) * (2.0 * span / sandwich_n);
            double chi = (std::abs(u) <= h) ? 1.0 : 0.0;
            if (selberg_minorant(u, p) > chi + 1e-12) ++violations;
            if (selberg_majorant(u, p) < chi - 1e-12) ++violations;
        }
        for (int sign : {+1, -1}) {
            double excess = selberg_l1_distance(p, sign) - (1.0 / delta + 1e-3);
            worst_l1 = std::max(worst_l1, excess);
            for (double m : {1.0, 1.5, 2.0}) {
                double v = std::abs(selberg_fourier_quad(m * delta, p, sign));
                worst_fhat = std::max(worst_fhat, v);
            }
        }
    }
    for (int sign : {+1, -1})
        worst_beurling =
            std::max(worst_beurling, std::abs(beurling_l1(200.0, sign) - 1.0));
    r.pass = violations == 0 && worst_l1 <= 0.0 && worst_fhat <= 1e-6 &&
             worst_beurling <= 1e-3;
    r.detail = fmt("sandwich_violations=%lld l1_excess=%.12g fhat_max=%.12g "
                   "beurling_dev=%.12g",
                   violations, worst_l1, worst_fhat, worst_beurling);
    return r;
}

// ---------------------------------------------------------------- criterion 2

CriterionResult crit_zero_engine(const Fixtures& fx) {
    CriterionResult r{2, "zero-engine", true, ""};
    double worst_ord = 0.0;
    for (int i = 0; i < 100; ++i)
        worst_ord = std::max(
            worst_ord, std::abs(fx.cache.ordinates[i] - oracle::kZeroOrdinates[i]));
    long long n100_cache = n_of_t(100.0, fx.cache);
    long long n100_formula = zero_count_formula(100.0);
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> us(0.2, 0.8), ut(10.0, 90.0);
    double worst_fe = 0.0;
    for (int i = 0; i < 20; ++i) {
        cplx s(us(rng), ut(rng));
        cplx lhs = zeta(s);
        cplx rhs = chi_factor(s) * zeta(1.0 - s);
        worst_fe = std::max(worst_fe, std::abs(lhs - rhs) / std::abs(lhs));
    }
    r.pass = worst_ord <= 1e-6 && n100_cache == 29 && n100_formula == 29 &&
             worst_fe <= 1e-8;
    r.detail = fmt("ordinate_err=%.12g count_cache=%lld count_formula=%lld "
                   "functional_eq=%.12g",
                   worst_ord, n100_cache, n100_formula, worst_fe);
    return r;
}

// ---------------------------------------------------------------- criterion 3

CriterionResult crit_explicit_formula(const Fixtures& fx) {
    CriterionResult r{3, "explicit-formula", true, ""};
    struct Cfg { double t, h, delta; };
    std::vector<Cfg> cfgs{{100.0, 1.0, 1.0}};
    if (!fx.opts.quick) {
        cfgs.push_back({500.0, 0.5, 2.0});
        cfgs.push_back({1000.0, 1.0, 1.0});
    }
    double worst_res = 0.0, worst_budget = 0.0;
    PrimeSideTable t11p, t11m;
    bool have11 = false;
    for (const Cfg& c : cfgs) {
        SelbergPair p{c.h, c.delta};
        for (int sign : {+1, -1}) {
            ExplicitFormulaReport rep;
            if (c.h == 1.0 && c.delta == 1.0) {
                if (!have11) {
                    t11p = build_prime_side_table(p, fx.sieve, +1);
                    t11m = build_prime_side_table(p, fx.sieve, -1);
                    have11 = true;
                }
                rep = explicit_formula_check(c.t, fx.cache, sign > 0 ? t11p : t11m);
            } else {
                rep = explicit_formula_check(c.t, p, fx.cache, fx.sieve, sign);
            }
            if (std::abs(rep.residual) > rep.truncation_budget) r.pass = false;
            worst_res = std::max(worst_res, std::abs(rep.residual));
            worst_budget = std::max(worst_budget, rep.truncation_budget);
        }
    }
    if (worst_budget > 0.05) r.pass = false;
    r.detail = fmt("configs=%zu max_residual=%.12g max_budget=%.12g", cfgs.size(),
                   worst_res, worst_budget);
    return r;
}

// ---------------------------------------------------------------- criterion 4

CriterionResult crit_window_ineq(const Fixtures& fx) {
    CriterionResult r{4, "window-inequality", true, ""};
    double T = 1000.0;
    WindowIneqConfig cfg = window_ineq_config(T, 4.0, 1.0);
    SelbergPair p{cfg.h, cfg.delta};
    PrimeSideTable plus = build_prime_side_table(p, fx.sieve, +1);
    PrimeSideTable minus = build_prime_side_table(p, fx.sieve, -1);
    int fails = 0;
    double min_margin = 1e18;
    for (int k = 0; k < 100; ++k) {
        double t = T + (k + 0.5) * T / 100.0;
        WindowIneqReport rep = window_ineq_check(t, cfg, fx.cache, plus, minus);
        if (!rep.holds) ++fails;
        min_margin = std::min(min_margin, rep.rhs - rep.lhs);
    }
    r.pass = fails == 0;
    r.detail = fmt("sampled=100 failures=%d min_margin=%.12g delta=%.12g", fails,
                   min_margin, cfg.delta);
    return r;
}

// ---------------------------------------------------------------- criterion 5

int mu_trial_division(long long n) {
    int cnt = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++cnt;
        }
    }
    if (n > 1) ++cnt;
    return (cnt % 2 == 0) ? 1 : -1;
}

CriterionResult crit_mertens(const Fixtures& fx) {
    CriterionResult r{5, "mertens", true, ""};
    long long oracle_limit = fx.opts.quick ? 100000 : 1000000;
    long long m = 0, mismatches = 0;
    MertensPrefix pre = mertens_prefix(fx.sieve);
    for (long long n = 1; n <= oracle_limit; ++n) {
        m += mu_trial_division(n);
        if (pre.values[n] != m) ++mismatches;
    }
    std::vector<double> xs{1e3, 1e5, fx.opts.quick ? 1e6 : 1e7};
    long long seg_mismatch = 0;
    double max_ratio = 0.0;
    for (double x : xs) {
        SegmentedMertensResult seg = mertens_segmented(x, 1u << 22, fx.opts.threads);
        if (seg.value != mertens(x, fx.sieve)) ++seg_mismatch;
        max_ratio = std::max(max_ratio, seg.max_ratio);
    }
    r.pass = mismatches == 0 && seg_mismatch == 0 && max_ratio <= 1.0;
    r.detail = fmt("oracle_limit=%lld mismatches=%lld segment_mismatches=%lld "
                   "max_ratio=%.12g",
                   oracle_limit, mismatches, seg_mismatch, max_ratio);
    return r;
}

// ---------------------------------------------------------------- criterion 6

// exact maximum number of points with pairwise gaps >= 1 inside a union of
// intervals: enumerate the left-shifted candidate positions and run a
// right-to-left longest-chain pass
long long dp_max_spaced(std::vector<std::pair<double, double>> iv) {
    if (iv.empty()) return 0;
    std::sort(iv.begin(), iv.end());
    std::vector<double> ends;
    for (const auto& [a, b] : iv) ends.push_back(b);
    auto next_in_union = [&](double t) {
        auto it = std::lower_bound(ends.begin(), ends.end(), t - 1e-12);
        if (it == ends.end()) return 1e300;
        return std::max(t, iv[size_t(it - ends.begin())].first);
    };
    std::vector<double> cand;
    for (const auto& [a, b] : iv) {
        double t = a;
        while (t < 1e299) {
            double u = next_in_union(t);
            if (u > 1e299) break;
            cand.push_back(u);
            if (cand.size() > 200000) break;
            t = u + 1.0;
        }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    // chain[i] = longest well-spaced chain starting at cand[i]
    std::vector<long long> chain(cand.size(), 1);
    long long best = 0;
    for (long long i = (long long)cand.size() - 1; i >= 0; --i) {
        auto it = std::lower_bound(cand.begin(), cand.end(), cand[i] + 1.0 - 1e-12);
        if (it != cand.end())
            chain[i] = 1 + chain[size_t(it - cand.begin())];
        best = std::max(best, chain[i]);
    }
    return best;
}

double max_abs_discrepancy(double T, double h, const ZeroCache& cache) {
    std::vector<double> bp{T};
    for (double g : cache.ordinates)
        for (double b : {g - h, g + h})
            if (b > T && b < 2.0 * T) bp.push_back(b);
    bp.push_back(2.0 * T);
    std::sort(bp.begin(), bp.end());
    double worst = 0.0;
    for (size_t i = 0; i + 1 < bp.size(); ++i) {
        for (double t : {bp[i] + 1e-9, bp[i + 1] - 1e-9}) {
            double d = clustering_discrepancy(t, h, cache);
            worst = std::max(worst, std::abs(d));
        }
    }
    return worst;
}

CriterionResult crit_clustering_scan(const Fixtures& fx) {
    CriterionResult r{6, "clustering-scan", true, ""};
    std::vector<double> Ts{1000.0};
    if (!fx.opts.quick) Ts.push_back(5000.0);
    double h = 1.0;
    long long dp_mismatch = 0, monotone_fail = 0, zero_fail = 0;
    double worst_disc = 0.0;
    for (double T : Ts) {
        const ZeroCache& cache = (T > 1100.0) ? fx.cache_big : fx.cache;
        long long prev = -1;
        for (double V : {0.5, 1.0, 1.5, 2.0, 3.0}) {
            ScanResult s = scan_clustering(T, h, V, cache);
            if (prev >= 0 && s.R > prev) ++monotone_fail;
            prev = s.R;
            auto iv = violation_intervals(T, h, V, cache);
            if (iv.size() <= 1000 && dp_max_spaced(iv) != s.R) ++dp_mismatch;
        }
        double mx = max_abs_discrepancy(T, h, cache);
        worst_disc = std::max(worst_disc, mx);
        if (scan_clustering(T, h, mx + 0.01, cache).R != 0) ++zero_fail;
    }
    r.pass = dp_mismatch == 0 && monotone_fail == 0 && zero_fail == 0;
    r.detail = fmt("T_count=%zu dp_mismatches=%lld monotone_fails=%lld "
                   "above_max_nonzero=%lld max_discrepancy=%.12g",
                   Ts.size(), dp_mismatch, monotone_fail, zero_fail, worst_disc);
    return r;
}

// ---------------------------------------------------------------- criterion 7

// from-scratch classifier used only as a cross-check: dense sigma sampling
// for the polynomial sup and a sliding-window sweep for the counts
bool independent_typical(double t, double V, double T, const SieveTable& sieve,
                         const ZeroCache& cache) {
    double x = std::pow(T, 1.0 / V);
    double lx = std::log(x);
    double sup = 0.0;
    if (x >= 2.0) {
        for (int k = 0; k <= 400; ++k) {
            double sigma = 0.5 + k * (10.0 / lx) / 400.0;
            cplx sum = 0.0;
            for (long long n = 2; n <= (long long)x; ++n) {
                double lam = sieve.lambda(n);
                if (lam == 0.0) continue;
                double ln = std::log((double)n);
                double a = lam * (lx - ln) / (ln * lx);
                sum += a * std::exp(-sigma * ln) *
                       cplx(std::cos(t * ln), -std::sin(t * ln));
            }
            sup = std::max(sup, std::abs(sum));
        }
    }
    if (sup > 2.0 * V) return false;
    auto window_count = [&](double L) {
        if (L >= 2.0) return 0LL;
        long long worst = 0;
        for (double a = t - 1.0 + 1e-7; a + L < t + 1.0 - 1e-7; a += 1e-3) {
            long long c = 0;
            for (double g : cache.ordinates)
                if (g >= a && g <= a + L) ++c;
            worst = std::max(worst, c);
        }
        return worst;
    };
    double lt = std::log(T), lv = std::log(V);
    if (window_count(kTwoPi * V / lt) > 3.0 * V) return false;
    double L3 = (lv > 0.0) ? kTwoPi * V / (lv * lt) : 1e30;
    if ((double)window_count(L3) > V) return false;
    return true;
}

CriterionResult crit_typicality(const Fixtures& fx) {
    CriterionResult r{7, "typicality", true, ""};
    double T = 1000.0;
    double llT = std::log(std::log(T));
    double V = llT * llT;  // top of the admissible range at this height
    int n_points = fx.opts.quick ? 25 : 100;
    int atypical = 0, verdict_mismatch = 0;
    double min_slack = 1e18;
    for (int k = 0; k < n_points; ++k) {
        double t = T + (k + 0.5) * T / n_points;
        TypicalityReport rep = classify(t, V, T, fx.sieve, fx.cache);
        if (!rep.typical) ++atypical;
        if (rep.typical != independent_typical(t, V, T, fx.sieve, fx.cache))
            ++verdict_mismatch;
        if (rep.typical) {
            for (const BoundReport& b :
                 lower_bound_grid(t, V, T, fx.sieve, fx.cache, fx.cal))
                min_slack = std::min(min_slack, b.slack);
        }
    }
    r.pass = atypical == 0 && verdict_mismatch == 0 && min_slack >= 0.0;
    r.detail = fmt("sampled=%d atypical=%d verdict_mismatches=%d "
                   "min_bound_slack=%.12g V=%.12g",
                   n_points, atypical, verdict_mismatch, min_slack, V);
    return r;
}

// ---------------------------------------------------------------- criterion 8

CriterionResult crit_perron(const Fixtures& fx) {
    CriterionResult r{8, "perron", true, ""};
    std::vector<double> xs{2.5, 10.5, 100.5};
    std::vector<double> deform_xs{100.5};
    if (!fx.opts.quick) {
        xs.push_back(500.5);
        deform_xs.push_back(500.5);
    }
    double worst_ratio = 0.0, worst_imag = 0.0;
    for (double x : xs) {
        PerronResult pr = perron_vertical(x, fx.cache);
        double m = (double)mertens(x, fx.sieve);
        worst_ratio = std::max(
            worst_ratio, std::abs(pr.integral.real() - m) /
                             (fx.cal.perron_log * std::log(x)));
        worst_imag = std::max(worst_imag, std::abs(pr.integral.imag()));
    }
    double worst_cauchy = -1e18;
    long long envelope_fails = 0;
    for (double x : deform_xs) {
        ContourPath path = build_deformed_contour(x, fx.sieve, fx.cache);
        DeformedResult dr = deformed_integral(path, fx.cal, {}, fx.opts.threads);
        PerronResult pr = perron_vertical(x, fx.cache);
        double budget = dr.quad_error + pr.quad_error + 1e-6;
        worst_cauchy = std::max(worst_cauchy,
                                std::abs(dr.integral - pr.integral) - budget);
        for (const SegmentReport& s : dr.segments)
            if (!s.within_envelope) ++envelope_fails;
    }
    r.pass = worst_ratio <= 1.0 && worst_imag <= 1e-6 && worst_cauchy <= 0.0 &&
             envelope_fails == 0;
    r.detail = fmt("max_diff_over_budget=%.12g max_imag=%.12g "
                   "cauchy_excess=%.12g envelope_fails=%lld",
                   worst_ratio, worst_imag, worst_cauchy, envelope_fails);
    return r;
}

// ---------------------------------------------------------------- criterion 9

std::string serialize_ordinates(const ZeroCache& c) {
    std::string out;
    char buf[40];
    for (double g : c.ordinates) {
        std::snprintf(buf, sizeof buf, "%.17g\n", g);
        out += buf;
    }
    return out;
}

CriterionResult crit_determinism(const Fixtures& fx) {
    CriterionResult r{9, "determinism", true, ""};
    unsigned many = 4;
    // segmented mertens, zero finder, and contour integration are the
    // parallel reductions; each must be bit-identical across thread counts
    SegmentedMertensResult m1 = mertens_segmented(1e6, 1u << 20, 1);
    SegmentedMertensResult mN = mertens_segmented(1e6, 1u << 20, many);
    bool mertens_ok = m1.value == mN.value && m1.max_ratio == mN.max_ratio;

    ZeroFinderOptions z1, zN;
    z1.threads = 1;
    zN.threads = many;
    bool zeros_ok = serialize_ordinates(find_zeros(10.0, 200.0, z1)) ==
                    serialize_ordinates(find_zeros(10.0, 200.0, zN));

    ContourPath path = build_deformed_contour(100.5, fx.sieve, fx.cache);
    DeformedResult d1 = deformed_integral(path, fx.cal, {}, 1);
    DeformedResult dN = deformed_integral(path, fx.cal, {}, many);
    bool contour_ok = d1.integral == dN.integral && d1.quad_error == dN.quad_error;

    bool rerun_ok = true;
    if (!fx.opts.quick) {
        // the quick suite end to end, twice at one thread and once at many;
        // the emitted report text must match byte for byte
        VerifyOptions q{true, 1, false};
        std::string a = run_verification(q).text;
        std::string b = run_verification(q).text;
        q.threads = many;
        std::string c = run_verification(q).text;
        rerun_ok = (a == b) && (a == c);
    }
    r.pass = mertens_ok && zeros_ok && contour_ok && rerun_ok;
    r.detail = fmt("mertens=%d zeros=%d contour=%d quick_rerun=%d", (int)mertens_ok,
                   (int)zeros_ok, (int)contour_ok, (int)rerun_ok);
    return r;
}

} // namespace

VerifyReport run_verification(const VerifyOptions& opts) {
    Fixtures fx;
    fx.opts = opts;
    note(fx, "building sieve");
    fx.sieve = build_sieve(opts.quick ? 1000000ull : 10000000ull);
    note(fx, "building zero cache [10, 2300]");
    ZeroFinderOptions zopt;
    zopt.threads = opts.threads;
    fx.cache = find_zeros(10.0, 2300.0, zopt);
    if (!opts.quick) {
        note(fx, "building zero cache [10, 10002]");
        fx.cache_big = find_zeros(10.0, 10002.0, zopt);
    }

    VerifyReport rep;
    rep.all_pass = true;
    using Fn = CriterionResult (*)(const Fixtures&);
    Fn fns[] = {crit_selberg, crit_zero_engine, crit_explicit_formula, crit_window_ineq,
                crit_mertens, crit_clustering_scan, crit_typicality, crit_perron,
                crit_determinism};
    for (Fn fn : fns) {
        CriterionResult c = fn(fx);
        note(fx, c.name.c_str());
        rep.all_pass = rep.all_pass && c.pass;
        rep.criteria.push_back(std::move(c));
    }
    std::ostringstream out;
    for (const CriterionResult& c : rep.criteria)
        out << "criterion " << c.id << " " << c.name << ": "
            << (c.pass ? "PASS" : "FAIL") << " (" << c.detail << ")\n";
    rep.text = out.str();
    return rep;
}

} // namespace znt
