#include "znt/explicit_formula.hpp"

#include <cmath>
#include <functional>

#include "znt/chebfit.hpp"
#include "znt/errors.hpp"
#include "znt/gamma.hpp"
#include "znt/quadrature.hpp"

namespace znt {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// pointwise far-field envelope: |F_pm(u)| and |F_pm(u) - chi(u)| are bounded
// by kRealDecay / (delta (u -+ h))^2 once |u| - h >= 2/delta (property-tested)
constexpr double kRealDecay = 0.5;

// int_B^inf log(u/w) / (u-a)^2 du for B > max(a, 0), any a != 0 below B
double tail_log_integral(double B, double a, double w) {
    return std::log(B / w) / (B - a) + std::log(B / (B - a)) / a;
}

// ordinate density bound per unit height at height u (desk-height slack 0.3
// absorbs the fluctuating term; checked against certified counts in tests)
double density_linear(double B, double a) {
    // int_B^inf (log(u/2pi)/2pi + 0.3) / (u-a)^2 du
    return tail_log_integral(B, a, kTwoPi) / kTwoPi + 0.3 / (B - a);
}

double zero_tail_bound(double t, const SelbergPair& p, const ZeroCache& cache) {
    if (cache.t_min > 14.0)
        throw CoverageError("explicit formula: zero cache must start below 14");
    double B = cache.t_max;
    if (B < t + p.h + 2.0 / p.delta + 5.0)
        throw CoverageError("explicit formula: zero cache too short above t");
    double c = kRealDecay / (p.delta * p.delta);
    // gamma > t_max, arguments gamma - t and gamma + t
    return c * (density_linear(B, t + p.h) + density_linear(B, p.h - t));
}

} // namespace

ArchResult archimedean_term(double t, const SelbergPair& p, int sign) {
    double U = std::max(4000.0, 2.0 * t);
    std::function<double(double)> f = [&](double u) {
        double g = digamma(cplx(0.25, 0.5 * (t + u))).real() - std::log(kPi);
        return selberg_value(u, p, sign) * g;
    };
    QuadResult mid = integrate(f, -p.h - 2.0, p.h + 2.0, 1e-9, 30);
    QuadResult lo = integrate(f, -U, -p.h - 2.0, 1e-8, 32);
    QuadResult hi = integrate(f, p.h + 2.0, U, 1e-8, 32);
    ArchResult r;
    r.value = (lo.value + mid.value + hi.value) / kTwoPi;
    r.quad_error = (lo.error + mid.error + hi.error) / kTwoPi;
    // |Re psi(1/4 + i(t+u)/2) - log pi| <= log(t+u) for u >= U >= 2t
    r.tail_bound = kRealDecay / (kPi * p.delta * p.delta) *
                   tail_log_integral(U + t, t + p.h, 1.0);
    return r;
}

PrimeSideTable build_prime_side_table(const SelbergPair& p, const SieveTable& sieve,
                                      int sign) {
    if (!p.valid()) throw DomainError("build_prime_side_table: bad pair");
    PrimeSideTable tab;
    tab.pair = p;
    tab.sign = sign;
    tab.n_limit = (long long)std::floor(std::exp(kTwoPi * p.delta));
    if ((std::uint64_t)tab.n_limit > sieve.limit)
        throw CoverageError("build_prime_side_table: sieve shorter than e^{2 pi delta}");

    // ghat(x) = Fhat(x) - chihat(x) is smooth on [0, delta]; one Chebyshev fit
    // replaces a quadrature per prime power
    double quad_err = 0.0, tail = 0.0;
    auto ghat = [&](double x) {
        FourierDetail d;
        double v = selberg_fourier_quad(x, p, sign, &d);
        double chihat = (x == 0.0) ? 2.0 * p.h : std::sin(kTwoPi * p.h * x) / (kPi * x);
        quad_err = std::max(quad_err, d.quad_error);
        tail = d.tail_bound;
        return v - chihat;
    };
    int degree = 90;
    ChebFit fit = ChebFit::fit(ghat, 0.0, p.delta, degree);
    double interp_err = fit.tail_estimate(4);
    // spot-check the interpolant off-node
    for (int k = 1; k <= 5; ++k) {
        double x = p.delta * (k / 5.7);
        interp_err = std::max(interp_err, std::abs(fit.eval(x) - ghat(x)));
    }
    double point_err = tail + quad_err + interp_err;

    auto fhat = [&](double x) {
        if (x >= p.delta) return 0.0;
        double chihat = (x == 0.0) ? 2.0 * p.h : std::sin(kTwoPi * p.h * x) / (kPi * x);
        return chihat + fit.eval(x);
    };
    tab.fhat0 = fhat(0.0);
    for (long long n = 2; n <= tab.n_limit; ++n) {
        double lam = sieve.lambda(n);
        if (lam == 0.0) continue;
        double ln = std::log((double)n);
        double w = lam / std::sqrt((double)n);
        tab.log_n.push_back(ln);
        tab.coeff.push_back(w * fhat(ln / kTwoPi));
        tab.lambda_weight += w;
        tab.error_mass += w * point_err;
    }
    return tab;
}

cplx prime_side_complex(double t, const PrimeSideTable& tab) {
    cplx s = 0.0;
    for (size_t i = 0; i < tab.log_n.size(); ++i) {
        double ph = t * tab.log_n[i];
        s += tab.coeff[i] * cplx(std::cos(ph), -std::sin(ph));
    }
    return s;
}

double prime_side_sum(double t, const PrimeSideTable& tab) {
    double s = 0.0;
    for (size_t i = 0; i < tab.log_n.size(); ++i)
        s += tab.coeff[i] * std::cos(t * tab.log_n[i]);
    return s / kPi;
}

ExplicitFormulaReport explicit_formula_check(double t, const ZeroCache& cache,
                                        const PrimeSideTable& tab) {
    const SelbergPair& p = tab.pair;
    ExplicitFormulaReport r;
    r.t = t;
    r.h = p.h;
    r.delta = p.delta;
    r.sign = tab.sign;

    double tail = zero_tail_bound(t, p, cache);
    double zs = 0.0;
    for (double g : cache.ordinates)
        zs += selberg_value(g - t, p, tab.sign) + selberg_value(g + t, p, tab.sign);
    r.zero_side = zs;

    r.boundary_terms = 2.0 * selberg_value(cplx(t, 0.5), p, tab.sign).real();
    ArchResult arch = archimedean_term(t, p, tab.sign);
    r.archimedean_term = arch.value;
    r.prime_side = prime_side_sum(t, tab);

    r.residual = r.zero_side - (r.boundary_terms + r.archimedean_term - r.prime_side);
    r.truncation_budget = tail + arch.quad_error + arch.tail_bound +
                          tab.error_mass / kPi + 1e-9 * cache.ordinates.size();
    return r;
}

ExplicitFormulaReport explicit_formula_check(double t, const SelbergPair& p,
                                        const ZeroCache& cache,
                                        const SieveTable& sieve, int sign) {
    PrimeSideTable tab = build_prime_side_table(p, sieve, sign);
    return explicit_formula_check(t, cache, tab);
}

double clustering_discrepancy(double t, double h, const ZeroCache& cache) {
    if (h <= 0.0 || h > std::sqrt(t))
        throw DomainError("clustering_discrepancy: need 0 < h <= sqrt(t)");
    if (!cache.covers(std::max(0.0, t - h - 1e-9), t + h) || cache.t_min > 14.0)
        throw CoverageError("clustering_discrepancy: cache window insufficient");
    long long counted = cache.count_in(t - h, t + h);
    return double(counted) - (h / kPi) * std::log(t / kTwoPi);
}

WindowIneqConfig window_ineq_config(double T, double V, double h) {
    if (V <= 1.0) throw DomainError("window_ineq_config: need V > 1");
    WindowIneqConfig c;
    c.T = T;
    c.V = V;
    c.h = h;
    c.eta = 1.0 / std::log(V);
    c.delta = (1.0 + c.eta) * std::log(T) / (kTwoPi * V);
    return c;
}

WindowIneqReport window_ineq_check(double t, const WindowIneqConfig& cfg, const ZeroCache& cache,
                    const PrimeSideTable& plus_tab, const PrimeSideTable& minus_tab) {
    const SelbergPair& p = plus_tab.pair;
    WindowIneqReport r;
    r.t = t;
    r.lhs = std::abs(clustering_discrepancy(t, cfg.h, cache));
    r.main_term = std::log(cfg.T) / (kTwoPi * p.delta);

    double stirling_err = 0.0, num_err = 0.0;
    for (const PrimeSideTable* tab : {&plus_tab, &minus_tab}) {
        double b = 2.0 * selberg_value(cplx(t, 0.5), p, tab->sign).real();
        r.boundary_abs = std::max(r.boundary_abs, std::abs(b));
        r.prime_abs = std::max(r.prime_abs, std::abs(prime_side_complex(t, *tab)) / kPi);
        ArchResult arch = archimedean_term(t, p, tab->sign);
        double main_arch = std::log(t / kTwoPi) / kTwoPi * tab->fhat0;
        stirling_err = std::max(stirling_err, std::abs(arch.value - main_arch));
        num_err = std::max(num_err, arch.quad_error + arch.tail_bound +
                                        tab->error_mass / kPi);
    }
    // log t vs log T shift for t <= 2T, plus Stirling slack and numerics
    r.c0 = stirling_err + std::log(2.0) / (kTwoPi * p.delta) + num_err;
    r.rhs = r.main_term + r.boundary_abs + r.prime_abs + r.c0;
    r.holds = r.lhs <= r.rhs;
    return r;
}

} // namespace znt
