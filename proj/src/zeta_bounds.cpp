#include "znt/zeta_bounds.hpp"

#include <cmath>
#include <functional>

#include "znt/errors.hpp"
#include "znt/quadrature.hpp"

namespace znt {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// int_B^inf log(u/w) / (u-a)^2 du for B > max(a, 0)
double tail_log_integral(double B, double a, double w) {
    return std::log(B / w) / (B - a) + std::log(B / (B - a)) / a;
}

// int_B^inf (log(u/2pi)/2pi + 0.3) / (u-a)^2 du, the ordinate-density weight
double density_tail(double B, double a) {
    return tail_log_integral(B, a, kTwoPi) / kTwoPi + 0.3 / (B - a);
}

double loglog_clamped(double V) { return std::max(0.0, std::log(std::log(V))); }

double term(double d, double dist) { return d / (d * d + dist * dist); }

} // namespace

FResult f_of_s(double sigma, double t, const ZeroCache& cache) {
    if (sigma <= 0.5) throw DomainError("f_of_s: need sigma > 1/2");
    if (cache.t_min > 14.0 || cache.t_max < t + 25.0)
        throw CoverageError("f_of_s: cache must span [14, t+25] at least");
    double d = sigma - 0.5;
    FResult r;
    for (double g : cache.ordinates)
        r.value += term(d, t - g) + term(d, t + g);
    r.tail_bound = d * (density_tail(cache.t_max, t) + density_tail(cache.t_max, -t));
    return r;
}

double hadamard_residual(double sigma, double t, const ZeroCache& cache,
                         const ZetaEvaluator& ev) {
    cplx ld = zeta_log_deriv_raw(cplx(sigma, t), ev);
    FResult f = f_of_s(sigma, t, cache);
    return ld.real() - f.value + 0.5 * std::log(t);
}

ZeroSumIdentityReport zero_sum_identity(double sigma, double sigma0, double t, double V, double T,
                       const ZeroCache& cache) {
    if (!(0.5 < sigma && sigma <= sigma0))
        throw DomainError("zero_sum_identity: need 1/2 < sigma <= sigma0");
    ZeroSumIdentityReport r;
    std::function<double(double)> f = [&](double u) {
        return f_of_s(u, t, cache).value;
    };
    QuadResult q = integrate(f, sigma, sigma0, 1e-9, 30);
    r.integral_quad = q.value;

    double a2 = (sigma0 - 0.5) * (sigma0 - 0.5), b2 = (sigma - 0.5) * (sigma - 0.5);
    double lv = std::log(V), lt = std::log(T);
    double r1 = (lv > 0.0) ? kTwoPi * V / (lv * lt) : 1e30;
    long long N = (long long)std::floor(lt / (2.0 * kTwoPi * V));
    r.annuli = N;
    double far_lo = kTwoPi * (double(N) + 1.0 + (lv > 0.0 ? 1.0 / lv : 0.0)) * V / lt;
    auto contrib = [&](double dist) {
        double c = 0.5 * std::log((a2 + dist * dist) / (b2 + dist * dist));
        if (dist < r1)
            r.range_low += c;
        else if (dist <= far_lo)
            r.range_annuli += c;
        else
            r.range_far += c;
        r.closed_form += c;
    };
    for (double g : cache.ordinates) {
        contrib(std::abs(t - g));
        contrib(t + g);
    }
    // both routes truncate at the cache edge; the shared tail only matters
    // for absolute use of either value
    r.tail_bound = (sigma0 - sigma) * f_of_s(sigma0, t, cache).tail_bound;
    return r;
}

BoundReport log_drop_check(double t, double V, double sigma, double T,
                         const ZeroCache& cache, const ZetaEvaluator& ev) {
    BoundReport r;
    r.t = t;
    r.V = V;
    r.sigma = sigma;
    r.sigma0 = 0.5 + V / std::log(T);
    if (!(0.5 < sigma && sigma <= r.sigma0))
        throw DomainError("log_drop_check: need 1/2 < sigma <= sigma0");
    (void)cache;
    r.log_abs_zeta = std::log(std::abs(zeta(cplx(sigma, t), ev)));
    double at_sigma0 = std::log(std::abs(zeta(cplx(r.sigma0, t), ev)));
    r.bound_rhs = at_sigma0 - V * std::log((r.sigma0 - 0.5) / (sigma - 0.5)) -
                  7.0 * V * loglog_clamped(V);
    r.slack = r.log_abs_zeta - r.bound_rhs;
    return r;
}

BoundReport prime_sum_bound_check(double sigma, double t, double x, const SieveTable& sieve,
                          const ZeroCache& cache, const Calibration& cal,
                          const ZetaEvaluator& ev) {
    if (!(0.5 < sigma && sigma <= 2.0))
        throw DomainError("prime_sum_bound_check: need 1/2 < sigma <= 2");
    if (x < 2.0) throw DomainError("prime_sum_bound_check: need x >= 2");
    if (x > double(sieve.limit)) throw CoverageError("prime_sum_bound_check: sieve too short");
    BoundReport r;
    r.sigma = sigma;
    r.t = t;
    double lx = std::log(x);
    double re_sum = 0.0;
    for (long long n = 2; n <= (long long)x; ++n) {
        double lam = sieve.lambda(n);
        if (lam == 0.0) continue;
        double ln = std::log((double)n);
        double w = lam / ln * (lx - ln) / lx * std::exp(-sigma * ln);
        re_sum += w * std::cos(t * ln);
    }
    FResult f = f_of_s(sigma, t, cache);
    double factor = 1.0 + std::exp((0.5 - sigma) * lx) / ((sigma - 0.5) * lx);
    r.log_abs_zeta = std::log(std::abs(zeta(cplx(sigma, t), ev)));
    r.bound_rhs = re_sum - factor * (f.value + f.tail_bound) / lx - cal.prime_sum_slack;
    r.slack = r.log_abs_zeta - r.bound_rhs;
    return r;
}

std::vector<BoundReport> lower_bound_grid(double t, double V, double T,
                                     const SieveTable& sieve, const ZeroCache& cache,
                                     const Calibration& cal, const ZetaEvaluator& ev) {
    (void)sieve;
    double sigma0 = 0.5 + V / std::log(T);
    if (sigma0 > 2.0) throw DomainError("lower_bound_grid: sigma0 beyond 2");
    double llv = loglog_clamped(V);
    std::vector<double> grid;
    for (double frac : {std::exp(1.0), 2.0, 1.25})
        grid.push_back(0.5 + (sigma0 - 0.5) / frac);
    grid.push_back(sigma0);
    for (double s : {0.75, 1.0, 1.5, 2.0})
        if (s > sigma0) grid.push_back(s);
    std::vector<BoundReport> out;
    for (double sigma : grid) {
        BoundReport r;
        r.sigma = sigma;
        r.t = t;
        r.V = V;
        r.sigma0 = sigma0;
        r.log_abs_zeta = std::log(std::abs(zeta(cplx(sigma, t), ev)));
        if (sigma >= sigma0) {
            r.bound_rhs = -cal.regime_constant * V;
            if (llv >= cal.regime_constant) r.bound_rhs = std::max(r.bound_rhs, -V * llv);
        } else {
            r.bound_rhs =
                -V * std::log((sigma0 - 0.5) / (sigma - 0.5)) - 8.0 * V * llv;
        }
        r.slack = r.log_abs_zeta - r.bound_rhs;
        out.push_back(r);
    }
    (void)cache;
    return out;
}

} // namespace znt
