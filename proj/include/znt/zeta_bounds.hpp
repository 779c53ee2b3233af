#pragma once

#include <vector>

#include "znt/calibration.hpp"
#include "znt/sieve.hpp"
#include "znt/zeros.hpp"
#include "znt/zeta.hpp"

namespace znt {

struct BoundReport {
    double sigma = 0.0, t = 0.0, V = 0.0;
    double sigma0 = 0.0;  // 1/2 + V/log T
    double log_abs_zeta = 0.0;
    double bound_rhs = 0.0;
    double slack = 0.0;  // log_abs_zeta - bound_rhs, must stay >= 0
};

// F(s) = sum over zeros of Re 1/(s - rho), cached ordinates plus their
// mirrors; tail_bound covers ordinates beyond the cache via the counting
// main-term density.
struct FResult {
    double value = 0.0;
    double tail_bound = 0.0;
};
FResult f_of_s(double sigma, double t, const ZeroCache& cache);

// Re zeta'/zeta(s) - F(s) + (1/2) log t; stays O(1) on the test grids.
double hadamard_residual(double sigma, double t, const ZeroCache& cache,
                         const ZetaEvaluator& ev = {});

// two evaluations of the integral of F across [sigma, sigma0], plus the
// three-range split of the closed-form sum
struct ZeroSumIdentityReport {
    double integral_quad = 0.0;  // adaptive quadrature of F(u+it)
    double closed_form = 0.0;    // (1/2) sum of log ratios over the same zeros
    double range_low = 0.0, range_annuli = 0.0, range_far = 0.0;
    double tail_bound = 0.0;
    long long annuli = 0;  // N = [(log T)/(4 pi V)]; 0 merges ranges 2 and 3
};
ZeroSumIdentityReport zero_sum_identity(double sigma, double sigma0, double t, double V, double T,
                       const ZeroCache& cache);

BoundReport log_drop_check(double t, double V, double sigma, double T,
                         const ZeroCache& cache, const ZetaEvaluator& ev = {});

BoundReport prime_sum_bound_check(double sigma, double t, double x, const SieveTable& sieve,
                          const ZeroCache& cache, const Calibration& cal,
                          const ZetaEvaluator& ev = {});

// sigma grid across (1/2, 2]: the two-regime lower bounds of the proposition
std::vector<BoundReport> lower_bound_grid(double t, double V, double T,
                                     const SieveTable& sieve, const ZeroCache& cache,
                                     const Calibration& cal,
                                     const ZetaEvaluator& ev = {});

} // namespace znt
