#pragma once

#include <vector>

#include "znt/selberg.hpp"
#include "znt/sieve.hpp"
#include "znt/zeros.hpp"

namespace znt {

// Both sides of the zeros-vs-primes identity with the test function
// F_pm(. - t); residual should sit inside truncation_budget.
struct ExplicitFormulaReport {
    double t = 0.0, h = 0.0, delta = 0.0;
    int sign = +1;
    double zero_side = 0.0;
    double boundary_terms = 0.0;    // 2 Re F_pm(t + i/2)
    double archimedean_term = 0.0;  // (1/2pi) Int F_pm(u)(Re psi(1/4+i(t+u)/2) - log pi) du
    double prime_side = 0.0;        // (1/pi) Re sum Lambda(n) n^{-1/2-it} Fhat(log n/2pi)
    double residual = 0.0;          // zero_side - (boundary + arch - prime_side)
    double truncation_budget = 0.0;
};

// Fhat at the prime-power frequencies log n / 2pi; t-independent, so built
// once per (pair, sign) and reused across heights.  The band-limit cuts the
// sum at n <= e^{2 pi delta} exactly; nothing beyond is discarded.
struct PrimeSideTable {
    SelbergPair pair;
    int sign = +1;
    long long n_limit = 0;
    std::vector<double> log_n;   // log n over Lambda(n) != 0, n <= n_limit
    std::vector<double> coeff;   // Lambda(n)/sqrt(n) * Fhat(log n/2pi)
    double fhat0 = 0.0;          // Fhat(0)
    double error_mass = 0.0;     // sum Lambda(n)/sqrt(n) * per-point Fhat error
    double lambda_weight = 0.0;  // sum Lambda(n)/sqrt(n)
};

PrimeSideTable build_prime_side_table(const SelbergPair& p, const SieveTable& sieve,
                                      int sign);

// (1/pi) Re of the complex sum below
double prime_side_sum(double t, const PrimeSideTable& tab);
// sum Lambda(n) n^{-it}/sqrt(n) * Fhat(log n/2pi)
cplx prime_side_complex(double t, const PrimeSideTable& tab);

struct ArchResult {
    double value = 0.0;
    double quad_error = 0.0;
    double tail_bound = 0.0;
};
ArchResult archimedean_term(double t, const SelbergPair& p, int sign);

ExplicitFormulaReport explicit_formula_check(double t, const ZeroCache& cache,
                                        const PrimeSideTable& tab);
ExplicitFormulaReport explicit_formula_check(double t, const SelbergPair& p,
                                        const ZeroCache& cache,
                                        const SieveTable& sieve, int sign);

// N(t+h) - N(t-h) - (h/pi) log(t/2pi) from certified counts
double clustering_discrepancy(double t, double h, const ZeroCache& cache);

// Window-count inequality chain instantiated with computed terms.
struct WindowIneqReport {
    double t = 0.0;
    double lhs = 0.0;           // |clustering discrepancy|
    double main_term = 0.0;     // (1/delta)(log T)/(2pi)
    double boundary_abs = 0.0;  // max over signs of |2 Re F_pm(t+i/2)|
    double prime_abs = 0.0;     // (1/pi) max over signs |complex prime sum|
    double c0 = 0.0;            // computed slack (Stirling error + log 2 shift + numerics)
    double rhs = 0.0;
    bool holds = false;
};

// Statistic configuration: delta = (1+eta) log T / (2 pi V), eta = 1/log V.
struct WindowIneqConfig {
    double T = 0.0, V = 0.0, h = 0.0;
    double eta = 0.0, delta = 0.0;
};
WindowIneqConfig window_ineq_config(double T, double V, double h);

WindowIneqReport window_ineq_check(double t, const WindowIneqConfig& cfg, const ZeroCache& cache,
                    const PrimeSideTable& plus_tab, const PrimeSideTable& minus_tab);

} // namespace znt
