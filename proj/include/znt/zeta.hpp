#pragma once

#include <complex>

namespace znt {

using cplx = std::complex<double>;

// Evaluation orders.  Defaults give ~1e-10 relative accuracy for the
// Euler-Maclaurin path at heights <= 1e3 (validated against the oracle suite).
struct ZetaEvaluator {
    int euler_maclaurin_terms = 30;  // main-sum length is ceil(|s|) + this
    int bernoulli_order = 20;        // last Bernoulli correction B_{order}
    int rs_correction_terms = 2;     // 0..2 Riemann-Siegel remainder terms
    double height_ceiling = 1e5;
    double em_crossover = 1000.0;    // Z(t) uses Euler-Maclaurin below this
};

// zeta(s) for Re s > 0, s != 1, |Im s| <= height_ceiling.
cplx zeta(cplx s, const ZetaEvaluator& ev = {});

// zeta and zeta' together (shared main sum).
struct ZetaPair {
    cplx z, dz;
};
ZetaPair zeta_and_deriv(cplx s, const ZetaEvaluator& ev = {});

// zeta'/zeta(s); no proximity-to-zero guard (see zeros.hpp for the guarded
// cache-aware version).
cplx zeta_log_deriv_raw(cplx s, const ZetaEvaluator& ev = {});

// theta(t) = arg Gamma(1/4+it/2) - (t/2) log pi, asymptotic series, t >= 10.
double riemann_siegel_theta(double t);

// Z(t) = exp(i theta(t)) zeta(1/2+it).  Euler-Maclaurin below em_crossover,
// Riemann-Siegel main sum plus remainder terms above.  Requires t >= 10.
double riemann_siegel_Z(double t, const ZetaEvaluator& ev = {});

// chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s), so zeta(s) = chi(s) zeta(1-s).
cplx chi_factor(cplx s);

} // namespace znt
