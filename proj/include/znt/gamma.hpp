#pragma once

#include <complex>

namespace znt {

using cplx = std::complex<double>;

// log Gamma(z), principal branch, via Lanczos with reflection for Re z < 0.5.
cplx log_gamma(cplx z);

cplx gamma_fn(cplx z);

// Gamma'/Gamma(z), upward recurrence to Re z >= 10 plus the asymptotic series.
// Throws PoleError at non-positive integers.
cplx digamma(cplx z);

// psi_1(z) = d/dz digamma(z).  Recurrence + asymptotic series; reflection
// psi_1(z) + psi_1(1-z) = pi^2/sin^2(pi z) for Re z < 0.5.
cplx trigamma(cplx z);
double trigamma(double x);

} // namespace znt
