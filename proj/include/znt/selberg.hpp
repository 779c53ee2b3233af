#pragma once

#include <complex>

namespace znt {

using cplx = std::complex<double>;

// Parameters for the majorant/minorant of chi_[-h,h]: band-limit delta and
// the series truncation used by the reference evaluator (the production
// evaluator sums the sgn-weighted series in closed form via trigamma).
struct SelbergPair {
    double h = 1.0;
    double delta = 1.0;
    int truncation = 10000;

    bool valid() const { return h > 0.0 && delta > 0.0 && truncation >= 100; }
};

// K(z) = (sin pi z)^2 / (pi z)^2, removable singularity at 0.
double beurling_K(double x);
cplx beurling_K(cplx z);

// Beurling's sgn-approximant H(z); poles of the defining series cancel, the
// function is entire.  Validated for |Im z| <= 10.
double beurling_H(double x);
cplx beurling_H(cplx z);

// F-(u) <= chi_[-h,h](u) <= F+(u) pointwise; both even.
double selberg_majorant(double u, const SelbergPair& p);
double selberg_minorant(double u, const SelbergPair& p);

// sign = +1 majorant, -1 minorant
double selberg_value(double u, const SelbergPair& p, int sign);
cplx selberg_value(cplx z, const SelbergPair& p, int sign);

struct FourierDetail {
    double value = 0.0;
    double tail_bound = 0.0;  // bound on the discarded |u| > U mass
    double quad_error = 0.0;
};

// \hat F_pm(x); exactly 0 for |x| >= delta (band-limit), quadrature inside.
double selberg_fourier(double x, const SelbergPair& p, int sign,
                       FourierDetail* detail = nullptr);

// Raw quadrature without the band-limit shortcut (verification path).
double selberg_fourier_quad(double x, const SelbergPair& p, int sign,
                            FourierDetail* detail = nullptr);

// integral of |F_pm - chi_[-h,h]|; the integrand is one-signed so no
// absolute value enters the quadrature.
double selberg_l1_distance(const SelbergPair& p, int sign,
                           FourierDetail* detail = nullptr);

// integral over [-L, L] of |H(x) + sign*K(x) - sgn(x)|; tends to 1.
double beurling_l1(double L, int sign);

struct DecayReport {
    double abs_value = 0.0;  // |F_pm(z)|
    double bound = 0.0;      // C e^{2 pi delta |y|} / (delta |z|^2)
    double ratio = 0.0;      // abs_value * delta * |z|^2 / e^{2 pi delta |y|}
};

// Decay bound check for |z| >= 2h; C is the calibrated constant.
DecayReport complex_decay_check(cplx z, const SelbergPair& p, int sign, double C);

} // namespace znt
