#include "znt/selberg.hpp"

#include <cmath>
#include <functional>

#include "znt/errors.hpp"
#include "znt/gamma.hpp"
#include "znt/quadrature.hpp"

namespace znt {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double sinc_pi(double x) {
    if (std::abs(x) < 1e-6) {
        double v = kPi * x;
        return 1.0 - v * v / 6.0;
    }
    // sin(pi x) via the reduced argument keeps full accuracy near the zeros
    double m = std::round(x);
    double s = std::sin(kPi * (x - m));
    if (std::fmod(std::abs(m), 2.0) == 1.0) s = -s;
    return s / (kPi * x);
}

cplx sinc_pi(cplx z) {
    if (std::abs(z) < 1e-6) {
        cplx v = kPi * z;
        return 1.0 - v * v / 6.0;
    }
    double m = std::round(z.real());
    cplx s = std::sin(kPi * (z - m));
    if (std::fmod(std::abs(m), 2.0) == 1.0) s = -s;
    return s / (kPi * z);
}

void require_valid(const SelbergPair& p) {
    if (!p.valid()) throw DomainError("SelbergPair: need h > 0, delta > 0, M >= 100");
}

} // namespace

double beurling_K(double x) {
    double s = sinc_pi(x);
    return s * s;
}

cplx beurling_K(cplx z) {
    cplx s = sinc_pi(z);
    return s * s;
}

double beurling_H(double x) {
    if (x < 0.0) return -beurling_H(-x);
    if (x == 0.0) return 0.0;
    double m = std::round(x);
    if (m >= 1.0 && std::abs(x - m) < 1e-8) return beurling_K(x - m);
    double s2 = sinc_pi(x);
    s2 *= s2;
    // sgn-weighted lattice series in closed form:
    //   H(x) = (sin pi x / pi)^2 (psi1(1-x) - psi1(1+x) + 2/x)
    return x * s2 * (x * (trigamma(1.0 - x) - trigamma(1.0 + x)) + 2.0);
}

cplx beurling_H(cplx z) {
    if (std::abs(z.imag()) < 1e-12) return cplx(beurling_H(z.real()), 0.0);
    if (std::abs(z.imag()) > 10.0)
        throw DomainError("beurling_H: |Im z| outside validated range");
    cplx s2 = sinc_pi(z);
    s2 *= s2;
    return z * s2 * (z * (trigamma(1.0 - z) - trigamma(1.0 + z)) + 2.0);
}

double selberg_value(double u, const SelbergPair& p, int sign) {
    require_valid(p);
    double a = p.delta * (u + p.h), b = p.delta * (p.h - u);
    return 0.5 * (beurling_H(a) + sign * beurling_K(a) + beurling_H(b) +
                  sign * beurling_K(b));
}

cplx selberg_value(cplx z, const SelbergPair& p, int sign) {
    require_valid(p);
    cplx a = p.delta * (z + p.h), b = p.delta * (p.h - z);
    return 0.5 * (beurling_H(a) + double(sign) * beurling_K(a) + beurling_H(b) +
                  double(sign) * beurling_K(b));
}

double selberg_majorant(double u, const SelbergPair& p) { return selberg_value(u, p, +1); }
double selberg_minorant(double u, const SelbergPair& p) { return selberg_value(u, p, -1); }

namespace {

double chi_interval(double u, double h) { return std::abs(u) <= h ? 1.0 : 0.0; }

double fourier_cutoff(const SelbergPair& p) {
    return std::max(2.0 * p.h + 4.0, 4000.0 / p.delta);
}

double fourier_tail_bound(const SelbergPair& p, double U) {
    // |F_pm(u) - chi(u)| <= 1.2 / (pi^2 delta^2 (u-h)^2) for u >= h + 2/delta
    return 2.4 / (kPi * kPi * p.delta * p.delta * (U - p.h));
}

} // namespace

double selberg_fourier_quad(double x, const SelbergPair& p, int sign,
                            FourierDetail* detail) {
    require_valid(p);
    x = std::abs(x);
    double U = fourier_cutoff(p);
    std::function<double(double)> g = [&](double u) {
        return (selberg_value(u, p, sign) - chi_interval(u, p.h)) *
               std::cos(kTwoPi * x * u);
    };
    QuadResult q1 = integrate(g, 0.0, p.h, 1e-10, 30);
    QuadResult q2 = integrate(g, p.h, U, 1e-9, 34);
    QuadResult q3 = integrate(g, U, 2.0 * U, 1e-9, 34);
    // near the band edge the discarded tail has a non-oscillating component
    // that decays only like 1/U; the doubled-cutoff extrapolation
    // 2 I(2U) - I(U) = (q2 + 2 q3) + ... cancels it
    double ghat = 2.0 * (q1.value + q2.value + 2.0 * q3.value);
    double chihat = (x == 0.0) ? 2.0 * p.h : std::sin(kTwoPi * p.h * x) / (kPi * x);
    if (detail) {
        detail->tail_bound = 2.0 * fourier_tail_bound(p, U);
        detail->quad_error = 2.0 * (q1.error + q2.error + 2.0 * q3.error);
        detail->value = chihat + ghat;
    }
    return chihat + ghat;
}

double selberg_fourier(double x, const SelbergPair& p, int sign,
                       FourierDetail* detail) {
    require_valid(p);
    if (std::abs(x) >= p.delta) {
        if (detail) *detail = FourierDetail{0.0, 0.0, 0.0};
        return 0.0;  // band-limit
    }
    return selberg_fourier_quad(x, p, sign, detail);
}

double selberg_l1_distance(const SelbergPair& p, int sign, FourierDetail* detail) {
    require_valid(p);
    double U = fourier_cutoff(p);
    std::function<double(double)> g = [&](double u) {
        return selberg_value(u, p, sign) - chi_interval(u, p.h);
    };
    QuadResult q1 = integrate(g, 0.0, p.h, 1e-10, 30);
    QuadResult q2 = integrate(g, p.h, U, 1e-9, 34);
    double val = 2.0 * std::abs(q1.value + q2.value) + fourier_tail_bound(p, U);
    if (detail) {
        detail->value = val;
        detail->tail_bound = fourier_tail_bound(p, U);
        detail->quad_error = 2.0 * (q1.error + q2.error);
    }
    return val;
}

double beurling_l1(double L, int sign) {
    if (L <= 0.0) throw DomainError("beurling_l1: L must be positive");
    std::function<double(double)> f = [&](double x) {
        return std::abs(beurling_H(x) + sign * beurling_K(x) -
                        (x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0)));
    };
    QuadResult qp = integrate(f, 0.0, L, 1e-8, 34);
    QuadResult qm = integrate(f, -L, 0.0, 1e-8, 34);
    return qp.value + qm.value;
}

DecayReport complex_decay_check(cplx z, const SelbergPair& p, int sign, double C) {
    require_valid(p);
    if (std::abs(z) < 2.0 * p.h)
        throw DomainError("complex_decay_check: |z| must be >= 2h");
    DecayReport r;
    r.abs_value = std::abs(selberg_value(z, p, sign));
    double y = std::abs(z.imag());
    double growth = std::exp(kTwoPi * p.delta * y);
    r.bound = C * growth / (p.delta * std::norm(z));
    r.ratio = r.abs_value * p.delta * std::norm(z) / growth;
    return r;
}

} // namespace znt
