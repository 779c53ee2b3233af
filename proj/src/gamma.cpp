#include "znt/gamma.hpp"
#include "znt/errors.hpp"

#include <cmath>

namespace znt {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cplx log_gamma_core(cplx z) {
    // requires Re z >= 0.5
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    cplx t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

bool near_nonpositive_int(cplx z, double eps = 1e-12) {
    if (z.real() > 0.5) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < eps && std::abs(z.imag()) < eps;
}

} // namespace

cplx log_gamma(cplx z) {
    if (near_nonpositive_int(z))
        throw PoleError("log_gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return log_gamma_core(z);
    // reflection; branch jumps are irrelevant to exp(log_gamma)
    return std::log(kPi / std::sin(kPi * z)) - log_gamma_core(1.0 - z);
}

cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

cplx digamma(cplx z) {
    if (near_nonpositive_int(z))
        throw PoleError("digamma: pole at non-positive integer");
    cplx acc = 0.0;
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi*cot(pi*z)
        acc -= kPi / std::tan(kPi * z);
        z = 1.0 - z;
    }
    while (z.real() < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    static constexpr double c[7] = {1.0 / 12,  -1.0 / 120, 1.0 / 252, -1.0 / 240,
                                    1.0 / 132, -691.0 / 32760, 1.0 / 12};
    cplx inv2 = 1.0 / (z * z), p = inv2;
    cplx s = std::log(z) - 0.5 / z;
    for (int k = 0; k < 7; ++k) {
        s -= c[k] * p;
        p *= inv2;
    }
    return acc + s;
}

namespace {

cplx trigamma_asym(cplx z) {
    // valid for Re z >= 10 (after recurrence)
    static constexpr double b[8] = {1.0 / 6,  -1.0 / 30,     1.0 / 42, -1.0 / 30,
                                    5.0 / 66, -691.0 / 2730, 7.0 / 6,  -3617.0 / 510};
    cplx inv = 1.0 / z, inv2 = inv * inv;
    cplx s = inv + 0.5 * inv2;
    cplx p = inv2 * inv;
    for (int k = 0; k < 8; ++k) {
        s += b[k] * p;
        p *= inv2;
    }
    return s;
}

} // namespace

cplx trigamma(cplx z) {
    if (near_nonpositive_int(z))
        throw PoleError("trigamma: pole at non-positive integer");
    if (z.real() < 0.5) {
        // reduce Re z mod 1 before the sine so the reflection stays accurate
        // next to the poles; only sin^2 is needed, the sign drops out
        cplx sp = std::sin(kPi * (z - std::round(z.real())));
        return kPi * kPi / (sp * sp) - trigamma(1.0 - z);
    }
    cplx acc = 0.0;
    while (z.real() < 10.0) {
        acc += 1.0 / (z * z);
        z += 1.0;
    }
    return acc + trigamma_asym(z);
}

double trigamma(double x) {
    if (x <= 0.0 && x == std::round(x))
        throw PoleError("trigamma: pole at non-positive integer");
    if (x < 0.5) {
        double sp = std::sin(kPi * (x - std::round(x)));
        return kPi * kPi / (sp * sp) - trigamma(1.0 - x);
    }
    double acc = 0.0;
    while (x < 10.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    return acc + trigamma_asym(cplx(x, 0.0)).real();
}

} // namespace znt
