#include "znt/zeta.hpp"

#include "znt/chebfit.hpp"

#include <cmath>
#include <vector>

#include "znt/errors.hpp"
#include "znt/gamma.hpp"

namespace znt {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// B_{2k}/(2k)! for k = 1..10
constexpr double kBernOverFact[10] = {
    8.3333333333333333e-02,  -1.3888888888888889e-03, 3.3068783068783069e-05,
    -8.2671957671957672e-07, 2.0876756987868099e-08,  -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225829e-13, 8.5860620562778446e-15,
    -2.1748686985580619e-16};

void check_domain(cplx s, const ZetaEvaluator& ev) {
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-10)
        throw PoleError("zeta: pole at s = 1");
    if (s.real() <= 0.0)
        throw DomainError("zeta: Re s must be positive");
    if (std::abs(s.imag()) > ev.height_ceiling)
        throw DomainError("zeta: |Im s| exceeds height ceiling");
}

} // namespace

ZetaPair zeta_and_deriv(cplx s, const ZetaEvaluator& ev) {
    check_domain(s, ev);
    int N = int(std::ceil(std::abs(s))) + ev.euler_maclaurin_terms;
    if (N < 2) N = 2;
    cplx sum = 1.0, dsum = 0.0;  // n = 1 term
    for (int n = 2; n < N; ++n) {
        double ln = std::log(double(n));
        cplx term = std::exp(-s * ln);
        sum += term;
        dsum -= ln * term;
    }
    double lnN = std::log(double(N));
    cplx Npw = std::exp(-s * lnN);  // N^{-s}
    cplx inv_sm1 = 1.0 / (s - 1.0);
    cplx A = Npw * double(N) * inv_sm1;  // N^{1-s}/(s-1)
    sum += A;
    dsum += A * (-lnN - inv_sm1);
    sum += 0.5 * Npw;
    dsum -= 0.5 * lnN * Npw;

    int K = ev.bernoulli_order / 2;
    if (K > 10) K = 10;
    cplx P = s, dP = 1.0;       // prod_{j=0}^{2k-2}(s+j) and its derivative
    cplx t = Npw / double(N);   // N^{-s-2k+1}, k = 1
    double Ninv2 = 1.0 / (double(N) * double(N));
    for (int k = 1; k <= K; ++k) {
        cplx term = kBernOverFact[k - 1] * t;
        sum += term * P;
        dsum += term * (dP - P * lnN);
        cplx a = s + double(2 * k - 1), b = s + double(2 * k);
        dP = dP * a * b + P * (a + b);
        P *= a * b;
        t *= Ninv2;
    }
    return {sum, dsum};
}

cplx zeta(cplx s, const ZetaEvaluator& ev) {
    check_domain(s, ev);
    int N = int(std::ceil(std::abs(s))) + ev.euler_maclaurin_terms;
    if (N < 2) N = 2;
    cplx sum = 1.0;
    for (int n = 2; n < N; ++n) sum += std::exp(-s * std::log(double(n)));
    double lnN = std::log(double(N));
    cplx Npw = std::exp(-s * lnN);
    sum += Npw * double(N) / (s - 1.0) + 0.5 * Npw;
    int K = ev.bernoulli_order / 2;
    if (K > 10) K = 10;
    cplx P = s;
    cplx t = Npw / double(N);
    double Ninv2 = 1.0 / (double(N) * double(N));
    for (int k = 1; k <= K; ++k) {
        sum += kBernOverFact[k - 1] * t * P;
        P *= (s + double(2 * k - 1)) * (s + double(2 * k));
        t *= Ninv2;
    }
    return sum;
}

cplx zeta_log_deriv_raw(cplx s, const ZetaEvaluator& ev) {
    auto [z, dz] = zeta_and_deriv(s, ev);
    return dz / z;
}

double riemann_siegel_theta(double t) {
    if (t < 10.0) throw DomainError("riemann_siegel_theta: t must be >= 10");
    double lt = std::log(t / kTwoPi);
    double t2 = t * t;
    return 0.5 * t * lt - 0.5 * t - kPi / 8.0 + 1.0 / (48.0 * t) +
           7.0 / (5760.0 * t * t2) + 31.0 / (80640.0 * t2 * t2 * t);
}

namespace {

// Chebyshev fit on [0,1]

double rs_psi(double p) {
    double g = p * p - p - 1.0 / 16.0;
    double num = std::cos(kTwoPi * g);
    double den = std::cos(kTwoPi * p);
    if (std::abs(den) < 1e-9) {
        // removable: both vanish at p = 1/4, 3/4
        return (2.0 * p - 1.0) * std::sin(kTwoPi * g) / std::sin(kTwoPi * p);
    }
    return num / den;
}

const ChebFit& psi_fit() {
    static const ChebFit ch = ChebFit::fit(rs_psi, 0.0, 1.0, 80);
    return ch;
}
const ChebFit& psi3_fit() {
    static const ChebFit ch = psi_fit().deriv().deriv().deriv();
    return ch;
}

double rs_Z(double t, int correction_terms) {
    double tau = t / kTwoPi;
    double rt = std::sqrt(tau);
    int N = int(std::floor(rt));
    double p = rt - N;
    double th = riemann_siegel_theta(t);
    double sum = 0.0;
    for (int n = 1; n <= N; ++n)
        sum += std::cos(th - t * std::log(double(n))) / std::sqrt(double(n));
    double Z = 2.0 * sum;
    if (correction_terms > 0) {
        double corr = psi_fit().eval(p);
        if (correction_terms > 1)
            corr -= psi3_fit().eval(p) / (96.0 * kPi * kPi * rt);
        Z += ((N - 1) % 2 == 0 ? 1.0 : -1.0) * std::pow(tau, -0.25) * corr;
    }
    return Z;
}

} // namespace

double riemann_siegel_Z(double t, const ZetaEvaluator& ev) {
    if (t < 10.0) throw DomainError("riemann_siegel_Z: t must be >= 10");
    if (t > ev.height_ceiling)
        throw DomainError("riemann_siegel_Z: t exceeds height ceiling");
    if (t < ev.em_crossover) {
        cplx z = zeta(cplx(0.5, t), ev);
        double th = riemann_siegel_theta(t);
        return (std::exp(cplx(0.0, th)) * z).real();
    }
    return rs_Z(t, ev.rs_correction_terms);
}

cplx chi_factor(cplx s) {
    return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi)) *
           std::sin(0.5 * kPi * s) * gamma_fn(1.0 - s);
}

} // namespace znt
