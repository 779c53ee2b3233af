#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "znt/calibration.hpp"
#include "znt/errors.hpp"
#include "znt/selberg.hpp"

using namespace znt;

namespace {

constexpr double kPi = 3.14159265358979323846;

// truncated partial-fraction reference for the sgn-approximant
double h_series(double x, int M) {
    double s = 2.0 / x;
    for (int n = 1; n <= M; ++n)
        s += 1.0 / ((x - n) * (x - n)) - 1.0 / ((x + n) * (x + n));
    double w = std::sin(kPi * x) / kPi;
    return w * w * s;
}

const std::vector<SelbergPair>& pairs() {
    static std::vector<SelbergPair> p{{1.0, 1.0}, {1.0, 8.0}, {0.25, 16.0}};
    return p;
}

} // namespace

TEST_CASE("kernel K has the classic interpolation values") {
    CHECK(beurling_K(0.0) == 1.0);
    for (int m = 1; m <= 6; ++m) {
        CHECK(std::abs(beurling_K((double)m)) < 1e-15);
        CHECK(std::abs(beurling_K((double)-m)) < 1e-15);
    }
    for (double x = -4.0; x <= 4.0; x += 0.0317) {
        CHECK(beurling_K(x) >= 0.0);
        CHECK(beurling_K(x) <= 1.0 + 1e-15);
    }
}

TEST_CASE("sgn-approximant matches its partial-fraction series") {
    for (double x : {0.3, 0.7, 1.4, 2.6, -1.7, 5.3, 17.25, -0.05})
        CHECK(std::abs(beurling_H(x) - h_series(x, 20000)) < 1e-7);
}

TEST_CASE("sgn-approximant is odd and interpolates sgn at integers") {
    for (double x : {0.31, 1.27, 4.44, 9.87})
        CHECK(beurling_H(x) == doctest::Approx(-beurling_H(-x)).epsilon(1e-13));
    for (int m = 1; m <= 10; ++m) {
        CHECK(beurling_H((double)m) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(beurling_H((double)-m) == doctest::Approx(-1.0).epsilon(1e-12));
    }
}

TEST_CASE("complex evaluation agrees with the real axis") {
    for (double x : {0.4, 2.3, -5.1})
        CHECK(std::abs(beurling_H(cplx(x, 0.0)) - beurling_H(x)) < 1e-12);
    CHECK_THROWS_AS((void)beurling_H(cplx(0.0, 20.0)), DomainError);
}

TEST_CASE("majorant and minorant sandwich the indicator") {
    for (const SelbergPair& p : pairs()) {
        double span = 2.0 * p.h + 10.0 / p.delta + 5.0;
        for (int k = 0; k < 3000; ++k) {
            double u = -span + (k + 0.383) * (2.0 * span / 3000);
            double chi = std::abs(u) <= p.h ? 1.0 : 0.0;
            CHECK(selberg_minorant(u, p) <= chi + 1e-12);
            CHECK(selberg_majorant(u, p) >= chi - 1e-12);
        }
    }
}

TEST_CASE("both extremal functions are even") {
    for (const SelbergPair& p : pairs())
        for (double u : {0.17, 0.93, 2.46, 7.1})
            for (int sign : {+1, -1})
                CHECK(selberg_value(u, p, sign) ==
                      doctest::Approx(selberg_value(-u, p, sign)).epsilon(1e-12));
}

TEST_CASE("L1 distance to the indicator is 1/delta") {
    for (const SelbergPair& p : pairs())
        for (int sign : {+1, -1}) {
            double l1 = selberg_l1_distance(p, sign);
            CHECK(l1 <= 1.0 / p.delta + 1e-3);
            CHECK(l1 >= 1.0 / p.delta - 1e-3);
        }
}

TEST_CASE("transform at zero carries the interval length plus the L1 excess") {
    for (const SelbergPair& p : pairs())
        for (int sign : {+1, -1})
            CHECK(selberg_fourier(0.0, p, sign) ==
                  doctest::Approx(2.0 * p.h + sign / p.delta).epsilon(1e-6));
}

TEST_CASE("band-limit: the transform vanishes beyond delta") {
    for (const SelbergPair& p : pairs())
        for (int sign : {+1, -1})
            for (double m : {1.0, 1.5, 2.0}) {
                CHECK(selberg_fourier(m * p.delta, p, sign) == 0.0);
                CHECK(std::abs(selberg_fourier_quad(m * p.delta, p, sign)) < 1e-6);
            }
}

TEST_CASE("shortcut and quadrature transforms agree inside the band") {
    SelbergPair p{1.0, 1.0};
    for (double x : {0.1, 0.35, 0.7, 0.95})
        for (int sign : {+1, -1})
            CHECK(selberg_fourier(x, p, sign) ==
                  doctest::Approx(selberg_fourier_quad(x, p, sign)).epsilon(1e-12));
}

TEST_CASE("sgn-approximant L1 distance tends to one") {
    for (int sign : {+1, -1})
        CHECK(beurling_l1(200.0, sign) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("far field decays like the inverse square envelope") {
    Calibration cal;
    for (const SelbergPair& p : pairs())
        for (int sign : {+1, -1})
            for (double far = 2.0 / p.delta + 0.1; far < 20.0; far += 0.917) {
                double u = p.h + far;
                double env = cal.real_decay / (p.delta * far * p.delta * far);
                CHECK(std::abs(selberg_value(u, p, sign)) <= env);
            }
}

TEST_CASE("complex growth obeys the exponential-type envelope") {
    Calibration cal;
    SelbergPair p{1.0, 1.0};
    for (cplx z : {cplx(3.0, 1.0), cplx(0.0, 4.0), cplx(5.0, -2.0), cplx(8.0, 0.5)})
        for (int sign : {+1, -1}) {
            DecayReport r = complex_decay_check(z, p, sign, cal.complex_decay);
            CHECK(r.abs_value <= r.bound);
            CHECK(r.ratio <= cal.complex_decay);
        }
    CHECK_THROWS_AS((void)complex_decay_check(cplx(0.5, 0.1), p, +1, 2.0),
                    DomainError);
}

TEST_CASE("invalid pairs are rejected") {
    CHECK_THROWS_AS((void)selberg_majorant(0.0, SelbergPair{-1.0, 1.0}), DomainError);
    CHECK_THROWS_AS((void)selberg_fourier(0.0, SelbergPair{1.0, 0.0}, +1),
                    DomainError);
}
