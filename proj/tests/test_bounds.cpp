#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "znt/calibration.hpp"
#include "znt/errors.hpp"
#include "znt/sieve.hpp"
#include "znt/zeros.hpp"
#include "znt/zeta.hpp"
#include "znt/zeta_bounds.hpp"

using namespace znt;

namespace {

constexpr double kPi = 3.14159265358979323846;

const SieveTable& sieve() {
    static SieveTable t = build_sieve(300000);
    return t;
}

const ZeroCache& cache() {
    static ZeroCache c = find_zeros(10.0, 300.0);
    return c;
}

} // namespace

TEST_CASE("zero sum agrees with direct complex arithmetic") {
    for (double sigma : {0.6, 1.0, 2.0})
        for (double t : {50.0, 120.5, 200.0}) {
            FResult f = f_of_s(sigma, t, cache());
            cplx s(sigma, t);
            double direct = 0.0;
            for (double g : cache().ordinates)
                direct += (1.0 / (s - cplx(0.5, g))).real() +
                          (1.0 / (s - cplx(0.5, -g))).real();
            CHECK(f.value == doctest::Approx(direct).epsilon(1e-12));
            CHECK(f.tail_bound > 0.0);
            CHECK(f.tail_bound < 0.1 * f.value);
        }
    CHECK_THROWS_AS((void)f_of_s(0.5, 100.0, cache()), DomainError);
    CHECK_THROWS_AS((void)f_of_s(1.0, 290.0, cache()), CoverageError);
}

TEST_CASE("nearest zero dominates the sum close to the line") {
    double g1 = cache().ordinates[0];
    double d = 0.01;
    FResult f = f_of_s(0.5 + d, g1, cache());
    CHECK(f.value >= 1.0 / d);
    CHECK(f.value <= 1.05 / d);
}

TEST_CASE("hadamard residual stays order one near the line") {
    Calibration cal;
    for (double sigma : {0.55, 0.7, 1.0})
        for (double t : {100.0, 180.0, 250.0}) {
            double r = hadamard_residual(sigma, t, cache());
            CHECK(std::abs(r - 0.5 * std::log(2.0 * kPi)) < 1.0);
            CHECK(std::abs(r) <= cal.hadamard_residual_max);
        }
}

TEST_CASE("quadrature and closed form of the sigma integral coincide") {
    for (double t : {100.0, 222.2}) {
        double V = 3.0, T = 1000.0;
        double sigma0 = 0.5 + V / std::log(T);
        ZeroSumIdentityReport r = zero_sum_identity(0.52, sigma0, t, V, T, cache());
        CHECK(std::abs(r.integral_quad - r.closed_form) < 1e-7);
        CHECK(r.range_low + r.range_annuli + r.range_far ==
              doctest::Approx(r.closed_form).epsilon(1e-12));
        CHECK(r.annuli == (long long)std::floor(std::log(T) / (4.0 * kPi * V)));
        CHECK(r.tail_bound >= 0.0);
    }
    CHECK_THROWS_AS((void)zero_sum_identity(0.5, 0.6, 100.0, 3.0, 1000.0, cache()),
                    DomainError);
    CHECK_THROWS_AS((void)zero_sum_identity(0.7, 0.6, 100.0, 3.0, 1000.0, cache()),
                    DomainError);
}

TEST_CASE("log-magnitude drop toward the line respects its budget") {
    double T = 1000.0;
    for (double t : {100.0, 150.5})
        for (double V : {2.0, 3.0}) {
            double sigma0 = 0.5 + V / std::log(T);
            for (double frac : {0.9, 0.5, 0.25}) {
                BoundReport r =
                    log_drop_check(t, V, 0.5 + frac * (sigma0 - 0.5), T, cache());
                CHECK(r.slack >= 0.0);
            }
        }
    CHECK_THROWS_AS((void)log_drop_check(100.0, 2.0, 1.5, 1000.0, cache()),
                    DomainError);
}

TEST_CASE("prime-sum lower bound on log magnitude holds") {
    Calibration cal;
    for (double sigma : {0.6, 0.8, 1.2})
        for (double t : {100.0, 200.0})
            for (double x : {50.0, 500.0, 5000.0}) {
                BoundReport r = prime_sum_bound_check(sigma, t, x, sieve(), cache(), cal);
                CHECK(r.slack >= 0.0);
            }
    CHECK_THROWS_AS((void)prime_sum_bound_check(0.4, 100.0, 50.0, sieve(), cache(), {}),
                    DomainError);
    CHECK_THROWS_AS((void)prime_sum_bound_check(0.6, 100.0, 1.5, sieve(), cache(), {}),
                    DomainError);
    CHECK_THROWS_AS((void)prime_sum_bound_check(0.6, 100.0, 1e9, sieve(), cache(), {}),
                    CoverageError);
}

TEST_CASE("two-regime lower bound holds on the sigma grid") {
    Calibration cal;
    for (double t : {100.0, 175.3, 250.0})
        for (double V : {2.0, 3.0, 4.0}) {
            auto reports = lower_bound_grid(t, V, 1000.0, sieve(), cache(), cal);
            REQUIRE(!reports.empty());
            bool saw_sigma0 = false;
            for (const BoundReport& r : reports) {
                CHECK(r.slack >= 0.0);
                CHECK(r.sigma > 0.5);
                if (r.sigma == r.sigma0) saw_sigma0 = true;
            }
            CHECK(saw_sigma0);
        }
    CHECK_THROWS_AS((void)lower_bound_grid(100.0, 50.0, 1000.0, sieve(), cache(), {}),
                    DomainError);
}
