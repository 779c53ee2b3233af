#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "znt/calibration.hpp"
#include "znt/errors.hpp"
#include "znt/perron.hpp"
#include "znt/sieve.hpp"
#include "znt/zeros.hpp"

using namespace znt;

namespace {

const SieveTable& sieve() {
    static SieveTable t = build_sieve(300000);
    return t;
}

const ZeroCache& cache() {
    static ZeroCache c = find_zeros(10.0, 300.0);
    return c;
}

const ContourPath& path100() {
    static ContourPath p = build_deformed_contour(100.5, sieve(), cache());
    return p;
}

} // namespace

TEST_CASE("arguments snap to the nearest half-integer") {
    bool adj = false;
    CHECK(enforce_half_fraction(100.5, &adj) == 100.5);
    CHECK(!adj);
    CHECK(enforce_half_fraction(100.3, &adj) == 100.5);
    CHECK(adj);
    CHECK(enforce_half_fraction(101.2, &adj) == 101.5);
    CHECK(adj);
}

TEST_CASE("vertical integral recovers the summatory function") {
    Calibration cal;
    for (double x : {2.5, 30.5, 100.5}) {
        PerronResult r = perron_vertical(x, cache());
        double m = (double)mertens(x, sieve());
        CHECK(std::abs(r.integral.real() - m) <= cal.perron_log * std::log(x));
        CHECK(std::abs(r.integral.imag()) < 1e-10);
    }
}

TEST_CASE("contour structure matches its construction rules") {
    const ContourPath& p = path100();
    long long X = 100;
    CHECK(p.x0 == (long long)std::floor(std::exp(std::sqrt(std::log(100.5)))));
    CHECK((long long)p.segments.size() == 4 * (X - p.x0) + 3);
    CHECK(p.sigma_c == doctest::Approx(0.5 + 1.0 / std::log(100.5)).epsilon(1e-15));
    // endpoints chain with no gaps, start and finish at c -+ iX
    cplx start(p.c, (double)-X), finish(p.c, (double)X);
    CHECK(std::abs(p.segments.front().a - start) < 1e-12);
    CHECK(std::abs(p.segments.back().b - finish) < 1e-12);
    for (size_t i = 0; i + 1 < p.segments.size(); ++i)
        CHECK(std::abs(p.segments[i].b - p.segments[i + 1].a) < 1e-12);
    for (const ContourSegment& s : p.segments) {
        CHECK(s.a.real() > 0.5);
        CHECK(s.b.real() > 0.5);
    }
}

TEST_CASE("contour is conjugate symmetric") {
    const ContourPath& p = path100();
    size_t m = p.segments.size();
    for (size_t i = 0; i < m; ++i) {
        const ContourSegment& fwd = p.segments[i];
        const ContourSegment& mir = p.segments[m - 1 - i];
        CHECK(std::abs(fwd.a - std::conj(mir.b)) < 1e-12);
        CHECK(std::abs(fwd.b - std::conj(mir.a)) < 1e-12);
    }
}

TEST_CASE("deformed and vertical integrals agree") {
    Calibration cal;
    PerronResult v = perron_vertical(100.5, cache());
    DeformedResult d = deformed_integral(path100(), cal);
    CHECK(std::abs(d.integral - v.integral) <=
          d.quad_error + v.quad_error + 1e-9);
    CHECK(std::abs(d.integral.imag()) < 1e-10);
}

TEST_CASE("every segment sits inside its envelope") {
    Calibration cal;
    DeformedResult d = deformed_integral(path100(), cal);
    REQUIRE(d.segments.size() == path100().segments.size());
    for (const SegmentReport& s : d.segments) {
        CHECK(s.within_envelope);
        CHECK(s.magnitude <= s.envelope);
    }
}

TEST_CASE("deformed integral is thread-count independent") {
    Calibration cal;
    DeformedResult a = deformed_integral(path100(), cal, {}, 1);
    DeformedResult b = deformed_integral(path100(), cal, {}, 4);
    CHECK(a.integral.real() == b.integral.real());
    CHECK(a.integral.imag() == b.integral.imag());
}

TEST_CASE("contour construction rejects out-of-range arguments") {
    CHECK_THROWS_AS((void)build_deformed_contour(2.5, sieve(), cache()),
                    DomainError);
    CHECK_THROWS_AS((void)build_deformed_contour(6000.5, sieve(), cache()),
                    CapacityError);
}

TEST_CASE("growth envelope is exact at its left edge and increases") {
    double e_e = std::exp(std::exp(1.0));
    double expect = std::sqrt(e_e) * std::exp(std::sqrt(std::exp(1.0)));
    CHECK(growth_envelope(e_e) == doctest::Approx(expect).epsilon(1e-12));
    double prev = 0.0;
    for (double x = e_e; x <= 60.0; x += 0.7) {
        double v = growth_envelope(x);
        CHECK(v > prev);
        prev = v;
    }
    CHECK_THROWS_AS((void)growth_envelope(10.0), DomainError);
}

TEST_CASE("summatory values sit below the growth envelope") {
    for (double x = 15.5; x <= 5000.0; x *= 1.7) {
        double m = (double)mertens(x, sieve());
        CHECK(std::abs(m) <= growth_envelope(x));
    }
}

TEST_CASE("the shifted line stays clear of zeros") {
    Calibration cal;
    std::vector<double> grid;
    for (double t = 0.0; t <= 100.0; t += 0.5) grid.push_back(t);
    LineBoundReport r = zeta_line_lower_bound_check(100.5, grid, cal);
    CHECK(r.ok);
    CHECK(r.min_product >= cal.zeta_line_floor);
}
