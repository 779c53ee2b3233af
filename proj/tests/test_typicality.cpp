#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "znt/errors.hpp"
#include "znt/explicit_formula.hpp"
#include "znt/sieve.hpp"
#include "znt/typicality.hpp"
#include "znt/zeros.hpp"

using namespace znt;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

const SieveTable& sieve() {
    static SieveTable t = build_sieve(300000);
    return t;
}

const ZeroCache& cache() {
    static ZeroCache c = find_zeros(10.0, 2300.0);
    return c;
}

// direct-loop reference for the max ordinate count; the maximizing window is
// anchored at an ordinate on one of its two ends
long long window_ref(double t, double L, const ZeroCache& c) {
    if (L >= 2.0) return 0;
    double lo = t - 1.0, hi = t + 1.0, amax = hi - L;
    if (amax <= lo) return 0;
    auto count = [&](double a) {
        long long k = 0;
        for (double g : c.ordinates)
            if (g >= a - 1e-9 && g <= a + L + 1e-9) ++k;
        return k;
    };
    std::vector<double> starts{lo + 1e-9, amax - 1e-9};
    for (double g : c.ordinates) {
        if (g > lo && g < amax) starts.push_back(g);
        if (g - L > lo && g - L < amax) starts.push_back(g - L);
    }
    long long best = 0;
    for (double a : starts) best = std::max(best, count(a));
    return best;
}

// direct sample of the Dirichlet polynomial at one sigma
double poly_at(double sigma, double t, double x) {
    double lx = std::log(x);
    cplx s = 0.0;
    for (long long n = 2; n <= (long long)x; ++n) {
        double lam = sieve().lambda(n);
        if (lam == 0.0) continue;
        double ln = std::log((double)n);
        s += lam * (lx - ln) / (ln * lx) * std::exp(-sigma * ln) *
             cplx(std::cos(t * ln), -std::sin(t * ln));
    }
    return std::abs(s);
}

} // namespace

TEST_CASE("window counter agrees with a dense sliding reference") {
    for (double t : {1000.37, 1500.0, 1764.2})
        for (double L : {0.3, 0.8, 1.5})
            CHECK(window_max_count(t, L, cache()) == window_ref(t, L, cache()));
}

TEST_CASE("windows of length two or more are vacuous") {
    CHECK(window_max_count(1000.0, 2.0, cache()) == 0);
    CHECK(window_max_count(1000.0, 5.0, cache()) == 0);
}

TEST_CASE("polynomial sup dominates pointwise samples") {
    double T = 1000.0, V = 4.0;
    double x = std::pow(T, 1.0 / V);
    for (double t : {1000.37, 1555.5}) {
        double sup = criterion_i_sup(t, V, T, sieve());
        for (double sigma : {0.5, 0.55, 0.7, 1.0})
            CHECK(sup >= poly_at(sigma, t, x) - 1e-9);
    }
}

TEST_CASE("desk heights classify typical at integer V") {
    TypicalityReport r = classify(1000.37, 4.0, 1000.0, sieve(), cache(), true);
    CHECK(r.typical);
    CHECK(!r.fail_i);
    CHECK(!r.fail_ii);
    CHECK(!r.fail_iii);
    CHECK(r.x == doctest::Approx(std::pow(1000.0, 0.25)).epsilon(1e-12));
}

TEST_CASE("the admissible V range uses the ordered endpoints") {
    double T = 1000.0;
    double top = std::pow(std::log(std::log(T)), 2.0);
    CHECK_NOTHROW((void)classify(1000.37, top, T, sieve(), cache()));
    CHECK_THROWS_AS((void)classify(1000.37, 50.0, T, sieve(), cache()), DomainError);
}

TEST_CASE("least certifying V stabilizes unit intervals") {
    int v100 = minimal_V(100, 100.0, sieve(), cache());
    CHECK(v100 >= 1);
    CHECK(v100 <= 3);
    CHECK(minimal_V(12, 12.0, sieve(), cache()) >= 1);
    CHECK_THROWS_AS((void)minimal_V(2, 2.0, sieve(), cache()), DomainError);
}

TEST_CASE("scan statistic decreases in V and empties above the max discrepancy") {
    double T = 1000.0, h = 1.0;
    long long prev = -1;
    for (double V : {0.5, 1.0, 2.0, 3.0}) {
        ScanResult s = scan_clustering(T, h, V, cache());
        if (prev >= 0) CHECK(s.R <= prev);
        prev = s.R;
        // selected points well-spaced and in range
        for (size_t i = 0; i + 1 < s.selected_points.size(); ++i)
            CHECK(s.selected_points[i + 1] - s.selected_points[i] >= 1.0 - 1e-9);
        for (double t : s.selected_points) {
            CHECK(t >= T);
            CHECK(t <= 2.0 * T);
            CHECK(std::abs(clustering_discrepancy(t, h, cache())) > V - 1e-6);
        }
    }
    CHECK(scan_clustering(T, h, 4.0, cache()).R == 0);
}

TEST_CASE("violation intervals capture exactly the exceedance set") {
    double T = 1000.0, h = 1.0, V = 1.5;
    auto iv = violation_intervals(T, h, V, cache());
    for (const auto& [a, b] : iv) {
        CHECK(b > a);
        double mid = 0.5 * (a + b);
        CHECK(std::abs(clustering_discrepancy(mid, h, cache())) > V);
    }
    // sorted and disjoint
    for (size_t i = 0; i + 1 < iv.size(); ++i)
        CHECK(iv[i].second <= iv[i + 1].first + 1e-12);
}

TEST_CASE("greedy selection is maximal against interval stuffing") {
    double T = 1000.0, h = 1.0;
    for (double V : {0.5, 1.0, 1.5}) {
        ScanResult s = scan_clustering(T, h, V, cache());
        auto iv = violation_intervals(T, h, V, cache());
        // pack each interval greedily from its left edge; the well-spacing
        // constraint carries across intervals
        long long packed = 0;
        double next_free = -1e18;
        for (const auto& [a, b] : iv) {
            double start = std::max(a, next_free);
            while (start <= b + 1e-12) {
                ++packed;
                next_free = start + 1.0;
                start = next_free;
            }
        }
        CHECK(s.R == packed);
    }
}

TEST_CASE("atypical scan finds nothing at desk scale") {
    ScanResult s = scan_atypical(1000.0, 4.0, sieve(), cache(), true);
    CHECK(s.R == 0);
    CHECK(s.selected_points.empty());
}
