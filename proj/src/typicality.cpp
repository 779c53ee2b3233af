#include "znt/typicality.hpp"

#include <algorithm>
#include <cmath>

#include "znt/errors.hpp"

namespace znt {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kTieEps = 1e-9;

struct PolyTerms {
    std::vector<double> a, log_n;  // a_n = Lambda(n) log(x/n) / (log n log x)
    double x = 0.0, log_x = 0.0;
    double sigma_lip = 0.0;  // sum a_n n^{-1/2} log n, bounds d/dsigma and d/dt
};

PolyTerms poly_terms(double x, const SieveTable& sieve) {
    if (x > double(sieve.limit) + 0.5)
        throw CoverageError("criterion (i): sieve shorter than T^{1/V}");
    PolyTerms p;
    p.x = x;
    p.log_x = std::log(x);
    for (long long n = 2; n <= (long long)x; ++n) {
        double lam = sieve.lambda(n);
        if (lam == 0.0) continue;
        double ln = std::log((double)n);
        double a = lam / ln * (p.log_x - ln) / p.log_x;
        if (a <= 0.0) continue;
        p.a.push_back(a);
        p.log_n.push_back(ln);
        p.sigma_lip += a * ln / std::sqrt((double)n);
    }
    return p;
}

double poly_abs(const PolyTerms& p, double sigma, double t) {
    double re = 0.0, im = 0.0;
    for (size_t i = 0; i < p.a.size(); ++i) {
        double r = p.a[i] * std::exp(-sigma * p.log_n[i]);
        double ph = t * p.log_n[i];
        re += r * std::cos(ph);
        im -= r * std::sin(ph);
    }
    return std::hypot(re, im);
}

double poly_sup_sigma(const PolyTerms& p, double t) {
    if (p.a.empty()) return 0.0;
    double d_max = 10.0 / p.log_x;
    double best = poly_abs(p, 0.5, t);
    // geometric offsets up to sigma* = 1/2 + 10/log x
    const int m = 63;
    double q = std::pow(1e-3, 1.0 / (m - 1));
    double prev = 0.5, max_gap = 0.0;
    for (int k = m - 1; k >= 0; --k) {
        double s = 0.5 + d_max * std::pow(q, k);
        best = std::max(best, poly_abs(p, s, t));
        max_gap = std::max(max_gap, s - prev);
        prev = s;
    }
    double grid_bound = best + p.sigma_lip * max_gap / 2.0;
    // past sigma*: termwise monotone decay caps the sup by the absolute sum
    double tail = 0.0;
    for (size_t i = 0; i < p.a.size(); ++i)
        tail += p.a[i] * std::exp(-(0.5 + d_max) * p.log_n[i]);
    return std::max(grid_bound, tail);
}

void check_v_range(double V, double T, bool unsafe_range) {
    if (unsafe_range) return;
    double llt = std::log(std::log(T));
    if (llt <= 0.0) throw DomainError("V range undefined: need log log T > 0");
    // the two endpoints cross at desk heights; accept the interval either way
    double e1 = llt * llt, e2 = std::log(T) / llt;
    if (V < std::min(e1, e2) || V > std::max(e1, e2))
        throw DomainError(
            "V outside [(log log T)^2, log T/log log T]; pass unsafe-range to force");
}

// sup over a0 in (lo, hi - L) of #{ordinates in [a0, a0 + L]}
long long max_window_count_over(double lo, double hi, double L,
                                const ZeroCache& cache) {
    double a_max = hi - L;
    if (a_max <= lo) return 0;
    auto b = std::lower_bound(cache.ordinates.begin(), cache.ordinates.end(), lo);
    auto e = std::upper_bound(cache.ordinates.begin(), cache.ordinates.end(), hi);
    std::vector<double> starts{lo + kTieEps, a_max - kTieEps};
    for (auto it = b; it != e; ++it) {
        if (*it > lo && *it < a_max) starts.push_back(*it);
        double s = *it - L;
        if (s > lo && s < a_max) starts.push_back(s);
    }
    long long best = 0;
    for (double a0 : starts)
        best = std::max(best, cache.count_in(a0 - kTieEps, a0 + L + kTieEps));
    return best;
}

void check_window_coverage(double lo, double hi, double L, const ZeroCache& cache) {
    if (cache.t_min > std::max(14.0, lo - L) || cache.t_max < hi + L)
        throw CoverageError("window count: zero cache does not cover the range");
}

double window_iii_length(double V, double T) {
    double lv = std::log(V);
    if (lv <= 0.0) return 1e30;  // V <= 1: window degenerates, condition vacuous
    return kTwoPi * V / (lv * std::log(T));
}

} // namespace

double criterion_i_sup(double t, double V, double T, const SieveTable& sieve) {
    double x = std::pow(T, 1.0 / V);
    if (x < 2.0) return 0.0;
    PolyTerms p = poly_terms(x, sieve);
    return poly_sup_sigma(p, t);
}

long long window_max_count(double t, double window, const ZeroCache& cache) {
    if (window <= 0.0) throw DomainError("window_max_count: window must be positive");
    if (window >= 2.0) return 0;  // no subinterval of (t-1, t+1) that long
    check_window_coverage(t - 1.0, t + 1.0, window, cache);
    return max_window_count_over(t - 1.0, t + 1.0, window, cache);
}

TypicalityReport classify(double t, double V, double T, const SieveTable& sieve,
                          const ZeroCache& cache, bool unsafe_range) {
    check_v_range(V, T, unsafe_range);
    TypicalityReport r;
    r.t = t;
    r.V = V;
    r.T = T;
    r.x = std::pow(T, 1.0 / V);
    r.criterion_i_sup = criterion_i_sup(t, V, T, sieve);
    r.criterion_ii_max_count = window_max_count(t, kTwoPi * V / std::log(T), cache);
    double L3 = window_iii_length(V, T);
    r.criterion_iii_max_count = (L3 >= 2.0) ? 0 : window_max_count(t, L3, cache);
    r.fail_i = r.criterion_i_sup > 2.0 * V;
    r.fail_ii = r.criterion_ii_max_count > 3.0 * V;
    r.fail_iii = double(r.criterion_iii_max_count) > V;
    r.typical = !(r.fail_i || r.fail_ii || r.fail_iii);
    return r;
}

namespace {

bool interval_all_typical(long long n, int V, double T, const SieveTable& sieve,
                          const ZeroCache& cache) {
    double L2 = kTwoPi * V / std::log(T);
    if (L2 < 2.0) {
        check_window_coverage(n - 1.0, n + 2.0, L2, cache);
        if (max_window_count_over(n - 1.0, n + 2.0, L2, cache) > 3LL * V) return false;
    }
    double L3 = window_iii_length(V, T);
    if (L3 < 2.0) {
        check_window_coverage(n - 1.0, n + 2.0, L3, cache);
        if (max_window_count_over(n - 1.0, n + 2.0, L3, cache) > V) return false;
    }
    double x = std::pow(T, 1.0 / V);
    if (x >= 2.0) {
        PolyTerms p = poly_terms(x, sieve);
        double step = 1.0 / (8.0 * std::log(T));
        double pad = p.sigma_lip * step / 2.0;  // |d/dt| shares the sigma_lip bound
        long long steps = (long long)std::ceil(1.0 / step);
        for (long long k = 0; k <= steps; ++k) {
            double t = n + std::min(1.0, k * step);
            if (poly_sup_sigma(p, t) + pad > 2.0 * V) return false;
        }
    }
    return true;
}

} // namespace

int minimal_V(long long n, double T_scale, const SieveTable& sieve,
              const ZeroCache& cache) {
    if (n < 3) throw DomainError("minimal_V: need log log n > 0");
    double lln = std::log(std::log((double)n));
    int lo = std::max(1, (int)std::ceil(lln * lln - 1e-12));
    // the upper endpoint drops below the lower one at desk heights; keep the
    // scan nonempty by extending to whichever endpoint is larger
    int hi = std::max(lo, (int)std::floor(std::log((double)n) / lln + 1e-12));
    for (int V = lo; V <= hi; ++V)
        if (interval_all_typical(n, V, T_scale, sieve, cache)) return V;
    throw InconsistencyError(
        "minimal_V: no V in the admissible range certifies [n, n+1]");
}

std::vector<std::pair<double, double>> violation_intervals(double T, double h,
                                                           double V,
                                                           const ZeroCache& cache) {
    if (h <= 0.0 || h > std::sqrt(T)) throw DomainError("need 0 < h <= sqrt(T)");
    if (!cache.covers(T - h, 2.0 * T + h) || cache.t_min > 14.0)
        throw CoverageError("violation scan: cache must cover [T-h, 2T+h]");
    std::vector<double> bp{T, 2.0 * T};
    for (double g : cache.ordinates) {
        for (double b : {g - h, g + h})
            if (b > T && b < 2.0 * T) bp.push_back(b);
    }
    std::sort(bp.begin(), bp.end());
    auto drift = [&](double t) { return (h / kPi) * std::log(t / kTwoPi); };
    std::vector<std::pair<double, double>> out;
    for (size_t i = 0; i + 1 < bp.size(); ++i) {
        double p = bp[i], q = bp[i + 1];
        if (q - p < 1e-12) continue;
        double mid = 0.5 * (p + q);
        double cnt = double(cache.count_in(mid - h, mid + h));
        // D(t) = cnt - drift(t) decreases across the piece
        if (cnt - drift(p) > V) {
            double thi = kTwoPi * std::exp(kPi * (cnt - V) / h);
            out.emplace_back(p, std::min(q, thi));
        }
        if (cnt - drift(q) < -V) {
            double tlo = kTwoPi * std::exp(kPi * (cnt + V) / h);
            out.emplace_back(std::max(p, tlo), q);
        }
    }
    std::sort(out.begin(), out.end());
    std::vector<std::pair<double, double>> merged;
    for (auto& iv : out) {
        if (!merged.empty() && iv.first <= merged.back().second + 1e-12)
            merged.back().second = std::max(merged.back().second, iv.second);
        else
            merged.push_back(iv);
    }
    // trim to the open interior: the raw endpoints sit on counting breakpoints
    // or exact roots of the drift equation, where the exceedance is not strict
    std::vector<std::pair<double, double>> trimmed;
    for (auto& [a, b] : merged)
        if (a + 2e-9 < b) trimmed.emplace_back(a + 1e-9, b - 1e-9);
    return trimmed;
}

ScanResult scan_clustering(double T, double h, double V, const ZeroCache& cache,
                         StridePolicy policy) {
    (void)policy;  // greedy leftmost is the only implemented policy
    ScanResult r;
    r.T = T;
    r.h = h;
    r.V = V;
    auto ivs = violation_intervals(T, h, V, cache);
    double last = -1e18;
    for (auto& [a, b] : ivs) {
        double t = std::max(a, last + 1.0);
        while (t <= b) {
            r.selected_points.push_back(t);
            last = t;
            t += 1.0;
        }
    }
    r.R = (long long)r.selected_points.size();
    return r;
}

ScanResult scan_atypical(double T, double V, const SieveTable& sieve,
                         const ZeroCache& cache, bool unsafe_range) {
    check_v_range(V, T, unsafe_range);
    ScanResult r;
    r.T = T;
    r.V = V;
    double step = 1.0 / (8.0 * std::log(T));
    double last = -1e18;
    for (double s = T; s < 2.0 * T - 0.5; s += 1.0) {
        double found = -1.0;
        for (double t = s; t <= std::min(s + 1.0, 2.0 * T); t += step) {
            TypicalityReport rep = classify(t, V, T, sieve, cache, unsafe_range);
            if (!rep.typical) {
                found = t;
                break;
            }
        }
        if (found >= 0.0 && found >= last + 1.0) {
            r.selected_points.push_back(found);
            last = found;
        }
    }
    r.R = (long long)r.selected_points.size();
    return r;
}

} // namespace znt
