#pragma once

#include <vector>

#include "znt/sieve.hpp"
#include "znt/zeros.hpp"

namespace znt {

// Three-criteria classifier: bounded prime-power Dirichlet polynomial over
// sigma >= 1/2, and bounded ordinate counts in two window scales inside
// (t-1, t+1).
struct TypicalityReport {
    double t = 0.0, V = 0.0, T = 0.0;
    double x = 0.0;  // T^{1/V}
    double criterion_i_sup = 0.0;
    long long criterion_ii_max_count = 0;
    long long criterion_iii_max_count = 0;
    bool fail_i = false, fail_ii = false, fail_iii = false;
    bool typical = false;
};

struct ScanResult {
    double T = 0.0, V = 0.0, h = 0.0;
    std::vector<double> selected_points;  // gaps >= 1, all inside [T, 2T]
    long long R = 0;
};

// Upper bound (within the padded grid tolerance) on
// sup_{sigma >= 1/2} |sum_{n<=x} Lambda(n) n^{-sigma-it} log(x/n)/(log n log x)|.
double criterion_i_sup(double t, double V, double T, const SieveTable& sieve);

// Exact max ordinate count over closed subintervals of (t-1, t+1) of the given
// length; vacuously 0 when window >= 2 (no such subinterval exists).
long long window_max_count(double t, double window, const ZeroCache& cache);

TypicalityReport classify(double t, double V, double T, const SieveTable& sieve,
                          const ZeroCache& cache, bool unsafe_range = false);

// Least integer V in [(log log n)^2, log n/log log n] such that every point of
// [n, n+1] is V-typical at scale T_scale, certified by a t-grid of step
// 1/(8 log T) with a derivative modulus for criterion (i) and exact window
// sweeps over (n-1, n+2) for (ii)/(iii).
int minimal_V(long long n, double T_scale, const SieveTable& sieve,
              const ZeroCache& cache);

enum class StridePolicy { greedy_leftmost };

// Well-spaced points in [T, 2T] where |N(t+h)-N(t-h)-(h/pi)log(t/2pi)| > V.
ScanResult scan_clustering(double T, double h, double V, const ZeroCache& cache,
                         StridePolicy policy = StridePolicy::greedy_leftmost);

// maximal violation intervals of the scan statistic, for oracle cross-checks
std::vector<std::pair<double, double>> violation_intervals(double T, double h,
                                                           double V,
                                                           const ZeroCache& cache);

// Well-spaced count of V-atypical points, one representative per flagged unit
// interval, skipping neighbors closer than 1.
ScanResult scan_atypical(double T, double V, const SieveTable& sieve,
                         const ZeroCache& cache, bool unsafe_range = false);

} // namespace znt
