#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "znt/zeta.hpp"

namespace znt {

// Ordered positive ordinates of critical-line zeros on (t_min, t_max],
// completeness-certified against the argument-principle count.
struct ZeroCache {
    double t_min = 0.0, t_max = 0.0;
    std::vector<double> ordinates;
    double precision = 1e-8;       // absolute error bound per ordinate
    long long count_checksum = 0;  // certified N(t_max) - N(t_min)

    // ordinates <= T (T must lie in [t_min, t_max])
    long long count_below(double T) const;
    long long count_in(double a, double b) const;  // ordinates in (a, b]
    bool covers(double a, double b) const { return a >= t_min && b <= t_max; }

    void save(const std::string& path) const;
    static ZeroCache load(const std::string& path);
};

struct ZeroFinderOptions {
    double initial_step = 0.05;
    int max_halvings = 6;
    unsigned threads = 1;
    double polish_ceiling = 2100.0;  // re-refine with Euler-Maclaurin below this
    ZetaEvaluator eval{};
};

// Sign-change scan of Z plus bisection refinement; certified complete by
// matching the argument-principle count, with step-halving retries.
// Requires 10 <= t_lo < t_hi (there are no zeros below t = 14.13, so a cache
// built from t_lo = 10 carries absolute counts).
ZeroCache find_zeros(double t_lo, double t_hi, const ZeroFinderOptions& opt = {});

// N(T) by the argument principle: theta(T)/pi + 1 + S(T), S(T) from the
// continuous-variation argument along 2 -> 2+iT -> 1/2+iT.  T must not be
// an ordinate (the zero scan nudges its certification heights off zeros).
long long zero_count_formula(double T, const ZetaEvaluator& ev = {});

// zeros with ordinate <= T, from the certified cache (absolute count;
// requires cache.t_min <= 14)
long long n_of_t(double T, const ZeroCache& cache);

// S(T) = N(T) - (T/2pi) log(T/2pi e) - 7/8 from the certified count
double s_of_t(double T, const ZeroCache& cache);

// zeta'/zeta with a proximity guard against cached zeros (< 1e-6 away throws)
cplx zeta_log_deriv(cplx s, const ZeroCache& cache, const ZetaEvaluator& ev = {});

} // namespace znt
