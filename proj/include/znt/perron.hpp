#pragma once

#include <vector>

#include "znt/calibration.hpp"
#include "znt/sieve.hpp"
#include "znt/zeros.hpp"
#include "znt/zeta.hpp"

namespace znt {

struct ContourSegment {
    enum Kind { vertical, horizontal };
    Kind kind = vertical;
    cplx a, b;          // directed endpoints
    long long n = -1;   // unit-interval index for per-n verticals, else -1
    int V = 0;          // V_n attached to the segment (0 for central/end pieces)
};

// Piecewise path from c - i[x] to c + i[x]; central vertical at
// 1/2 + 1/log x over [-x0, x0], per-n verticals at 1/2 + V_n/log x,
// conjugate-symmetric, real parts always above 1/2.
struct ContourPath {
    double x = 0.0;
    long long x0 = 0;      // [exp(sqrt(log x))]
    double c = 0.0;        // 1 + 1/log x
    double sigma_c = 0.0;  // 1/2 + 1/log x
    std::vector<ContourSegment> segments;
    std::vector<int> v_of_n;  // V_n for n in [x0, [x]-1]
};

// nearest half-integer; *adjusted set when x moved
double enforce_half_fraction(double x, bool* adjusted = nullptr);

struct PerronResult {
    cplx integral;
    double quad_error = 0.0;
};

// (1/2 pi i) int x^s / (s zeta(s)) ds on Re s = 1 + 1/log x, |Im s| <= [x]
PerronResult perron_vertical(double x, const ZeroCache& cache,
                             const ZetaEvaluator& ev = {});

ContourPath build_deformed_contour(double x, const SieveTable& sieve,
                                   const ZeroCache& cache);

struct SegmentReport {
    size_t index = 0;
    ContourSegment::Kind kind = ContourSegment::vertical;
    long long n = -1;
    double magnitude = 0.0;  // |segment integral| (without the 1/2 pi i factor)
    double envelope = 0.0;   // per-segment bound with the calibrated constant
    double quad_error = 0.0;
    bool within_envelope = false;
};

struct DeformedResult {
    cplx integral;  // with the 1/2 pi i normalization
    double quad_error = 0.0;
    std::vector<SegmentReport> segments;
};

DeformedResult deformed_integral(const ContourPath& path, const Calibration& cal,
                                 const ZetaEvaluator& ev = {}, unsigned threads = 1);

// sqrt(x) exp((log x)^{1/2} (log log x)^{14}); needs x >= e^e
double growth_envelope(double x);

struct LineBoundReport {
    double x = 0.0;
    double min_product = 0.0;  // min |zeta(1/2+1/log x+it)| (|t|+2)^{log log x}
    double argmin_t = 0.0;
    bool ok = false;
};
LineBoundReport zeta_line_lower_bound_check(double x, const std::vector<double>& t_grid,
                                            const Calibration& cal,
                                            const ZetaEvaluator& ev = {});

} // namespace znt
