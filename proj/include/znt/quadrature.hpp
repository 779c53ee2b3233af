#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "znt/errors.hpp"

namespace znt {

// Gauss-Legendre nodes/weights on [-1,1], Newton iteration on P_n.
struct GaussLegendre {
    std::vector<double> x, w;
    explicit GaussLegendre(int n);
};

const GaussLegendre& gl15();
const GaussLegendre& gl31();

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // estimated absolute error
    long evaluations = 0;
};

struct QuadResultC {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    long evaluations = 0;
};

// Adaptive bisection: per-panel estimate from GL15 vs GL31 disagreement.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double tol, int max_depth = 28);

QuadResultC integrate(const std::function<std::complex<double>(double)>& f,
                      double a, double b, double tol, int max_depth = 28);

} // namespace znt
