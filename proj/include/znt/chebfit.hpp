#pragma once

#include <cmath>
#include <cstdlib>
#include <vector>

namespace znt {

// Chebyshev interpolant on [a, b]; coefficients from the usual cosine sums at
// the n interior nodes, evaluation by Clenshaw recurrence.
struct ChebFit {
    double a = 0.0, b = 1.0;
    std::vector<double> c;

    template <class F>
    static ChebFit fit(const F& f, double a, double b, int n) {
        ChebFit ch;
        ch.a = a;
        ch.b = b;
        ch.c.assign(n, 0.0);
        std::vector<double> fv(n);
        const double pi = 3.14159265358979323846;
        for (int j = 0; j < n; ++j) {
            double u = std::cos(pi * (j + 0.5) / n);
            fv[j] = f(0.5 * (b - a) * u + 0.5 * (a + b));
        }
        for (int k = 0; k < n; ++k) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += fv[j] * std::cos(pi * k * (j + 0.5) / n);
            ch.c[k] = 2.0 * s / n;
        }
        return ch;
    }

    double eval(double x) const {
        double u = (2.0 * x - a - b) / (b - a);
        double d1 = 0.0, d2 = 0.0;
        for (int k = int(c.size()) - 1; k >= 1; --k) {
            double tmp = d1;
            d1 = 2.0 * u * d1 - d2 + c[k];
            d2 = tmp;
        }
        return u * d1 - d2 + 0.5 * c[0];
    }

    ChebFit deriv() const {
        int n = int(c.size());
        ChebFit d;
        d.a = a;
        d.b = b;
        d.c.assign(n, 0.0);
        for (int k = n - 2; k >= 0; --k)
            d.c[k] = (k + 2 < n ? d.c[k + 2] : 0.0) + 2.0 * (k + 1) * c[k + 1];
        double scale = 2.0 / (b - a);
        for (auto& v : d.c) v *= scale;
        return d;
    }

    // sum of |c_k| over the last m coefficients, a practical interpolation
    // error estimate for smooth functions
    double tail_estimate(int m) const {
        double s = 0.0;
        for (int k = std::max<int>(0, int(c.size()) - m); k < int(c.size()); ++k)
            s += std::abs(c[k]);
        return s;
    }
};

} // namespace znt
