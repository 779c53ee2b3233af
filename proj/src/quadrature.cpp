#include "znt/quadrature.hpp"

namespace znt {

GaussLegendre::GaussLegendre(int n) : x(n), w(n) {
    const double eps = 1e-15;
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < eps) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

const GaussLegendre& gl15() {
    static const GaussLegendre g(15);
    return g;
}
const GaussLegendre& gl31() {
    static const GaussLegendre g(31);
    return g;
}

namespace {

template <class T, class F>
T panel(const F& f, double a, double b, const GaussLegendre& g, long& evals) {
    double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    T s{};
    for (size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * f(c + hw * g.x[i]);
    evals += long(g.x.size());
    return s * hw;
}

template <class T, class F>
void adapt(const F& f, double a, double b, double tol, int depth, int max_depth,
           T& total, double& err, long& evals) {
    T coarse = panel<T>(f, a, b, gl15(), evals);
    T fine = panel<T>(f, a, b, gl31(), evals);
    double diff = std::abs(fine - coarse);
    if (diff <= tol || depth >= max_depth) {
        if (depth >= max_depth && diff > 64.0 * tol)
            throw QuadratureError("adaptive quadrature: tolerance unreachable at max depth");
        total += fine;
        err += diff;
        return;
    }
    double c = 0.5 * (a + b);
    adapt<T>(f, a, c, 0.5 * tol, depth + 1, max_depth, total, err, evals);
    adapt<T>(f, c, b, 0.5 * tol, depth + 1, max_depth, total, err, evals);
}

} // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double tol, int max_depth) {
    QuadResult r;
    adapt<double>(f, a, b, tol, 0, max_depth, r.value, r.error, r.evaluations);
    return r;
}

QuadResultC integrate(const std::function<std::complex<double>(double)>& f,
                      double a, double b, double tol, int max_depth) {
    QuadResultC r;
    adapt<std::complex<double>>(f, a, b, tol, 0, max_depth, r.value, r.error,
                                r.evaluations);
    return r;
}

} // namespace znt
