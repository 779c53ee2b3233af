#include "znt/perron.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "znt/errors.hpp"
#include "znt/parallel.hpp"
#include "znt/quadrature.hpp"
#include "znt/typicality.hpp"

namespace znt {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool has_half_fraction(double x) {
    return std::abs(x - std::floor(x) - 0.5) < 1e-9;
}

double loglog_clamped(double V) { return std::max(0.0, std::log(std::log(V))); }

cplx integrand(double x, cplx s, const ZetaEvaluator& ev) {
    return std::exp(s * std::log(x)) / (s * zeta(s, ev));
}

// directed line integral of x^s/(s zeta(s)) from a to b
QuadResultC segment_integral(double x, cplx a, cplx b, const ZetaEvaluator& ev,
                             double tol) {
    cplx d = b - a;
    std::function<cplx(double)> f = [&](double u) {
        return integrand(x, a + u * d, ev);
    };
    QuadResultC q = integrate(f, 0.0, 1.0, tol, 24);
    q.value *= d;
    q.error *= std::abs(d);
    return q;
}

} // namespace

double enforce_half_fraction(double x, bool* adjusted) {
    double y = std::round(x - 0.5) + 0.5;
    if (adjusted) *adjusted = std::abs(y - x) > 1e-12;
    return y;
}

PerronResult perron_vertical(double x, const ZeroCache& cache,
                             const ZetaEvaluator& ev) {
    if (!has_half_fraction(x)) throw DomainError("perron_vertical: need frac(x) = 1/2");
    if (x < 2.0) throw DomainError("perron_vertical: need x >= 2.5");
    double X = std::floor(x);
    if (X > ev.height_ceiling) throw CoverageError("perron_vertical: [x] beyond height ceiling");
    (void)cache;
    double c = 1.0 + 1.0 / std::log(x);
    PerronResult r;
    cplx acc = 0.0;
    // chunked sweep up the line; the adaptive splitter resolves the
    // x^{it} oscillation (about log(x)/2pi cycles per unit height)
    double chunk = 8.0;
    for (double lo = -X; lo < X - 1e-12; lo += chunk) {
        double hi = std::min(X, lo + chunk);
        std::function<cplx(double)> f = [&](double t) {
            return integrand(x, cplx(c, t), ev);
        };
        QuadResultC q = integrate(f, lo, hi, 1e-9, 24);
        acc += q.value;
        r.quad_error += q.error;
    }
    // ds = i dt along the line, so (1/2 pi i) int f ds = (1/2 pi) int f dt
    r.integral = acc / (2.0 * kPi);
    r.quad_error /= 2.0 * kPi;
    return r;
}

ContourPath build_deformed_contour(double x, const SieveTable& sieve,
                                   const ZeroCache& cache) {
    if (!has_half_fraction(x)) throw DomainError("build_deformed_contour: need frac(x) = 1/2");
    if (x > 5000.5) throw CapacityError("build_deformed_contour: x beyond desk ceiling");
    ContourPath p;
    p.x = x;
    double lx = std::log(x);
    p.x0 = (long long)std::floor(std::exp(std::sqrt(lx)));
    p.c = 1.0 + 1.0 / lx;
    p.sigma_c = 0.5 + 1.0 / lx;
    long long X = (long long)std::floor(x);
    if (p.x0 < 3 || p.x0 > X - 1)
        throw DomainError("build_deformed_contour: x too small for the anchor x0");

    p.v_of_n.resize(size_t(X - p.x0));
    for (long long n = p.x0; n <= X - 1; ++n)
        p.v_of_n[size_t(n - p.x0)] = minimal_V(n, (double)n, sieve, cache);
    auto sig = [&](long long n) {
        return 0.5 + p.v_of_n[size_t(n - p.x0)] / lx;
    };
    auto vert = [&](double sigma, double t0, double t1, long long n, int V) {
        p.segments.push_back({ContourSegment::vertical, cplx(sigma, t0), cplx(sigma, t1), n, V});
    };
    auto horiz = [&](double s0, double s1, double t, long long n, int V) {
        p.segments.push_back({ContourSegment::horizontal, cplx(s0, t), cplx(s1, t), n, V});
    };

    auto vn = [&](long long n) { return p.v_of_n[size_t(n - p.x0)]; };

    // ascending in height from c - iX to c + iX; each horizontal is labeled
    // by the lower-indexed adjacent vertical
    horiz(p.c, sig(X - 1), -(double)X, X - 1, vn(X - 1));
    for (long long n = X - 1; n >= p.x0; --n) {
        vert(sig(n), -(double)(n + 1), -(double)n, n, vn(n));
        long long lab = std::max(n - 1, p.x0);
        double next = (n == p.x0) ? p.sigma_c : sig(n - 1);
        horiz(sig(n), next, -(double)n, lab, vn(lab));
    }
    vert(p.sigma_c, -(double)p.x0, (double)p.x0, -1, 0);
    for (long long n = p.x0; n <= X - 1; ++n) {
        long long lab = std::max(n - 1, p.x0);
        double prev = (n == p.x0) ? p.sigma_c : sig(n - 1);
        horiz(prev, sig(n), (double)n, lab, vn(lab));
        vert(sig(n), (double)n, (double)(n + 1), n, vn(n));
    }
    horiz(sig(X - 1), p.c, (double)X, X - 1, vn(X - 1));

    if ((long long)p.segments.size() != 4 * (X - p.x0) + 3)
        throw InconsistencyError("build_deformed_contour: segment count mismatch");
    for (size_t i = 0; i + 1 < p.segments.size(); ++i)
        if (std::abs(p.segments[i].b - p.segments[i + 1].a) > 1e-12)
            throw InconsistencyError("build_deformed_contour: path not connected");
    for (const auto& s : p.segments)
        if (s.a.real() <= 0.5 || s.b.real() <= 0.5)
            throw InconsistencyError("build_deformed_contour: real part at or below 1/2");
    return p;
}

DeformedResult deformed_integral(const ContourPath& path, const Calibration& cal,
                                 const ZetaEvaluator& ev, unsigned threads) {
    if (path.segments.empty()) throw DomainError("deformed_integral: empty path");
    double x = path.x;
    double lx = std::log(x);
    double sx = std::sqrt(x);

    auto envelope_of = [&](const ContourSegment& seg) {
        if (seg.n < 0)  // central vertical
            return cal.contour_envelope * sx * std::exp(std::sqrt(lx) * std::log(lx));
        double n = (double)seg.n;
        double V = (double)seg.V;
        double base = cal.contour_envelope * sx / n;
        if (seg.kind == ContourSegment::vertical)
            return base * std::exp(V + V * std::log(lx / std::log(n)) +
                                   8.0 * V * loglog_clamped(V));
        double e1 = std::exp(V * std::log(lx / std::log(n)) + 9.0 * V * loglog_clamped(V));
        double e2 = e1;
        long long m = seg.n + 1;
        if (m <= (long long)std::floor(x) - 1) {
            double Vm = (double)path.v_of_n[size_t(m - path.x0)];
            e2 = std::exp(Vm * std::log(lx / std::log((double)m)) +
                          9.0 * Vm * loglog_clamped(Vm));
        }
        return base * (e1 + e2);
    };

    std::function<QuadResultC(size_t)> work = [&](size_t i) {
        const ContourSegment& s = path.segments[i];
        return segment_integral(x, s.a, s.b, ev, 1e-9);
    };
    std::vector<QuadResultC> vals = parallel_map<QuadResultC>(path.segments.size(), work, threads);

    DeformedResult r;
    cplx acc = 0.0;
    for (size_t i = 0; i < vals.size(); ++i) {
        acc += vals[i].value;
        r.quad_error += vals[i].error;
        SegmentReport rep;
        rep.index = i;
        rep.kind = path.segments[i].kind;
        rep.n = path.segments[i].n;
        rep.magnitude = std::abs(vals[i].value);
        rep.envelope = envelope_of(path.segments[i]);
        rep.quad_error = vals[i].error;
        rep.within_envelope = rep.magnitude <= rep.envelope;
        r.segments.push_back(rep);
    }
    r.integral = acc / cplx(0.0, 2.0 * kPi);
    r.quad_error /= 2.0 * kPi;
    return r;
}

double growth_envelope(double x) {
    double ee = std::exp(std::exp(1.0));
    if (x < ee - 1e-9) throw DomainError("growth_envelope: need x >= e^e");
    double llx = std::log(std::log(x));
    return std::sqrt(x) * std::exp(std::sqrt(std::log(x)) * std::pow(llx, 14));
}

LineBoundReport zeta_line_lower_bound_check(double x, const std::vector<double>& t_grid,
                                            const Calibration& cal,
                                            const ZetaEvaluator& ev) {
    if (x <= std::exp(1.0)) throw DomainError("zeta_line_lower_bound_check: need log log x > 0");
    LineBoundReport r;
    r.x = x;
    double sigma = 0.5 + 1.0 / std::log(x);
    double llx = std::log(std::log(x));
    r.min_product = 1e300;
    for (double t : t_grid) {
        double p = std::abs(zeta(cplx(sigma, t), ev)) *
                   std::pow(std::abs(t) + 2.0, llx);
        if (p < r.min_product) {
            r.min_product = p;
            r.argmin_t = t;
        }
    }
    r.ok = r.min_product >= cal.zeta_line_floor;
    return r;
}

} // namespace znt
