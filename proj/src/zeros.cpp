#include "znt/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

#include "znt/errors.hpp"
#include "znt/parallel.hpp"
#include "znt/quadrature.hpp"

namespace znt {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// arg zeta(2+iT) from the absolutely convergent Dirichlet series of log zeta;
// |log zeta(2+it)| <= log zeta(2) < pi/2, so the principal value is the
// continuous-variation value along Re s = 2.
double arg_zeta_2(double T) {
    struct Tab {
        std::vector<double> lam_over_log;  // Lambda(n)/log n, n = 2..M
        Tab() {
            const int M = 100000;
            lam_over_log.assign(M + 1, 0.0);
            std::vector<bool> comp(M + 1, false);
            for (int p = 2; p <= M; ++p) {
                if (comp[p]) continue;
                for (long long q = 2ll * p; q <= M; q += p) comp[q] = true;
                double lp = std::log(double(p));
                for (long long q = p; q <= M; q *= p) {
                    lam_over_log[q] = lp / std::log(double(q));
                    if (q > M / p) break;
                }
            }
        }
    };
    static const Tab tab;
    double re = 0.0, im = 0.0;
    for (size_t n = 2; n < tab.lam_over_log.size(); ++n) {
        double a = tab.lam_over_log[n];
        if (a == 0.0) continue;
        double ln = std::log(double(n));
        double mag = a / (double(n) * double(n));
        re += mag * std::cos(T * ln);
        im -= mag * std::sin(T * ln);
    }
    (void)re;
    return im;
}

} // namespace

long long zero_count_formula(double T, const ZetaEvaluator& ev) {
    if (T < 10.0) return 0;  // gamma_1 = 14.13..., nothing below
    double arg = arg_zeta_2(T);
    auto f = [&](double sigma) { return zeta_log_deriv_raw(cplx(sigma, T), ev); };
    QuadResultC q = integrate(f, 2.0, 0.5, 1e-6, 30);
    arg += q.value.imag();
    double n = riemann_siegel_theta(T) / kPi + 1.0 + arg / kPi;
    return llround(n);
}

namespace {

double refine_zero(const std::function<double(double)>& f, double a, double b,
                   double fa, double fb) {
    // Brent's method
    double c = a, fc = fa, d = b - a, e = d;
    const double tol0 = 1e-12;
    for (int iter = 0; iter < 100; ++iter) {
        if ((fb > 0 && fc > 0) || (fb < 0 && fc < 0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol = 2.0 * 1e-16 * std::abs(b) + 0.5 * tol0;
        double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol || fb == 0.0) return b;
        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            double s = fb / fa, p, q2;
            if (a == c) {
                p = 2.0 * xm * s;
                q2 = 1.0 - s;
            } else {
                double q = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q2 = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0) q2 = -q2;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q2 - std::abs(tol * q2), std::abs(e * q2))) {
                e = d;
                d = p / q2;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol) ? d : (xm > 0 ? tol : -tol);
        fb = f(b);
    }
    return b;
}

std::vector<double> scan_chunk(double lo, double hi, double step,
                               const ZetaEvaluator& ev) {
    auto Zf = [&](double t) { return riemann_siegel_Z(t, ev); };
    std::vector<double> zs;
    double prev_t = lo, prev_z = Zf(lo);
    for (double t = lo + step;; t += step) {
        if (t > hi) t = hi;
        double z = Zf(t);
        if ((prev_z < 0 && z > 0) || (prev_z > 0 && z < 0))
            zs.push_back(refine_zero(Zf, prev_t, t, prev_z, z));
        else if (z == 0.0)
            zs.push_back(t);
        prev_t = t;
        prev_z = z;
        if (t >= hi) break;
    }
    return zs;
}

// move T off any ordinate (distance >= 0.004), stepping downward
double nudge_down(double T, const std::vector<double>& ord) {
    for (int k = 0; k < 50; ++k) {
        auto it = std::lower_bound(ord.begin(), ord.end(), T - 0.004);
        bool close = false;
        for (; it != ord.end() && *it <= T + 0.004; ++it) close = true;
        if (!close) return T;
        T -= 0.0045;
    }
    return T;
}

double nudge_up(double T, const std::vector<double>& ord) {
    for (int k = 0; k < 50; ++k) {
        auto it = std::lower_bound(ord.begin(), ord.end(), T - 0.004);
        bool close = false;
        for (; it != ord.end() && *it <= T + 0.004; ++it) close = true;
        if (!close) return T;
        T += 0.0045;
    }
    return T;
}

} // namespace

ZeroCache find_zeros(double t_lo, double t_hi, const ZeroFinderOptions& opt) {
    if (t_lo < 10.0 || t_lo >= t_hi)
        throw DomainError("find_zeros: need 10 <= t_lo < t_hi");
    if (t_hi > opt.eval.height_ceiling)
        throw DomainError("find_zeros: t_hi exceeds height ceiling");

    const double chunk_len = 5.0;
    std::size_t nchunk = std::size_t(std::ceil((t_hi - t_lo) / chunk_len));

    for (int attempt = 0; attempt <= opt.max_halvings; ++attempt) {
        double step = opt.initial_step / double(1 << attempt);
        std::function<std::vector<double>(std::size_t)> job = [&](std::size_t k) {
            double lo = t_lo + double(k) * chunk_len;
            double hi = std::min(t_hi, lo + chunk_len);
            std::vector<double> zs = scan_chunk(lo, hi, step, opt.eval);
            // polish RS-located zeros with the Euler-Maclaurin evaluator
            for (double& g : zs) {
                if (g < opt.eval.em_crossover || g > opt.polish_ceiling) continue;
                ZetaEvaluator em = opt.eval;
                em.em_crossover = opt.polish_ceiling + 1.0;
                auto Zf = [&](double t) { return riemann_siegel_Z(t, em); };
                double w = 5e-4;
                for (int grow = 0; grow < 4; ++grow, w *= 8.0) {
                    double fa = Zf(g - w), fb = Zf(g + w);
                    if ((fa < 0) != (fb < 0)) {
                        g = refine_zero(Zf, g - w, g + w, fa, fb);
                        break;
                    }
                }
            }
            return zs;
        };
        auto per_chunk = parallel_map<std::vector<double>>(nchunk, job, opt.threads);
        ZeroCache cache;
        cache.t_min = t_lo;
        cache.t_max = t_hi;
        for (auto& v : per_chunk)
            cache.ordinates.insert(cache.ordinates.end(), v.begin(), v.end());
        std::sort(cache.ordinates.begin(), cache.ordinates.end());
        cache.ordinates.erase(
            std::unique(cache.ordinates.begin(), cache.ordinates.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-9; }),
            cache.ordinates.end());

        double lo_cert = nudge_up(t_lo, cache.ordinates);
        double hi_cert = nudge_down(t_hi, cache.ordinates);
        long long formula =
            zero_count_formula(hi_cert, opt.eval) - zero_count_formula(lo_cert, opt.eval);
        auto begin = std::upper_bound(cache.ordinates.begin(), cache.ordinates.end(), lo_cert);
        auto end = std::upper_bound(cache.ordinates.begin(), cache.ordinates.end(), hi_cert);
        long long enumerated = end - begin;
        if (formula == enumerated) {
            cache.count_checksum = (long long)cache.ordinates.size();
            cache.precision = (t_hi <= opt.polish_ceiling) ? 1e-8 : 1e-6;
            return cache;
        }
        if (attempt == opt.max_halvings) {
            // localize the first failing chunk for the error message
            for (std::size_t k = 0; k < nchunk; ++k) {
                double lo = nudge_up(t_lo + double(k) * chunk_len, cache.ordinates);
                double hi =
                    nudge_down(std::min(t_hi, t_lo + double(k + 1) * chunk_len),
                               cache.ordinates);
                long long fc = zero_count_formula(hi, opt.eval) -
                               zero_count_formula(lo, opt.eval);
                auto b2 = std::upper_bound(cache.ordinates.begin(), cache.ordinates.end(), lo);
                auto e2 = std::upper_bound(cache.ordinates.begin(), cache.ordinates.end(), hi);
                if (fc != e2 - b2) {
                    std::ostringstream os;
                    os << "find_zeros: completeness certification failed on ["
                       << lo << ", " << hi << "] (formula " << fc << ", found "
                       << (e2 - b2) << ")";
                    throw CompletenessError(os.str());
                }
            }
            throw CompletenessError("find_zeros: completeness certification failed");
        }
    }
    throw CompletenessError("find_zeros: unreachable");
}

long long ZeroCache::count_below(double T) const {
    if (T < t_min || T > t_max)
        throw CoverageError("ZeroCache::count_below: T outside cache range");
    return std::upper_bound(ordinates.begin(), ordinates.end(), T) - ordinates.begin();
}

long long ZeroCache::count_in(double a, double b) const {
    if (!covers(a, b)) throw CoverageError("ZeroCache::count_in: range not covered");
    return std::upper_bound(ordinates.begin(), ordinates.end(), b) -
           std::upper_bound(ordinates.begin(), ordinates.end(), a);
}

long long n_of_t(double T, const ZeroCache& cache) {
    if (cache.t_min > 14.0)
        throw CoverageError("n_of_t: cache must start at or below t = 14");
    return cache.count_below(T);
}

double s_of_t(double T, const ZeroCache& cache) {
    double N = double(n_of_t(T, cache));
    return N - (T / kTwoPi) * std::log(T / (kTwoPi * M_E)) - 7.0 / 8.0;
}

cplx zeta_log_deriv(cplx s, const ZeroCache& cache, const ZetaEvaluator& ev) {
    if (s.real() <= 0.5)
        throw DomainError("zeta_log_deriv: Re s must exceed 1/2");
    double ti = std::abs(s.imag());
    if (cache.t_max < ti + 50.0 || cache.t_min > std::max(14.0, ti - 50.0))
        throw CoverageError("zeta_log_deriv: cache does not cover Im s +- 50");
    for (double g : cache.ordinates) {
        if (g > ti + 1.0) break;
        if (std::abs(s - cplx(0.5, s.imag() < 0 ? -g : g)) < 1e-6)
            throw PoleError("zeta_log_deriv: s within 1e-6 of a cached zero");
    }
    return zeta_log_deriv_raw(s, ev);
}

void ZeroCache::save(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw DomainError("ZeroCache::save: cannot open " + path);
    char buf[64];
    auto put = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "# %s %.12g\n", key, v);
        f << buf;
    };
    put("t_min", t_min);
    put("t_max", t_max);
    put("precision", precision);
    f << "# count " << count_checksum << "\n";
    for (double g : ordinates) {
        std::snprintf(buf, sizeof buf, "%.12g\n", g);
        f << buf;
    }
}

ZeroCache ZeroCache::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("ZeroCache::load: cannot open " + path);
    ZeroCache c;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream is(line.substr(1));
            std::string key;
            is >> key;
            if (key == "t_min") is >> c.t_min;
            else if (key == "t_max") is >> c.t_max;
            else if (key == "precision") is >> c.precision;
            else if (key == "count") is >> c.count_checksum;
        } else {
            c.ordinates.push_back(std::stod(line));
        }
    }
    if (!std::is_sorted(c.ordinates.begin(), c.ordinates.end()))
        throw DomainError("ZeroCache::load: ordinates not sorted in " + path);
    if ((long long)c.ordinates.size() != c.count_checksum)
        throw DomainError("ZeroCache::load: count mismatch in " + path);
    return c;
}

} // namespace znt
