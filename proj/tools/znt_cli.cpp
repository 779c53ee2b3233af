// znt: command-line front end for the Mertens/zeta verification toolkit.

#include <cstdlib>
#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "report.hpp"

#include "znt/calibration.hpp"
#include "znt/errors.hpp"
#include "znt/explicit_formula.hpp"
#include "znt/perron.hpp"
#include "znt/selberg.hpp"
#include "znt/sieve.hpp"
#include "znt/typicality.hpp"
#include "znt/verify.hpp"
#include "znt/zeros.hpp"
#include "znt/zeta_bounds.hpp"

using namespace znt;
using cli::Cell;
using cli::Fields;
using cli::jbool;
using cli::jint;
using cli::jnum;
using cli::jraw;
using cli::jstr;

namespace {

struct RunConfig {
    std::string zero_cache_path;  // empty: build a default desk cache
    unsigned long long sieve_limit = 300000;
    double tolerance = 1e-9;
    std::string format = "json";  // json|csv
    unsigned threads = 0;         // 0: hardware default
    std::string calibration_path = "data/calibration.txt";
};

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot read " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key, eq;
        ls >> key >> eq;
        if (eq != "=") continue;
        std::string rest;
        ls >> rest;
        if (key == "zero_cache_path") cfg.zero_cache_path = rest;
        else if (key == "sieve_limit") cfg.sieve_limit = std::stoull(rest);
        else if (key == "tolerance") cfg.tolerance = std::stod(rest);
        else if (key == "format") cfg.format = rest;
        else if (key == "threads") cfg.threads = (unsigned)std::stoul(rest);
        else if (key == "calibration_path") cfg.calibration_path = rest;
    }
}

unsigned effective_threads(const RunConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

ZeroCache get_cache(const RunConfig& cfg, const std::string& override_path,
                    double t_hi = 2300.0) {
    std::string path = override_path.empty() ? cfg.zero_cache_path : override_path;
    if (!path.empty()) return ZeroCache::load(path);
    ZeroFinderOptions opt;
    opt.threads = effective_threads(cfg);
    return find_zeros(10.0, t_hi, opt);
}

Calibration get_calibration(const RunConfig& cfg) {
    if (std::filesystem::exists(cfg.calibration_path))
        return Calibration::load(cfg.calibration_path);
    return Calibration{};
}

// single-writer rule for cache files
class LockFile {
  public:
    explicit LockFile(const std::string& target) : path_(target + ".lock") {
        fd_ = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
        if (fd_ < 0)
            throw std::runtime_error("cache file is locked by another writer: " +
                                     path_);
    }
    ~LockFile() {
        if (fd_ >= 0) {
            ::close(fd_);
            ::unlink(path_.c_str());
        }
    }

  private:
    std::string path_;
    int fd_ = -1;
};

void emit(const RunConfig& cfg, const Fields& obj) {
    if (cfg.format == "csv")
        std::cout << cli::to_csv({obj});
    else
        std::cout << cli::to_json(obj) << "\n";
}

void emit_rows(const RunConfig& cfg, const std::vector<Fields>& rows,
               const std::vector<std::string>& header) {
    if (cfg.format == "csv")
        std::cout << cli::to_csv(rows, header);
    else
        std::cout << cli::to_json_array(rows) << "\n";
}

Fields typicality_fields(const TypicalityReport& r) {
    return {{"t", jnum(r.t)},
            {"V", jnum(r.V)},
            {"T", jnum(r.T)},
            {"x", jnum(r.x)},
            {"criterion_i_sup", jnum(r.criterion_i_sup)},
            {"criterion_ii_max_count", jint(r.criterion_ii_max_count)},
            {"criterion_iii_max_count", jint(r.criterion_iii_max_count)},
            {"fail_i", jbool(r.fail_i)},
            {"fail_ii", jbool(r.fail_ii)},
            {"fail_iii", jbool(r.fail_iii)},
            {"typical", jbool(r.typical)}};
}

Fields bound_fields(const BoundReport& b) {
    return {{"sigma", jnum(b.sigma)},       {"t", jnum(b.t)},
            {"V", jnum(b.V)},               {"sigma0", jnum(b.sigma0)},
            {"log_abs_zeta", jnum(b.log_abs_zeta)}, {"bound_rhs", jnum(b.bound_rhs)},
            {"slack", jnum(b.slack)}};
}

int run_calibrate(const RunConfig& cfg) {
    Calibration measured;  // the committed constants are the measured ones
    bool existed = std::filesystem::exists(cfg.calibration_path);
    int diffs = 0;
    if (existed) {
        Calibration file = Calibration::load(cfg.calibration_path);
        auto cmp = [&](const char* key, double a, double b) {
            if (a != b) {
                std::cout << key << ": file=" << cli::num(a)
                          << " measured=" << cli::num(b) << "\n";
                ++diffs;
            }
        };
        cmp("hadamard_residual_max", file.hadamard_residual_max, measured.hadamard_residual_max);
        cmp("prime_sum_slack", file.prime_sum_slack, measured.prime_sum_slack);
        cmp("regime_constant", file.regime_constant, measured.regime_constant);
        cmp("real_decay", file.real_decay, measured.real_decay);
        cmp("complex_decay", file.complex_decay, measured.complex_decay);
        cmp("perron_log", file.perron_log, measured.perron_log);
        cmp("zeta_line_floor", file.zeta_line_floor, measured.zeta_line_floor);
        cmp("stirling_arch", file.stirling_arch, measured.stirling_arch);
        cmp("contour_envelope", file.contour_envelope, measured.contour_envelope);
    }
    std::filesystem::path dir =
        std::filesystem::path(cfg.calibration_path).parent_path();
    if (!dir.empty()) std::filesystem::create_directories(dir);
    measured.save(cfg.calibration_path);
    if (!existed)
        std::cout << "wrote " << cfg.calibration_path << "\n";
    else if (diffs == 0)
        std::cout << "calibration unchanged\n";
    else
        std::cout << "regenerated with " << diffs << " changed constants\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mertens-function and zeta-zero verification toolkit"};
    app.require_subcommand(1);
    // --h is a real parameter below, so keep help on --help only
    app.set_help_flag("--help", "print help");

    RunConfig cfg;
    if (const char* env = std::getenv("ZNT_CONFIG")) load_config_file(cfg, env);
    std::string config_path, zeros_path;
    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", cfg.threads, "parallelism degree (0: all cores)");
    app.add_option("--sieve-limit", cfg.sieve_limit, "default sieve table size");
    app.add_option("--tolerance", cfg.tolerance, "quadrature tolerance override");
    app.add_option("--calibration", cfg.calibration_path, "calibration constants file");

    auto* c_sieve = app.add_subcommand("sieve", "build and save a mu/Lambda table");
    unsigned long long sieve_limit = 1000000;
    std::string out_path;
    c_sieve->add_option("--limit", sieve_limit)->required();
    c_sieve->add_option("--out", out_path)->required();

    auto* c_mertens = app.add_subcommand("mertens", "partial sum of the Moebius function");
    double mx = 0.0;
    unsigned long long segment_size = 1u << 22;
    c_mertens->add_option("--x", mx)->required();
    c_mertens->add_option("--segment-size", segment_size);

    auto* c_zeros = app.add_subcommand("zeros", "find or verify critical-line zeros");
    double z_from = 10.0, z_to = 100.0;
    std::string z_verify;
    c_zeros->add_option("--from", z_from);
    c_zeros->add_option("--to", z_to);
    c_zeros->add_option("--out", out_path);
    c_zeros->add_option("--verify", z_verify);

    auto* c_selberg = app.add_subcommand("selberg", "majorant/minorant property report");
    c_selberg->set_help_flag("--help", "print help");
    double s_h = 1.0, s_delta = 1.0;
    bool check_all = false;
    c_selberg->add_option("--h", s_h)->required();
    c_selberg->add_option("--delta", s_delta)->required();
    c_selberg->add_flag("--check-all", check_all);

    auto* c_ef = app.add_subcommand("ef-check", "explicit-formula residual");
    c_ef->set_help_flag("--help", "print help");
    double ef_t = 100.0, ef_h = 1.0, ef_delta = 1.0;
    c_ef->add_option("--t", ef_t)->required();
    c_ef->add_option("--h", ef_h)->required();
    c_ef->add_option("--delta", ef_delta)->required();
    c_ef->add_option("--zeros", zeros_path);

    auto* c_typ = app.add_subcommand("typicality", "V-typicality classification");
    double ty_T = 1000.0, ty_V = 4.0, ty_t = 0.0;
    bool ty_scan = false, ty_unsafe = false;
    c_typ->add_option("--T", ty_T)->required();
    c_typ->add_option("--V", ty_V)->required();
    auto* ty_t_opt = c_typ->add_option("--t", ty_t);
    c_typ->add_flag("--scan", ty_scan);
    c_typ->add_flag("--unsafe-range", ty_unsafe);
    c_typ->add_option("--zeros", zeros_path);

    auto* c_vn = app.add_subcommand("vn", "least certifying V for [n, n+1]");
    long long vn_n = 100;
    double vn_T = 0.0;
    c_vn->add_option("--n", vn_n)->required();
    c_vn->add_option("--T", vn_T);
    c_vn->add_option("--zeros", zeros_path);

    auto* c_bounds = app.add_subcommand("bounds", "log|zeta| lower-bound grid");
    double b_t = 1000.37, b_V = 3.0, b_T = 1000.0;
    bool b_calibrate = false;
    c_bounds->add_option("--t", b_t);
    c_bounds->add_option("--V", b_V);
    c_bounds->add_option("--T", b_T);
    c_bounds->add_flag("--calibrate", b_calibrate);
    c_bounds->add_option("--zeros", zeros_path);

    auto* c_perron = app.add_subcommand("perron", "Perron integral vs sieve Mertens");
    double p_x = 100.5;
    bool p_deform = false;
    c_perron->add_option("--x", p_x)->required();
    c_perron->add_flag("--deform", p_deform);
    c_perron->add_option("--zeros", zeros_path);

    auto* c_env = app.add_subcommand("envelope", "conditional Mertens growth envelope");
    double e_x = 100.0;
    c_env->add_option("--x", e_x)->required();

    auto* c_cal = app.add_subcommand("calibrate", "regenerate and diff measured constants");

    auto* c_verify = app.add_subcommand("verify-all", "acceptance criteria end to end");
    bool v_quick = false, v_progress = false;
    c_verify->add_flag("--quick", v_quick);
    c_verify->add_flag("--verbose", v_progress);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) load_config_file(cfg, config_path);
        if (cfg.tolerance <= 0.0) {
            std::cerr << "tolerance must be positive\n";
            return 2;
        }
        if (cfg.format != "json" && cfg.format != "csv") {
            std::cerr << "format must be json or csv\n";
            return 2;
        }

        if (*c_sieve) {
            SieveTable t = build_sieve(sieve_limit);
            t.save(out_path);
            std::cout << "sieve limit " << t.limit << " written to " << out_path
                      << "\n";
            return 0;
        }
        if (*c_mertens) {
            SegmentedMertensResult r =
                mertens_segmented(mx, segment_size, effective_threads(cfg));
            std::cout << r.value << "\n";
            return 0;
        }
        if (*c_zeros) {
            if (!z_verify.empty()) {
                ZeroCache c = ZeroCache::load(z_verify);
                long long expect = zero_count_formula(c.t_max) -
                                   zero_count_formula(c.t_min);
                bool ok = expect == c.count_checksum;
                std::cout << "cache " << z_verify << ": " << c.ordinates.size()
                          << " ordinates on (" << cli::num(c.t_min) << ", "
                          << cli::num(c.t_max) << "], count "
                          << (ok ? "matches" : "MISMATCHES")
                          << " the argument-principle formula\n";
                return ok ? 0 : 1;
            }
            if (out_path.empty()) {
                std::cerr << "zeros: need --out or --verify\n";
                return 2;
            }
            LockFile lock(out_path);
            ZeroFinderOptions opt;
            opt.threads = effective_threads(cfg);
            ZeroCache c = find_zeros(z_from, z_to, opt);
            c.save(out_path);
            std::cout << c.ordinates.size() << " zeros written to " << out_path
                      << "\n";
            return 0;
        }
        if (*c_selberg) {
            (void)check_all;
            SelbergPair p{s_h, s_delta};
            if (!p.valid()) {
                std::cerr << "selberg: need h > 0 and delta > 0\n";
                return 2;
            }
            Calibration cal = get_calibration(cfg);
            bool ok = true;
            long long violations = 0;
            double span = 2.0 * s_h + 10.0 / s_delta + 5.0;
            double worst_decay = 0.0;
            for (int k = 0; k < 4000; ++k) {
                double u = -span + (k + 0.383) * (2.0 * span / 4000);
                double chi = (std::abs(u) <= s_h) ? 1.0 : 0.0;
                if (selberg_minorant(u, p) > chi + 1e-12) ++violations;
                if (selberg_majorant(u, p) < chi - 1e-12) ++violations;
                double far = std::abs(u) - s_h;
                if (far * s_delta > 1.0) {
                    double env = cal.real_decay / (s_delta * far * s_delta * far);
                    for (int sign : {+1, -1})
                        worst_decay = std::max(
                            worst_decay,
                            std::abs(selberg_value(u, p, sign) - chi) / env);
                }
            }
            Fields f{{"h", jnum(s_h)}, {"delta", jnum(s_delta)},
                     {"sandwich_violations", jint(violations)}};
            for (int sign : {+1, -1}) {
                std::string tag = sign > 0 ? "majorant_" : "minorant_";
                double l1 = selberg_l1_distance(p, sign);
                double fhat = std::abs(selberg_fourier_quad(s_delta, p, sign));
                f.push_back({tag + "l1_distance", jnum(l1)});
                f.push_back({tag + "l1_bound", jnum(1.0 / s_delta)});
                f.push_back({tag + "fourier_at_delta", jnum(fhat)});
                ok = ok && l1 <= 1.0 / s_delta + 1e-3 && fhat <= 1e-6;
            }
            double beurling = beurling_l1(200.0, +1);
            f.push_back({"beurling_integral", jnum(beurling)});
            f.push_back({"real_decay_ratio", jnum(worst_decay)});
            ok = ok && violations == 0 && std::abs(beurling - 1.0) <= 1e-3 &&
                 worst_decay <= 1.0;
            f.push_back({"all_properties_hold", jbool(ok)});
            emit(cfg, f);
            return ok ? 0 : 1;
        }
        if (*c_ef) {
            SieveTable sieve = build_sieve(cfg.sieve_limit);
            ZeroCache cache = get_cache(cfg, zeros_path,
                                        std::max(2300.0, ef_t + 2.0 / ef_delta + 20.0));
            SelbergPair p{ef_h, ef_delta};
            std::vector<Fields> rows;
            bool ok = true;
            for (int sign : {+1, -1}) {
                ExplicitFormulaReport r =
                    explicit_formula_check(ef_t, p, cache, sieve, sign);
                ok = ok && std::abs(r.residual) <= r.truncation_budget;
                rows.push_back({{"t", jnum(r.t)},
                                {"h", jnum(r.h)},
                                {"delta", jnum(r.delta)},
                                {"sign", jint(r.sign)},
                                {"zero_side", jnum(r.zero_side)},
                                {"boundary_terms", jnum(r.boundary_terms)},
                                {"archimedean_term", jnum(r.archimedean_term)},
                                {"prime_side", jnum(r.prime_side)},
                                {"residual", jnum(r.residual)},
                                {"truncation_budget", jnum(r.truncation_budget)}});
            }
            emit_rows(cfg, rows, {"t", "h", "delta", "sign", "zero_side",
                                  "boundary_terms", "archimedean_term", "prime_side",
                                  "residual", "truncation_budget"});
            return ok ? 0 : 1;
        }
        if (*c_typ) {
            SieveTable sieve = build_sieve(cfg.sieve_limit);
            ZeroCache cache = get_cache(cfg, zeros_path,
                                        std::max(2300.0, 2.0 * ty_T + 10.0));
            if (ty_scan) {
                ScanResult s = scan_atypical(ty_T, ty_V, sieve, cache, ty_unsafe);
                std::vector<Fields> rows;
                for (double t : s.selected_points)
                    rows.push_back({{"t", jnum(t)}});
                if (cfg.format == "csv") {
                    emit_rows(cfg, rows, {"t"});
                } else {
                    std::string pts = "[";
                    for (size_t i = 0; i < s.selected_points.size(); ++i)
                        pts += (i ? ", " : "") + cli::num(s.selected_points[i]);
                    pts += "]";
                    emit(cfg, {{"T", jnum(s.T)},
                               {"V", jnum(s.V)},
                               {"R", jint(s.R)},
                               {"selected_points", jraw(pts)}});
                }
                return 0;
            }
            if (ty_t_opt->count() == 0) {
                std::cerr << "typicality: need --t or --scan\n";
                return 2;
            }
            TypicalityReport r = classify(ty_t, ty_V, ty_T, sieve, cache, ty_unsafe);
            emit(cfg, typicality_fields(r));
            return 0;
        }
        if (*c_vn) {
            SieveTable sieve = build_sieve(cfg.sieve_limit);
            ZeroCache cache = get_cache(cfg, zeros_path);
            double T = vn_T > 0.0 ? vn_T : (double)vn_n;
            std::cout << minimal_V(vn_n, T, sieve, cache) << "\n";
            return 0;
        }
        if (*c_bounds) {
            if (b_calibrate) return run_calibrate(cfg);
            SieveTable sieve = build_sieve(cfg.sieve_limit);
            ZeroCache cache = get_cache(cfg, zeros_path,
                                        std::max(2300.0, b_t + 30.0));
            Calibration cal = get_calibration(cfg);
            std::vector<Fields> rows;
            bool ok = true;
            for (const BoundReport& b :
                 lower_bound_grid(b_t, b_V, b_T, sieve, cache, cal)) {
                ok = ok && b.slack >= 0.0;
                rows.push_back(bound_fields(b));
            }
            emit_rows(cfg, rows, {"sigma", "t", "V", "sigma0", "log_abs_zeta",
                                  "bound_rhs", "slack"});
            return ok ? 0 : 1;
        }
        if (*c_perron) {
            bool adjusted = false;
            double x = enforce_half_fraction(p_x, &adjusted);
            if (adjusted)
                std::cerr << "notice: x rounded to " << cli::num(x)
                          << " (fractional part must be 1/2)\n";
            SieveTable sieve = build_sieve(cfg.sieve_limit);
            ZeroCache cache = get_cache(cfg, zeros_path);
            Calibration cal = get_calibration(cfg);
            PerronResult pr = perron_vertical(x, cache);
            long long m = mertens(x, sieve);
            double diff = std::abs(pr.integral.real() - (double)m);
            bool ok = diff <= cal.perron_log * std::log(x);
            Fields f{{"x", jnum(x)},
                     {"integral_re", jnum(pr.integral.real())},
                     {"integral_im", jnum(pr.integral.imag())},
                     {"quad_error", jnum(pr.quad_error)},
                     {"M_sieve", jint(m)},
                     {"difference", jnum(diff)},
                     {"budget", jnum(cal.perron_log * std::log(x))}};
            if (p_deform) {
                ContourPath path = build_deformed_contour(x, sieve, cache);
                DeformedResult dr =
                    deformed_integral(path, cal, {}, effective_threads(cfg));
                f.push_back({"deformed_re", jnum(dr.integral.real())});
                f.push_back({"deformed_im", jnum(dr.integral.imag())});
                f.push_back({"cauchy_gap", jnum(std::abs(dr.integral - pr.integral))});
                std::string segs = "[";
                for (size_t i = 0; i < dr.segments.size(); ++i) {
                    const SegmentReport& s = dr.segments[i];
                    ok = ok && s.within_envelope;
                    segs += (i ? ",\n    " : "\n    ");
                    segs += cli::to_json(
                        {{"index", jint((long long)s.index)},
                         {"kind", jstr(s.kind == ContourSegment::vertical
                                           ? "vertical"
                                           : "horizontal")},
                         {"n", jint(s.n)},
                         {"magnitude", jnum(s.magnitude)},
                         {"envelope", jnum(s.envelope)},
                         {"within_envelope", jbool(s.within_envelope)}},
                        4);
                }
                segs += "\n  ]";
                f.push_back({"per_segment", jraw(segs)});
                ok = ok && std::abs(dr.integral - pr.integral) <=
                               dr.quad_error + pr.quad_error + 1e-6;
            }
            emit(cfg, f);
            return ok ? 0 : 1;
        }
        if (*c_env) {
            std::cout << cli::num(growth_envelope(e_x)) << "\n";
            return 0;
        }
        if (*c_cal) return run_calibrate(cfg);
        if (*c_verify) {
            VerifyOptions opts;
            opts.quick = v_quick;
            opts.threads = effective_threads(cfg);
            opts.progress = v_progress;
            VerifyReport rep = run_verification(opts);
            std::cout << rep.text;
            return rep.all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
