#include "znt/calibration.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "znt/errors.hpp"

namespace znt {

void Calibration::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("calibration: cannot write " + path);
    char buf[64];
    auto put = [&](const char* k, double v) {
        std::snprintf(buf, sizeof buf, "%.12g", v);
        out << k << " = " << buf << "\n";
    };
    put("hadamard_residual_max", hadamard_residual_max);
    put("prime_sum_slack", prime_sum_slack);
    put("regime_constant", regime_constant);
    put("real_decay", real_decay);
    put("complex_decay", complex_decay);
    put("perron_log", perron_log);
    put("zeta_line_floor", zeta_line_floor);
    put("stirling_arch", stirling_arch);
    put("contour_envelope", contour_envelope);
}

Calibration Calibration::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("calibration: cannot read " + path);
    std::map<std::string, double> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key, eq;
        double val;
        if (ls >> key >> eq >> val && eq == "=") kv[key] = val;
    }
    Calibration c;
    auto get = [&](const char* k, double& v) {
        auto it = kv.find(k);
        if (it == kv.end()) throw InconsistencyError(std::string("calibration: missing key ") + k);
        v = it->second;
    };
    get("hadamard_residual_max", c.hadamard_residual_max);
    get("prime_sum_slack", c.prime_sum_slack);
    get("regime_constant", c.regime_constant);
    get("real_decay", c.real_decay);
    get("complex_decay", c.complex_decay);
    get("perron_log", c.perron_log);
    get("zeta_line_floor", c.zeta_line_floor);
    get("stirling_arch", c.stirling_arch);
    get("contour_envelope", c.contour_envelope);
    return c;
}

} // namespace znt
