#pragma once

#include <string>

namespace znt {

// Empirically measured stand-ins for the implicit constants.
// Stored in a versioned text file; `calibrate` regenerates and diffs it.
struct Calibration {
    double hadamard_residual_max = 5.0;    // |Re zeta'/zeta - F + (1/2) log t|
    double prime_sum_slack = 5.0;      // additive O(1) in the smoothed log|zeta| bound
    double regime_constant = 5.0;       // log|zeta| >= -C V above sigma0
    double real_decay = 0.5;      // |F_pm(u)| <= c/(delta(|u|-h))^2 far field
    double complex_decay = 2.0;   // |F_pm(z)| <= c e^{2 pi delta|y|}/(delta|z|^2)
    double perron_log = 10.0;     // |perron - M(x)| <= c log x
    double zeta_line_floor = 0.05;  // min |zeta(1/2+1/log x+it)| (|t|+2)^{log log x}
    double stirling_arch = 1.0;   // |arch integral - (log(t/2pi)/2pi) Fhat(0)|
    double contour_envelope = 2.0;  // per-segment deformed-contour envelopes

    void save(const std::string& path) const;
    static Calibration load(const std::string& path);
};

} // namespace znt
