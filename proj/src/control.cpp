#include "hbtms/control.hpp"

#include "hbtms/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace hbtms {

void FlowSchedule::validate(const std::string& path) const {
    if (!(v_m > 0.0)) throw ConfigError(path + ".v_m", "baseline flow must be positive");
    if (!(pulse_peak >= 0.0)) throw ConfigError(path + ".pulse_peak", "must be non-negative");
    if (!(t_E >= 0.0)) throw ConfigError(path + ".t_e", "must be non-negative");
    if (!(pulse_period > 0.0)) throw ConfigError(path + ".pulse_period", "must be positive");
    if (!(step_smoothing_tau >= 0.0))
        throw ConfigError(path + ".step_smoothing_tau", "must be non-negative");
}

double gaussian_train(double t, const FlowSchedule& s) {
    if (t < s.t_E) throw std::domain_error("gaussian_train is defined for t >= t_E");
    const double u = t - s.t_E;
    // fold onto the nearest pulse center; tails at the fold boundary are
    // exp(-4.5) of peak so the train stays continuous there
    const double d = u - s.pulse_period * std::round(u / s.pulse_period);
    const double sig = s.sigma();
    return s.pulse_peak * std::exp(-d * d / (2.0 * sig * sig));
}

FlowDecision flow_rate(double t, double T_avg, const FlowSchedule& s, PlateauLatch latch) {
    if (t < 0.0) throw std::domain_error("time must be non-negative");
    if (s.mode == FlowMode::Constant) return {s.v_m, latch};
    if (latch.engaged || t < s.t_E) return {s.v_m, latch};
    // intensive stage; plateau engages the first instant T_avg has recovered
    if (T_avg <= s.T_E) {
        latch.engaged = true;
        return {s.v_m, latch};
    }
    double step = 1.0;
    if (s.step_smoothing_tau > 0.0)
        step = 1.0 - std::exp(-(t - s.t_E) / s.step_smoothing_tau);
    return {s.v_m + step * gaussian_train(t, s), latch};
}

} // namespace hbtms
