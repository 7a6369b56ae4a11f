#pragma once

#include <string>

namespace hbtms {

enum class FlowMode { Constant, Enhanced };

/// How the intensive stage is triggered in enhanced mode: at the fixed
/// onset time t_E, or when the mean melt fraction first exceeds zero.
enum class EnhancedTrigger { FixedTime, MeltOnset };

/// Per-inlet flow-rate law. Constant mode supplies v_m at all times.
/// Enhanced mode runs three stages: v_m until the intensive stage starts,
/// then v_m plus a step-gated Gaussian pulse train, then v_m again
/// (permanently) once the average battery temperature has recovered to T_E.
struct FlowSchedule {
    FlowMode mode = FlowMode::Constant;
    double v_m = 0.6e-3;          ///< baseline mass flow per inlet [kg/s]
    double t_E = 250.0;           ///< intensive-stage onset [s]
    double T_E = 40.0;            ///< plateau threshold on T_avg [degC]
    double pulse_period = 6.0;    ///< [s]
    double pulse_peak = 0.1e-3;   ///< pulse amplitude [kg/s]
    double step_smoothing_tau = 0.0; ///< 0 = ideal step at t_E [s]
    EnhancedTrigger trigger = EnhancedTrigger::FixedTime;

    double sigma() const { return pulse_period / 6.0; }
    void validate(const std::string& path = "schedule") const;
};

/// Plateau latch. Owned by the simulation loop; once engaged it never
/// re-enters the intensive stage.
struct PlateauLatch {
    bool engaged = false;
};

/// Periodic Gaussian bump train, centers at t_E + k*pulse_period, peak
/// amplitude pulse_peak, sigma = period/6. Defined for t >= t_E.
double gaussian_train(double t, const FlowSchedule& schedule);

struct FlowDecision {
    double mass_flow; ///< per-inlet [kg/s]
    PlateauLatch latch;
};

/// Flow at time t given the running average battery temperature. The latch
/// arms only once the intensive stage has begun; it engages at the first
/// instant T_avg <= T_E and stays engaged.
FlowDecision flow_rate(double t, double T_avg, const FlowSchedule& schedule,
                       PlateauLatch latch);

} // namespace hbtms
