#include "hbtms/heatgen.hpp"

#include "hbtms/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hbtms {

double BatterySpec::cell_volume() const {
    const double r = cell_diameter / 2.0;
    return std::numbers::pi * r * r * cell_height;
}

void BatterySpec::validate(const std::string& path) const {
    auto positive = [&](double v, const char* name) {
        if (!(std::isfinite(v) && v > 0.0))
            throw ConfigError(path + "." + name, "must be strictly positive");
    };
    positive(rho_b, "rho");
    positive(c_b, "c");
    positive(k_b, "k");
    positive(capacity_ah, "capacity_ah");
    positive(rated_voltage, "rated_voltage");
    positive(internal_resistance, "internal_resistance");
    positive(cell_height, "cell_height_m");
    positive(cell_diameter, "cell_diameter_m");
    if (!std::isfinite(entropy_coefficient))
        throw ConfigError(path + ".entropy_coefficient", "must be finite");
}

void DischargeSpec::validate(const std::string& path) const {
    if (!(c_rate >= 0.0))
        throw ConfigError(path + ".c_rate", "must be non-negative");
    if (!(duration > 0.0))
        throw ConfigError(path + ".duration_s", "must be strictly positive");
    if (!std::isfinite(ambient_T) || !std::isfinite(initial_T))
        throw ConfigError(path + ".ambient_t", "temperatures must be finite");
}

double cell_current(double c_rate, double capacity_ah) {
    if (c_rate < 0.0)
        throw std::domain_error("C-rate must be non-negative, got " + std::to_string(c_rate));
    return c_rate * capacity_ah;
}

HeatGeneration heat_generation(double current, double T_abs, const BatterySpec& spec) {
    if (current < 0.0)
        throw std::domain_error("discharge current must be non-negative");
    if (!(T_abs > 0.0))
        throw std::domain_error("absolute temperature must be positive");
    const double v = spec.cell_volume();
    HeatGeneration q{};
    q.q_irreversible = current * current * spec.internal_resistance / v;
    q.q_reversible = -current * T_abs * spec.entropy_coefficient / v;
    q.q_total = q.q_irreversible + q.q_reversible;
    return q;
}

double speed_to_c_rate(double v_kmh, double v_rated_kmh, double alpha) {
    if (v_kmh < 0.0) throw std::domain_error("vehicle speed must be non-negative");
    if (!(v_rated_kmh > 0.0)) throw std::domain_error("rated speed must be positive");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("discount ratio must lie in (0, 1]");
    return v_kmh / (alpha * v_rated_kmh);
}

double corrected_temperature(double T_measured, double eta) {
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::domain_error("thermal efficiency must lie in (0, 1], got " +
                                std::to_string(eta));
    return T_measured / eta;
}

double calibrate_internal_resistance(double target_rise, double duration, double c_rate,
                                     const BatterySpec& spec) {
    if (!(target_rise > 0.0)) throw std::domain_error("target temperature rise must be positive");
    if (!(duration > 0.0)) throw std::domain_error("duration must be positive");
    const double current = cell_current(c_rate, spec.capacity_ah);
    if (!(current > 0.0)) throw std::domain_error("calibration needs a nonzero C-rate");
    // adiabatic lumped cell: dT = I^2 R t / (rho c V)
    const double heat_capacity = spec.rho_b * spec.c_b * spec.cell_volume();
    return target_rise * heat_capacity / (current * current * duration);
}

} // namespace hbtms
