#pragma once

#include <string>

namespace hbtms {

/// Cell-level battery parameters. Entropy coefficient dE/dT may carry
/// either sign; everything else is strictly positive.
struct BatterySpec {
    double rho_b;               ///< [kg/m^3]
    double c_b;                 ///< [J/(kg K)]
    double k_b;                 ///< [W/(m K)]
    double capacity_ah;         ///< rated capacity [A h]
    double rated_voltage;       ///< [V]
    double internal_resistance; ///< [ohm], required scenario input
    double entropy_coefficient; ///< dE/dT [V/K]
    double cell_height;         ///< [m]
    double cell_diameter;       ///< [m]

    double cell_volume() const; ///< pi*(d/2)^2*h [m^3]
    void validate(const std::string& path = "battery") const;
};

struct DischargeSpec {
    double c_rate;    ///< [1/h]
    double duration;  ///< [s]
    double ambient_T; ///< [degC]
    double initial_T; ///< [degC]

    void validate(const std::string& path = "battery") const;
};

/// I = c_rate * capacity (capacity in A h gives I in A).
double cell_current(double c_rate, double capacity_ah);

/// Volumetric generation split into the Joule and entropic parts for the
/// energy audit. T is absolute [K].
struct HeatGeneration {
    double q_irreversible; ///< I^2 R / V_cell [W/m^3]
    double q_reversible;   ///< -I T dE/dT / V_cell [W/m^3]
    double q_total;        ///< [W/m^3]
};

HeatGeneration heat_generation(double current, double T_abs, const BatterySpec& spec);

/// C-rate from vehicle speed: C = v / (alpha * v_rated).
double speed_to_c_rate(double v_kmh, double v_rated_kmh, double alpha);

/// Corrects a surface measurement for the test vehicle's heat dissipation
/// efficiency: T_actual = T_measured / eta, 0 < eta <= 1.
double corrected_temperature(double T_measured, double eta);

/// Picks the internal resistance that makes the adiabatic lumped cell
/// temperature rise over `duration` at `c_rate` equal `target_rise`
/// (entropy coefficient held at zero).
double calibrate_internal_resistance(double target_rise, double duration, double c_rate,
                                     const BatterySpec& spec);

} // namespace hbtms
