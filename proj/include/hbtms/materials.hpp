#pragma once

#include <string>
#include <vector>

namespace hbtms {

/// Thermophysical property bundle for a working fluid. Properties are
/// constant (they do not vary with temperature in this model).
struct CoolantProps {
    double rho; ///< density [kg/m^3]
    double c;   ///< specific heat [J/(kg K)]
    double k;   ///< thermal conductivity [W/(m K)]
    double mu;  ///< dynamic viscosity [Pa s]

    void validate(const std::string& path = "coolant") const;
};

struct NanoparticleProps {
    double rho_np; ///< [kg/m^3]
    double c_np;   ///< [J/(kg K)]
    double k_np;   ///< [W/(m K)]

    void validate(const std::string& path = "coolant.particle") const;
};

/// Base fluid + suspended particles at volume fraction phi.
struct NanofluidSpec {
    double phi; ///< particle volume fraction, 0 <= phi < 1
    CoolantProps base;
    NanoparticleProps particle;

    void validate(const std::string& path = "coolant") const;
};

/// Phase change material. Enthalpy is referenced to T_ini; the mushy zone
/// spans [T_S, T_L].
struct PcmProps {
    double rho;         ///< [kg/m^3]
    double c;           ///< [J/(kg K)]
    double k_solid;     ///< [W/(m K)]
    double k_liquid;    ///< [W/(m K)]
    double T_S;         ///< solidus [degC]
    double T_L;         ///< liquidus [degC]
    double latent_heat; ///< [J/kg]
    double T_ini;       ///< enthalpy reference temperature [degC]

    void validate(const std::string& path = "pcm") const;
};

struct FoamProps {
    double porosity; ///< PCM volume fraction of the composite, 0 < porosity < 1
    double k;        ///< matrix conductivity [W/(m K)]

    void validate(const std::string& path = "foam") const;
};

/// Enthalpy-method state of one PCM node. H is the master variable;
/// T and xi are recovered from it.
struct PcmState {
    double H;  ///< specific enthalpy [J/kg], 0 at T_ini
    double T;  ///< [degC]
    double xi; ///< melt fraction, 0 (solid) .. 1 (liquid)
};

// --- nanofluid mixing rules ---------------------------------------------

/// rho_nf = phi*rho_np + (1-phi)*rho_bf
double nanofluid_density(const NanofluidSpec& spec);

/// c_nf = [phi*rho_np*c_np + (1-phi)*rho_bf*c_bf] / rho_nf
double nanofluid_heat_capacity(const NanofluidSpec& spec, double rho_nf);

/// Maxwell two-phase conductivity model.
double nanofluid_conductivity(const NanofluidSpec& spec);

/// Raw Maxwell expression on plain values. Used by nanofluid_conductivity
/// after validation and by fixture consistency checks that back-solve
/// particle values from tabulated nanofluid rows.
double maxwell_conductivity(double k_bf, double k_np, double phi);

// --- PCM enthalpy relations ----------------------------------------------

/// Specific enthalpy at temperature T: sensible from T_ini plus latent
/// through the mushy zone. Continuous and non-decreasing in T.
double pcm_enthalpy(double T, const PcmProps& props);

/// 0 below T_S, linear ramp across [T_S, T_L], 1 above T_L.
double melt_fraction(double T, const PcmProps& props);

/// Closed-form inverse of pcm_enthalpy (branch-wise; c > 0 and
/// latent_heat > 0 make the map invertible).
double temperature_from_enthalpy(double H, const PcmProps& props);

/// dH/dT at the current enthalpy: c outside the mushy zone,
/// c + latent/(T_L - T_S) inside it. Used for implicit linearization.
double pcm_apparent_heat_capacity(double H, const PcmProps& props);

/// Volume-weighted parallel rule: porosity*k_pcm(xi) + (1-porosity)*k_foam,
/// with k_pcm interpolated solid->liquid by melt fraction.
double effective_pcm_foam_conductivity(double k_solid, double k_liquid,
                                       const FoamProps& foam, double xi);

// --- catalogs --------------------------------------------------------------

/// Coolant catalog rows. Valid names: Nf(Cu), Nf(Ti), Nf(Al), Kerosene,
/// Glycol, Water. Throws std::out_of_range listing valid names otherwise.
CoolantProps coolant_catalog(const std::string& name);

const std::vector<std::string>& coolant_catalog_names();

/// Battery / aluminum / paraffin solid-property rows used by the default
/// module build.
struct SolidProps {
    double rho; ///< [kg/m^3]
    double c;   ///< [J/(kg K)]
    double k;   ///< [W/(m K)]
};

SolidProps battery_solid_props();
SolidProps aluminum_props();

/// Default paraffin parameters (latent heat is a required scenario input
/// and is left unset = 0 here; config fills it).
PcmProps default_pcm_props();

FoamProps default_foam_props();

} // namespace hbtms
