#include "hbtms/materials.hpp"

#include "hbtms/errors.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hbtms {

namespace {

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

void require(bool ok, const std::string& path, const std::string& msg) {
    if (!ok) throw ConfigError(path, msg);
}

} // namespace

void CoolantProps::validate(const std::string& path) const {
    require(finite_positive(rho), path + ".rho", "must be strictly positive and finite");
    require(finite_positive(c), path + ".c", "must be strictly positive and finite");
    require(finite_positive(k), path + ".k", "must be strictly positive and finite");
    require(finite_positive(mu), path + ".mu", "must be strictly positive and finite");
}

void NanoparticleProps::validate(const std::string& path) const {
    require(finite_positive(rho_np), path + ".rho", "must be strictly positive");
    require(finite_positive(c_np), path + ".c", "must be strictly positive");
    require(finite_positive(k_np), path + ".k", "must be strictly positive");
}

void NanofluidSpec::validate(const std::string& path) const {
    if (!(phi >= 0.0 && phi < 1.0))
        throw std::domain_error("nanofluid volume fraction must satisfy 0 <= phi < 1, got " +
                                std::to_string(phi));
    base.validate(path + ".base");
    particle.validate(path + ".particle");
}

void PcmProps::validate(const std::string& path) const {
    require(finite_positive(rho), path + ".rho", "must be strictly positive");
    require(finite_positive(c), path + ".c", "must be strictly positive");
    require(finite_positive(k_solid), path + ".k_solid", "must be strictly positive");
    require(finite_positive(k_liquid), path + ".k_liquid", "must be strictly positive");
    require(T_S < T_L, path + ".t_solidus", "solidus must lie below liquidus");
    require(finite_positive(latent_heat), path + ".latent_heat", "must be strictly positive");
    require(std::isfinite(T_ini), path + ".t_ini", "must be finite");
}

void FoamProps::validate(const std::string& path) const {
    require(porosity > 0.0 && porosity < 1.0, path + ".porosity", "must lie in (0, 1)");
    require(finite_positive(k), path + ".k", "must be strictly positive");
}

double nanofluid_density(const NanofluidSpec& spec) {
    if (!(spec.phi >= 0.0 && spec.phi < 1.0))
        throw std::domain_error("nanofluid volume fraction must satisfy 0 <= phi < 1, got " +
                                std::to_string(spec.phi));
    return spec.phi * spec.particle.rho_np + (1.0 - spec.phi) * spec.base.rho;
}

double nanofluid_heat_capacity(const NanofluidSpec& spec, double rho_nf) {
    if (!(rho_nf > 0.0))
        throw std::domain_error("nanofluid density must be positive, got " +
                                std::to_string(rho_nf));
    const double num = spec.phi * spec.particle.rho_np * spec.particle.c_np +
                       (1.0 - spec.phi) * spec.base.rho * spec.base.c;
    return num / rho_nf;
}

double maxwell_conductivity(double k_bf, double k_np, double phi) {
    const double num = k_np + 2.0 * k_bf - 2.0 * phi * (k_bf - k_np);
    const double den = k_np + 2.0 * k_bf + phi * (k_bf - k_np);
    if (den == 0.0)
        throw std::runtime_error("Maxwell conductivity denominator vanished");
    return k_bf * num / den;
}

double nanofluid_conductivity(const NanofluidSpec& spec) {
    spec.validate();
    const double den = spec.particle.k_np + 2.0 * spec.base.k +
                       spec.phi * (spec.base.k - spec.particle.k_np);
    if (!(den > 0.0))
        throw std::runtime_error("Maxwell conductivity denominator is non-positive");
    return maxwell_conductivity(spec.base.k, spec.particle.k_np, spec.phi);
}

double pcm_enthalpy(double T, const PcmProps& p) {
    if (T <= p.T_S) return p.c * (T - p.T_ini);
    if (T <= p.T_L) {
        const double xi = (T - p.T_S) / (p.T_L - p.T_S);
        return p.c * (T - p.T_ini) + xi * p.latent_heat;
    }
    return p.c * (T - p.T_ini) + p.latent_heat;
}

double melt_fraction(double T, const PcmProps& p) {
    if (T <= p.T_S) return 0.0;
    if (T <= p.T_L) return (T - p.T_S) / (p.T_L - p.T_S);
    return 1.0;
}

double temperature_from_enthalpy(double H, const PcmProps& p) {
    const double H_S = p.c * (p.T_S - p.T_ini);
    const double H_L = p.c * (p.T_L - p.T_ini) + p.latent_heat;
    if (H <= H_S) return p.T_ini + H / p.c;
    if (H >= H_L) return p.T_ini + (H - p.latent_heat) / p.c;
    // mushy: H = c*(T - T_ini) + latent*(T - T_S)/(T_L - T_S)
    const double ramp = p.latent_heat / (p.T_L - p.T_S);
    return (H + p.c * p.T_ini + ramp * p.T_S) / (p.c + ramp);
}

double pcm_apparent_heat_capacity(double H, const PcmProps& p) {
    const double H_S = p.c * (p.T_S - p.T_ini);
    const double H_L = p.c * (p.T_L - p.T_ini) + p.latent_heat;
    if (H <= H_S || H >= H_L) return p.c;
    return p.c + p.latent_heat / (p.T_L - p.T_S);
}

double effective_pcm_foam_conductivity(double k_solid, double k_liquid,
                                       const FoamProps& foam, double xi) {
    if (!(xi >= 0.0 && xi <= 1.0))
        throw std::domain_error("melt fraction must lie in [0, 1], got " + std::to_string(xi));
    const double k_pcm = k_solid + xi * (k_liquid - k_solid);
    return foam.porosity * k_pcm + (1.0 - foam.porosity) * foam.k;
}

namespace {

const std::map<std::string, CoolantProps>& catalog_map() {
    static const std::map<std::string, CoolantProps> rows = {
        {"Nf(Cu)", {1008.3, 4135.7, 0.6098, 0.00131}},
        {"Nf(Ti)", {1003.3, 4154.9, 0.6090, 0.0009}},
        {"Nf(Al)", {1002.91, 4157.79, 0.6099, 0.0009}},
        {"Kerosene", {785.7, 2100.0, 0.15, 2.21}},
        {"Glycol", {1071.1, 3300.0, 0.38, 3.39}},
        {"Water", {998.2, 4182.0, 0.6, 0.001}},
    };
    return rows;
}

} // namespace

CoolantProps coolant_catalog(const std::string& name) {
    const auto& rows = catalog_map();
    auto it = rows.find(name);
    if (it == rows.end()) {
        std::ostringstream msg;
        msg << "unknown coolant '" << name << "'; valid names:";
        for (const auto& n : coolant_catalog_names()) msg << " " << n;
        throw std::out_of_range(msg.str());
    }
    return it->second;
}

const std::vector<std::string>& coolant_catalog_names() {
    static const std::vector<std::string> names = {"Nf(Cu)", "Nf(Ti)", "Nf(Al)",
                                                   "Kerosene", "Glycol", "Water"};
    return names;
}

SolidProps battery_solid_props() { return {2500.0, 1108.0, 28.0}; }

SolidProps aluminum_props() { return {2719.0, 871.0, 202.4}; }

PcmProps default_pcm_props() {
    PcmProps p{};
    p.rho = 770.0;
    p.c = 2460.0;
    p.k_solid = 5.622;
    p.k_liquid = 0.1505;
    p.T_S = 35.0;
    p.T_L = 37.0;
    p.latent_heat = 0.0; // required scenario input, no silent default
    p.T_ini = 25.0;
    return p;
}

FoamProps default_foam_props() { return {0.95, 202.4}; }

} // namespace hbtms
