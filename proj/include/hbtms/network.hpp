#pragma once

#include "hbtms/heatgen.hpp"
#include "hbtms/materials.hpp"

#include <string>
#include <vector>

namespace hbtms {

/// Module layout: n_rows x n_cols cells in an aluminum housing. Between
/// adjacent rows sits a cooling wall: a vertical stack of n_layers
/// channels (height D) interleaved with PCM/foam slabs (height D1), all
/// channel_width wide, running the length of the row. The channels of one
/// wall are plumbed into two serpentine circuits (the first takes
/// composite_number passes), giving two inlet/outlet pairs per wall.
struct ModuleGeometry {
    int n_cells = 36;
    int n_rows = 6;
    int n_cols = 6;
    double channel_height = 0.007; ///< D [m]
    double pcm_height = 0.007;     ///< D1 [m]
    double channel_width = 0.002;  ///< w [m]
    double wall_thickness = 0.001; ///< housing wall around each cell [m]
    int n_layers = 5;              ///< channels per cooling wall
    int composite_number = 3;      ///< passes in the first circuit
    int segments_per_pass = 6;
    double ubend_loss_coeff = 0.0; ///< minor-loss K per U-bend
    double nusselt_override = 0.0; ///< 0 = aspect-ratio table value

    double cell_pitch(double cell_diameter) const;
    double row_length(double cell_diameter) const; ///< duct length of one pass
    int cooling_walls() const;                     ///< max(1, n_rows-1)
    int pcm_slabs_per_wall() const;                ///< max(1, n_layers-1)

    void validate(const std::string& path = "geometry") const;
};

/// Inlet/outlet assignment of the two circuit pairs on every cooling wall.
/// 1: both circuits fed from the left on every wall
/// 2: both from the right
/// 3: first circuit left, second right
/// 4: direction 3 mirrored on alternate walls (inlets on the two outer sides)
/// 5: first circuit right, second left
/// 6: direction 1 mirrored on alternate walls
enum class CoolingDirection { d1 = 1, d2 = 2, d3 = 3, d4 = 4, d5 = 5, d6 = 6 };

CoolingDirection cooling_direction_from_int(int id);

enum class NodeKind { Battery, Wall, Pcm, Channel };

enum class LinkKind { Conduction, ConvectionToCoolant, ConvectionToAmbient };

struct NetworkNode {
    std::string id;
    NodeKind kind;
    double heat_capacity; ///< J/K (PCM nodes: sensible m*c; apparent value applied at runtime)
    double volume;        ///< m^3 (PCM nodes: PCM volume = slot volume * porosity)
    double pcm_mass = 0.0;///< kg, nonzero only for PCM nodes
};

/// Heat path between two nodes (or node and ambient when b == kAmbient).
/// G is evaluated per step as area / (len_a/k_a + len_b/k_b + 1/h) where
/// the conduction terms apply only to endpoints with a path length and the
/// convection term only to coolant links. PCM endpoints use the
/// melt-dependent composite conductivity.
struct Link {
    static constexpr int kAmbient = -1;
    int a;
    int b;
    LinkKind kind;
    double area;         ///< m^2
    double len_a = 0.0;  ///< conduction path inside node a [m]
    double len_b = 0.0;  ///< conduction path inside node b [m]
    double fixed_resistance = 0.0; ///< extra areal resistance [m^2 K / W]
};

struct MaterialSet {
    CoolantProps coolant;
    PcmProps pcm;
    FoamProps foam;
    BatterySpec battery;
    SolidProps housing = aluminum_props();
    bool pcm_enabled = true; ///< false: PCM slots become solid housing spacers
};

struct ThermalNetwork {
    ModuleGeometry geometry;
    MaterialSet materials;
    std::vector<NetworkNode> nodes;
    std::vector<Link> links;
    /// Ordered channel node indices per inlet, directed inlet -> outlet.
    std::vector<std::vector<int>> flow_paths;
    std::vector<int> battery_nodes;
    std::vector<int> wall_nodes;
    std::vector<int> pcm_nodes;
    std::vector<int> channel_nodes;
    double channel_cross_area = 0.0;   ///< w*D [m^2]
    double hydraulic_diameter = 0.0;   ///< 2wD/(w+D) [m]
    double segment_fluid_volume = 0.0; ///< per channel segment [m^3]

    int n_inlets() const { return static_cast<int>(flow_paths.size()); }
    double total_volume(NodeKind kind) const;
    double total_heat_capacity() const;
    bool is_connected() const;
};

ThermalNetwork build_network(const ModuleGeometry& geom, CoolingDirection direction,
                             const MaterialSet& mats);

/// Fully developed laminar Nusselt number for a rectangular duct at
/// constant wall temperature, linearly interpolated in aspect ratio
/// (short side / long side).
double nusselt_laminar_rect(double aspect);

/// f*Re for a fully developed laminar rectangular duct.
double friction_factor_re_rect(double aspect);

/// Wall heat transfer coefficient h = Nu*k/D_h. At zero flow the fluid is
/// stagnant and the coupling falls back to conduction across the duct
/// (Nu = 1).
double convection_coefficient(double mass_flow, const ModuleGeometry& geom,
                              const CoolantProps& coolant);

/// Per-inlet pressure drop, averaged over the two circuit kinds (they see
/// the same per-inlet flow but different pass counts):
/// dp = fRe * mu * L * u / (2 D_h^2) plus optional U-bend minor losses.
double pressure_drop(double mass_flow, const ModuleGeometry& geom,
                     const CoolantProps& coolant);

/// Duct lengths of the two circuit kinds [m]; the second is absent when
/// composite_number >= n_layers.
std::vector<double> circuit_lengths(const ModuleGeometry& geom, double cell_diameter);

void write_network_csv(const ThermalNetwork& net, const std::string& nodes_path,
                       const std::string& edges_path);

} // namespace hbtms
