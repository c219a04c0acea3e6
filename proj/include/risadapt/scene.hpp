#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "risadapt/physics.hpp"

namespace risadapt {

inline constexpr std::size_t kNumRisElements = 100;
inline constexpr std::size_t kMacropixelSize = 4;
inline constexpr std::size_t kNumMacropixels = kNumRisElements / kMacropixelSize;

// The control vector C: one bit per macro-pixel, expanded to 4 RIS elements.
struct RisConfiguration {
  std::array<std::uint8_t, kNumMacropixels> bits{};

  bool operator==(const RisConfiguration&) const = default;
};

// Shared rotation angle of the perturbing objects, canonical in [0, 2*pi).
struct PerturberState {
  double theta = 0.0;

  static PerturberState wrapped(double t);
};

// Shortest distance between two angles along the unit circle, in [0, pi].
double arc_length_distance(double a, double b);

struct PerturberSpec {
  Point2 center;
  std::vector<Point2> offsets;  // body frame, nonempty
};

// Static scene geometry. Wall dipole positions are derived from the polygon
// and wall_spacing (see wall_dipole_positions); everything else is explicit.
struct SceneSpec {
  std::vector<Point2> wall_vertices;  // simple polygon, CCW
  double wall_spacing = 0.3;
  std::vector<PerturberSpec> perturbers;
  std::vector<Point2> ris_elements;                        // exactly 100
  std::vector<std::array<std::uint32_t, kMacropixelSize>> macropixels;  // 25 groups
  Point2 tx, rx, ar;
  DipoleProperties antenna_material;
  DipoleProperties wall_material;
  DipoleProperties perturber_material;
  DipoleProperties ris_on;
  DipoleProperties ris_off;

  void validate() const;  // throws std::invalid_argument on any broken invariant
};

// Construction knobs for the seeded scene family. The paper-scale and
// desk-scale variants below differ only in these numbers.
struct SceneBuildParams {
  std::uint64_t seed = 1;
  double width = 15.0;   // approximate enclosure extent
  double height = 10.0;
  int boundary_vertices = 14;
  double radial_jitter = 0.12;  // relative irregularity of the boundary
  double wall_spacing = 0.3;
  double ris_spacing = 0.4;
  double ris_inset = 0.35;          // RIS run offset inward from the walls
  double ris_corner_margin = 0.7;   // keep RIS runs away from polygon corners
  int perturber_count = 4;
  int perturber_dipoles_min = 8;
  int perturber_dipoles_max = 12;
  double perturber_radius_min = 0.5;
  double perturber_radius_max = 1.0;
  double perturber_clearance = 0.45;  // margin beyond the swept body radius

  static SceneBuildParams paper(std::uint64_t seed);
  static SceneBuildParams desk(std::uint64_t seed);
};

SceneSpec build_scene(const SceneBuildParams& params);

// Paper-scale scene (~15x10 enclosure, wall spacing 0.3, RIS spacing 0.4).
SceneSpec default_scene(std::uint64_t seed);

// Shrunk scene (~200 dipoles total) for desk-scale runs.
SceneSpec desk_scene(std::uint64_t seed);

// Wall dipole positions derived from the polygon walk (deterministic).
std::vector<Point2> wall_dipole_positions(const SceneSpec& spec);

enum class Antenna { tx, rx, ar };

// Concrete dipole list for one (C, theta). Order: walls, perturbers, RIS,
// antennas (tx, rx, ar).
struct SceneInstance {
  std::vector<Dipole> dipoles;
  std::size_t tx_index = 0;
  std::size_t rx_index = 0;
  std::size_t ar_index = 0;

  std::size_t antenna_index(Antenna a) const;
};

// Applies the rigid rotation to the perturbers and the ON/OFF material to the
// RIS elements. Throws DegenerateSceneError if any two dipoles end up closer
// than kMinSeparation.
SceneInstance instantiate(const SceneSpec& spec, const RisConfiguration& c,
                          const PerturberState& state);

// Transmission between two named antennas of an instance.
ChannelSpectrum channel_spectrum(const SceneInstance& instance,
                                 const FrequencyGrid& grid, Antenna tx,
                                 Antenna rx);

// 25 independent fair bits.
RisConfiguration random_config(std::mt19937_64& rng);

// JSON (de)serialization of SceneSpec. Deserialization validates.
std::string scene_to_json(const SceneSpec& spec);
SceneSpec scene_from_json(std::string_view text);
void save_scene(const SceneSpec& spec, const std::filesystem::path& path);
SceneSpec load_scene(const std::filesystem::path& path);

// True if some rotation by theta != 0 (on a dense grid) maps the offset set
// onto itself within tol. Used to reject accidentally symmetric perturbers.
bool has_rotational_symmetry(const std::vector<Point2>& offsets, double tol);

}  // namespace risadapt
