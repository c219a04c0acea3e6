#include "risadapt/scene.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "risadapt/errors.hpp"
#include "risadapt/json_util.hpp"
#include "risadapt/rng.hpp"

namespace risadapt {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// Superellipse radius (exponent 4), gives a rounded-rectangle boundary.
double squircle_radius(double a, double b, double theta) {
  double c = std::cos(theta) / a;
  double s = std::sin(theta) / b;
  double q = c * c * c * c + s * s * s * s;
  return 1.0 / std::sqrt(std::sqrt(q));
}

bool point_in_polygon(const std::vector<Point2>& poly, Point2 p) {
  bool inside = false;
  std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2& a = poly[i];
    const Point2& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      double x = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

Point2 rotate(Point2 v, double theta) {
  double c = std::cos(theta), s = std::sin(theta);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

void check_material(const DipoleProperties& m, const char* name) {
  if (!(m.f_res > 0.0) || !(m.chi > 0.0) || !(m.gamma_loss >= 0.0) ||
      !std::isfinite(m.f_res) || !std::isfinite(m.chi) || !std::isfinite(m.gamma_loss))
    throw std::invalid_argument(std::string("SceneSpec: invalid material properties for ") + name);
}

double min_distance_to(const std::vector<Point2>& pts, Point2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point2& q : pts) best = std::min(best, distance(p, q));
  return best;
}

}  // namespace

PerturberState PerturberState::wrapped(double t) {
  if (!std::isfinite(t))
    throw std::invalid_argument("PerturberState: non-finite angle");
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return PerturberState{r};
}

double arc_length_distance(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("arc_length_distance: non-finite angle");
  double d = std::fmod(std::fabs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

void SceneSpec::validate() const {
  if (wall_vertices.size() < 3)
    throw std::invalid_argument("SceneSpec: polygon needs at least 3 vertices");
  for (const Point2& v : wall_vertices)
    if (!std::isfinite(v.x) || !std::isfinite(v.y))
      throw std::invalid_argument("SceneSpec: non-finite wall vertex");
  if (!(wall_spacing > 0.0))
    throw std::invalid_argument("SceneSpec: wall_spacing must be > 0");
  if (ris_elements.size() != kNumRisElements)
    throw std::invalid_argument("SceneSpec: expected exactly 100 RIS elements");
  if (macropixels.size() != kNumMacropixels)
    throw std::invalid_argument("SceneSpec: expected exactly 25 macro-pixels");
  std::array<int, kNumRisElements> seen{};
  for (const auto& group : macropixels)
    for (std::uint32_t e : group) {
      if (e >= kNumRisElements)
        throw std::invalid_argument("SceneSpec: macro-pixel index out of range");
      seen[e]++;
    }
  for (int c : seen)
    if (c != 1)
      throw std::invalid_argument("SceneSpec: macro-pixels must partition the RIS elements");
  if (perturbers.empty())
    throw std::invalid_argument("SceneSpec: need at least one perturber");
  for (const auto& p : perturbers)
    if (p.offsets.empty())
      throw std::invalid_argument("SceneSpec: perturber offsets must be nonempty");
  for (Point2 p : {tx, rx, ar})
    if (!point_in_polygon(wall_vertices, p))
      throw std::invalid_argument("SceneSpec: antennas must lie inside the enclosure");
  if (distance(tx, rx) < kMinSeparation || distance(tx, ar) < kMinSeparation ||
      distance(rx, ar) < kMinSeparation)
    throw std::invalid_argument("SceneSpec: antennas must be pairwise distinct");
  check_material(antenna_material, "antenna");
  check_material(wall_material, "wall");
  check_material(perturber_material, "perturber");
  check_material(ris_on, "ris_on");
  check_material(ris_off, "ris_off");
}

std::vector<Point2> wall_dipole_positions(const SceneSpec& spec) {
  std::vector<Point2> out;
  std::size_t n = spec.wall_vertices.size();
  for (std::size_t k = 0; k < n; ++k) {
    Point2 v0 = spec.wall_vertices[k];
    Point2 v1 = spec.wall_vertices[(k + 1) % n];
    double len = distance(v0, v1);
    int n_e = std::max(1, static_cast<int>(std::floor(len / spec.wall_spacing + 0.5)));
    for (int i = 0; i < n_e; ++i) {
      double t = static_cast<double>(i) / n_e;
      out.push_back({v0.x + t * (v1.x - v0.x), v0.y + t * (v1.y - v0.y)});
    }
  }
  return out;
}

std::size_t SceneInstance::antenna_index(Antenna a) const {
  switch (a) {
    case Antenna::tx: return tx_index;
    case Antenna::rx: return rx_index;
    case Antenna::ar: return ar_index;
  }
  throw std::invalid_argument("SceneInstance: unknown antenna");
}

SceneInstance instantiate(const SceneSpec& spec, const RisConfiguration& c,
                          const PerturberState& state) {
  for (std::uint8_t b : c.bits)
    if (b > 1) throw std::invalid_argument("RisConfiguration: bits must be 0 or 1");
  double theta = PerturberState::wrapped(state.theta).theta;

  // element index -> macro-pixel bit
  std::array<std::uint8_t, kNumRisElements> elem_bit{};
  for (std::size_t m = 0; m < spec.macropixels.size(); ++m)
    for (std::uint32_t e : spec.macropixels[m]) elem_bit.at(e) = c.bits.at(m);

  SceneInstance inst;
  for (Point2 p : wall_dipole_positions(spec))
    inst.dipoles.push_back({p, spec.wall_material, DipoleKind::wall});
  for (const PerturberSpec& pert : spec.perturbers)
    for (Point2 off : pert.offsets)
      inst.dipoles.push_back({pert.center + rotate(off, theta),
                              spec.perturber_material, DipoleKind::perturber});
  for (std::size_t e = 0; e < spec.ris_elements.size(); ++e)
    inst.dipoles.push_back({spec.ris_elements[e],
                            elem_bit[e] ? spec.ris_on : spec.ris_off,
                            DipoleKind::ris});
  inst.tx_index = inst.dipoles.size();
  inst.dipoles.push_back({spec.tx, spec.antenna_material, DipoleKind::antenna});
  inst.rx_index = inst.dipoles.size();
  inst.dipoles.push_back({spec.rx, spec.antenna_material, DipoleKind::antenna});
  inst.ar_index = inst.dipoles.size();
  inst.dipoles.push_back({spec.ar, spec.antenna_material, DipoleKind::antenna});

  const double min_sep2 = kMinSeparation * kMinSeparation;
  for (std::size_t i = 0; i < inst.dipoles.size(); ++i)
    for (std::size_t j = i + 1; j < inst.dipoles.size(); ++j) {
      double dx = inst.dipoles[i].position.x - inst.dipoles[j].position.x;
      double dy = inst.dipoles[i].position.y - inst.dipoles[j].position.y;
      if (dx * dx + dy * dy < min_sep2)
        throw DegenerateSceneError("instantiate: coincident dipoles at indices " +
                                   std::to_string(i) + "," + std::to_string(j));
    }
  return inst;
}

ChannelSpectrum channel_spectrum(const SceneInstance& instance,
                                 const FrequencyGrid& grid, Antenna tx,
                                 Antenna rx) {
  if (tx == rx)
    throw std::invalid_argument("channel_spectrum: tx and rx must differ");
  return transmission_spectrum(instance.dipoles, grid,
                               instance.antenna_index(tx),
                               instance.antenna_index(rx));
}

RisConfiguration random_config(std::mt19937_64& rng) {
  RisConfiguration c;
  for (auto& b : c.bits) b = static_cast<std::uint8_t>(fair_bit(rng));
  return c;
}

bool has_rotational_symmetry(const std::vector<Point2>& offsets, double tol) {
  std::size_t n = offsets.size();
  if (n < 2) return false;
  // Exact symmetry angles are multiples of 2*pi/m; also scan a coarse grid.
  std::vector<double> candidates;
  for (std::size_t m = 2; m <= n; ++m)
    for (std::size_t j = 1; j < m; ++j)
      candidates.push_back(kTwoPi * static_cast<double>(j) / static_cast<double>(m));
  for (int k = 1; k < 720; ++k)
    candidates.push_back(kTwoPi * k / 720.0);
  for (double theta : candidates) {
    bool all_match = true;
    for (const Point2& p : offsets) {
      Point2 r = rotate(p, theta);
      double best = std::numeric_limits<double>::infinity();
      for (const Point2& q : offsets) best = std::min(best, distance(r, q));
      if (best > tol) {
        all_match = false;
        break;
      }
    }
    if (all_match) return true;
  }
  return false;
}

SceneBuildParams SceneBuildParams::paper(std::uint64_t seed) {
  SceneBuildParams p;
  p.seed = seed;
  return p;  // defaults are the paper-scale numbers
}

SceneBuildParams SceneBuildParams::desk(std::uint64_t seed) {
  SceneBuildParams p;
  p.seed = seed;
  p.width = 12.0;
  p.height = 8.0;
  p.boundary_vertices = 10;
  p.radial_jitter = 0.10;
  p.wall_spacing = 0.5;
  p.ris_spacing = 0.25;
  p.ris_inset = 0.30;
  p.ris_corner_margin = 0.5;
  p.perturber_dipoles_min = 8;
  p.perturber_dipoles_max = 9;
  p.perturber_radius_min = 0.5;
  p.perturber_radius_max = 0.72;
  p.perturber_clearance = 0.38;
  return p;
}

SceneSpec build_scene(const SceneBuildParams& params) {
  std::mt19937_64 rng(mix64(params.seed));
  const double a = params.width / 2.0;
  const double b = params.height / 2.0;

  SceneSpec spec;
  spec.wall_spacing = params.wall_spacing;
  spec.antenna_material = {1.0, 0.5, 0.0};
  spec.wall_material = {10.0, 50.0, 1e4};
  spec.perturber_material = {10.0, 50.0, 1e4};  // no dedicated row; see README
  spec.ris_on = {1.0, 0.2, 0.05};
  spec.ris_off = {5.0, 0.2, 0.05};

  // Irregular boundary: jittered angles and radii on a rounded rectangle.
  const int nv = params.boundary_vertices;
  for (int k = 0; k < nv; ++k) {
    double ang = kTwoPi * (k + 0.3 * uniform(rng, -1.0, 1.0)) / nv;
    double r = squircle_radius(a, b, ang) *
               (1.0 + params.radial_jitter * uniform(rng, -1.0, 1.0));
    spec.wall_vertices.push_back({r * std::cos(ang), r * std::sin(ang)});
  }

  std::vector<Point2> wall_points = wall_dipole_positions(spec);

  // RIS runs: walk the edges just inside the walls until 100 elements sit.
  for (std::size_t k = 0; k < spec.wall_vertices.size() &&
                          spec.ris_elements.size() < kNumRisElements;
       ++k) {
    Point2 v0 = spec.wall_vertices[k];
    Point2 v1 = spec.wall_vertices[(k + 1) % spec.wall_vertices.size()];
    double len = distance(v0, v1);
    Point2 dir = {(v1.x - v0.x) / len, (v1.y - v0.y) / len};
    Point2 inward = {-dir.y, dir.x};  // CCW polygon: interior on the left
    for (double s = params.ris_corner_margin;
         s <= len - params.ris_corner_margin &&
         spec.ris_elements.size() < kNumRisElements;
         s += params.ris_spacing) {
      Point2 cand = {v0.x + dir.x * s + inward.x * params.ris_inset,
                     v0.y + dir.y * s + inward.y * params.ris_inset};
      if (!spec.ris_elements.empty() &&
          min_distance_to(spec.ris_elements, cand) < 0.6 * params.ris_spacing)
        continue;  // corner overlap between adjacent runs
      spec.ris_elements.push_back(cand);
    }
  }
  if (spec.ris_elements.size() < kNumRisElements)
    throw std::invalid_argument(
        "build_scene: enclosure perimeter cannot host 100 RIS elements with "
        "the requested spacing");
  for (std::uint32_t m = 0; m < kNumMacropixels; ++m)
    spec.macropixels.push_back(
        {4 * m, 4 * m + 1, 4 * m + 2, 4 * m + 3});

  // Antennas at fixed interior points.
  spec.tx = {-0.58 * a, -0.10 * b};
  spec.rx = {0.60 * a, 0.12 * b};
  spec.ar = {0.04 * a, 0.55 * b};

  // Perturbers: irregular bodies on jittered quadrant anchors between the
  // antennas, with enough clearance that any rotation keeps all dipoles
  // separated from walls, RIS, antennas and each other.
  const Point2 anchors[4] = {{0.40 * a, 0.29 * b},
                             {-0.40 * a, 0.29 * b},
                             {-0.40 * a, -0.29 * b},
                             {0.40 * a, -0.29 * b}};
  const std::vector<Point2> antennas = {spec.tx, spec.rx, spec.ar};
  for (int p = 0; p < params.perturber_count; ++p) {
    // body shape first (its extent sets the clearance requirement)
    std::vector<Point2> offsets;
    double max_off = 0.0;
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 200)
        throw std::invalid_argument("build_scene: could not draw a valid perturber shape");
      offsets.clear();
      int n_d = params.perturber_dipoles_min +
                static_cast<int>(bounded(rng, static_cast<std::uint64_t>(
                    params.perturber_dipoles_max - params.perturber_dipoles_min + 1)));
      for (int i = 0; i < n_d; ++i) {
        double phi = kTwoPi * (i + 0.15 + 0.7 * uniform01(rng)) / n_d;
        double r = uniform(rng, params.perturber_radius_min, params.perturber_radius_max);
        offsets.push_back({r * std::cos(phi), r * std::sin(phi)});
      }
      double min_pair = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < offsets.size(); ++i)
        for (std::size_t j = i + 1; j < offsets.size(); ++j)
          min_pair = std::min(min_pair, distance(offsets[i], offsets[j]));
      if (min_pair < 0.12) continue;
      if (has_rotational_symmetry(offsets, 1e-6)) continue;
      max_off = 0.0;
      for (const Point2& o : offsets)
        max_off = std::max(max_off, std::sqrt(o.x * o.x + o.y * o.y));
      break;
    }

    const double clear = max_off + params.perturber_clearance;
    Point2 center{};
    bool placed = false;
    for (int attempt = 0; attempt < 5000 && !placed; ++attempt) {
      Point2 cand = {anchors[p % 4].x + uniform(rng, -0.35, 0.35),
                     anchors[p % 4].y + uniform(rng, -0.35, 0.35)};
      if (min_distance_to(wall_points, cand) < clear) continue;
      if (min_distance_to(spec.ris_elements, cand) < clear) continue;
      if (min_distance_to(antennas, cand) < clear) continue;
      bool ok = true;
      for (const PerturberSpec& other : spec.perturbers) {
        double other_max = 0.0;
        for (const Point2& o : other.offsets)
          other_max = std::max(other_max, std::sqrt(o.x * o.x + o.y * o.y));
        if (distance(other.center, cand) <
            max_off + other_max + params.perturber_clearance) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      center = cand;
      placed = true;
    }
    if (!placed)
      throw std::invalid_argument("build_scene: could not place perturber " +
                                  std::to_string(p) + " with required clearance");
    spec.perturbers.push_back({center, std::move(offsets)});
  }

  spec.validate();
  return spec;
}

SceneSpec default_scene(std::uint64_t seed) {
  return build_scene(SceneBuildParams::paper(seed));
}

SceneSpec desk_scene(std::uint64_t seed) {
  return build_scene(SceneBuildParams::desk(seed));
}

namespace {

Json point_json(Point2 p) { return Json::array({p.x, p.y}); }

Point2 point_from(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw FormatError("scene json: expected [x, y] point");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json material_json(const DipoleProperties& m) {
  return Json{{"f_res", m.f_res}, {"chi", m.chi}, {"gamma_loss", m.gamma_loss}};
}

DipoleProperties material_from(const Json& j) {
  return {j.at("f_res").get<double>(), j.at("chi").get<double>(),
          j.at("gamma_loss").get<double>()};
}

}  // namespace

std::string scene_to_json(const SceneSpec& spec) {
  Json j;
  j["format"] = "risadapt-scene";
  j["version"] = 1;
  j["wall_spacing"] = spec.wall_spacing;
  j["wall_vertices"] = Json::array();
  for (const Point2& v : spec.wall_vertices) j["wall_vertices"].push_back(point_json(v));
  j["perturbers"] = Json::array();
  for (const PerturberSpec& p : spec.perturbers) {
    Json pj;
    pj["center"] = point_json(p.center);
    pj["offsets"] = Json::array();
    for (const Point2& o : p.offsets) pj["offsets"].push_back(point_json(o));
    j["perturbers"].push_back(std::move(pj));
  }
  j["ris_elements"] = Json::array();
  for (const Point2& e : spec.ris_elements) j["ris_elements"].push_back(point_json(e));
  j["macropixels"] = Json::array();
  for (const auto& g : spec.macropixels)
    j["macropixels"].push_back(Json::array({g[0], g[1], g[2], g[3]}));
  j["antennas"] = Json{{"tx", point_json(spec.tx)},
                       {"rx", point_json(spec.rx)},
                       {"ar", point_json(spec.ar)}};
  j["materials"] = Json{{"antenna", material_json(spec.antenna_material)},
                        {"wall", material_json(spec.wall_material)},
                        {"perturber", material_json(spec.perturber_material)},
                        {"ris_on", material_json(spec.ris_on)},
                        {"ris_off", material_json(spec.ris_off)}};
  return dump_json(j);
}

SceneSpec scene_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("scene json: parse failed at byte ") +
                      std::to_string(e.byte) + ": " + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != "risadapt-scene")
      throw FormatError("scene json: wrong format tag");
    if (j.at("version").get<int>() != 1)
      throw FormatError("scene json: unsupported version");
    SceneSpec spec;
    spec.wall_spacing = j.at("wall_spacing").get<double>();
    for (const auto& v : j.at("wall_vertices")) spec.wall_vertices.push_back(point_from(v));
    for (const auto& pj : j.at("perturbers")) {
      PerturberSpec p;
      p.center = point_from(pj.at("center"));
      for (const auto& o : pj.at("offsets")) p.offsets.push_back(point_from(o));
      spec.perturbers.push_back(std::move(p));
    }
    for (const auto& e : j.at("ris_elements")) spec.ris_elements.push_back(point_from(e));
    for (const auto& g : j.at("macropixels")) {
      if (!g.is_array() || g.size() != kMacropixelSize)
        throw FormatError("scene json: macro-pixel groups must have 4 indices");
      spec.macropixels.push_back({g[0].get<std::uint32_t>(), g[1].get<std::uint32_t>(),
                                  g[2].get<std::uint32_t>(), g[3].get<std::uint32_t>()});
    }
    spec.tx = point_from(j.at("antennas").at("tx"));
    spec.rx = point_from(j.at("antennas").at("rx"));
    spec.ar = point_from(j.at("antennas").at("ar"));
    spec.antenna_material = material_from(j.at("materials").at("antenna"));
    spec.wall_material = material_from(j.at("materials").at("wall"));
    spec.perturber_material = material_from(j.at("materials").at("perturber"));
    spec.ris_on = material_from(j.at("materials").at("ris_on"));
    spec.ris_off = material_from(j.at("materials").at("ris_off"));
    spec.validate();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("scene json: ") + e.what());
  }
}

void save_scene(const SceneSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_scene: cannot open " + path.string());
  out << scene_to_json(spec);
  if (!out) throw std::runtime_error("save_scene: write failed for " + path.string());
}

SceneSpec load_scene(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_scene: cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return scene_from_json(ss.str());
}

}  // namespace risadapt
