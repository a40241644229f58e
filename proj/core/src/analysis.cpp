#include "cubetess/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cubetess {

Rat VolumeTable::weighted_sum() const {
  Rat s(0);
  for (const Entry& e : entries) s += Rat(e.multiplicity) * e.volume;
  return s;
}

const VolumeTable::Entry& VolumeTable::operator[](SiteClass cls) const {
  for (const Entry& e : entries)
    if (e.cls == cls) return e;
  throw ClassNotInPlan(cls);
}

VolumeTable volume_table(const RefinementPlan& plan) {
  std::map<SiteClass, long> mult;
  for (const Site& s : generate(plan, unit_box())) ++mult[s.cls];
  VolumeTable table;
  for (const auto& [cls, count] : mult) {
    Site rep{representative(cls), cls, class_level(cls)};
    table.entries.push_back({cls, count, volume(voronoi_cell(rep, plan))});
  }
  return table;
}

// ---------------------------------------------------------------------------
// Monte-Carlo nearest-site oracle

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// i-th draw of the counter-based stream for a seed; uniform in [0,1) with
// 53 dyadic bits, so every sample lifts exactly to a rational.
double uniform_draw(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t bits = splitmix64(seed + counter * 0x9E3779B97F4A7C15ull);
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Exact nearest-site classifier over one unit cell. Sites within a bin's
// candidate list are provably the only possible nearest sites for any
// point of the bin (the pruning bound is established in exact arithmetic);
// the per-sample float filter falls back to exact comparison near ties.
class NearestClassifier {
 public:
  explicit NearestClassifier(const RefinementPlan& plan)
      : sites_(generate(plan, {{-1, -1, -1}, {2, 2, 2}})) {
    for (const Site& s : sites_)
      coords_.push_back({s.pos.x.to_double(), s.pos.y.to_double(), s.pos.z.to_double()});
    build_bins();
  }

  const std::vector<Site>& sites() const { return sites_; }

  // p must lie in [0,1)^3 and have exactly representable coordinates.
  int classify(double x, double y, double z) const {
    const int bx = static_cast<int>(x * kBins);
    const int by = static_cast<int>(y * kBins);
    const int bz = static_cast<int>(z * kBins);
    const auto& cand = bins_[(bx * kBins + by) * kBins + bz];
    double best = 1e300, second = 1e300;
    int best_idx = -1;
    for (int idx : cand) {
      const auto& c = coords_[idx];
      const double dx = c[0] - x, dy = c[1] - y, dz = c[2] - z;
      const double d2 = dx * dx + dy * dy + dz * dz;
      if (d2 < best) {
        second = best;
        best = d2;
        best_idx = idx;
      } else if (d2 < second) {
        second = d2;
      }
    }
    if (second - best > 1e-9) return best_idx;
    return classify_exact(cand, x, y, z);
  }

 private:
  static constexpr int kBins = 8;

  int classify_exact(const std::vector<int>& cand, double x, double y, double z) const {
    Vec3R p{Rat::from_double_exact(x), Rat::from_double_exact(y),
            Rat::from_double_exact(z)};
    int best_idx = -1;
    Rat best;
    for (int idx : cand) {  // candidates ascend in site order: ties keep the first
      Rat d2 = norm2(sites_[idx].pos - p);
      if (best_idx < 0 || d2 < best) {
        best = d2;
        best_idx = idx;
      }
    }
    return best_idx;
  }

  void build_bins() {
    bins_.resize(kBins * kBins * kBins);
    const Rat bin(1, kBins);
    // rational upper bound for the bin half-diagonal sqrt(3)/(2*kBins)
    Rat half_diag_up(7, 4 * kBins);  // (7/4)^2 = 49/16 >= 3
    for (int bx = 0; bx < kBins; ++bx)
      for (int by = 0; by < kBins; ++by)
        for (int bz = 0; bz < kBins; ++bz) {
          Vec3R c{(Rat(2 * bx + 1)) / Rat(2 * kBins), (Rat(2 * by + 1)) / Rat(2 * kBins),
                  (Rat(2 * bz + 1)) / Rat(2 * kBins)};
          Rat min_d2;
          bool first = true;
          std::vector<Rat> d2s;
          d2s.reserve(sites_.size());
          for (const Site& s : sites_) {
            Rat d2 = norm2(s.pos - c);
            if (first || d2 < min_d2) {
              min_d2 = d2;
              first = false;
            }
            d2s.push_back(std::move(d2));
          }
          // rational m_up >= sqrt(min_d2)
          Rat m_up = Rat::from_double_exact(std::sqrt(min_d2.to_double())) + Rat(1, 1024);
          while (m_up * m_up < min_d2) m_up += Rat(1, 1024);
          // a site can be nearest for some point of the bin only within
          // m_up + 2 * half-diagonal of the bin center
          Rat reach = m_up + half_diag_up * 2;
          Rat reach2 = reach * reach;
          auto& list = bins_[(bx * kBins + by) * kBins + bz];
          for (size_t i = 0; i < sites_.size(); ++i)
            if (d2s[i] <= reach2) list.push_back(static_cast<int>(i));
        }
  }

  std::vector<Site> sites_;
  std::vector<std::array<double, 3>> coords_;
  std::vector<std::vector<int>> bins_;
};

}  // namespace

std::vector<std::map<SiteClass, McEstimate>> montecarlo_volumes_sweep(
    const RefinementPlan& plan, long samples, const std::vector<std::uint64_t>& seeds) {
  if (samples < 1) throw std::invalid_argument("montecarlo_volumes: samples < 1");
  NearestClassifier classifier(plan);
  std::map<SiteClass, long> mult;
  for (const Site& s : generate(plan, unit_box())) ++mult[s.cls];

  std::vector<std::map<SiteClass, McEstimate>> out;
  for (std::uint64_t seed : seeds) {
    std::map<SiteClass, long> hits;
    for (const auto& [cls, m] : mult) hits[cls] = 0;
    for (long i = 0; i < samples; ++i) {
      const double x = uniform_draw(seed, 3 * static_cast<std::uint64_t>(i));
      const double y = uniform_draw(seed, 3 * static_cast<std::uint64_t>(i) + 1);
      const double z = uniform_draw(seed, 3 * static_cast<std::uint64_t>(i) + 2);
      ++hits[classifier.sites()[classifier.classify(x, y, z)].cls];
    }
    std::map<SiteClass, McEstimate> est;
    for (const auto& [cls, m] : mult) {
      const double p = static_cast<double>(hits[cls]) / static_cast<double>(samples);
      McEstimate e;
      e.hits = hits[cls];
      e.samples = samples;
      e.estimate = p / static_cast<double>(m);
      e.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples)) /
                    static_cast<double>(m);
      est[cls] = e;
    }
    out.push_back(std::move(est));
  }
  return out;
}

std::map<SiteClass, McEstimate> montecarlo_volumes(const RefinementPlan& plan,
                                                   long samples, std::uint64_t seed) {
  return montecarlo_volumes_sweep(plan, samples, {seed}).front();
}

McEstimate montecarlo_volume(SiteClass cls, const RefinementPlan& plan, long samples,
                             std::uint64_t seed) {
  if (!plan.has_class(cls)) throw ClassNotInPlan(cls);
  return montecarlo_volumes(plan, samples, seed).at(cls);
}

// ---------------------------------------------------------------------------
// Brute-force max-free-point grid scan

bool MaxFreeReport::contains(const Vec3R& p) const {
  return std::find(argmax.begin(), argmax.end(), p) != argmax.end();
}

MaxFreeReport verify_max_free_point(const RefinementPlan& plan, int grid_n) {
  if (grid_n < 48 || grid_n % 48 != 0)
    throw std::invalid_argument("verify_max_free_point: grid_n must be a positive multiple of 48");
  const long n = grid_n;

  // Scale by n: every site coordinate becomes an exact integer.
  std::vector<std::array<long, 3>> sites;
  for (const Site& s : generate(plan, {{-1, -1, -1}, {2, 2, 2}})) {
    std::array<long, 3> q{};
    for (int i = 0; i < 3; ++i) {
      Rat scaled = s.pos[i] * Rat(n);
      if (scaled.den() != 1)
        throw std::logic_error("site does not lie on the scan grid");
      q[i] = scaled.num().get_si();
    }
    sites.push_back(q);
  }

  long best = -1;
  std::vector<std::array<long, 3>> argmax;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long k = 0; k < n; ++k) {
        long local = std::numeric_limits<long>::max();
        for (const auto& s : sites) {
          const long dx = s[0] - i, dy = s[1] - j, dz = s[2] - k;
          const long d2 = dx * dx + dy * dy + dz * dz;
          if (d2 < local) {
            local = d2;
            if (local < best) break;  // cannot beat the running maximum
          }
        }
        if (local > best) {
          best = local;
          argmax.clear();
          argmax.push_back({i, j, k});
        } else if (local == best) {
          argmax.push_back({i, j, k});
        }
      }

  MaxFreeReport report;
  report.grid_n = grid_n;
  report.max_min_r2 = Rat(best) / Rat(n * n);
  for (const auto& g : argmax)
    report.argmax.push_back({Rat(g[0], n), Rat(g[1], n), Rat(g[2], n)});
  return report;
}

// ---------------------------------------------------------------------------
// Golden-value report

bool Report::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string Report::text() const {
  std::ostringstream os;
  for (const CheckResult& c : checks) {
    if (c.pass)
      os << "PASS " << c.key << ": " << c.computed << "\n";
    else
      os << "FAIL " << c.key << ": expected " << c.expected << ", got " << c.computed
         << "\n";
  }
  os << (all_pass() ? "ALL CHECKS PASS" : "CHECK FAILURES PRESENT") << " ("
     << checks.size() << " checks)\n";
  return os.str();
}

std::string Report::json() const {
  nlohmann::json doc;
  doc["all_pass"] = all_pass();
  doc["checks"] = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    doc["checks"].push_back({{"key", c.key},
                             {"expected", c.expected},
                             {"computed", c.computed},
                             {"pass", c.pass}});
  }
  return doc.dump(2) + "\n";
}

Goldens Goldens::published() {
  Goldens g;
  auto R = [](long n, long d) { return Rat(n, d); };
  g.table_sc = {{R(1, 1), 6}, {R(2, 1), 12}, {R(3, 1), 8},
                {R(4, 1), 6}, {R(5, 1), 24}, {R(6, 1), 24}};
  g.table_bcc = {{R(3, 4), 8},   {R(1, 1), 6},  {R(2, 1), 12},
                 {R(11, 4), 24}, {R(3, 1), 8},  {R(4, 1), 6},
                 {R(19, 4), 24}, {R(5, 1), 24}, {R(6, 1), 24}};
  g.table_l2_gamma = {{R(5, 16), 24}, {R(3, 4), 8},   {R(13, 16), 24},
                      {R(1, 1), 6},   {R(21, 16), 48}, {R(29, 16), 72}};
  g.table_l2_w = {{R(1, 8), 4},  {R(1, 4), 2}, {R(5, 16), 4}, {R(3, 8), 8},
                  {R(1, 2), 4},  {R(5, 8), 8}, {R(3, 4), 8}};
  g.census_l1_gamma = {{4, 6}, {6, 8}};
  g.census_l2_gamma = {{3, 24}};
  g.census_l2_w = {{3, 4}, {6, 4}};
  g.census_l3_gamma = {{3, 8}};
  g.census_l3_lambda = {{3, 4}, {4, 6}, {6, 1}};
  g.census_l3_w = {{4, 8}, {5, 4}};
  g.w2_hexagon_edge2 = {R(1, 48), R(1, 48), R(25, 256), R(25, 256), R(9, 64), R(25, 144)};
  std::sort(g.w2_hexagon_edge2.begin(), g.w2_hexagon_edge2.end());
  g.lambda_vertices = {
      {R(5, 16), 0, 0},
      {0, R(5, 16), 0},
      {0, 0, R(5, 16)},
      {R(95, 288), R(13, 144), R(95, 288)},
      {R(95, 288), R(95, 288), R(13, 144)},
      {R(13, 144), R(95, 288), R(95, 288)},
      {R(59, 144), R(49, 288), R(49, 288)},
      {R(49, 288), R(59, 144), R(49, 288)},
      {R(49, 288), R(49, 288), R(59, 144)},
      {R(35, 128), R(35, 128), 0},
      {R(35, 128), 0, R(35, 128)},
      {0, R(35, 128), R(35, 128)},
  };
  std::sort(g.lambda_vertices.begin(), g.lambda_vertices.end());
  return g;
}

namespace {

std::string hist_str(const std::vector<std::pair<Rat, long>>& shells) {
  std::string s = "[";
  for (size_t i = 0; i < shells.size(); ++i) {
    if (i) s += ", ";
    s += "(" + shells[i].first.str() + ":" + std::to_string(shells[i].second) + ")";
  }
  return s + "]";
}

std::string census_str(const std::map<int, int>& by_degree) {
  std::string s = "{";
  bool first = true;
  for (const auto& [deg, count] : by_degree) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(deg) + "-gon:" + std::to_string(count);
  }
  return s + "}";
}

std::string vertex_list_str(std::vector<Vec3R> vs) {
  std::sort(vs.begin(), vs.end());
  std::string s;
  for (const Vec3R& v : vs) s += (s.empty() ? "" : " ") + v.str();
  return s;
}

std::string rat_list_str(const std::vector<Rat>& rs) {
  std::string s = "{";
  for (size_t i = 0; i < rs.size(); ++i) s += (i ? ", " : "") + rs[i].str();
  return s + "}";
}

void add(Report& rep, std::string key, std::string expected, std::string computed) {
  bool pass = expected == computed;
  rep.checks.push_back({std::move(key), std::move(expected), std::move(computed), pass});
}

ConvexCell rep_cell(SiteClass cls, const RefinementPlan& plan) {
  return voronoi_cell(Site{representative(cls), cls, class_level(cls)}, plan);
}

}  // namespace

Report verify_published_values(const Goldens& g) {
  Report rep;
  const RefinementPlan p0({Stage::L0});
  const RefinementPlan p1({Stage::L0, Stage::L1});
  const RefinementPlan p2w({Stage::L0, Stage::L1, Stage::L2W});
  const RefinementPlan p2x({Stage::L0, Stage::L1, Stage::L2X});
  const RefinementPlan p3({Stage::L0, Stage::L1, Stage::L2W, Stage::L3});

  // exact cell volumes, by direct construction
  struct VolCheck {
    const RefinementPlan* plan;
    SiteClass cls;
    const Rat* expected;
  };
  const VolCheck vol_checks[] = {
      {&p0, SiteClass::Gamma, &g.v0_gamma},   {&p1, SiteClass::Gamma, &g.v1_gamma},
      {&p2w, SiteClass::Gamma, &g.v2_gamma},  {&p2w, SiteClass::W, &g.v2_w},
      {&p2x, SiteClass::Gamma, &g.v2x_cell},  {&p3, SiteClass::Gamma, &g.v3_gamma},
      {&p3, SiteClass::Lambda, &g.v3_lambda}, {&p3, SiteClass::W, &g.v3_w},
  };
  std::map<std::pair<std::string, SiteClass>, ConvexCell> cells;
  for (const VolCheck& vc : vol_checks) {
    ConvexCell cell = rep_cell(vc.cls, *vc.plan);
    add(rep, "volume/" + vc.plan->str() + "/" + to_string(vc.cls), vc.expected->str(),
        volume(cell).str());
    cells.emplace(std::make_pair(vc.plan->str(), vc.cls), std::move(cell));
  }

  // partition identities, with multiplicities counted not assumed
  for (const RefinementPlan* plan : {&p1, &p2w, &p2x, &p3})
    add(rep, "partition/" + plan->str(), "1", volume_table(*plan).weighted_sum().str());

  // neighbor-shell tables
  add(rep, "table/SC", hist_str(g.table_sc),
      hist_str(shell_histogram(SiteClass::Gamma, p0, Rat(6)).shells));
  add(rep, "table/BCC", hist_str(g.table_bcc),
      hist_str(shell_histogram(SiteClass::Gamma, p1, Rat(6)).shells));
  add(rep, "table/L2W-GAMMA", hist_str(g.table_l2_gamma),
      hist_str(shell_histogram(SiteClass::Gamma, p2w, Rat(29, 16)).shells));
  add(rep, "table/L2W-W", hist_str(g.table_l2_w),
      hist_str(shell_histogram(SiteClass::W, p2w, Rat(3, 4)).shells));
  add(rep, "table/BCC-BODY-equals-GAMMA", "equal",
      shell_histogram(SiteClass::Body, p1, Rat(6)) ==
              shell_histogram(SiteClass::Gamma, p1, Rat(6))
          ? "equal"
          : "different");

  // face censuses and manifold invariants
  struct CensusCheck {
    const RefinementPlan* plan;
    SiteClass cls;
    const std::map<int, int>* expected;
  };
  const CensusCheck census_checks[] = {
      {&p1, SiteClass::Gamma, &g.census_l1_gamma},
      {&p2w, SiteClass::Gamma, &g.census_l2_gamma},
      {&p2w, SiteClass::W, &g.census_l2_w},
      {&p3, SiteClass::Gamma, &g.census_l3_gamma},
      {&p3, SiteClass::Lambda, &g.census_l3_lambda},
      {&p3, SiteClass::W, &g.census_l3_w},
  };
  for (const CensusCheck& cc : census_checks) {
    const ConvexCell& cell = cells.at({cc.plan->str(), cc.cls});
    FVector f = face_census(cell);
    add(rep, "census/" + cc.plan->str() + "/" + to_string(cc.cls),
        census_str(*cc.expected), census_str(f.faces_by_degree));
    std::string status = f.euler_ok() ? "ok" : "euler violated";
    try {
      check_cell(cell);
    } catch (const std::logic_error& e) {
      status = e.what();
    }
    add(rep, "manifold/" + cc.plan->str() + "/" + to_string(cc.cls), "ok", status);
  }

  // squared insertion gaps
  add(rep, "gap/W", g.gap_w.str(), nearest_gap(SiteClass::W, p2w).str());
  add(rep, "gap/LAMBDA", g.gap_lambda.str(), nearest_gap(SiteClass::Lambda, p3).str());
  add(rep, "gap/X", g.gap_x.str(), nearest_gap(SiteClass::X, p2x).str());

  // self-similarity of the X-refined lattice
  add(rep, "self-similarity/L2X-is-SC(1/2)", "true",
      self_similarity_check({{0, 0, 0}, {2, 2, 2}}) ? "true" : "false");

  // planar recurrences
  {
    std::string exp2, got2;
    Rat want(1);
    for (int n = 1; n <= 4; ++n) {
      want /= 2;
      exp2 += (n > 1 ? "," : "") + want.str();
      got2 += (n > 1 ? "," : "") + refine_square(n).len2().str();
    }
    add(rep, "planar/square-len2", exp2, got2);
    add(rep, "planar/square-rotation",
        "45,0,45,0", [&] {
          std::string s;
          for (int n = 1; n <= 4; ++n)
            s += (n > 1 ? "," : "") + std::to_string(refine_square(n).rotation_deg % 90);
          return s;
        }());
    std::string exp3, got3;
    Rat want3(1);
    for (int n = 1; n <= 4; ++n) {
      want3 /= 3;
      exp3 += (n > 1 ? "," : "") + want3.str();
      got3 += (n > 1 ? "," : "") + refine_triangular(n).len2().str();
    }
    add(rep, "planar/triangular-len2", exp3, got3);
    add(rep, "planar/triangular-K-gap2", "1/3",
        triangular_k_gap2(refine_triangular(0)).str());
  }

  // Tetrakis-hexahedron metrics read off the constructed cell
  {
    const ConvexCell& cell = cells.at({p2w.str(), SiteClass::Gamma});
    std::map<Rat, int> edge2_multiset;
    for (const CellFace& f : cell.faces)
      for (size_t i = 0; i < f.cycle.size(); ++i)
        ++edge2_multiset[norm2(cell.vertices[f.cycle[(i + 1) % f.cycle.size()]] -
                               cell.vertices[f.cycle[i]])];
    // each undirected edge was counted twice (once per adjacent face)
    Rat apex_edge2 = edge2_multiset.begin()->first;
    Rat cube_edge2 = edge2_multiset.rbegin()->first;
    add(rep, "metrics/tetrakis-cube-edge2", g.tetrakis_cube_edge2.str(),
        cube_edge2.str());
    add(rep, "metrics/tetrakis-apex-edge2", g.tetrakis_apex_edge2.str(),
        apex_edge2.str());

    // pyramid height: axis apex coordinate minus cube-corner coordinate
    Rat apex_coord(0), corner_coord(0);
    for (const Vec3R& v : cell.vertices) {
      Vec3R r = v - cell.generator.pos;
      int zeros = (r.x.sign() == 0) + (r.y.sign() == 0) + (r.z.sign() == 0);
      Rat m = r.x.abs();
      if (r.y.abs() > m) m = r.y.abs();
      if (r.z.abs() > m) m = r.z.abs();
      if (zeros == 2 && m > apex_coord) apex_coord = m;
      if (zeros == 0 && m > corner_coord) corner_coord = m;
    }
    add(rep, "metrics/tetrakis-pyramid-height", g.tetrakis_pyramid_height.str(),
        (apex_coord - corner_coord).str());

    // base angles of every pyramid triangle: cos = 2/3, exactly
    bool angles_ok = !cell.faces.empty();
    for (const CellFace& f : cell.faces) {
      if (f.cycle.size() != 3) {
        angles_ok = false;
        break;
      }
      for (size_t i = 0; i < 3 && angles_ok; ++i) {
        const Vec3R& cur = cell.vertices[f.cycle[i]];
        Vec3R r = cur - cell.generator.pos;
        int zeros = (r.x.sign() == 0) + (r.y.sign() == 0) + (r.z.sign() == 0);
        if (zeros == 2) continue;  // apex corner, complement angle
        const Vec3R& prev = cell.vertices[f.cycle[(i + 2) % 3]];
        const Vec3R& next = cell.vertices[f.cycle[(i + 1) % 3]];
        Vec3R u = prev - cur, v = next - cur;
        Rat d = dot(u, v);
        const Rat& c = g.tetrakis_base_angle_cos;
        angles_ok = d.sign() > 0 && d * d == c * c * norm2(u) * norm2(v);
      }
      if (!angles_ok) break;
    }
    add(rep, "metrics/tetrakis-base-angle-cos", "cos = " + g.tetrakis_base_angle_cos.str(),
        angles_ok ? "cos = " + g.tetrakis_base_angle_cos.str() : "mismatch");
  }

  // hexagonal faces of the level-2 W cell
  {
    const ConvexCell& cell = cells.at({p2w.str(), SiteClass::W});
    CellMetrics m = cell_metrics(cell);
    std::string got = "none";
    bool all_equal = true;
    for (size_t i = 0; i < cell.faces.size(); ++i) {
      if (cell.faces[i].cycle.size() != 6) continue;
      std::string s = rat_list_str(m.face_edge2[i]);
      if (got == "none") got = s;
      else if (got != s) all_equal = false;
    }
    add(rep, "metrics/w-hexagon-edge2", rat_list_str(g.w2_hexagon_edge2),
        all_equal ? got : "hexagons differ");
  }

  // the twelve exact vertices of the LAMBDA cell
  {
    const ConvexCell& cell = cells.at({p3.str(), SiteClass::Lambda});
    add(rep, "metrics/lambda-vertices", vertex_list_str(g.lambda_vertices),
        vertex_list_str(cell.vertices));

    // the first hexagon vertex, reconstructed via the three-plane system
    Vec3R lam = representative(SiteClass::Lambda);
    HalfSpace h1 = bisector(lam, {Rat(7, 24), Rat(7, 24), Rat(7, 24)});
    HalfSpace h2 = bisector(lam, {Rat(1, 4), 0, Rat(1, 2)});
    HalfSpace h3 = bisector(lam, {Rat(1, 2), 0, Rat(1, 4)});
    Vec3R v = solve3({h1.n, h2.n, h3.n}, {h1.d, h2.d, h3.d});
    bool in_cell = std::find(cell.vertices.begin(), cell.vertices.end(), v) !=
                   cell.vertices.end();
    add(rep, "metrics/lambda-hexagon-vertex-by-solve3",
        g.lambda_hexagon_vertex.str() + " in cell",
        v.str() + (in_cell ? " in cell" : " missing"));
  }

  return rep;
}

}  // namespace cubetess
