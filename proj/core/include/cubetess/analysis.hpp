#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cubetess/lattice.hpp"
#include "cubetess/planar.hpp"
#include "cubetess/voronoi.hpp"

namespace cubetess {

/// Per-class Voronoi volumes with their multiplicities in one SC unit
/// cell. The multiplicity-weighted volumes partition the unit cell
/// exactly, which is what makes them valid quadrature weights.
struct VolumeTable {
  struct Entry {
    SiteClass cls;
    long multiplicity;
    Rat volume;
  };
  std::vector<Entry> entries;  // ordered by class

  Rat weighted_sum() const;
  bool partition_ok() const { return weighted_sum() == Rat(1); }
  const Entry& operator[](SiteClass cls) const;
};

/// Multiplicities counted from generate() on the half-open unit box,
/// volumes from exact cell construction around each representative.
VolumeTable volume_table(const RefinementPlan& plan);

struct McEstimate {
  double estimate = 0;   // volume estimate for one cell of the class
  double std_error = 0;  // standard error of the estimate
  long hits = 0;         // samples whose nearest site has this class
  long samples = 0;
};

/// Monte-Carlo volume oracle: classifies uniform samples of the unit cell
/// by exact nearest site (float filter with exact rational fallback near
/// ties; ties resolved by lexicographic site order) and normalizes each
/// class count by its multiplicity. Counter-based generator: a fixed seed
/// reproduces the estimate exactly.
std::map<SiteClass, McEstimate> montecarlo_volumes(const RefinementPlan& plan,
                                                   long samples, std::uint64_t seed);

McEstimate montecarlo_volume(SiteClass cls, const RefinementPlan& plan, long samples,
                             std::uint64_t seed);

/// One estimate set per seed, sharing a single classifier build.
std::vector<std::map<SiteClass, McEstimate>> montecarlo_volumes_sweep(
    const RefinementPlan& plan, long samples, const std::vector<std::uint64_t>& seeds);

/// Result of the brute-force max-free-point scan of an n^3 grid over one
/// unit cell: the largest exact squared distance from a grid point to the
/// plan's sites, and every grid point attaining it.
struct MaxFreeReport {
  int grid_n = 0;
  Rat max_min_r2;
  std::vector<Vec3R> argmax;

  bool contains(const Vec3R& p) const;
};

/// grid_n must be a positive multiple of 48 so that every inserted-point
/// coordinate of the hierarchy (denominators 2, 4, 24) lies exactly on the
/// grid.
MaxFreeReport verify_max_free_point(const RefinementPlan& plan, int grid_n);

struct CheckResult {
  std::string key;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Deterministic golden-check report; renders as stable text and as a
/// machine-readable JSON document (exact rationals as "num/den" strings).
struct Report {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::string text() const;
  std::string json() const;
};

/// Every published golden value the report asserts. Kept as data so tests
/// can inject a fault and watch exactly one check fail.
struct Goldens {
  // exact cell volumes per (plan, class)
  Rat v0_gamma{1};
  Rat v1_gamma{1, 2};
  Rat v2_gamma{125, 1152};
  Rat v2_w{451, 6912};
  Rat v2x_cell{1, 8};
  Rat v3_gamma{125, 3072};
  Rat v3_lambda{26291, 884736};
  Rat v3_w{24505, 663552};

  // neighbor-shell tables (squared distance, count)
  std::vector<std::pair<Rat, long>> table_sc;
  std::vector<std::pair<Rat, long>> table_bcc;
  std::vector<std::pair<Rat, long>> table_l2_gamma;
  std::vector<std::pair<Rat, long>> table_l2_w;

  // face censuses as (edge count -> number of faces)
  std::map<int, int> census_l1_gamma;
  std::map<int, int> census_l2_gamma;
  std::map<int, int> census_l2_w;
  std::map<int, int> census_l3_gamma;
  std::map<int, int> census_l3_lambda;
  std::map<int, int> census_l3_w;

  // squared insertion gaps
  Rat gap_w{5, 16};
  Rat gap_lambda{25, 192};
  Rat gap_x{1, 4};

  // cell metrics
  Rat tetrakis_cube_edge2{25, 144};
  Rat tetrakis_pyramid_height{5, 48};
  Rat tetrakis_apex_edge2{25, 256};
  Rat tetrakis_base_angle_cos{2, 3};
  std::vector<Rat> w2_hexagon_edge2;
  std::vector<Vec3R> lambda_vertices;
  Vec3R lambda_hexagon_vertex{Rat(95, 288), Rat(13, 144), Rat(95, 288)};

  static Goldens published();
};

/// Runs the full battery of golden checks (volumes, tables, censuses,
/// gaps, partition identities, self-similarity, planar recurrences,
/// cell metrics) against exact reconstruction. Failures are report
/// entries, never faults; the report is byte-identical across runs.
Report verify_published_values(const Goldens& goldens = Goldens::published());

}  // namespace cubetess
