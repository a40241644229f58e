#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubetess/vec3.hpp"

namespace cubetess {

/// Crystallographic label of a refinement point.
///
/// GAMMA: level-0 simple-cubic points. BODY: level-1 cube centers.
/// W: level-2 insertions at the truncated-octahedron vertices.
/// X/M: the level-2 alternative insertions at face and edge midpoints of
/// the cubic frame. LAMBDA: level-3 insertions on the space diagonals.
enum class SiteClass { Gamma, Body, W, X, M, Lambda };

std::string to_string(SiteClass cls);
SiteClass site_class_from_string(std::string_view s);

enum class Stage { L0, L1, L2W, L2X, L3 };

std::string to_string(Stage st);

struct InvalidPlan : std::runtime_error {
  explicit InvalidPlan(const std::string& what) : std::runtime_error(what) {}
};

struct ClassNotInPlan : std::runtime_error {
  explicit ClassNotInPlan(SiteClass cls)
      : std::runtime_error("class " + to_string(cls) + " is not active in this plan") {}
};

/// An ordered sequence of refinement stages. The only valid sequences are
/// [L0], [L0,L1], [L0,L1,L2W], [L0,L1,L2X] and [L0,L1,L2W,L3]; LAMBDA
/// points are defined relative to the W insertion, so L3 requires L2W.
class RefinementPlan {
 public:
  explicit RefinementPlan(std::vector<Stage> stages);
  /// Parses e.g. "L0,L1,L2W,L3".
  static RefinementPlan parse(std::string_view text);

  const std::vector<Stage>& stages() const { return stages_; }
  std::vector<SiteClass> active_classes() const;
  std::vector<SiteClass> last_stage_classes() const;
  bool has_class(SiteClass cls) const;
  /// Plan with the final stage removed. Requires more than one stage.
  RefinementPlan parent() const;
  std::string str() const;

  bool operator==(const RefinementPlan& o) const { return stages_ == o.stages_; }

 private:
  std::vector<Stage> stages_;
};

/// A lattice point with its class label and the level that introduced it.
struct Site {
  Vec3R pos;
  SiteClass cls = SiteClass::Gamma;
  int level = 0;

  bool operator==(const Site& o) const { return pos == o.pos && cls == o.cls; }
  /// Class first (enum order), then position lexicographically.
  bool operator<(const Site& o) const {
    if (cls != o.cls) return cls < o.cls;
    return pos < o.pos;
  }
};

/// Half-open rational box [lo, hi) on every axis. The half-open convention
/// assigns each boundary-shared lattice point to exactly one unit cell, so
/// per-cell multiplicities (12 W, 16 LAMBDA, ...) emerge from counting.
struct BoxR {
  Vec3R lo, hi;

  bool contains(const Vec3R& p) const {
    for (int i = 0; i < 3; ++i)
      if (p[i] < lo[i] || p[i] >= hi[i]) return false;
    return true;
  }
};

inline BoxR unit_box() { return {{0, 0, 0}, {1, 1, 1}}; }

/// Sorted distance-shell counts: (exact squared distance, neighbor count),
/// strictly increasing in squared distance.
struct ShellHistogram {
  std::vector<std::pair<Rat, long>> shells;

  bool operator==(const ShellHistogram& o) const { return shells == o.shells; }
};

/// Fractional offsets (within [0,1)^3) that a stage adds per unit cell,
/// together with the class of each offset.
const std::vector<std::pair<Vec3R, SiteClass>>& stage_offsets(Stage st);

int stage_level(Stage st);
int class_level(SiteClass cls);

/// The representative center the analysis reasons about:
/// GAMMA (0,0,0), BODY (1/2,1/2,1/2), W (0,1/4,1/2), X (0,1/2,1/2),
/// M (1/2,0,0), LAMBDA (5/24,5/24,5/24).
Vec3R representative(SiteClass cls);

/// All sites of every active class inside the half-open box, each exactly
/// once, sorted by class then position.
std::vector<Site> generate(const RefinementPlan& plan, const BoxR& bbox);

/// Counts of sites (of any active class) at each exact squared distance
/// in (0, max_r2] from the representative center of center_cls.
ShellHistogram shell_histogram(SiteClass center_cls, const RefinementPlan& plan,
                               const Rat& max_r2);

/// Exact squared minimum distance from any site of the plan's final stage
/// to the union of all earlier-stage sites. new_cls must belong to the
/// final stage.
Rat nearest_gap(SiteClass new_cls, const RefinementPlan& plan);

/// True iff the [L0,L1,L2X] site set within bbox equals, as an exact point
/// set, the simple-cubic lattice of constant 1/2 within bbox.
bool self_similarity_check(const BoxR& bbox);

/// Points of the simple-cubic lattice with the given constant inside the
/// half-open box (positions only).
std::vector<Vec3R> scaled_sc_points(const Rat& constant, const BoxR& bbox);

/// All sites with 0 < |pos - s.pos|^2 <= r2max, complete over periodic
/// images, sorted by (squared distance, position).
std::vector<Site> candidate_neighbors(const Site& s, const RefinementPlan& plan,
                                      const Rat& r2max);

}  // namespace cubetess
