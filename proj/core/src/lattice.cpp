#include "cubetess/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cubetess {

std::string to_string(SiteClass cls) {
  switch (cls) {
    case SiteClass::Gamma: return "GAMMA";
    case SiteClass::Body: return "BODY";
    case SiteClass::W: return "W";
    case SiteClass::X: return "X";
    case SiteClass::M: return "M";
    case SiteClass::Lambda: return "LAMBDA";
  }
  return "?";
}

SiteClass site_class_from_string(std::string_view s) {
  if (s == "GAMMA") return SiteClass::Gamma;
  if (s == "BODY") return SiteClass::Body;
  if (s == "W") return SiteClass::W;
  if (s == "X") return SiteClass::X;
  if (s == "M") return SiteClass::M;
  if (s == "LAMBDA") return SiteClass::Lambda;
  throw std::invalid_argument("unknown site class: " + std::string(s));
}

std::string to_string(Stage st) {
  switch (st) {
    case Stage::L0: return "L0";
    case Stage::L1: return "L1";
    case Stage::L2W: return "L2W";
    case Stage::L2X: return "L2X";
    case Stage::L3: return "L3";
  }
  return "?";
}

RefinementPlan::RefinementPlan(std::vector<Stage> stages) : stages_(std::move(stages)) {
  static const std::vector<std::vector<Stage>> valid = {
      {Stage::L0},
      {Stage::L0, Stage::L1},
      {Stage::L0, Stage::L1, Stage::L2W},
      {Stage::L0, Stage::L1, Stage::L2X},
      {Stage::L0, Stage::L1, Stage::L2W, Stage::L3},
  };
  for (const auto& v : valid)
    if (stages_ == v) return;
  std::string s;
  for (Stage st : stages_) s += (s.empty() ? "" : ",") + to_string(st);
  throw InvalidPlan("invalid refinement sequence: [" + s + "]");
}

RefinementPlan RefinementPlan::parse(std::string_view text) {
  std::vector<Stage> stages;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - pos);
    if (tok == "L0") stages.push_back(Stage::L0);
    else if (tok == "L1") stages.push_back(Stage::L1);
    else if (tok == "L2W") stages.push_back(Stage::L2W);
    else if (tok == "L2X") stages.push_back(Stage::L2X);
    else if (tok == "L3") stages.push_back(Stage::L3);
    else throw InvalidPlan("unknown stage token: '" + std::string(tok) + "'");
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return RefinementPlan(std::move(stages));
}

std::vector<SiteClass> RefinementPlan::active_classes() const {
  std::vector<SiteClass> out;
  for (Stage st : stages_)
    for (const auto& [off, cls] : stage_offsets(st))
      if (std::find(out.begin(), out.end(), cls) == out.end()) out.push_back(cls);
  return out;
}

std::vector<SiteClass> RefinementPlan::last_stage_classes() const {
  std::vector<SiteClass> out;
  for (const auto& [off, cls] : stage_offsets(stages_.back()))
    if (std::find(out.begin(), out.end(), cls) == out.end()) out.push_back(cls);
  return out;
}

bool RefinementPlan::has_class(SiteClass cls) const {
  for (SiteClass c : active_classes())
    if (c == cls) return true;
  return false;
}

RefinementPlan RefinementPlan::parent() const {
  if (stages_.size() < 2) throw InvalidPlan("plan [L0] has no parent");
  return RefinementPlan(std::vector<Stage>(stages_.begin(), stages_.end() - 1));
}

std::string RefinementPlan::str() const {
  std::string s;
  for (Stage st : stages_) s += (s.empty() ? "" : ",") + to_string(st);
  return s;
}

const std::vector<std::pair<Vec3R, SiteClass>>& stage_offsets(Stage st) {
  static const Rat h(1, 2), q(1, 4), tq(3, 4);
  static const std::vector<std::pair<Vec3R, SiteClass>> l0 = {
      {{0, 0, 0}, SiteClass::Gamma}};
  static const std::vector<std::pair<Vec3R, SiteClass>> l1 = {
      {{h, h, h}, SiteClass::Body}};
  // the 12 W offsets owned by a cell under the half-open convention
  static const std::vector<std::pair<Vec3R, SiteClass>> l2w = {
      {{0, q, h}, SiteClass::W},  {{0, tq, h}, SiteClass::W},
      {{0, h, q}, SiteClass::W},  {{0, h, tq}, SiteClass::W},
      {{q, h, 0}, SiteClass::W},  {{tq, h, 0}, SiteClass::W},
      {{h, q, 0}, SiteClass::W},  {{h, tq, 0}, SiteClass::W},
      {{q, 0, h}, SiteClass::W},  {{tq, 0, h}, SiteClass::W},
      {{h, 0, q}, SiteClass::W},  {{h, 0, tq}, SiteClass::W}};
  // X: midpoints between adjacent cube centers (face centers of the frame).
  // M: midpoints between adjacent SC points (edge centers of the frame).
  static const std::vector<std::pair<Vec3R, SiteClass>> l2x = {
      {{h, h, 0}, SiteClass::X}, {{h, 0, h}, SiteClass::X}, {{0, h, h}, SiteClass::X},
      {{h, 0, 0}, SiteClass::M}, {{0, h, 0}, SiteClass::M}, {{0, 0, h}, SiteClass::M}};
  // Four points per space diagonal at parameters 5/24, 7/24, 17/24, 19/24.
  static const std::vector<std::pair<Vec3R, SiteClass>> l3 = [] {
    std::vector<std::pair<Vec3R, SiteClass>> v;
    const Rat one(1);
    for (long num : {5L, 7L, 17L, 19L}) {
      Rat lam(num, 24);
      Rat mu = one - lam;
      v.push_back({{lam, lam, lam}, SiteClass::Lambda});
      v.push_back({{mu, lam, lam}, SiteClass::Lambda});
      v.push_back({{lam, mu, lam}, SiteClass::Lambda});
      v.push_back({{lam, lam, mu}, SiteClass::Lambda});
    }
    return v;
  }();
  switch (st) {
    case Stage::L0: return l0;
    case Stage::L1: return l1;
    case Stage::L2W: return l2w;
    case Stage::L2X: return l2x;
    case Stage::L3: return l3;
  }
  return l0;
}

int stage_level(Stage st) {
  switch (st) {
    case Stage::L0: return 0;
    case Stage::L1: return 1;
    case Stage::L2W:
    case Stage::L2X: return 2;
    case Stage::L3: return 3;
  }
  return 0;
}

int class_level(SiteClass cls) {
  switch (cls) {
    case SiteClass::Gamma: return 0;
    case SiteClass::Body: return 1;
    case SiteClass::W:
    case SiteClass::X:
    case SiteClass::M: return 2;
    case SiteClass::Lambda: return 3;
  }
  return 0;
}

Vec3R representative(SiteClass cls) {
  switch (cls) {
    case SiteClass::Gamma: return {0, 0, 0};
    case SiteClass::Body: return {Rat(1, 2), Rat(1, 2), Rat(1, 2)};
    case SiteClass::W: return {0, Rat(1, 4), Rat(1, 2)};
    case SiteClass::X: return {0, Rat(1, 2), Rat(1, 2)};
    case SiteClass::M: return {Rat(1, 2), 0, 0};
    case SiteClass::Lambda: return {Rat(5, 24), Rat(5, 24), Rat(5, 24)};
  }
  return {0, 0, 0};
}

std::vector<Site> generate(const RefinementPlan& plan, const BoxR& bbox) {
  std::vector<Site> out;
  for (int i = 0; i < 3; ++i)
    if (bbox.hi[i] <= bbox.lo[i]) return out;

  mpz_class ilo[3], ihi[3];  // integer cell range per axis, inclusive
  for (int i = 0; i < 3; ++i) {
    ilo[i] = floor_int(bbox.lo[i]);
    ihi[i] = ceil_int(bbox.hi[i]);  // exclusive cell bound
  }
  for (Stage st : plan.stages()) {
    const auto& offs = stage_offsets(st);
    for (mpz_class i = ilo[0]; i < ihi[0]; ++i)
      for (mpz_class j = ilo[1]; j < ihi[1]; ++j)
        for (mpz_class k = ilo[2]; k < ihi[2]; ++k) {
          Vec3R cell{Rat(mpz_class(i)), Rat(mpz_class(j)), Rat(mpz_class(k))};
          for (const auto& [off, cls] : offs) {
            Vec3R p = cell + off;
            if (bbox.contains(p)) out.push_back({p, cls, stage_level(st)});
          }
        }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// All sites within squared distance r2max of center, complete over
// periodic images: generation extends ceil(sqrt(r2max)) + 1 cells beyond
// the center's cell on every axis.
std::vector<Site> sites_within(const Vec3R& center, const RefinementPlan& plan,
                               const Rat& r2max) {
  long reach = ceil_sqrt_int(r2max) + 1;
  BoxR box;
  for (int i = 0; i < 3; ++i) {
    mpz_class base = floor_int(center[i]);
    box.lo[i] = Rat(mpz_class(base - reach));
    box.hi[i] = Rat(mpz_class(base + reach + 1));
  }
  std::vector<Site> out;
  for (Site& s : generate(plan, box)) {
    Rat d2 = norm2(s.pos - center);
    if (d2 <= r2max) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

ShellHistogram shell_histogram(SiteClass center_cls, const RefinementPlan& plan,
                               const Rat& max_r2) {
  if (!plan.has_class(center_cls)) throw ClassNotInPlan(center_cls);
  const Vec3R center = representative(center_cls);
  std::map<Rat, long> shells;
  for (const Site& s : sites_within(center, plan, max_r2)) {
    Rat d2 = norm2(s.pos - center);
    if (d2.sign() > 0) ++shells[d2];
  }
  ShellHistogram h;
  h.shells.assign(shells.begin(), shells.end());
  return h;
}

Rat nearest_gap(SiteClass new_cls, const RefinementPlan& plan) {
  auto last = plan.last_stage_classes();
  if (std::find(last.begin(), last.end(), new_cls) == last.end())
    throw ClassNotInPlan(new_cls);
  RefinementPlan prev = plan.parent();
  // Gaps never exceed the level-0 spacing, so radius 2 is ample.
  std::vector<Site> old_sites = generate(prev, {{-2, -2, -2}, {3, 3, 3}});
  bool first = true;
  Rat best;
  for (const auto& [off, cls] : stage_offsets(plan.stages().back())) {
    for (const Site& t : old_sites) {
      Rat d2 = norm2(t.pos - off);
      if (first || d2 < best) {
        best = d2;
        first = false;
      }
    }
  }
  return best;
}

std::vector<Vec3R> scaled_sc_points(const Rat& constant, const BoxR& bbox) {
  std::vector<Vec3R> out;
  mpz_class ilo[3], ihi[3];
  for (int i = 0; i < 3; ++i) {
    ilo[i] = ceil_int(bbox.lo[i] / constant);
    ihi[i] = ceil_int(bbox.hi[i] / constant);
  }
  for (mpz_class i = ilo[0]; i < ihi[0]; ++i)
    for (mpz_class j = ilo[1]; j < ihi[1]; ++j)
      for (mpz_class k = ilo[2]; k < ihi[2]; ++k) {
        Vec3R p{Rat(mpz_class(i)) * constant, Rat(mpz_class(j)) * constant,
                Rat(mpz_class(k)) * constant};
        if (bbox.contains(p)) out.push_back(p);
      }
  std::sort(out.begin(), out.end());
  return out;
}

bool self_similarity_check(const BoxR& bbox) {
  RefinementPlan plan({Stage::L0, Stage::L1, Stage::L2X});
  std::vector<Vec3R> got;
  for (const Site& s : generate(plan, bbox)) got.push_back(s.pos);
  std::sort(got.begin(), got.end());
  return got == scaled_sc_points(Rat(1, 2), bbox);
}

std::vector<Site> candidate_neighbors(const Site& s, const RefinementPlan& plan,
                                      const Rat& r2max) {
  std::vector<Site> out;
  for (Site& t : sites_within(s.pos, plan, r2max)) {
    if (norm2(t.pos - s.pos).sign() > 0) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [&](const Site& a, const Site& b) {
    Rat da = norm2(a.pos - s.pos), db = norm2(b.pos - s.pos);
    if (da != db) return da < db;
    return a.pos < b.pos;
  });
  return out;
}

}  // namespace cubetess
