#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "cubetess/voronoi.hpp"

using namespace cubetess;

namespace {

const RefinementPlan kL0({Stage::L0});
const RefinementPlan kL1({Stage::L0, Stage::L1});
const RefinementPlan kL2W({Stage::L0, Stage::L1, Stage::L2W});
const RefinementPlan kL2X({Stage::L0, Stage::L1, Stage::L2X});
const RefinementPlan kL3({Stage::L0, Stage::L1, Stage::L2W, Stage::L3});

Site rep_site(SiteClass cls) {
  return {representative(cls), cls, class_level(cls)};
}

ConvexCell rep_cell(SiteClass cls, const RefinementPlan& plan) {
  return voronoi_cell(rep_site(cls), plan);
}

ConvexCell origin_cube(const Rat& half_width) {
  return make_cube_cell(Site{{0, 0, 0}, SiteClass::Gamma, 0}, half_width);
}

// check_cell demands a strictly interior generator; synthetic clips may
// leave the original generator on the cut plane, so validate against the
// vertex centroid instead.
void check_geometry(ConvexCell cell) {
  Vec3R c{0, 0, 0};
  for (const Vec3R& v : cell.vertices) c = c + v;
  cell.generator.pos = c / Rat(static_cast<long>(cell.vertices.size()));
  check_cell(cell);
}

}  // namespace

TEST_CASE("bisector: axis pair, body-center pair, coincident points") {
  HalfSpace h = bisector({0, 0, 0}, {1, 0, 0});
  CHECK(h.n == Vec3R{1, 0, 0});
  CHECK(h.d == Rat(1, 2));

  HalfSpace g = bisector({0, 0, 0}, {Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(g.n == Vec3R{Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(g.d == Rat(3, 8));

  // p strictly satisfied, q strictly violated
  CHECK(g.eval({0, 0, 0}).sign() < 0);
  CHECK(g.eval({Rat(1, 2), Rat(1, 2), Rat(1, 2)}).sign() > 0);

  CHECK_THROWS_AS(bisector({1, 2, 3}, {1, 2, 3}), CoincidentPoints);
}

TEST_CASE("bisector plane of LAMBDA and W holds the first hexagon vertex") {
  HalfSpace h = bisector({Rat(5, 24), Rat(5, 24), Rat(5, 24)}, {Rat(1, 4), 0, Rat(1, 2)});
  CHECK(h.eval({Rat(95, 288), Rat(13, 144), Rat(95, 288)}).sign() == 0);
}

TEST_CASE("seed cube is a valid cell with volume (2w)^3") {
  ConvexCell cube = origin_cube(Rat(1, 2));
  check_cell(cube);
  CHECK(volume(cube) == Rat(1));
  FVector f = face_census(cube);
  CHECK(f.vertices == 8);
  CHECK(f.edges == 12);
  CHECK(f.faces == 6);
  CHECK(volume(origin_cube(Rat(1))) == Rat(8));
}

TEST_CASE("clip: redundant plane leaves the cell unchanged, face count included") {
  ConvexCell cube = origin_cube(Rat(1, 2));
  ConvexCell same = clip(cube, {{1, 0, 0}, Rat(1)});
  CHECK(signature(same) == signature(cube));
  CHECK(same.faces.size() == 6);
}

TEST_CASE("clip: a plane through a single vertex leaves the cell unchanged") {
  ConvexCell cube = origin_cube(Rat(1, 2));
  ConvexCell same = clip(cube, {{1, 1, 1}, Rat(3, 2)});
  CHECK(signature(same) == signature(cube));
}

TEST_CASE("clip: halving the cube") {
  ConvexCell cube = origin_cube(Rat(1, 2));
  ConvexCell half = clip(cube, {{1, 0, 0}, Rat(0)});
  check_geometry(half);
  CHECK(volume(half) == Rat(1, 2));
  CHECK(half.faces.size() == 6);
}

TEST_CASE("clip: empty intersections are reported, including the grazing face") {
  ConvexCell cube = origin_cube(Rat(1, 2));
  CHECK_THROWS_AS(clip(cube, {{1, 0, 0}, Rat(-1)}), EmptyResult);
  // plane that retains exactly one face: interior empty
  CHECK_THROWS_AS(clip(cube, {{-1, 0, 0}, Rat(-1, 2)}), EmptyResult);
}

TEST_CASE("clip: diagonal plane through two opposite edges gives a prism") {
  ConvexCell prism = clip(origin_cube(Rat(1, 2)), {{1, 1, 0}, Rat(0)});
  check_geometry(prism);
  CHECK(volume(prism) == Rat(1, 2));
  FVector f = face_census(prism);
  CHECK(f.faces == 5);
  CHECK(f.vertices == 6);
  CHECK(f.faces_by_degree[3] == 2);
  CHECK(f.faces_by_degree[4] == 3);
}

TEST_CASE("clip: corner cut exactly through three vertices (degenerate contact)") {
  ConvexCell cut = clip(origin_cube(Rat(1, 2)), {{1, 1, 1}, Rat(1, 2)});
  check_cell(cut);
  CHECK(volume(cut) == Rat(5, 6));
  FVector f = face_census(cut);
  CHECK(f.faces == 7);
  CHECK(f.vertices == 7);
  CHECK(f.faces_by_degree[3] == 4);
  CHECK(f.faces_by_degree[4] == 3);
}

TEST_CASE("the eight body-center bisectors truncate the SC cube into 14 faces") {
  // the SC Wigner-Seitz cube, then the hexagon-generating cuts
  ConvexCell cell = origin_cube(Rat(1, 2));
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1})
        cell = clip(cell, bisector({0, 0, 0},
                                   {Rat(sx, 2), Rat(sy, 2), Rat(sz, 2)}));
  check_cell(cell);
  FVector f = face_census(cell);
  CHECK(f.faces == 14);
  CHECK(f.faces_by_degree[4] == 6);
  CHECK(f.faces_by_degree[6] == 8);
  CHECK(volume(cell) == Rat(1, 2));
}

TEST_CASE("level-0 cell: the unit cube") {
  ConvexCell cell = rep_cell(SiteClass::Gamma, kL0);
  check_cell(cell);
  CHECK(volume(cell) == Rat(1));
  CHECK(face_census(cell).faces == 6);
}

TEST_CASE("level-1 cell: the truncated octahedron, half the unit cell") {
  ConvexCell cell = rep_cell(SiteClass::Gamma, kL1);
  check_cell(cell);
  CHECK(volume(cell) == Rat(1, 2));
  FVector f = face_census(cell);
  CHECK(f.faces == 14);
  CHECK(f.vertices == 24);
  CHECK(f.edges == 36);
  CHECK(f.faces_by_degree[4] == 6);
  CHECK(f.faces_by_degree[6] == 8);
  CHECK(f.euler_ok());
}

TEST_CASE("level-2 GAMMA cell: the Tetrakis hexahedron") {
  ConvexCell cell = rep_cell(SiteClass::Gamma, kL2W);
  check_cell(cell);
  CHECK(volume(cell) == Rat(125, 1152));
  FVector f = face_census(cell);
  CHECK(f.faces == 24);
  CHECK(f.faces_by_degree[3] == 24);
  CHECK(f.vertices == 14);
  CHECK(f.edges == 36);

  // cube-edge vertices at +-5/24, pyramid apexes at +-5/16 on the axes
  std::set<Rat> corner_coords, apex_coords;
  for (const Vec3R& v : cell.vertices) {
    int zeros = (v.x.sign() == 0) + (v.y.sign() == 0) + (v.z.sign() == 0);
    if (zeros == 2)
      for (int i = 0; i < 3; ++i) {
        if (v[i].sign() != 0) apex_coords.insert(v[i].abs());
      }
    else
      for (int i = 0; i < 3; ++i) corner_coords.insert(v[i].abs());
  }
  CHECK(corner_coords == std::set<Rat>{Rat(5, 24)});
  CHECK(apex_coords == std::set<Rat>{Rat(5, 16)});
}

TEST_CASE("level-2 W cell: 4 triangles + 4 hexagons, volume 451/6912") {
  ConvexCell cell = rep_cell(SiteClass::W, kL2W);
  check_cell(cell);
  CHECK(volume(cell) == Rat(451, 6912));
  FVector f = face_census(cell);
  CHECK(f.faces == 8);
  CHECK(f.faces_by_degree[3] == 4);
  CHECK(f.faces_by_degree[6] == 4);
}

TEST_CASE("level-2 X-plan cells: eight congruent cubes of volume 1/8") {
  for (SiteClass cls : {SiteClass::Gamma, SiteClass::Body, SiteClass::X, SiteClass::M}) {
    ConvexCell cell = rep_cell(cls, kL2X);
    check_cell(cell);
    CHECK(volume(cell) == Rat(1, 8));
    CHECK(face_census(cell).faces == 6);
  }
  CHECK(canonical_form(rep_cell(SiteClass::Gamma, kL2X)) ==
        canonical_form(rep_cell(SiteClass::X, kL2X)));
}

TEST_CASE("level-3 GAMMA cell: octahedron with bounding coordinates +-5/16") {
  ConvexCell cell = rep_cell(SiteClass::Gamma, kL3);
  check_cell(cell);
  CHECK(volume(cell) == Rat(125, 3072));
  FVector f = face_census(cell);
  CHECK(f.faces == 8);
  CHECK(f.vertices == 6);
  CHECK(f.edges == 12);
  for (const Vec3R& v : cell.vertices) {
    Rat m = v.x.abs();
    if (v.y.abs() > m) m = v.y.abs();
    if (v.z.abs() > m) m = v.z.abs();
    CHECK(m == Rat(5, 16));
  }
}

TEST_CASE("level-3 LAMBDA cell: 11 faces (1 hexagon, 6 quadrangles, 4 triangles)") {
  ConvexCell cell = rep_cell(SiteClass::Lambda, kL3);
  check_cell(cell);
  CHECK(volume(cell) == Rat(26291, 884736));
  FVector f = face_census(cell);
  CHECK(f.faces == 11);
  CHECK(f.vertices == 12);
  CHECK(f.edges == 21);
  CHECK(f.faces_by_degree[6] == 1);
  CHECK(f.faces_by_degree[4] == 6);
  CHECK(f.faces_by_degree[3] == 4);
}

TEST_CASE("level-3 W cell: 12 faces (4 pentagons, 8 quadrangles)") {
  ConvexCell cell = rep_cell(SiteClass::W, kL3);
  check_cell(cell);
  CHECK(volume(cell) == Rat(24505, 663552));
  FVector f = face_census(cell);
  CHECK(f.faces == 12);
  CHECK(f.faces_by_degree[5] == 4);
  CHECK(f.faces_by_degree[4] == 8);
}

TEST_CASE("every published vertex of the LAMBDA cell appears exactly") {
  ConvexCell cell = rep_cell(SiteClass::Lambda, kL3);
  auto R = [](long n, long d) { return Rat(n, d); };
  std::vector<Vec3R> expected = {
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
  std::vector<Vec3R> got = cell.vertices;
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
}

TEST_CASE("cell metrics: Tetrakis pyramid triangles and W hexagons") {
  ConvexCell tetrakis = rep_cell(SiteClass::Gamma, kL2W);
  CellMetrics tm = cell_metrics(tetrakis);
  for (size_t i = 0; i < tetrakis.faces.size(); ++i) {
    REQUIRE(tm.face_edge2[i].size() == 3);
    // two apex edges of squared length 25/256, one cube edge 25/144
    CHECK(tm.face_edge2[i][0] == Rat(25, 256));
    CHECK(tm.face_edge2[i][1] == Rat(25, 256));
    CHECK(tm.face_edge2[i][2] == Rat(25, 144));
    // base angles arccos(2/3), apex angle the 180-degree complement
    CHECK(tm.face_angles_deg[i][0] == doctest::Approx(48.189685).epsilon(1e-6));
    CHECK(tm.face_angles_deg[i][1] == doctest::Approx(48.189685).epsilon(1e-6));
    CHECK(tm.face_angles_deg[i][2] == doctest::Approx(83.62063).epsilon(1e-6));
  }
  CHECK(std::is_sorted(tm.vertices.begin(), tm.vertices.end()));

  ConvexCell wcell = rep_cell(SiteClass::W, kL2W);
  CellMetrics wm = cell_metrics(wcell);
  std::vector<Rat> hex = {Rat(1, 48),   Rat(1, 48),  Rat(25, 256),
                          Rat(25, 256), Rat(9, 64), Rat(25, 144)};
  std::sort(hex.begin(), hex.end());
  for (size_t i = 0; i < wcell.faces.size(); ++i) {
    if (wcell.faces[i].cycle.size() != 6) continue;
    CHECK(wm.face_edge2[i] == hex);
  }
}

TEST_CASE("clipping order does not matter") {
  std::mt19937 rng(2024);
  for (SiteClass cls : {SiteClass::W, SiteClass::Lambda}) {
    Site s = rep_site(cls);
    std::vector<Site> neigh = candidate_neighbors(s, kL3, Rat(4));
    CellSignature reference = signature(build_cell(s, neigh, true));
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(neigh.begin(), neigh.end(), rng);
      CHECK(signature(build_cell(s, neigh, false)) == reference);
    }
  }
}

TEST_CASE("doubling the candidate radius reproduces the identical cell") {
  for (SiteClass cls : {SiteClass::Gamma, SiteClass::W}) {
    CHECK(signature(voronoi_cell(rep_site(cls), kL2W, Rat(4))) ==
          signature(voronoi_cell(rep_site(cls), kL2W, Rat(9))));
  }
}

TEST_CASE("GAMMA and BODY cells of the BCC lattice are congruent") {
  CHECK(canonical_form(rep_cell(SiteClass::Gamma, kL1)) ==
        canonical_form(rep_cell(SiteClass::Body, kL1)));
}

TEST_CASE("all W cells of one unit cell are congruent") {
  std::vector<Vec3R> reference;
  for (const Site& s : generate(kL2W, unit_box())) {
    if (s.cls != SiteClass::W) continue;
    auto form = canonical_form(voronoi_cell(s, kL2W));
    if (reference.empty())
      reference = form;
    else
      CHECK(form == reference);
  }
  CHECK_FALSE(reference.empty());
}

TEST_CASE("volume is invariant under translating generator and vertices together") {
  ConvexCell cell = rep_cell(SiteClass::W, kL2W);
  Rat vol = volume(cell);
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
  for (int trial = 0; trial < 10; ++trial) {
    Vec3R t{Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
    ConvexCell moved = cell;
    moved.generator.pos = moved.generator.pos + t;
    for (Vec3R& v : moved.vertices) v = v + t;
    for (CellFace& f : moved.faces) f.plane.d += dot(f.plane.n, t);
    CHECK(volume(moved) == vol);
    check_cell(moved);
  }
}

TEST_CASE("nearest-site classification agrees with point-in-cell membership") {
  // exact equivalence on random dyadic points around the LAMBDA cell
  Site s = rep_site(SiteClass::Lambda);
  ConvexCell cell = voronoi_cell(s, kL3);
  std::vector<Site> sites = generate(kL3, {{-1, -1, -1}, {2, 2, 2}});
  std::mt19937_64 rng(99);
  auto dyadic = [&](double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return Rat::from_double_exact(lo + u * (hi - lo));
  };
  int inside_count = 0;
  for (int trial = 0; trial < 300; ++trial) {
    // box around the cell: generator +- 0.3
    Vec3R p{dyadic(-0.1, 0.5), dyadic(-0.1, 0.5), dyadic(-0.1, 0.5)};
    bool inside = true;
    for (const CellFace& f : cell.faces)
      if (f.plane.eval(p).sign() >= 0) inside = false;
    Rat own = norm2(p - s.pos);
    bool nearest = true;
    for (const Site& t : sites)
      if (!(t.pos == s.pos) && norm2(p - t.pos) <= own) nearest = false;
    CHECK(inside == nearest);
    inside_count += inside;
  }
  CHECK(inside_count > 0);  // the sample box does hit the cell
}

TEST_CASE("signed permutations: 48 distinct isometries") {
  const auto& perms = signed_permutations();
  std::set<std::vector<Rat>> images;
  Vec3R probe{Rat(1), Rat(2), Rat(3)};
  for (const SignedPermutation& sp : perms) {
    Vec3R w = sp.apply(probe);
    images.insert({w.x, w.y, w.z});
    CHECK(norm2(w) == norm2(probe));
  }
  CHECK(images.size() == 48);
}
