#include "cubetess/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace cubetess {

HalfSpace bisector(const Vec3R& p, const Vec3R& q) {
  if (p == q) throw CoincidentPoints();
  Vec3R n = q - p;
  Rat d = dot(n, (p + q) / 2);
  return {std::move(n), std::move(d)};
}

ConvexCell make_cube_cell(const Site& generator, const Rat& half_width) {
  if (half_width.sign() <= 0) throw std::invalid_argument("cube half-width must be positive");
  const Vec3R& c = generator.pos;
  const Rat& w = half_width;
  ConvexCell cell;
  cell.generator = generator;
  // vertex index = bit code: bit i set means +w along axis i
  for (int code = 0; code < 8; ++code) {
    Vec3R v = c;
    v.x += (code & 1) ? w : -w;
    v.y += (code & 2) ? w : -w;
    v.z += (code & 4) ? w : -w;
    cell.vertices.push_back(v);
  }
  auto face = [&](int axis, int dir, std::vector<int> cyc) {
    Vec3R n{0, 0, 0};
    n[axis] = dir;
    Rat d = dot(n, c) + w;
    cell.faces.push_back({{n, d}, std::move(cyc)});
  };
  // cycles are counterclockwise seen from outside
  face(0, +1, {1, 3, 7, 5});
  face(0, -1, {0, 4, 6, 2});
  face(1, +1, {2, 6, 7, 3});
  face(1, -1, {0, 1, 5, 4});
  face(2, +1, {4, 5, 7, 6});
  face(2, -1, {0, 2, 3, 1});
  return cell;
}

namespace {

// Newell's formula: twice the area-weighted normal of a planar polygon.
Vec3R newell_normal(const std::vector<Vec3R>& verts, const std::vector<int>& cycle) {
  Vec3R n{0, 0, 0};
  for (size_t a = 0; a < cycle.size(); ++a) {
    const Vec3R& p = verts[cycle[a]];
    const Vec3R& q = verts[cycle[(a + 1) % cycle.size()]];
    n = n + cross(p, q);
  }
  return n;
}

void drop_consecutive_duplicates(std::vector<int>& cyc) {
  std::vector<int> out;
  for (int idx : cyc)
    if (out.empty() || out.back() != idx) out.push_back(idx);
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  cyc = std::move(out);
}

// Orders the on-plane vertex set of a fresh cut into a convex cycle with
// outward orientation. Uses only exact sign predicates: points are sorted
// angularly around their centroid in the projection along the dominant
// axis of the plane normal.
std::vector<int> order_cap_cycle(const std::vector<Vec3R>& verts,
                                 std::vector<int> idx, const HalfSpace& h) {
  int k = 0;
  Rat best = h.n.x.abs();
  if (h.n.y.abs() > best) { k = 1; best = h.n.y.abs(); }
  if (h.n.z.abs() > best) { k = 2; }
  const int u = (k + 1) % 3, v = (k + 2) % 3;

  Vec3R c{0, 0, 0};
  for (int i : idx) c = c + verts[i];
  c = c / Rat(static_cast<long>(idx.size()));

  auto above = [&](const Vec3R& p) {
    Rat pv = p[v] - c[v];
    if (pv.sign() != 0) return pv.sign() > 0;
    return (p[u] - c[u]).sign() > 0;
  };
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const Vec3R& pa = verts[a];
    const Vec3R& pb = verts[b];
    bool aa = above(pa), ab = above(pb);
    if (aa != ab) return aa;
    Rat cr = (pa[u] - c[u]) * (pb[v] - c[v]) - (pa[v] - c[v]) * (pb[u] - c[u]);
    return cr.sign() > 0;
  });

  if (dot(newell_normal(verts, idx), h.n).sign() < 0)
    std::reverse(idx.begin(), idx.end());
  return idx;
}

}  // namespace

ConvexCell clip(const ConvexCell& cell, const HalfSpace& h) {
  const size_t nv = cell.vertices.size();
  std::vector<Rat> s(nv);
  bool any_pos = false, any_neg = false;
  for (size_t i = 0; i < nv; ++i) {
    s[i] = h.eval(cell.vertices[i]);
    const int sg = s[i].sign();
    any_pos |= sg > 0;
    any_neg |= sg < 0;
  }
  if (!any_pos) return cell;  // redundant plane, possibly touching
  if (!any_neg) throw EmptyResult();

  std::vector<Vec3R> pool;
  std::map<Vec3R, int> pool_index;
  auto emit = [&](const Vec3R& p) {
    auto [it, inserted] = pool_index.try_emplace(p, static_cast<int>(pool.size()));
    if (inserted) pool.push_back(p);
    return it->second;
  };

  std::vector<CellFace> kept;
  for (const CellFace& face : cell.faces) {
    const std::vector<int>& cyc = face.cycle;
    const size_t m = cyc.size();
    std::vector<int> out;
    for (size_t a = 0; a < m; ++a) {
      const size_t b = (a + 1) % m;
      const int sa = s[cyc[a]].sign();
      const int sb = s[cyc[b]].sign();
      if (sa <= 0) out.push_back(emit(cell.vertices[cyc[a]]));
      if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) {
        const Vec3R& A = cell.vertices[cyc[a]];
        const Vec3R& B = cell.vertices[cyc[b]];
        Rat t = -s[cyc[a]] / (s[cyc[b]] - s[cyc[a]]);  // strictly in (0,1)
        out.push_back(emit(A + (B - A) * t));
      }
    }
    drop_consecutive_duplicates(out);
    if (out.size() >= 3) kept.push_back({face.plane, std::move(out)});
  }

  // New face: every retained vertex lying exactly on the cutting plane.
  std::set<int> used;
  for (const CellFace& f : kept)
    for (int i : f.cycle) used.insert(i);
  std::vector<int> on_plane;
  for (int i : used)
    if (h.eval(pool[i]).sign() == 0) on_plane.push_back(i);
  if (on_plane.size() >= 3) {
    std::vector<int> cyc = order_cap_cycle(pool, std::move(on_plane), h);
    kept.push_back({h, std::move(cyc)});
    for (int i : kept.back().cycle) used.insert(i);
  }

  // Compact the vertex pool to the vertices the kept faces reference.
  ConvexCell out;
  out.generator = cell.generator;
  std::vector<int> remap(pool.size(), -1);
  for (int i : used) {
    remap[i] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(pool[i]);
  }
  for (CellFace& f : kept) {
    for (int& i : f.cycle) i = remap[i];
    out.faces.push_back(std::move(f));
  }
  if (out.vertices.empty()) throw EmptyResult();
  return out;
}

namespace {

Rat circumradius2(const ConvexCell& cell) {
  Rat best(0);
  for (const Vec3R& v : cell.vertices) {
    Rat d2 = norm2(v - cell.generator.pos);
    if (d2 > best) best = d2;
  }
  return best;
}

}  // namespace

ConvexCell build_cell(const Site& s, std::span<const Site> neighbors,
                      bool sorted_by_distance) {
  ConvexCell cell = make_cube_cell(s, Rat(1));
  Rat rho2 = circumradius2(cell);
  for (const Site& t : neighbors) {
    if (sorted_by_distance && norm2(t.pos - s.pos) >= rho2 * 4) break;
    cell = clip(cell, bisector(s.pos, t.pos));
    rho2 = circumradius2(cell);
  }
  return cell;
}

ConvexCell voronoi_cell(const Site& s, const RefinementPlan& plan, const Rat& r2cutoff) {
  std::vector<Site> neigh = candidate_neighbors(s, plan, r2cutoff);
  return build_cell(s, neigh, /*sorted_by_distance=*/true);
}

Rat volume(const ConvexCell& cell) {
  Rat six_v(0);
  for (const CellFace& f : cell.faces) {
    const std::vector<int>& c = f.cycle;
    const Vec3R& v0 = cell.vertices[c[0]];
    for (size_t i = 1; i + 1 < c.size(); ++i)
      six_v += triple_product(v0, cell.vertices[c[i]], cell.vertices[c[i + 1]]);
  }
  return six_v / 6;
}

FVector face_census(const ConvexCell& cell) {
  FVector f;
  f.vertices = static_cast<long>(cell.vertices.size());
  f.faces = static_cast<long>(cell.faces.size());
  long half_edges = 0;
  for (const CellFace& face : cell.faces) {
    half_edges += static_cast<long>(face.cycle.size());
    ++f.faces_by_degree[static_cast<int>(face.cycle.size())];
  }
  f.edges = half_edges / 2;
  return f;
}

CellMetrics cell_metrics(const ConvexCell& cell) {
  CellMetrics m;
  m.vertices = cell.vertices;
  std::sort(m.vertices.begin(), m.vertices.end());
  for (const CellFace& face : cell.faces) {
    const std::vector<int>& c = face.cycle;
    const size_t n = c.size();
    std::vector<Rat> e2;
    std::vector<double> angles;
    for (size_t i = 0; i < n; ++i) {
      const Vec3R& prev = cell.vertices[c[(i + n - 1) % n]];
      const Vec3R& cur = cell.vertices[c[i]];
      const Vec3R& next = cell.vertices[c[(i + 1) % n]];
      e2.push_back(norm2(next - cur));
      Vec3R a = prev - cur, b = next - cur;
      double cosang = dot(a, b).to_double() /
                      std::sqrt(norm2(a).to_double() * norm2(b).to_double());
      cosang = std::clamp(cosang, -1.0, 1.0);
      angles.push_back(std::acos(cosang) * 180.0 / 3.14159265358979323846);
    }
    std::sort(e2.begin(), e2.end());
    std::sort(angles.begin(), angles.end());
    std::vector<double> lens;
    for (const Rat& r : e2) lens.push_back(std::sqrt(r.to_double()));
    m.face_edge2.push_back(std::move(e2));
    m.face_edge_len.push_back(std::move(lens));
    m.face_angles_deg.push_back(std::move(angles));
  }
  return m;
}

void check_cell(const ConvexCell& cell) {
  auto fail = [](const std::string& what) { throw std::logic_error("cell invariant: " + what); };
  if (cell.faces.size() < 4) fail("fewer than four faces");
  for (const CellFace& f : cell.faces) {
    if (f.cycle.size() < 3) fail("face with fewer than three vertices");
    std::set<int> uniq(f.cycle.begin(), f.cycle.end());
    if (uniq.size() != f.cycle.size()) fail("repeated vertex in a face cycle");
    for (int i : f.cycle)
      if (f.plane.eval(cell.vertices[i]).sign() != 0) fail("face vertex off its plane");
    if (dot(newell_normal(cell.vertices, f.cycle), f.plane.n).sign() <= 0)
      fail("face cycle not outward-oriented");
    if (f.plane.eval(cell.generator.pos).sign() >= 0) fail("generator not strictly interior");
    for (const Vec3R& v : cell.vertices)
      if (f.plane.eval(v).sign() > 0) fail("vertex outside a retained half-space");
  }
  std::map<std::pair<int, int>, int> directed;
  for (const CellFace& f : cell.faces)
    for (size_t a = 0; a < f.cycle.size(); ++a) {
      int i = f.cycle[a], j = f.cycle[(a + 1) % f.cycle.size()];
      ++directed[{i, j}];
    }
  long half_edges = 0;
  for (const auto& [edge, count] : directed) {
    if (count != 1) fail("directed edge traversed more than once");
    auto rev = directed.find({edge.second, edge.first});
    if (rev == directed.end()) fail("edge not shared by two faces in opposite directions");
    ++half_edges;
  }
  long V = static_cast<long>(cell.vertices.size());
  long E = half_edges / 2;
  long F = static_cast<long>(cell.faces.size());
  if (V - E + F != 2) fail("Euler characteristic != 2");
}

CellSignature signature(const ConvexCell& cell) {
  CellSignature sig;
  sig.vertices = cell.vertices;
  std::sort(sig.vertices.begin(), sig.vertices.end());
  for (const CellFace& f : cell.faces) {
    std::vector<Vec3R> fv;
    for (int i : f.cycle) fv.push_back(cell.vertices[i]);
    std::sort(fv.begin(), fv.end());
    sig.faces.push_back(std::move(fv));
  }
  std::sort(sig.faces.begin(), sig.faces.end());
  return sig;
}

const std::array<SignedPermutation, 48>& signed_permutations() {
  static const std::array<SignedPermutation, 48> all = [] {
    std::array<SignedPermutation, 48> a{};
    std::array<int, 3> p{0, 1, 2};
    int n = 0;
    do {
      for (int bits = 0; bits < 8; ++bits)
        a[n++] = {p, {(bits & 1) ? 1 : -1, (bits & 2) ? 1 : -1, (bits & 4) ? 1 : -1}};
    } while (std::next_permutation(p.begin(), p.end()));
    return a;
  }();
  return all;
}

std::vector<Vec3R> canonical_form(const ConvexCell& cell) {
  std::vector<Vec3R> centered;
  centered.reserve(cell.vertices.size());
  for (const Vec3R& v : cell.vertices) centered.push_back(v - cell.generator.pos);
  std::vector<Vec3R> best;
  for (const SignedPermutation& sp : signed_permutations()) {
    std::vector<Vec3R> image;
    image.reserve(centered.size());
    for (const Vec3R& v : centered) image.push_back(sp.apply(v));
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = std::move(image);
  }
  return best;
}

}  // namespace cubetess
