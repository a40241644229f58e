#include "cubetess/meshio.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cubetess {

FloatMesh to_float_mesh(std::span<const ConvexCell> cells) {
  FloatMesh mesh;
  for (const ConvexCell& cell : cells) {
    const std::uint32_t base = static_cast<std::uint32_t>(mesh.vertices.size());
    for (const Vec3R& v : cell.vertices)
      mesh.vertices.push_back({v.x.to_double(), v.y.to_double(), v.z.to_double()});
    for (const CellFace& f : cell.faces) {
      std::vector<std::uint32_t> poly;
      for (int i : f.cycle) poly.push_back(base + static_cast<std::uint32_t>(i));
      for (size_t i = 1; i + 1 < poly.size(); ++i)
        mesh.triangles.push_back({poly[0], poly[i], poly[i + 1]});
      mesh.faces.push_back(std::move(poly));
    }
  }
  return mesh;
}

void write_off(const FloatMesh& mesh, std::ostream& sink) {
  sink << "OFF\n" << mesh.vertices.size() << ' ' << mesh.faces.size() << " 0\n";
  char buf[96];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", v[0], v[1], v[2]);
    sink << buf;
  }
  for (const auto& f : mesh.faces) {
    sink << f.size();
    for (std::uint32_t i : f) sink << ' ' << i;
    sink << '\n';
  }
  if (!sink) throw std::runtime_error("write_off: sink write failure");
}

namespace {

void put_u16_le(std::ostream& s, std::uint16_t v) {
  const char b[2] = {static_cast<char>(v & 0xff), static_cast<char>(v >> 8)};
  s.write(b, 2);
}

void put_u32_le(std::ostream& s, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  s.write(b, 4);
}

void put_f32_le(std::ostream& s, float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, 4);
  put_u32_le(s, bits);
}

}  // namespace

void write_stl(const FloatMesh& mesh, std::ostream& sink) {
  const char header[80] = {};
  sink.write(header, 80);
  put_u32_le(sink, static_cast<std::uint32_t>(mesh.triangles.size()));
  for (const auto& t : mesh.triangles) {
    const auto& a = mesh.vertices[t[0]];
    const auto& b = mesh.vertices[t[1]];
    const auto& c = mesh.vertices[t[2]];
    double ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
    double vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
    double nx = uy * vz - uz * vy, ny = uz * vx - ux * vz, nz = ux * vy - uy * vx;
    double len = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (len > 0) {
      nx /= len;
      ny /= len;
      nz /= len;
    }
    put_f32_le(sink, static_cast<float>(nx));
    put_f32_le(sink, static_cast<float>(ny));
    put_f32_le(sink, static_cast<float>(nz));
    for (const auto* p : {&a, &b, &c})
      for (int i = 0; i < 3; ++i) put_f32_le(sink, static_cast<float>((*p)[i]));
    put_u16_le(sink, 0);
  }
  if (!sink) throw std::runtime_error("write_stl: sink write failure");
}

FloatMesh read_off(std::istream& source) {
  std::string magic;
  source >> magic;
  if (magic != "OFF") throw std::runtime_error("read_off: missing OFF header");
  size_t nv = 0, nf = 0, ne = 0;
  source >> nv >> nf >> ne;
  FloatMesh mesh;
  for (size_t i = 0; i < nv; ++i) {
    std::array<double, 3> v{};
    source >> v[0] >> v[1] >> v[2];
    mesh.vertices.push_back(v);
  }
  for (size_t i = 0; i < nf; ++i) {
    size_t k = 0;
    source >> k;
    std::vector<std::uint32_t> poly(k);
    for (size_t j = 0; j < k; ++j) source >> poly[j];
    for (size_t j = 1; j + 1 < poly.size(); ++j)
      mesh.triangles.push_back({poly[0], poly[j], poly[j + 1]});
    mesh.faces.push_back(std::move(poly));
  }
  if (!source) throw std::runtime_error("read_off: truncated file");
  return mesh;
}

bool watertight(const FloatMesh& mesh) {
  if (mesh.triangles.empty()) return true;
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> directed;
  for (const auto& t : mesh.triangles)
    for (int i = 0; i < 3; ++i) {
      auto key = std::make_pair(t[i], t[(i + 1) % 3]);
      if (++directed[key] > 1) return false;
    }
  for (const auto& [edge, count] : directed)
    if (!directed.count({edge.second, edge.first})) return false;
  return true;
}

}  // namespace cubetess
