#pragma once

#include <stdexcept>
#include <string>

#include "cubetess/rational.hpp"

namespace cubetess {

/// Exact 3-vector over Rat. Coordinates are in units of the lattice
/// constant; the library fixes a = 1 throughout.
struct Vec3R {
  Rat x, y, z;

  Vec3R() = default;
  Vec3R(Rat x_, Rat y_, Rat z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  Vec3R operator+(const Vec3R& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3R operator-(const Vec3R& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3R operator-() const { return {-x, -y, -z}; }
  Vec3R operator*(const Rat& s) const { return {x * s, y * s, z * s}; }
  Vec3R operator/(const Rat& s) const { return {x / s, y / s, z / s}; }

  bool operator==(const Vec3R& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator!=(const Vec3R& o) const { return !(*this == o); }
  /// Lexicographic (x, then y, then z); used for deterministic ordering.
  bool operator<(const Vec3R& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
  }

  const Rat& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Rat& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  std::string str() const { return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")"; }
};

inline Vec3R operator*(const Rat& s, const Vec3R& v) { return v * s; }

inline Rat dot(const Vec3R& a, const Vec3R& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3R cross(const Vec3R& a, const Vec3R& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Squared Euclidean length (exact; lengths themselves may be irrational).
inline Rat norm2(const Vec3R& v) { return dot(v, v); }

/// u . (v x w), antisymmetric under argument swaps.
inline Rat triple_product(const Vec3R& u, const Vec3R& v, const Vec3R& w) {
  return dot(u, cross(v, w));
}

/// Three exact planes without a unique common point.
struct SingularSystem : std::runtime_error {
  SingularSystem() : std::runtime_error("solve3: singular 3x3 system") {}
};

/// Row-major exact 3x3 matrix; carrier for three-plane intersection systems.
struct Mat3R {
  Vec3R r0, r1, r2;

  Rat det() const { return triple_product(r0, r1, r2); }

  const Vec3R& row(int i) const { return i == 0 ? r0 : (i == 1 ? r1 : r2); }
};

/// Solves A x = b exactly by Cramer's rule. Throws SingularSystem when
/// det(A) = 0, i.e. the three planes have no unique common vertex.
inline Vec3R solve3(const Mat3R& A, const Vec3R& b) {
  const Rat d = A.det();
  if (d.sign() == 0) throw SingularSystem();
  Vec3R x;
  for (int col = 0; col < 3; ++col) {
    Vec3R r0 = A.r0, r1 = A.r1, r2 = A.r2;
    r0[col] = b.x;
    r1[col] = b.y;
    r2[col] = b.z;
    x[col] = triple_product(r0, r1, r2) / d;
  }
  return x;
}

}  // namespace cubetess
