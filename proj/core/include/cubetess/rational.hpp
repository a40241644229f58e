#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace cubetess {

/// Exact rational scalar backed by an arbitrary-precision GMP rational.
///
/// Always canonical: lowest terms, denominator > 0. Comparisons, ordering
/// and sign queries are exact; the exact layer has no tolerances at all.
/// Conversion to double exists for reporting and mesh export only.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(long n, long d) : v_(mpz_class(n), mpz_class(d)) { canon(); }
  Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) { canon(); }
  explicit Rat(const mpz_class& n) : v_(n) {}
  /// Parses "n" or "n/d".
  explicit Rat(const std::string& s) : v_(s) { canon(); }

  /// Exact lift of an IEEE double (every finite double is dyadic).
  static Rat from_double_exact(double x) {
    Rat r;
    r.v_ = mpq_class(x);
    return r;
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const { return v_.get_d(); }
  /// "n" when the value is integral, "n/d" otherwise.
  std::string str() const { return v_.get_str(); }

  Rat operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.sign() == 0) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  void canon() {
    if (v_.get_den() == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }
  mpq_class v_;
};

/// Largest integer <= r.
inline mpz_class floor_int(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

/// Smallest integer >= r.
inline mpz_class ceil_int(const Rat& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

/// Smallest nonnegative integer s with s*s >= r. Requires r >= 0.
inline long ceil_sqrt_int(const Rat& r) {
  if (r.sign() < 0) throw std::domain_error("ceil_sqrt_int: negative");
  long s = 0;
  while (Rat(s) * Rat(s) < r) ++s;
  return s;
}

}  // namespace cubetess
