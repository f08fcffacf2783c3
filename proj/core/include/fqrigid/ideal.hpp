#pragma once

#include <string>

#include "fqrigid/poly.hpp"

namespace fqrigid {

/// Ideal of F_q[T], stored by its unique monic generator (or zero).
class MonicIdeal {
 public:
  explicit MonicIdeal(const Poly& g) : gen_(g.monic()) {}
  static MonicIdeal zero(const Field& f) { return MonicIdeal(Poly(f)); }
  static MonicIdeal unit(const Field& f) { return MonicIdeal(Poly::constant(f, 1)); }

  const Poly& generator() const noexcept { return gen_; }
  bool is_zero() const noexcept { return gen_.is_zero(); }
  bool is_unit() const noexcept { return gen_.degree() == 0; }

  /// (this) contains (other) iff generator divides other's generator.
  bool contains(const MonicIdeal& other) const { return divides(gen_, other.gen_); }
  bool contains(const Poly& a) const { return divides(gen_, a); }

  friend MonicIdeal operator+(const MonicIdeal& a, const MonicIdeal& b) {
    return MonicIdeal(gcd(a.gen_, b.gen_));
  }
  friend MonicIdeal operator*(const MonicIdeal& a, const MonicIdeal& b) {
    return MonicIdeal(a.gen_ * b.gen_);
  }
  friend MonicIdeal intersection(const MonicIdeal& a, const MonicIdeal& b) {
    return MonicIdeal(lcm(a.gen_, b.gen_));
  }
  friend bool operator==(const MonicIdeal& a, const MonicIdeal& b) { return a.gen_ == b.gen_; }

  std::string to_string() const { return "(" + gen_.to_string() + ")"; }

 private:
  Poly gen_;
};

}  // namespace fqrigid
