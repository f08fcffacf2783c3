#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fqrigid/field.hpp"

namespace fqrigid {

/// Polynomial in one variable over a finite field. Coefficients are stored
/// ascending with the leading coefficient nonzero; the zero polynomial has
/// no coefficients and degree -1.
class Poly {
 public:
  explicit Poly(Field f) : field_(std::move(f)) {}
  Poly(Field f, std::vector<Elem> coeffs);

  static Poly constant(const Field& f, Elem c) { return Poly(f, {c}); }
  static Poly x(const Field& f) { return Poly(f, {0, 1}); }
  /// x^k
  static Poly monomial(const Field& f, std::size_t k, Elem c = 1);
  /// Monic polynomial of degree d whose lower coefficients are the base-q
  /// digits of `index`; this realises the canonical order within a degree.
  static Poly monic_from_index(const Field& f, std::size_t d, std::uint64_t index);

  const Field& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  /// Index of the lower coefficients in base q (inverse of monic_from_index).
  std::uint64_t index_within_degree() const;

  Poly monic() const;
  Elem eval(Elem x) const;
  Poly derivative() const;
  /// this(g(x))
  Poly compose(const Poly& g) const;
  /// f(x + alpha)
  Poly shift(Elem alpha) const;
  Poly scaled(Elem c) const;
  Poly pow(std::uint64_t e) const;
  Poly powmod(std::uint64_t e, const Poly& m) const;
  /// Coefficients mapped through a field embedding.
  Poly mapped(const Field& big, const Embedding& emb) const;

  std::pair<Poly, Poly> divmod(const Poly& b) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }
  Poly operator-() const;
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  /// Canonical order: degree first, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  /// Rendering in the variable `var`, coefficients as element codes.
  std::string to_string(char var = 'T') const;

 private:
  void normalize();
  Field field_;
  std::vector<Elem> c_;
};

/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

bool is_irreducible(const Poly& f);
bool is_squarefree(const Poly& f);

/// All monic irreducibles of degree d, canonically ordered.
std::vector<Poly> poly_irreducibles(const Field& f, std::size_t d, const Limits& limits = {});

/// Necklace count (1/d) sum_{e|d} mu(d/e) q^e.
std::uint64_t irreducible_count(std::uint64_t q, std::size_t d);

/// Ring automorphism T -> T + alpha of F_q[T]; alpha must be a code of F_q.
Poly substitution_automorphism(Elem alpha, const Poly& f);

/// Roots lying in the coefficient field, with multiplicity, ascending.
std::vector<std::pair<Elem, int>> roots_with_multiplicity(const Poly& f);

}  // namespace fqrigid
