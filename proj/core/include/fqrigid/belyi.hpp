#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fqrigid/poly.hpp"

namespace fqrigid {

/// Point of P^1 over a finite field.
struct ProjPoint {
  bool infinity = false;
  Elem x = 0;

  static ProjPoint inf() { return {true, 0}; }
  static ProjPoint at(Elem v) { return {false, v}; }
  std::string to_string() const { return infinity ? "inf" : std::to_string(x); }
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// psi(x) = sum_i c_i x^{p^i} over a finite field.
class AdditivePolynomial {
 public:
  AdditivePolynomial(Field f, std::vector<Elem> coeffs);

  const Field& field() const noexcept { return field_; }
  /// c_i multiplies x^{p^i}.
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  /// m with degree p^m.
  unsigned order() const noexcept { return static_cast<unsigned>(c_.size()) - 1; }
  Elem eval(Elem x) const;
  Poly to_poly() const;

 private:
  Field field_;
  std::vector<Elem> c_;
};

/// Product of (x - a) over the F_p-span V of `points`, built one basis
/// vector at a time; its kernel is exactly V.
AdditivePolynomial additive_span_polynomial(const Field& f, const std::vector<Elem>& points,
                                            const Limits& limits = {});

/// Elements of the F_p-span of `points`, ascending.
std::vector<Elem> fp_span(const Field& f, const std::vector<Elem>& points, const Limits& limits = {});

class InseparableMap : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// x -> num(x) / den(x) with coprime num, den, stored with den monic.
class RationalMap {
 public:
  RationalMap(Poly num, Poly den);
  static RationalMap polynomial(Poly num) { return RationalMap(std::move(num), Poly::constant(num.field(), 1)); }
  static RationalMap identity(const Field& f) { return polynomial(Poly::x(f)); }

  const Field& field() const noexcept { return num_.field(); }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  unsigned degree() const noexcept;
  /// num' den - num den'
  Poly wronskian() const;
  bool is_separable() const { return !wronskian().is_zero(); }

  ProjPoint operator()(const ProjPoint& p) const;
  /// this o inner
  RationalMap after(const RationalMap& inner) const;
  RationalMap mapped(const Field& big, const Embedding& emb) const;

  std::string to_string() const;
  friend bool operator==(const RationalMap&, const RationalMap&) = default;

 private:
  Poly num_, den_;
};

/// x -> (a x + b) / (c x + d); throws InvalidInput when ad - bc = 0.
RationalMap mobius_map(const Field& f, Elem a, Elem b, Elem c, Elem d);

struct BranchPoint {
  ProjPoint value;
  /// Ramification indices of every point above `value`, descending; they
  /// sum to the map degree.
  std::vector<unsigned> indices;
  /// wild[i] iff p divides indices[i]
  std::vector<bool> wild;
};

struct BranchReport {
  Field field;               ///< field over which branch points are given
  unsigned extension_degree; ///< [field : field of the map]
  unsigned map_degree;
  std::vector<BranchPoint> points;

  /// Sum over ramification points of (e - 1).
  unsigned ramification_total() const;
  bool has_wild() const;
};

/// Branch points of a separable map, over the least extension in which the
/// Wronskian splits. Inseparable maps raise InseparableMap.
BranchReport branch_locus(const RationalMap& map, const Limits& limits = {});

class PipelineEscaped : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CollapseResult {
  RationalMap composite;
  BranchReport initial;
  BranchReport final;
  std::optional<AdditivePolynomial> collapse;  ///< absent when no nonzero finite branch point remained
  ProjPoint designated;                        ///< branch point moved to infinity
  /// [field of composite : field of cover]
  unsigned extension_degree;
};

/// Moves a branch point to infinity, collapses the remaining finite branch
/// points to 0 with an additive polynomial, then sends (0, inf) to
/// (targets.first, targets.second). Targets are points over the cover's
/// field. Throws PipelineEscaped if the recomputed branch locus of the
/// composite is not inside the target pair.
CollapseResult collapse_pipeline(const RationalMap& cover, std::pair<ProjPoint, ProjPoint> targets,
                                 const Limits& limits = {});

}  // namespace fqrigid
