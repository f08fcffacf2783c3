#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fqrigid/ideal.hpp"
#include "fqrigid/poly.hpp"

namespace fqrigid {

/// The finite ring A/(f), f monic of positive degree. Residues are coded
/// by their coefficient codes read in base q (degree < deg f).
class QuotientRing {
 public:
  QuotientRing(const Poly& modulus, const Limits& limits = {});

  const Field& field() const noexcept { return field_; }
  const Poly& modulus() const noexcept { return modulus_; }
  std::uint32_t size() const noexcept { return size_; }
  unsigned dim() const noexcept { return static_cast<unsigned>(modulus_.degree()); }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * size_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * size_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  /// Inverse of a unit; throws otherwise.
  std::uint32_t inv(std::uint32_t a) const;
  bool is_unit(std::uint32_t a) const { return inv_[a] != size_; }
  /// Nonzero constants, i.e. the image of F_q^*.
  bool is_base_unit(std::uint32_t a) const { return a != 0 && a < field_.q(); }

  std::uint32_t encode(const Poly& a) const;
  Poly decode(std::uint32_t code) const;
  /// Coordinates over F_q (length deg f), ascending.
  std::vector<Elem> coords(std::uint32_t code) const;

 private:
  Field field_;
  Poly modulus_;
  std::uint32_t size_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

/// 2x2 matrix over A/(f): entries (a, b, c, d) = [[a, b], [c, d]].
using MatrixModF = std::array<std::uint32_t, 4>;

/// The image in GL_2(A/(f)) of GL_2(A): matrices with determinant in F_q^*.
class AmbientGroup {
 public:
  static std::shared_ptr<const AmbientGroup> make(const Poly& modulus, const Limits& limits = {});

  const QuotientRing& ring() const noexcept { return ring_; }
  std::uint32_t id(const MatrixModF& m) const;
  MatrixModF matrix(std::uint32_t id) const;
  std::uint32_t id_space() const noexcept { return id_space_; }

  std::uint32_t det(const MatrixModF& m) const;
  bool contains(const MatrixModF& m) const { return ring_.is_base_unit(det(m)); }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t inv(std::uint32_t x) const;
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t unipotent(std::uint32_t a) const { return id({1, a, 0, 1}); }

  const std::vector<std::uint32_t>& elements() const noexcept { return elements_; }
  std::uint64_t order() const noexcept { return elements_.size(); }
  /// Deterministic generating set.
  const std::vector<std::uint32_t>& generators() const noexcept { return generators_; }

  explicit AmbientGroup(const Poly& modulus, const Limits& limits);

 private:
  QuotientRing ring_;
  std::uint32_t id_space_;
  std::uint32_t identity_;
  std::vector<std::uint32_t> elements_;
  std::vector<std::uint32_t> generators_;
};

/// A subgroup of the ambient group, stored as a membership mask.
struct Subgroup {
  std::vector<bool> member;
  std::vector<std::uint32_t> elements;  // sorted ids

  bool contains(std::uint32_t id) const { return member[id]; }
  std::size_t order() const { return elements.size(); }
};

/// Subgroup generated by `gens`.
Subgroup generate(const AmbientGroup& g, const std::vector<std::uint32_t>& gens);

/// Largest normal subgroup of the ambient group contained in h.
Subgroup normal_core(const AmbientGroup& g, const Subgroup& h);

/// Finite-index subgroup of GL_2(A): the full preimage of H = <gens>
/// under reduction mod f.
class SubgroupFrame {
 public:
  SubgroupFrame(const Poly& modulus, std::vector<MatrixModF> gens, const Limits& limits = {});
  /// Entries given as polynomials over A; reduced mod f.
  static SubgroupFrame from_polys(const Poly& modulus, const std::vector<std::array<Poly, 4>>& gens,
                                  const Limits& limits = {});

  /// Gamma_T: f = T, H trivial.
  static SubgroupFrame gamma_T(const Field& f, const Limits& limits = {});
  /// H = ambient group (Gamma = GL_2(A)).
  static SubgroupFrame full(const Poly& modulus, const Limits& limits = {});
  /// H trivial: the full congruence subgroup of level (f).
  static SubgroupFrame full_congruence(const Poly& modulus, const Limits& limits = {});

  const Poly& modulus() const noexcept { return ambient_->ring().modulus(); }
  const Field& field() const noexcept { return ambient_->ring().field(); }
  const AmbientGroup& ambient() const noexcept { return *ambient_; }
  const std::vector<MatrixModF>& generators() const noexcept { return gens_; }
  const Subgroup& subgroup() const noexcept { return h_; }

  /// Frame for g H g^{-1}.
  SubgroupFrame conjugated(std::uint32_t g_id) const;

 private:
  SubgroupFrame(std::shared_ptr<const AmbientGroup> amb, std::vector<MatrixModF> gens);
  std::shared_ptr<const AmbientGroup> ambient_;
  std::vector<MatrixModF> gens_;
  Subgroup h_;
};

/// ql(Gamma)/(f) as an F_q-subspace of A/(f).
struct QuasiLevel {
  Poly modulus;
  /// Reduced echelon basis, pivots on leading coefficients, monic,
  /// ascending by degree.
  std::vector<Poly> basis;
  /// Membership mask over residue codes.
  std::vector<bool> member;

  unsigned dimension() const { return static_cast<unsigned>(basis.size()); }
  bool contains(const Poly& a) const;
};

/// Thrown when the computed quasi-level set is not an F_q-subspace.
class NotASubspace : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

QuasiLevel quasi_level(const SubgroupFrame& frame);
MonicIdeal level(const SubgroupFrame& frame);
MonicIdeal level_of(const QuasiLevel& ql);

struct ModularVerdict {
  bool modular = false;
  std::string reason;
};

/// Gamma subset Gamma_T and level not in {(0), (1)}.
ModularVerdict is_modular_frame(const SubgroupFrame& frame);
/// Modular and quasi-level equal to level.
bool is_classically_modular_frame(const SubgroupFrame& frame);

/// Number of Gamma-orbits on P^1(F): the double cosets H \ G / P where P is
/// the image of the upper-triangular stabiliser of infinity.
std::uint64_t cusp_count(const SubgroupFrame& frame);

struct TorsionElement {
  std::array<Poly, 4> entries;
  unsigned order;
};

/// Non-identity finite-order elements of Gamma with entries of degree
/// <= degree_bound, in canonical order.
std::vector<TorsionElement> torsion_scan(const SubgroupFrame& frame, unsigned degree_bound,
                                         const Limits& limits = {});

/// Multiplicative order of a matrix over A when finite, 0 otherwise.
unsigned matrix_order(const std::array<Poly, 4>& m);

}  // namespace fqrigid
