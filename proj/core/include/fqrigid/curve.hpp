#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fqrigid/field.hpp"
#include "fqrigid/poly.hpp"

namespace fqrigid {

enum class CurveKind { ProjectiveLine, SmoothPlane, Hyperelliptic, ArtinSchreier };

std::string kind_name(CurveKind k);
std::optional<CurveKind> parse_kind(const std::string& name);

/// Term c * X^ex * Y^ey * Z^ez of a plane form.
struct Monomial {
  Elem coeff;
  unsigned ex, ey, ez;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Generalised Weierstrass coefficients (a1, a2, a3, a4, a6).
using WeierstrassCoeffs = std::array<Elem, 5>;

/// Smooth projective curve over F_q in one of four explicit models.
///
/// Smooth completions used for counting:
///  - projective line: q^k + 1 points;
///  - smooth plane: the projective plane curve itself;
///  - hyperelliptic y^2 = f(x), p odd: one point at infinity when deg f is
///    odd, otherwise two or zero according to whether lead(f) is a square
///    in the counting field;
///  - Artin-Schreier y^p - y = f(x), p not dividing deg f: one point at
///    infinity.
class CurveModel {
 public:
  static CurveModel projective_line(const Field& f);
  /// Validates homogeneity and nonsingularity.
  static CurveModel smooth_plane(const Field& f, std::vector<Monomial> terms,
                                 const Limits& limits = {});
  static CurveModel weierstrass(const Field& f, const WeierstrassCoeffs& a);
  static CurveModel hyperelliptic(const Poly& f);
  static CurveModel artin_schreier(const Poly& f);

  CurveKind kind() const noexcept { return kind_; }
  const Field& field() const noexcept { return field_; }
  unsigned genus() const noexcept { return genus_; }
  /// f(x) for hyperelliptic and Artin-Schreier models.
  const Poly& rhs() const noexcept { return rhs_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  unsigned plane_degree() const noexcept { return plane_degree_; }
  const std::optional<WeierstrassCoeffs>& weierstrass_coeffs() const noexcept { return weier_; }

  /// Defining polynomial as text (x, y, z variables; codes as coefficients).
  std::string equation() const;
  /// Coefficient list used by the catalog format.
  std::string poly_string() const;

  /// Canonical ordering key: (genus, kind, coefficient tuple).
  std::vector<std::uint64_t> sort_key() const;

 private:
  CurveModel(Field f, CurveKind k) : field_(std::move(f)), kind_(k), rhs_(field_) {}
  Field field_;
  CurveKind kind_;
  unsigned genus_ = 0;
  Poly rhs_;
  std::vector<Monomial> terms_;
  unsigned plane_degree_ = 0;
  std::optional<WeierstrassCoeffs> weier_;
};

/// Geometric point with coordinates in F_{q^k}. For plane models `c` holds
/// projective coordinates scaled so the last nonzero one is 1. For the
/// other models an affine point stores (x, y, 0); a point at infinity has
/// `infinity` set and stores the branch value s with s^2 = lead(f) for
/// even-degree hyperelliptic models, otherwise zeros. The projective line
/// uses (x, 0, 0).
struct GeomPoint {
  bool infinity = false;
  std::array<Elem, 3> c{0, 0, 0};
  friend auto operator<=>(const GeomPoint&, const GeomPoint&) = default;
};

/// Number of F_{q^k}-points of the smooth model.
std::uint64_t count_points(const CurveModel& curve, unsigned k, const Limits& limits = {});

/// All F_{q^k}-points, sorted; `ext` receives F_{q^k}.
std::vector<GeomPoint> enumerate_points(const CurveModel& curve, unsigned k, const Limits& limits = {});

/// Coordinate-wise x -> x^q on a point over F_{q^k} = big.
GeomPoint frobenius_q(const CurveModel& curve, const Field& big, const GeomPoint& pt);

/// Whether `pt` with coordinates in `big` lies on the curve.
bool lies_on(const CurveModel& curve, const Field& big, const GeomPoint& pt);

/// Discriminant of a generalised Weierstrass cubic.
Elem weierstrass_discriminant(const Field& f, const WeierstrassCoeffs& a);

}  // namespace fqrigid
