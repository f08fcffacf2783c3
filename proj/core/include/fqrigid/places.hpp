#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fqrigid/curve.hpp"

namespace fqrigid {

/// Closed point of degree d. On the projective line a finite place is its
/// monic irreducible and the place at infinity is flagged. On the other
/// models it is the least geometric point (over F_{q^d}) of its Frobenius
/// orbit, which has exactly d elements.
struct Place {
  unsigned degree = 1;
  std::optional<Poly> prime;
  GeomPoint point;

  bool is_infinite() const noexcept { return !prime && point.infinity; }
  std::string to_string() const;
};

bool operator==(const Place& a, const Place& b);
/// Canonical place order; both places must live on the same curve.
bool place_less(const Place& a, const Place& b);

std::vector<Place> places_of_degree(const CurveModel& curve, unsigned d, const Limits& limits = {});

/// Place of P^1 at the monic irreducible `prime`.
Place line_place(const Poly& prime);
Place line_place_at_infinity();

/// Whether the place's representative satisfies the curve equation.
bool place_on_curve(const CurveModel& curve, const Place& place, const Limits& limits = {});

}  // namespace fqrigid
