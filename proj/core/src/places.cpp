#include "fqrigid/places.hpp"

#include <algorithm>
#include <set>

namespace fqrigid {

std::string Place::to_string() const {
  if (prime) return prime->to_string('T');
  if (point.infinity) {
    if (point.c[0] == 0 && point.c[1] == 0 && point.c[2] == 0) return "inf";
    return "inf(s=" + std::to_string(point.c[0]) + ")";
  }
  std::string s = "(" + std::to_string(point.c[0]) + "," + std::to_string(point.c[1]);
  if (point.c[2] != 0) s += "," + std::to_string(point.c[2]);
  s += ")";
  if (degree > 1) s += "@deg" + std::to_string(degree);
  return s;
}

bool operator==(const Place& a, const Place& b) {
  return a.degree == b.degree && a.prime == b.prime && a.point == b.point;
}

bool place_less(const Place& a, const Place& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.prime && b.prime) return *a.prime < *b.prime;
  if (a.prime != std::nullopt || b.prime != std::nullopt) return a.prime.has_value();
  return a.point < b.point;
}

Place line_place(const Poly& prime) {
  if (!prime.is_monic() || !is_irreducible(prime))
    throw InvalidInput("place of P^1 needs a monic irreducible, got " + prime.to_string());
  Place p;
  p.degree = static_cast<unsigned>(prime.degree());
  p.prime = prime;
  return p;
}

Place line_place_at_infinity() {
  Place p;
  p.degree = 1;
  p.point.infinity = true;
  return p;
}

std::vector<Place> places_of_degree(const CurveModel& curve, unsigned d, const Limits& limits) {
  if (d == 0) throw InvalidInput("place degree must be positive");
  std::vector<Place> out;
  if (curve.kind() == CurveKind::ProjectiveLine) {
    for (auto& f : poly_irreducibles(curve.field(), d, limits)) out.push_back(line_place(f));
    if (d == 1) out.push_back(line_place_at_infinity());
    return out;
  }
  auto pts = enumerate_points(curve, d, limits);
  auto [big, emb] = curve.field().extension(d, limits);
  std::set<GeomPoint> seen;
  for (const auto& pt : pts) {
    if (seen.count(pt)) continue;
    std::vector<GeomPoint> orbit{pt};
    GeomPoint cur = frobenius_q(curve, big, pt);
    while (cur != pt) {
      orbit.push_back(cur);
      cur = frobenius_q(curve, big, cur);
    }
    for (auto& o : orbit) seen.insert(o);
    if (orbit.size() != d) continue;
    Place p;
    p.degree = d;
    p.point = *std::min_element(orbit.begin(), orbit.end());
    out.push_back(p);
  }
  std::sort(out.begin(), out.end(), place_less);
  return out;
}

bool place_on_curve(const CurveModel& curve, const Place& place, const Limits& limits) {
  if (curve.kind() == CurveKind::ProjectiveLine) {
    if (place.prime) return place.prime->field() == curve.field() && is_irreducible(*place.prime) &&
                            static_cast<unsigned>(place.prime->degree()) == place.degree;
    return place.point.infinity && place.degree == 1;
  }
  if (place.prime) return false;
  auto [big, emb] = curve.field().extension(place.degree, limits);
  if (!lies_on(curve, big, place.point)) return false;
  // The orbit must have exactly `degree` points.
  GeomPoint cur = frobenius_q(curve, big, place.point);
  unsigned size = 1;
  while (cur != place.point) {
    ++size;
    cur = frobenius_q(curve, big, cur);
  }
  return size == place.degree;
}

}  // namespace fqrigid
