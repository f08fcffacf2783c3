#include <algorithm>

#include "fqrigid/belyi.hpp"

namespace fqrigid {

RationalMap::RationalMap(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.field() == den_.field())) throw InvalidInput("numerator and denominator over different fields");
  if (den_.is_zero()) throw InvalidInput("rational map with zero denominator");
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const Field& f = den_.field();
  Elem s = f.inv(den_.lead());
  num_ = num_.scaled(s);
  den_ = den_.scaled(s);
  if (num_.degree() < 1 && den_.degree() < 1) throw InvalidInput("rational map is constant");
}

unsigned RationalMap::degree() const noexcept {
  return static_cast<unsigned>(std::max(num_.degree(), den_.degree()));
}

Poly RationalMap::wronskian() const { return num_.derivative() * den_ - num_ * den_.derivative(); }

ProjPoint RationalMap::operator()(const ProjPoint& p) const {
  const Field& f = field();
  if (p.infinity) {
    if (num_.degree() > den_.degree()) return ProjPoint::inf();
    if (num_.degree() < den_.degree()) return ProjPoint::at(0);
    return ProjPoint::at(f.div(num_.lead(), den_.lead()));
  }
  Elem d = den_.eval(p.x);
  if (d == 0) return ProjPoint::inf();
  return ProjPoint::at(f.div(num_.eval(p.x), d));
}

RationalMap RationalMap::after(const RationalMap& inner) const {
  const Field& f = field();
  const unsigned m = degree();
  // Powers N^i D^{m-i} of the inner map.
  std::vector<Poly> npow{Poly::constant(f, 1)}, dpow{Poly::constant(f, 1)};
  for (unsigned i = 1; i <= m; ++i) {
    npow.push_back(npow.back() * inner.num());
    dpow.push_back(dpow.back() * inner.den());
  }
  Poly a(f), b(f);
  for (unsigned i = 0; i <= m; ++i) {
    Poly term = npow[i] * dpow[m - i];
    if (Elem c = num_.coeff(i); c != 0) a += term.scaled(c);
    if (Elem c = den_.coeff(i); c != 0) b += term.scaled(c);
  }
  return RationalMap(std::move(a), std::move(b));
}

RationalMap RationalMap::mapped(const Field& big, const Embedding& emb) const {
  return RationalMap(num_.mapped(big, emb), den_.mapped(big, emb));
}

std::string RationalMap::to_string() const {
  if (den_.degree() == 0) return num_.to_string('x');
  return "(" + num_.to_string('x') + ")/(" + den_.to_string('x') + ")";
}

RationalMap mobius_map(const Field& f, Elem a, Elem b, Elem c, Elem d) {
  if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) throw InvalidInput("Moebius map with zero determinant");
  return RationalMap(Poly(f, {b, a}), Poly(f, {d, c}));
}

}  // namespace fqrigid
