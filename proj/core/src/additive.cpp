#include <algorithm>

#include "fqrigid/belyi.hpp"

namespace fqrigid {

AdditivePolynomial::AdditivePolynomial(Field f, std::vector<Elem> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) throw InvalidInput("additive polynomial must be nonzero");
}

Elem AdditivePolynomial::eval(Elem x) const {
  Elem acc = 0, xp = x;
  for (Elem c : c_) {
    acc = field_.add(acc, field_.mul(c, xp));
    xp = field_.frobenius(xp);
  }
  return acc;
}

Poly AdditivePolynomial::to_poly() const {
  std::size_t deg = 1;
  for (unsigned i = 0; i < order(); ++i) deg *= field_.p();
  std::vector<Elem> dense(deg + 1, 0);
  std::size_t e = 1;
  for (Elem c : c_) {
    dense[e] = c;
    e *= field_.p();
  }
  return Poly(field_, std::move(dense));
}

namespace {

// Echelon basis over F_p of digit vectors; returns the independent subset
// of `points` in input order.
std::vector<Elem> fp_basis(const Field& f, const std::vector<Elem>& points) {
  const std::uint32_t p = f.p();
  std::vector<std::vector<std::uint32_t>> rows;  // reduced, with pivot index
  std::vector<std::size_t> pivots;
  std::vector<Elem> chosen;
  for (Elem pt : points) {
    if (pt >= f.q()) throw InvalidInput("point code out of range for " + f.name());
    auto v = f.digits(pt);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::uint32_t c = v[pivots[r]];
      if (c == 0) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + (p - c) * rows[r][i]) % p;
    }
    auto it = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    if (it == v.end()) continue;
    std::size_t piv = static_cast<std::size_t>(it - v.begin());
    // scale pivot to 1
    std::uint32_t inv = 1;
    while ((inv * v[piv]) % p != 1) ++inv;
    for (auto& x : v) x = (x * inv) % p;
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    chosen.push_back(pt);
  }
  return chosen;
}

}  // namespace

AdditivePolynomial additive_span_polynomial(const Field& f, const std::vector<Elem>& points, const Limits& limits) {
  const auto basis = fp_basis(f, points);
  check_guard("additive polynomial degree", ipow_sat(f.p(), static_cast<unsigned>(basis.size())), limits);
  AdditivePolynomial psi(f, {1});
  for (Elem b : basis) {
    const Elem lambda = f.pow(psi.eval(b), f.p() - 1);
    const auto& c = psi.coeffs();
    std::vector<Elem> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], f.frobenius(c[i]));
      next[i] = f.sub(next[i], f.mul(lambda, c[i]));
    }
    psi = AdditivePolynomial(f, std::move(next));
  }
  return psi;
}

std::vector<Elem> fp_span(const Field& f, const std::vector<Elem>& points, const Limits& limits) {
  const auto basis = fp_basis(f, points);
  check_guard("span size", ipow_sat(f.p(), static_cast<unsigned>(basis.size())), limits);
  std::vector<Elem> span{0};
  for (Elem b : basis) {
    std::vector<Elem> next;
    for (Elem s : span) {
      Elem cur = s;
      for (std::uint32_t k = 0; k < f.p(); ++k) {
        next.push_back(cur);
        cur = f.add(cur, b);
      }
    }
    span = std::move(next);
  }
  std::sort(span.begin(), span.end());
  return span;
}

}  // namespace fqrigid
