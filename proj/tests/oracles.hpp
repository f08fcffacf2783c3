// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the element encoding.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "fqrigid/belyi.hpp"
#include "fqrigid/curve.hpp"
#include "fqrigid/field.hpp"
#include "fqrigid/poly.hpp"

namespace oracle {

using Digits = std::vector<std::uint32_t>;

inline Digits trim(Digits a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Digits pmul(std::uint32_t p, const Digits& a, const Digits& b) {
  if (a.empty() || b.empty()) return {};
  Digits r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return trim(r);
}

// remainder of a by a monic m
inline Digits pmod(std::uint32_t p, Digits a, const Digits& m) {
  a = trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint32_t c = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    a = trim(a);
  }
  return a;
}

inline Digits to_digits(std::uint64_t code, std::uint32_t p, std::uint32_t n) {
  Digits d(n);
  for (auto& x : d) {
    x = code % p;
    code /= p;
  }
  return d;
}

inline std::uint64_t to_code(const Digits& d, std::uint32_t p) {
  std::uint64_t c = 0;
  for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i];
  return c;
}

// Least monic irreducible of degree n over F_p by trial division against
// every monic polynomial of degree 1..n/2.
inline Digits least_irreducible(std::uint32_t p, std::uint32_t n) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) q *= p;
  for (std::uint64_t low = 0; low < q; ++low) {
    Digits m = to_digits(low, p, n);
    m.push_back(1);
    bool irreducible = true;
    for (std::uint32_t d = 1; d <= n / 2 && irreducible; ++d) {
      std::uint64_t qd = 1;
      for (std::uint32_t i = 0; i < d; ++i) qd *= p;
      for (std::uint64_t l2 = 0; l2 < qd && irreducible; ++l2) {
        Digits g = to_digits(l2, p, d);
        g.push_back(1);
        if (pmod(p, m, g).empty()) irreducible = false;
      }
    }
    if (irreducible) return m;
  }
  return {};
}

// F_{p^n} multiplication by schoolbook product and reduction.
struct NaiveField {
  std::uint32_t p, n;
  Digits modulus;
  std::uint64_t q;

  NaiveField(std::uint32_t p_, std::uint32_t n_) : p(p_), n(n_), modulus(least_irreducible(p_, n_)), q(1) {
    for (std::uint32_t i = 0; i < n; ++i) q *= p;
    if (n == 1) modulus = {0, 1};
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    Digits x = to_digits(a, p, n), y = to_digits(b, p, n);
    for (std::uint32_t i = 0; i < n; ++i) x[i] = (x[i] + y[i]) % p;
    return to_code(x, p);
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    Digits r = pmod(p, pmul(p, trim(to_digits(a, p, n)), trim(to_digits(b, p, n))), modulus);
    r.resize(n, 0);
    return to_code(r, p);
  }
};

// Whether c is a square in the field, by search.
inline bool is_square_bruteforce(const fqrigid::Field& f, fqrigid::Elem c) {
  for (fqrigid::Elem y = 0; y < f.q(); ++y)
    if (f.mul(y, y) == c) return true;
  return false;
}

inline fqrigid::Elem eval_mapped(const fqrigid::Field& big, const fqrigid::Embedding& emb,
                                 const fqrigid::Poly& f, fqrigid::Elem x) {
  fqrigid::Elem acc = 0, xp = 1;
  for (fqrigid::Elem c : f.coeffs()) {
    acc = big.add(acc, big.mul(emb(c), xp));
    xp = big.mul(xp, x);
  }
  return acc;
}

// N_k by direct enumeration of the defining equation over F_{q^k}.
inline std::uint64_t count_points_bruteforce(const fqrigid::CurveModel& c, unsigned k) {
  using namespace fqrigid;
  auto [big, emb] = c.field().extension(k);
  const std::uint32_t Q = big.q();
  switch (c.kind()) {
    case CurveKind::ProjectiveLine: return std::uint64_t{Q} + 1;
    case CurveKind::Hyperelliptic: {
      std::uint64_t n = 0;
      for (Elem x = 0; x < Q; ++x) {
        Elem fx = eval_mapped(big, emb, c.rhs(), x);
        for (Elem y = 0; y < Q; ++y)
          if (big.mul(y, y) == fx) ++n;
      }
      if (c.rhs().degree() % 2 == 1) return n + 1;
      return n + (is_square_bruteforce(big, emb(c.rhs().lead())) ? 2 : 0);
    }
    case CurveKind::ArtinSchreier: {
      std::uint64_t n = 0;
      for (Elem x = 0; x < Q; ++x) {
        Elem fx = eval_mapped(big, emb, c.rhs(), x);
        for (Elem y = 0; y < Q; ++y)
          if (big.sub(big.pow(y, big.p()), y) == fx) ++n;
      }
      return n + 1;
    }
    case CurveKind::SmoothPlane: {
      auto form = [&](Elem x, Elem y, Elem z) {
        Elem acc = 0;
        for (const auto& t : c.terms())
          acc = big.add(acc, big.mul(emb(t.coeff), big.mul(big.pow(x, t.ex), big.mul(big.pow(y, t.ey), big.pow(z, t.ez)))));
        return acc;
      };
      std::uint64_t n = 0;
      for (Elem x = 0; x < Q; ++x)
        for (Elem y = 0; y < Q; ++y)
          if (form(x, y, 1) == 0) ++n;
      for (Elem x = 0; x < Q; ++x)
        if (form(x, 1, 0) == 0) ++n;
      if (form(1, 0, 0) == 0) ++n;
      return n;
    }
  }
  return 0;
}

// Exact rationals for power-series manipulation.
struct Frac {
  __extension__ typedef __int128 i128;
  i128 num = 0, den = 1;
  Frac() = default;
  Frac(i128 n, i128 d = 1) : num(n), den(d) { norm(); }
  static i128 g(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void norm() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 d = g(num, den);
    if (d > 1) {
      num /= d;
      den /= d;
    }
  }
  friend Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Frac operator*(Frac a, Frac b) { return Frac(a.num * b.num, a.den * b.den); }
  friend Frac operator/(Frac a, Frac b) { return Frac(a.num * b.den, a.den * b.num); }
};

// P(T) = (1-T)(1-qT) exp(sum_k N_k T^k / k), truncated at degree 2g, from
// N_1..N_{2g}. Uses no functional equation.
inline std::vector<std::int64_t> zeta_numerator_from_all_counts(std::uint64_t q, unsigned g,
                                                                const std::vector<std::uint64_t>& counts) {
  const unsigned D = 2 * g;
  std::vector<Frac> L(D + 1), E(D + 1);
  for (unsigned k = 1; k <= D; ++k) L[k] = Frac(static_cast<Frac::i128>(counts[k - 1]), k);
  // E = exp(L): k E_k = sum_{j=1..k} j L_j E_{k-j}
  E[0] = Frac(1);
  for (unsigned k = 1; k <= D; ++k) {
    Frac s;
    for (unsigned j = 1; j <= k; ++j) s = s + Frac(j) * L[j] * E[k - j];
    E[k] = s / Frac(k);
  }
  std::vector<Frac> fac{Frac(1), Frac(-1 - static_cast<Frac::i128>(q)), Frac(static_cast<Frac::i128>(q))};
  std::vector<std::int64_t> out(D + 1);
  for (unsigned i = 0; i <= D; ++i) {
    Frac s;
    for (unsigned j = 0; j <= 2 && j <= i; ++j) s = s + fac[j] * E[i - j];
    out[i] = static_cast<std::int64_t>(s.num / s.den);
  }
  return out;
}

using Bivariate = std::map<std::pair<unsigned, unsigned>, fqrigid::Elem>;

inline Bivariate bmul(const fqrigid::Field& f, const Bivariate& a, const Bivariate& b) {
  Bivariate r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto& slot = r[{ea.first + eb.first, ea.second + eb.second}];
      slot = f.add(slot, f.mul(ca, cb));
    }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

// psi(x + y) - psi(x) - psi(y), expanded by plain multiplication.
inline Bivariate additivity_defect(const fqrigid::AdditivePolynomial& psi) {
  const fqrigid::Field& f = psi.field();
  Bivariate out;
  Bivariate sum{{{1, 0}, 1}, {{0, 1}, 1}};
  Bivariate power = sum;
  std::uint64_t deg = 1;
  for (std::size_t i = 0; i < psi.coeffs().size(); ++i) {
    if (i > 0) {
      Bivariate next = power;
      for (unsigned k = 1; k < f.p(); ++k) next = bmul(f, next, power);
      power = next;
      deg *= f.p();
    }
    fqrigid::Elem c = psi.coeffs()[i];
    for (const auto& [e, v] : power) {
      auto& slot = out[e];
      slot = f.add(slot, f.mul(c, v));
    }
    auto& sx = out[{static_cast<unsigned>(deg), 0}];
    sx = f.sub(sx, c);
    auto& sy = out[{0, static_cast<unsigned>(deg)}];
    sy = f.sub(sy, c);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace oracle
