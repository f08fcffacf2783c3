#include "fqrigid/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace fqrigid {

Poly::Poly(Field f, std::vector<Elem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
  for (Elem e : c_)
    if (e >= field_.q()) throw InvalidInput("coefficient code out of range for " + field_.name());
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Field& f, std::size_t k, Elem c) {
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Poly(f, std::move(v));
}

Poly Poly::monic_from_index(const Field& f, std::size_t d, std::uint64_t index) {
  std::vector<Elem> v(d + 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    v[i] = static_cast<Elem>(index % f.q());
    index /= f.q();
  }
  v[d] = 1;
  return Poly(f, std::move(v));
}

std::uint64_t Poly::index_within_degree() const {
  std::uint64_t idx = 0;
  for (std::size_t i = c_.empty() ? 0 : c_.size() - 1; i-- > 0;) idx = idx * field_.q() + c_[i];
  return idx;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(lead()));
}

Elem Poly::eval(Elem x) const {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Elem> d;
  for (std::size_t i = 1; i < c_.size(); ++i)
    d.push_back(field_.mul(field_.from_int(static_cast<std::int64_t>(i % field_.p())), c_[i]));
  return Poly(field_, std::move(d));
}

Poly Poly::compose(const Poly& g) const {
  Poly acc(field_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(field_, c_[i]);
  return acc;
}

Poly Poly::shift(Elem alpha) const { return compose(Poly(field_, {alpha, 1})); }

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], c);
  return Poly(field_, std::move(v));
}

Poly Poly::pow(std::uint64_t e) const {
  Poly r = constant(field_, 1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Poly Poly::powmod(std::uint64_t e, const Poly& m) const {
  Poly r = constant(field_, 1) % m, b = *this % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

Poly Poly::mapped(const Field& big, const Embedding& emb) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = emb(c_[i]);
  return Poly(big, std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& b) const {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < b.degree()) return {Poly(field_), *this};
  std::vector<Elem> r = c_;
  std::vector<Elem> quo(c_.size() - b.c_.size() + 1, 0);
  Elem linv = field_.inv(b.lead());
  const std::size_t bd = b.c_.size() - 1;
  for (std::size_t k = r.size() - 1;; --k) {
    Elem c = field_.mul(r[k], linv);
    std::size_t shift = k - bd;
    quo[shift] = c;
    if (c != 0)
      for (std::size_t i = 0; i <= bd; ++i)
        r[shift + i] = field_.sub(r[shift + i], field_.mul(c, b.c_[i]));
    if (k == bd) break;
  }
  r.resize(b.c_.size() - 1);
  return {Poly(field_, std::move(quo)), Poly(field_, std::move(r))};
}

Poly operator+(const Poly& a, const Poly& b) {
  const Field& f = a.field_;
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  const Field& f = a.field_;
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  const Field& f = a.field_;
  if (a.is_zero() || b.is_zero()) return Poly(f);
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return Poly(f, std::move(v));
}

Poly Poly::operator-() const { return Poly(field_) - *this; }

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.c_.size(); i-- > 0;)
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    Elem c = c_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return ((a * b) / gcd(a, b)).monic();
}

bool divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return (a % d).is_zero();
}

namespace {
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

int mobius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}
}  // namespace

bool is_irreducible(const Poly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const Field& F = f.field();
  Poly x = Poly::x(F);
  auto frob_iter = [&](int k) {
    Poly r = x;
    for (int i = 0; i < k; ++i) r = r.powmod(F.q(), f);
    return r;
  };
  if (!((frob_iter(d) - x) % f).is_zero()) return false;
  for (auto r : distinct_prime_factors(static_cast<std::uint64_t>(d)))
    if (gcd(frob_iter(d / static_cast<int>(r)) - x, f).degree() != 0) return false;
  return true;
}

bool is_squarefree(const Poly& f) {
  if (f.degree() < 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

std::uint64_t irreducible_count(std::uint64_t q, std::size_t d) {
  std::int64_t total = 0;
  for (std::size_t e = 1; e <= d; ++e)
    if (d % e == 0) total += mobius(d / e) * static_cast<std::int64_t>(ipow_sat(q, static_cast<unsigned>(e)));
  return static_cast<std::uint64_t>(total) / d;
}

std::vector<Poly> poly_irreducibles(const Field& f, std::size_t d, const Limits& limits) {
  if (d == 0) throw InvalidInput("irreducible degree must be positive");
  const std::uint64_t q = f.q();
  const std::uint64_t total = ipow_sat(q, static_cast<unsigned>(d));
  check_guard("monic polynomials enumerated", total, limits);

  std::vector<Poly> out;
  if (d == 1) {
    for (Elem a = 0; a < q; ++a) out.emplace_back(f, std::vector<Elem>{a, 1});
    return out;
  }

  // Sieve: a monic of degree d is reducible iff it has a monic irreducible
  // factor of degree <= d/2.
  std::vector<bool> reducible(total, false);
  std::vector<Elem> prod(d + 1);
  for (std::size_t i = 1; i <= d / 2; ++i) {
    const std::size_t j = d - i;
    const std::uint64_t count_j = ipow_sat(q, static_cast<unsigned>(j));
    for (const Poly& a : poly_irreducibles(f, i, limits)) {
      const auto& ac = a.coeffs();
      std::vector<Elem> bc(j + 1, 0);
      bc[j] = 1;
      for (std::uint64_t idx = 0; idx < count_j; ++idx) {
        std::uint64_t t = idx;
        for (std::size_t k = 0; k < j; ++k) {
          bc[k] = static_cast<Elem>(t % q);
          t /= q;
        }
        std::fill(prod.begin(), prod.end(), 0);
        for (std::size_t u = 0; u <= i; ++u) {
          if (ac[u] == 0) continue;
          for (std::size_t v = 0; v <= j; ++v)
            prod[u + v] = f.add(prod[u + v], f.mul(ac[u], bc[v]));
        }
        std::uint64_t code = 0;
        for (std::size_t k = d; k-- > 0;) code = code * q + prod[k];
        reducible[code] = true;
      }
    }
  }
  for (std::uint64_t idx = 0; idx < total; ++idx)
    if (!reducible[idx]) out.push_back(Poly::monic_from_index(f, d, idx));
  return out;
}

Poly substitution_automorphism(Elem alpha, const Poly& f) {
  if (alpha >= f.field().q())
    throw InvalidInput("substitution constant " + std::to_string(alpha) + " is not in " + f.field().name());
  return f.shift(alpha);
}

std::vector<std::pair<Elem, int>> roots_with_multiplicity(const Poly& f) {
  if (f.is_zero()) throw InvalidInput("roots of the zero polynomial");
  const Field& F = f.field();
  std::vector<std::pair<Elem, int>> out;
  for (Elem a = 0; a < F.q(); ++a) {
    if (f.eval(a) != 0) continue;
    Poly lin(F, {F.neg(a), 1});
    Poly g = f;
    int m = 0;
    while (true) {
      auto [quo, rem] = g.divmod(lin);
      if (!rem.is_zero()) break;
      g = std::move(quo);
      ++m;
    }
    out.emplace_back(a, m);
  }
  return out;
}

}  // namespace fqrigid
