#include "fqrigid/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace fqrigid {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t n = 0;
  while (q % p == 0) {
    q /= p;
    ++n;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), n);
}

namespace {

using Digits = std::vector<std::uint32_t>;

// Arithmetic in F_p[x]/(m) on digit vectors, used only while building tables.
struct PrimeModArith {
  std::uint32_t p;
  Digits m;  // monic, degree n

  std::size_t n() const { return m.size() - 1; }

  Digits mulmod(const Digits& a, const Digits& b) const {
    Digits prod(2 * n(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
    for (std::size_t k = prod.size(); k-- > n();) {
      std::uint32_t c = prod[k];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= n(); ++i) {
        std::size_t idx = k - n() + i;
        prod[idx] = static_cast<std::uint32_t>((prod[idx] + std::uint64_t{p - c} * m[i]) % p);
      }
    }
    prod.resize(n());
    return prod;
  }

  Digits powmod(Digits a, std::uint64_t e) const {
    Digits r(n(), 0);
    r[0] = 1 % p;
    if (n() == 0) return r;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  }
};

Digits code_to_digits(std::uint64_t code, std::uint32_t p, std::size_t n) {
  Digits d(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return d;
}

std::uint64_t digits_to_code(const Digits& d, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

// Polynomial gcd over F_p on ascending coefficient vectors.
Digits trim(Digits a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

Digits poly_mod(Digits a, const Digits& b, std::uint32_t p) {
  a = trim(a);
  std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t{p - c} * b[i]) % p);
    a = trim(a);
  }
  return a;
}

Digits poly_gcd(Digits a, Digits b, std::uint32_t p) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    Digits r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin's test for a monic m of degree n over F_p.
bool irreducible_over_prime(const Digits& m, std::uint32_t p) {
  std::size_t n = m.size() - 1;
  if (n == 1) return true;
  PrimeModArith ar{p, m};
  Digits x(n, 0);
  x[1] = 1;
  auto frob_iter = [&](std::size_t k) {
    Digits r = x;
    for (std::size_t i = 0; i < k; ++i) r = ar.powmod(r, p);
    return r;
  };
  Digits full = frob_iter(n);
  if (full != x) return false;
  for (std::uint64_t r : prime_factors(n)) {
    Digits h = frob_iter(n / r);
    // h - x
    h[1] = (h[1] + p - 1) % p;
    Digits g = poly_gcd(m, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

struct Field::Data {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  Digits modulus;
  Elem primitive = 1;
  std::vector<Elem> exp;           // exp[k] = g^k, k < q - 1
  std::vector<std::uint32_t> log;  // log[a], a != 0
  std::vector<std::uint32_t> basis_trace;
};

Field Field::make(std::uint32_t p, std::uint32_t n, const Limits& limits) {
  if (!is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw InvalidInput("field degree must be positive");
  std::uint64_t q = ipow_sat(p, n);
  check_guard("field size", q, limits);

  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Data>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({p, n}); it != cache.end()) return Field(it->second);
  }

  auto d = std::make_shared<Data>();
  d->p = p;
  d->n = n;
  d->q = static_cast<std::uint32_t>(q);

  if (n == 1) {
    d->modulus = {0, 1};
  } else {
    for (std::uint64_t low = 0; low < q; ++low) {
      Digits m = code_to_digits(low, p, n);
      m.push_back(1);
      if (m[0] == 0) continue;
      if (irreducible_over_prime(m, p)) {
        d->modulus = std::move(m);
        break;
      }
    }
  }

  PrimeModArith ar{p, d->modulus};
  auto order_is_full = [&](const Digits& g) {
    Digits one = code_to_digits(1, p, n);
    for (std::uint64_t r : prime_factors(q - 1))
      if (ar.powmod(g, (q - 1) / r) == one) return false;
    return true;
  };
  if (n == 1) {
    // prime field: arithmetic is integer arithmetic mod p
    for (std::uint64_t g = 1; g < q; ++g) {
      bool ok = true;
      for (std::uint64_t r : prime_factors(q - 1)) {
        std::uint64_t acc = 1, b = g, e = (q - 1) / r;
        while (e) {
          if (e & 1) acc = acc * b % p;
          b = b * b % p;
          e >>= 1;
        }
        if (acc == 1) ok = false;
      }
      if (q == 2 || ok) {
        d->primitive = static_cast<Elem>(g);
        break;
      }
    }
  } else {
    for (std::uint64_t g = 2; g < q; ++g) {
      if (order_is_full(code_to_digits(g, p, n))) {
        d->primitive = static_cast<Elem>(g);
        break;
      }
    }
  }

  d->exp.resize(q - 1);
  d->log.assign(q, 0);
  Digits cur = code_to_digits(1, p, n);
  Digits gen = code_to_digits(d->primitive, p, n);
  for (std::uint64_t k = 0; k + 1 < q; ++k) {
    Elem code = static_cast<Elem>(n == 1 ? cur[0] : digits_to_code(cur, p));
    d->exp[k] = code;
    d->log[code] = static_cast<std::uint32_t>(k);
    if (n == 1)
      cur[0] = static_cast<std::uint32_t>(std::uint64_t{cur[0]} * gen[0] % p);
    else
      cur = ar.mulmod(cur, gen);
  }

  Field f{std::shared_ptr<const Data>(d)};
  d->basis_trace.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    Digits bi(n, 0);
    bi[i] = 1;
    Elem b = static_cast<Elem>(digits_to_code(bi, p));
    Elem acc = 0, cur_b = b;
    for (std::uint32_t j = 0; j < n; ++j) {
      acc = f.add(acc, cur_b);
      cur_b = f.frobenius(cur_b);
    }
    d->basis_trace[i] = acc;  // lies in F_p, so its code is its residue
  }

  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(p, n), f.data_);
  return Field(it->second);
}

Field Field::make_q(std::uint64_t q, const Limits& limits) {
  auto pp = prime_power(q);
  if (!pp) throw InvalidInput(std::to_string(q) + " is not a prime power");
  return make(pp->first, pp->second, limits);
}

std::uint32_t Field::p() const noexcept { return data_->p; }
std::uint32_t Field::n() const noexcept { return data_->n; }
std::uint32_t Field::q() const noexcept { return data_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return data_->modulus; }
Elem Field::primitive() const noexcept { return data_->primitive; }

Elem Field::from_int(std::int64_t v) const {
  std::int64_t p = data_->p;
  return static_cast<Elem>(((v % p) + p) % p);
}

Elem Field::add(Elem a, Elem b) const {
  const auto p = data_->p;
  if (p == 2) return a ^ b;
  if (data_->n == 1) {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem r = 0, scale = 1;
  while (a || b) {
    Elem s = a % p + b % p;
    if (s >= p) s -= p;
    r += s * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return r;
}

Elem Field::neg(Elem a) const {
  const auto p = data_->p;
  if (p == 2) return a;
  if (data_->n == 1) return a == 0 ? 0 : p - a;
  Elem r = 0, scale = 1;
  while (a) {
    Elem d = a % p;
    r += (d == 0 ? 0 : p - d) * scale;
    scale *= p;
    a /= p;
  }
  return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  const auto& d = *data_;
  std::uint32_t k = d.log[a] + d.log[b];
  std::uint32_t ord = d.q - 1;
  if (k >= ord) k -= ord;
  return d.exp[k];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  const auto& d = *data_;
  std::uint32_t ord = d.q - 1;
  std::uint32_t k = d.log[a];
  return d.exp[k == 0 ? 0 : ord - k];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const auto& d = *data_;
  std::uint64_t ord = d.q - 1;
  return d.exp[(std::uint64_t{d.log[a]} * (e % ord)) % ord];
}

Elem Field::frobenius(Elem a) const { return pow(a, data_->p); }

std::uint32_t Field::log(Elem a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return data_->log[a];
}

Elem Field::exp(std::uint64_t k) const { return data_->exp[k % (data_->q - 1)]; }

bool Field::is_square(Elem a) const {
  if (a == 0 || data_->p == 2) return true;
  return data_->log[a] % 2 == 0;
}

std::optional<Elem> Field::sqrt(Elem a) const {
  if (a == 0) return Elem{0};
  if (data_->p == 2) return pow(a, data_->q / 2);
  if (!is_square(a)) return std::nullopt;
  Elem r = data_->exp[data_->log[a] / 2];
  return std::min(r, neg(r));
}

std::uint32_t Field::trace_to_prime(Elem a) const {
  const auto& d = *data_;
  std::uint64_t acc = 0;
  for (std::uint32_t i = 0; i < d.n; ++i) {
    acc += std::uint64_t{a % d.p} * d.basis_trace[i];
    a /= d.p;
  }
  return static_cast<std::uint32_t>(acc % d.p);
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  return code_to_digits(a, data_->p, data_->n);
}

Elem Field::from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() != data_->n) throw InvalidInput("digit vector has wrong length");
  for (auto x : d)
    if (x >= data_->p) throw InvalidInput("digit out of range");
  return static_cast<Elem>(digits_to_code(d, data_->p));
}

Embedding Field::embed_into(const Field& big) const {
  if (big.p() != p() || big.n() % n() != 0)
    throw InvalidInput(name() + " does not embed into " + big.name());
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Embedding> cache;
  const auto key = std::make_tuple(p(), n(), big.n());
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const auto& m = modulus();
  auto eval_mod = [&](Elem x) {
    Elem acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = big.add(big.mul(acc, x), big.from_int(m[i]));
    return acc;
  };
  Elem root = 0;
  bool found = false;
  for (Elem x = 0; x < big.q(); ++x) {
    if (eval_mod(x) == 0) {
      root = x;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("modulus has no root in extension field");
  std::vector<Elem> image(q());
  for (Elem a = 0; a < q(); ++a) {
    auto dg = digits(a);
    Elem acc = 0;
    for (std::size_t i = dg.size(); i-- > 0;) acc = big.add(big.mul(acc, root), big.from_int(dg[i]));
    image[a] = acc;
  }
  std::lock_guard lock(mu);
  return cache.emplace(key, Embedding(std::move(image))).first->second;
}

std::pair<Field, Embedding> Field::extension(std::uint32_t k, const Limits& limits) const {
  Field big = make(p(), n() * k, limits);
  return {big, embed_into(big)};
}

std::string Field::name() const { return "F_" + std::to_string(data_->q); }

}  // namespace fqrigid
