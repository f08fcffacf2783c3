#include <doctest.h>

#include <random>

#include "fqrigid/ideal.hpp"
#include "oracles.hpp"

using namespace fqrigid;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kFields = {
    {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {7, 2}, {2, 5}, {2, 8}, {13, 1}};

Poly random_poly(const Field& f, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(-1, max_deg);
  std::uniform_int_distribution<Elem> coef(0, f.q() - 1);
  std::vector<Elem> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = coef(rng);
  return Poly(f, c);
}

std::vector<Elem> naive_convolution(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Elem> r(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
  return r;
}

}  // namespace

TEST_CASE("field moduli are the least irreducibles") {
  for (auto [p, n] : kFields) {
    Field f = Field::make(p, n);
    CHECK(f.q() == oracle::NaiveField(p, n).q);
    if (n > 1) CHECK(f.modulus() == oracle::least_irreducible(p, n));
  }
  CHECK(Field::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::make(2, 1).q() == 2);
}

TEST_CASE("field multiplication matches schoolbook reduction") {
  for (auto [p, n] : kFields) {
    Field f = Field::make(p, n);
    oracle::NaiveField ref(p, n);
    if (f.q() > 64) {
      std::mt19937_64 rng(p * 1000 + n);
      std::uniform_int_distribution<Elem> d(0, f.q() - 1);
      for (int i = 0; i < 5000; ++i) {
        Elem a = d(rng), b = d(rng);
        REQUIRE(f.mul(a, b) == ref.mul(a, b));
        REQUIRE(f.add(a, b) == ref.add(a, b));
      }
      continue;
    }
    for (Elem a = 0; a < f.q(); ++a)
      for (Elem b = 0; b < f.q(); ++b) {
        REQUIRE(f.mul(a, b) == ref.mul(a, b));
        REQUIRE(f.add(a, b) == ref.add(a, b));
      }
  }
}

TEST_CASE("x^q = x on all of F_9") {
  Field f = Field::make(3, 2);
  CHECK(f.q() == 9);
  for (Elem x = 0; x < 9; ++x) {
    Elem y = x;
    for (int i = 1; i < 9; ++i) y = f.mul(y, x);
    CHECK(y == x);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (auto [p, n] : kFields) {
    Field f = Field::make(p, n);
    std::uniform_int_distribution<Elem> d(0, f.q() - 1);
    for (int i = 0; i < 200; ++i) {
      Elem a = d(rng), b = d(rng), c = d(rng);
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.sub(f.add(a, b), b) == a);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
    }
  }
}

TEST_CASE("frobenius is bijective and the primitive element generates") {
  for (auto [p, n] : kFields) {
    Field f = Field::make(p, n);
    std::set<Elem> img;
    for (Elem a = 0; a < f.q(); ++a) img.insert(f.frobenius(a));
    CHECK(img.size() == f.q());
    std::set<Elem> powers;
    for (std::uint32_t k = 0; k + 1 < f.q(); ++k) powers.insert(f.exp(k));
    CHECK(powers.size() == f.q() - 1);
    for (Elem a = 1; a < f.q(); ++a) CHECK(f.exp(f.log(a)) == a);
  }
}

TEST_CASE("square roots and traces") {
  for (auto [p, n] : kFields) {
    Field f = Field::make(p, n);
    if (f.q() > 300) continue;
    for (Elem a = 0; a < f.q(); ++a) {
      CHECK(f.is_square(a) == oracle::is_square_bruteforce(f, a));
      if (auto r = f.sqrt(a)) CHECK(f.mul(*r, *r) == a);
      Elem t = 0, x = a;
      for (std::uint32_t i = 0; i < n; ++i) {
        t = f.add(t, x);
        x = f.frobenius(x);
      }
      CHECK(t == f.trace_to_prime(a));
    }
  }
}

TEST_CASE("embeddings are ring homomorphisms") {
  for (auto [p, n, k] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {2, 1, 3}, {2, 2, 2}, {3, 1, 2}, {3, 2, 2}, {2, 2, 3}, {5, 1, 2}}) {
    Field f = Field::make(p, n);
    auto [big, emb] = f.extension(k);
    CHECK(big.q() == oracle::NaiveField(p, n * k).q);
    std::set<Elem> image;
    for (Elem a = 0; a < f.q(); ++a) {
      image.insert(emb(a));
      for (Elem b = 0; b < f.q(); ++b) {
        CHECK(emb(f.mul(a, b)) == big.mul(emb(a), emb(b)));
        CHECK(emb(f.add(a, b)) == big.add(emb(a), emb(b)));
      }
    }
    CHECK(image.size() == f.q());
  }
}

TEST_CASE("field construction rejects bad input") {
  CHECK_THROWS_AS(Field::make(4, 1), InvalidInput);
  CHECK_THROWS_AS(Field::make_q(6), InvalidInput);
  CHECK_THROWS_AS(Field::make_q(1), InvalidInput);
  CHECK_THROWS_AS(Field::make(2, 30, Limits{1000}), GuardExceeded);
  CHECK(prime_power(49) == std::pair<std::uint32_t, std::uint32_t>{7, 2});
  CHECK_FALSE(prime_power(12).has_value());
}

TEST_CASE("polynomial product and division") {
  std::mt19937_64 rng(11);
  for (auto [p, n] : kFields) {
    Field f = Field::make(p, n);
    for (int i = 0; i < 100; ++i) {
      Poly a = random_poly(f, rng, 7), b = random_poly(f, rng, 5);
      Poly ab = a * b;
      CHECK(ab.coeffs() == naive_convolution(f, a, b));
      if (!a.is_zero() && !b.is_zero()) CHECK(ab.degree() == a.degree() + b.degree());
      if (b.is_zero()) continue;
      auto [quo, rem] = a.divmod(b);
      CHECK(quo * b + rem == a);
      CHECK(rem.degree() < b.degree());
    }
  }
  Field f2 = Field::make(2, 1);
  CHECK_THROWS(Poly::x(f2).divmod(Poly(f2)));
}

TEST_CASE("irreducible lists") {
  Field f2 = Field::make(2, 1), f3 = Field::make(3, 1);
  auto l1 = poly_irreducibles(f2, 1);
  REQUIRE(l1.size() == 2);
  CHECK(l1[0].to_string('T') == "T");
  CHECK(l1[1].to_string('T') == "T+1");
  auto l2 = poly_irreducibles(f2, 2);
  REQUIRE(l2.size() == 1);
  CHECK(l2[0].to_string('T') == "T^2+T+1");

  // quadratics over F_3 are irreducible iff they have no root
  std::vector<Poly> rootless;
  for (std::uint64_t i = 0; i < 9; ++i) {
    Poly g = Poly::monic_from_index(f3, 2, i);
    bool root = false;
    for (Elem a = 0; a < 3; ++a) root = root || g.eval(a) == 0;
    if (!root) rootless.push_back(g);
  }
  CHECK(poly_irreducibles(f3, 2) == rootless);
  CHECK(rootless.size() == 3);
}

TEST_CASE("irreducible counts match the necklace formula") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32}) {
    Field f = Field::make_q(q);
    std::uint64_t qd = q;
    for (std::size_t d = 1; qd <= 1'000'000; ++d, qd *= q) {
      auto list = poly_irreducibles(f, d);
      INFO("q=" << q << " d=" << d);
      CHECK(list.size() == irreducible_count(q, d));
      CHECK(std::is_sorted(list.begin(), list.end()));
      CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
    }
  }
  // reference necklace numbers
  CHECK(irreducible_count(2, 4) == 3);
  CHECK(irreducible_count(3, 3) == 8);
  CHECK(irreducible_count(4, 2) == 6);
}

TEST_CASE("irreducibility agrees with exhaustive factor search") {
  for (std::uint64_t q : {2, 3, 4}) {
    Field f = Field::make_q(q);
    for (std::size_t d = 1; d <= 4; ++d) {
      std::set<Poly> reducible;
      for (std::size_t e = 1; e <= d / 2; ++e)
        for (std::uint64_t i = 0; i < ipow_sat(q, e); ++i)
          for (std::uint64_t j = 0; j < ipow_sat(q, d - e); ++j)
            reducible.insert(Poly::monic_from_index(f, e, i) * Poly::monic_from_index(f, d - e, j));
      for (std::uint64_t i = 0; i < ipow_sat(q, d); ++i) {
        Poly g = Poly::monic_from_index(f, d, i);
        CHECK(is_irreducible(g) == !reducible.count(g));
      }
    }
  }
}

TEST_CASE("canonical polynomial order") {
  Field f = Field::make_q(3);
  std::vector<Poly> all;
  for (std::size_t d = 0; d <= 3; ++d)
    for (std::uint64_t i = 0; i < ipow_sat(3, d); ++i) all.push_back(Poly::monic_from_index(f, d, i));
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const auto& g : all) CHECK(Poly::monic_from_index(f, g.degree(), g.index_within_degree()) == g);
}

TEST_CASE("ideal operations") {
  Field f2 = Field::make(2, 1);
  Poly T = Poly::x(f2), one = Poly::constant(f2, 1);
  MonicIdeal a(T), b(T + one), t2(T * T), t2t(T * T + T);
  CHECK((a + b) == MonicIdeal::unit(f2));
  CHECK(intersection(t2, a) == t2);
  CHECK((t2t + t2) == a);
  CHECK((a * b).generator() == T * T + T);
  CHECK(a.contains(t2));
  CHECK_FALSE(t2.contains(a));
  CHECK(MonicIdeal::unit(f2).contains(a));
  CHECK(a.contains(MonicIdeal::zero(f2)));
}

TEST_CASE("substitution automorphisms") {
  Field f3 = Field::make(3, 1), f2 = Field::make(2, 1), f5 = Field::make(5, 1);
  CHECK(substitution_automorphism(1, Poly::x(f3)).to_string('T') == "T+1");
  CHECK(substitution_automorphism(1, Poly::x(f2) * Poly::x(f2)).to_string('T') == "T^2+1");
  CHECK_THROWS_AS(substitution_automorphism(5, Poly::x(f5)), InvalidInput);

  // T - beta goes to T - (beta - alpha); the orbit of (T) is every degree-one prime
  std::set<Poly> orbit;
  for (Elem alpha = 0; alpha < 5; ++alpha) {
    for (Elem beta = 0; beta < 5; ++beta) {
      Poly g(f5, {f5.neg(beta), 1});
      CHECK(substitution_automorphism(alpha, g) == Poly(f5, {f5.neg(f5.sub(beta, alpha)), 1}));
    }
    orbit.insert(substitution_automorphism(alpha, Poly::x(f5)));
  }
  CHECK(orbit.size() == 5);
  auto lin = poly_irreducibles(f5, 1);
  CHECK(std::set<Poly>(lin.begin(), lin.end()) == orbit);

  std::mt19937_64 rng(3);
  for (auto q : {4u, 5u, 9u}) {
    Field f = Field::make_q(q);
    for (int i = 0; i < 50; ++i) {
      Poly a = random_poly(f, rng, 4), b = random_poly(f, rng, 4);
      Elem alpha = static_cast<Elem>(rng() % q);
      auto s = [&](const Poly& x) { return substitution_automorphism(alpha, x); };
      CHECK(s(a * b) == s(a) * s(b));
      CHECK(s(a + b) == s(a) + s(b));
    }
  }
}

TEST_CASE("roots with multiplicity") {
  Field f5 = Field::make(5, 1);
  Poly g = Poly(f5, {4, 1}) * Poly(f5, {4, 1}) * Poly(f5, {0, 1}) * Poly(f5, {2, 0, 1});
  auto r = roots_with_multiplicity(g);
  CHECK(r == std::vector<std::pair<Elem, int>>{{0, 1}, {1, 2}});
  CHECK(is_squarefree(Poly(f5, {0, 4, 0, 1})));
  CHECK_FALSE(is_squarefree(g));
}
