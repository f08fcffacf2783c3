#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "fqrigid/belyi.hpp"
#include "fqrigid/text_format.hpp"
#include "oracles.hpp"

using namespace fqrigid;

namespace {

Poly product_over(const Field& f, const std::vector<Elem>& roots) {
  Poly r = Poly::constant(f, 1);
  for (Elem a : roots) r *= Poly(f, {f.neg(a), 1});
  return r;
}

// Ramification indices above every value of P^1(big), by factoring each
// fibre; `big` must contain every critical point.
std::map<ProjPoint, std::vector<unsigned>> fibres(const RationalMap& m, const Field& big) {
  auto g = m.mapped(big, m.field().embed_into(big));
  const unsigned d = g.degree();
  std::map<ProjPoint, std::vector<unsigned>> out;
  auto at_inf = g(ProjPoint::inf());
  auto inf_index = [&]() -> unsigned {
    const Poly &N = g.num(), &D = g.den();
    if (N.degree() != D.degree()) return static_cast<unsigned>(std::abs(N.degree() - D.degree()));
    Poly diff = N - D.scaled(at_inf.x);
    return d - static_cast<unsigned>(std::max(diff.degree(), 0));
  }();
  for (Elem c = 0; c <= big.q(); ++c) {
    ProjPoint v = c == big.q() ? ProjPoint::inf() : ProjPoint::at(c);
    Poly fib = v.infinity ? g.den() : g.num() - g.den().scaled(c);
    std::vector<unsigned> es;
    for (auto [root, mult] : roots_with_multiplicity(fib)) es.push_back(static_cast<unsigned>(mult));
    if (v == at_inf) es.push_back(inf_index);
    unsigned seen = 0;
    for (auto e : es) seen += e;
    // points of the fibre outside `big` are unramified: critical points split there
    es.insert(es.end(), d - seen, 1u);
    std::sort(es.rbegin(), es.rend());
    out[v] = es;
  }
  return out;
}

RationalMap map_of(const std::string& spec) { return parse_map(spec); }

}  // namespace

TEST_CASE("additive polynomials of the named spans") {
  Field f2 = Field::make_q(2), f4 = Field::make_q(4), f8 = Field::make_q(8);
  CHECK(additive_span_polynomial(f2, {1}).to_poly().to_string('x') == "x^2+x");
  CHECK(additive_span_polynomial(f4, {1, 2}).to_poly().to_string('x') == "x^4+x");
  Elem g = 2;  // the power-basis generator of F_8
  auto psi = additive_span_polynomial(f8, {1, g});
  CHECK(psi.to_poly().degree() == 4);
  CHECK(psi.eval(1) == 0);
  CHECK(psi.eval(g) == 0);
  CHECK(psi.eval(f8.add(1, g)) == 0);
  CHECK(psi.to_poly() == product_over(f8, {0, 1, g, f8.add(1, g)}));
  CHECK(additive_span_polynomial(f8, {}).to_poly() == Poly::x(f8));
  CHECK(additive_span_polynomial(f8, {0, 0}).to_poly() == Poly::x(f8));
}

TEST_CASE("incremental construction matches the product over the span") {
  std::mt19937_64 rng(17);
  for (std::uint64_t q : {2, 3, 4, 8, 9, 16, 25, 27}) {
    Field f = Field::make_q(q);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<Elem> pts;
      for (int i = 0; i < 1 + trial % 3; ++i) pts.push_back(static_cast<Elem>(rng() % q));
      auto span = fp_span(f, pts);
      auto psi = additive_span_polynomial(f, pts);
      INFO("q=" << q);
      CHECK(psi.to_poly() == product_over(f, span));
      CHECK(psi.to_poly().degree() == static_cast<int>(span.size()));
      // span size is a power of p
      std::uint64_t s = span.size();
      while (s % f.p() == 0) s /= f.p();
      CHECK(s == 1);
      std::set<Elem> kernel;
      for (Elem x = 0; x < q; ++x)
        if (psi.eval(x) == 0) kernel.insert(x);
      CHECK(kernel == std::set<Elem>(span.begin(), span.end()));
      CHECK(oracle::additivity_defect(psi).empty());
      for (Elem c = 0; c < f.p(); ++c)
        for (Elem x = 0; x < q; ++x) CHECK(psi.eval(f.mul(c, x)) == f.mul(c, psi.eval(x)));
    }
  }
}

TEST_CASE("span guard") {
  Field f = Field::make_q(1024);
  std::vector<Elem> basis;
  for (Elem i = 0; i < 10; ++i) basis.push_back(Elem{1} << i);
  CHECK_THROWS_AS(additive_span_polynomial(f, basis, Limits{100}), GuardExceeded);
}

TEST_CASE("Moebius maps") {
  Field f2 = Field::make_q(2), f7 = Field::make_q(7);
  CHECK(mobius_map(f7, 1, 0, 0, 1) == RationalMap::identity(f7));
  auto inv = mobius_map(f7, 0, 1, 1, 0);
  CHECK(inv(ProjPoint::at(0)) == ProjPoint::inf());
  CHECK(inv(ProjPoint::inf()) == ProjPoint::at(0));
  auto shift = mobius_map(f2, 1, 1, 0, 1);
  CHECK(shift(ProjPoint::at(0)) == ProjPoint::at(1));
  CHECK(shift(ProjPoint::at(1)) == ProjPoint::at(0));
  CHECK(shift(ProjPoint::inf()) == ProjPoint::inf());
  CHECK_THROWS_AS(mobius_map(f7, 1, 2, 2, 4), InvalidInput);

  std::mt19937_64 rng(23);
  Field f9 = Field::make_q(9);
  int done = 0;
  while (done < 100) {
    std::array<Elem, 8> e;
    for (auto& x : e) x = static_cast<Elem>(rng() % 9);
    auto det = [&](Elem a, Elem b, Elem c, Elem d) { return f9.sub(f9.mul(a, d), f9.mul(b, c)); };
    if (det(e[0], e[1], e[2], e[3]) == 0 || det(e[4], e[5], e[6], e[7]) == 0) continue;
    auto m1 = mobius_map(f9, e[0], e[1], e[2], e[3]), m2 = mobius_map(f9, e[4], e[5], e[6], e[7]);
    // [[a b][c d]] [[a' b'][c' d']]
    Elem a = f9.add(f9.mul(e[0], e[4]), f9.mul(e[1], e[6])), b = f9.add(f9.mul(e[0], e[5]), f9.mul(e[1], e[7]));
    Elem c = f9.add(f9.mul(e[2], e[4]), f9.mul(e[3], e[6])), d = f9.add(f9.mul(e[2], e[5]), f9.mul(e[3], e[7]));
    CHECK(m1.after(m2) == mobius_map(f9, a, b, c, d));
    ++done;
  }
}

TEST_CASE("rational maps are stored reduced") {
  Field f5 = Field::make_q(5);
  Poly x = Poly::x(f5), one = Poly::constant(f5, 1);
  RationalMap m(x * (x + one), (x + one).scaled(2));
  CHECK(m.den() == one);
  CHECK(m.num() == x.scaled(3));
  CHECK(m.degree() == 1);
  CHECK_THROWS_AS(RationalMap(one, Poly(f5)), InvalidInput);
  CHECK_THROWS_AS(RationalMap(one.scaled(2), one), InvalidInput);
}

TEST_CASE("branch loci of the named maps") {
  auto sq = branch_locus(map_of("q=3 num=x^2"));
  REQUIRE(sq.points.size() == 2);
  CHECK(sq.points[0].value == ProjPoint::at(0));
  CHECK(sq.points[1].value == ProjPoint::inf());
  for (const auto& bp : sq.points) {
    CHECK(bp.indices == std::vector<unsigned>{2});
    CHECK(bp.wild == std::vector<bool>{false});
  }
  auto as = branch_locus(map_of("q=2 num=x^2+x"));
  REQUIRE(as.points.size() == 1);
  CHECK(as.points[0].value == ProjPoint::inf());
  CHECK(as.points[0].indices == std::vector<unsigned>{2});
  CHECK(as.points[0].wild == std::vector<bool>{true});
  CHECK(as.has_wild());
  CHECK(branch_locus(RationalMap::identity(Field::make_q(5))).points.empty());
}

TEST_CASE("inseparable maps are rejected") {
  CHECK_THROWS_AS(branch_locus(map_of("q=2 num=x^2")), InseparableMap);
  CHECK_THROWS_AS(branch_locus(map_of("q=3 num=x^3+1 den=x^6+2")), InseparableMap);
  CHECK_FALSE(map_of("q=2 num=x^2").is_separable());
  CHECK_THROWS_AS(collapse_pipeline(map_of("q=2 num=x^2"), {ProjPoint::at(0), ProjPoint::inf()}), InseparableMap);
}

TEST_CASE("branch loci agree with fibre factorisation") {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    Field f = Field::make_q(q);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Elem> n(2 + rng() % 4), d(1 + rng() % 3);
      for (auto& c : n) c = static_cast<Elem>(rng() % q);
      for (auto& c : d) c = static_cast<Elem>(rng() % q);
      Poly num(f, n), den(f, d);
      if (den.is_zero()) continue;
      std::optional<RationalMap> m;
      try {
        m.emplace(num, den);
      } catch (const InvalidInput&) {
        continue;
      }
      if (!m->is_separable() || m->degree() > 5) continue;
      BranchReport rep = branch_locus(*m, Limits{200'000});
      if (rep.field.q() > 4096) continue;
      auto fib = fibres(*m, rep.field);
      std::set<ProjPoint> expected;
      for (const auto& [v, es] : fib) {
        unsigned sum = 0;
        for (auto e : es) sum += e;
        CHECK(sum == m->degree());
        if (!es.empty() && es.front() > 1) expected.insert(v);
      }
      std::set<ProjPoint> got;
      unsigned total = 0;
      for (const auto& bp : rep.points) {
        got.insert(bp.value);
        CHECK(bp.indices == fib.at(bp.value));
        for (std::size_t i = 0; i < bp.indices.size(); ++i) CHECK(bp.wild[i] == (bp.indices[i] % f.p() == 0));
        for (auto e : bp.indices) total += e - 1;
      }
      CHECK(got == expected);
      CHECK(total == rep.ramification_total());
      const unsigned rh = 2 * m->degree() - 2;
      if (rep.has_wild()) CHECK(total < rh);
      else CHECK(total == rh);
      ++checked;
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("collapse pipeline examples") {
  auto sq = collapse_pipeline(map_of("q=3 num=x^2"), {ProjPoint::at(0), ProjPoint::inf()});
  CHECK(sq.composite == map_of("q=3 num=x^2"));
  CHECK_FALSE(sq.collapse.has_value());

  auto cub = collapse_pipeline(map_of("q=5 num=x^3-x"), {ProjPoint::at(0), ProjPoint::inf()});
  REQUIRE(cub.collapse.has_value());
  CHECK(cub.extension_degree == 2);
  for (const auto& bp : cub.final.points)
    CHECK((bp.value == ProjPoint::at(0) || bp.value == ProjPoint::inf()));
  // composite is psi o f
  auto [E, emb] = Field::make_q(5).extension(2);
  auto f = map_of("q=5 num=x^3-x").mapped(E, emb);
  CHECK(cub.composite == RationalMap::polynomial(cub.collapse->to_poly()).after(f));

  auto as = collapse_pipeline(map_of("q=2 num=x^2+x"), {ProjPoint::at(0), ProjPoint::at(1)});
  for (const auto& bp : as.final.points) CHECK((bp.value == ProjPoint::at(0) || bp.value == ProjPoint::at(1)));
  CHECK_FALSE(as.final.points.empty());
}

TEST_CASE("collapse pipeline validation") {
  auto m = map_of("q=5 num=x^3-x");
  CHECK_THROWS_AS(collapse_pipeline(m, {ProjPoint::at(1), ProjPoint::at(1)}), InvalidInput);
  CHECK_THROWS_AS(collapse_pipeline(m, {ProjPoint::at(7), ProjPoint::at(1)}), InvalidInput);
}
