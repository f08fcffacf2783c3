#include <doctest.h>

#include <cmath>

#include "fqrigid/drinfeldian.hpp"
#include "fqrigid/text_format.hpp"

using namespace fqrigid;

namespace {

DrinfeldianDomain line_domain(std::uint64_t q, const std::string& prime) {
  Field f = Field::make_q(q);
  auto c = CurveModel::projective_line(f);
  if (prime == "inf") return DrinfeldianDomain(c, line_place_at_infinity());
  return DrinfeldianDomain(c, line_place(parse_poly(f, prime, 'T')));
}

}  // namespace

TEST_CASE("class groups of domains on the projective line") {
  auto a = class_group_of_domain(line_domain(2, "T"));
  CHECK(a.h_K == 1);
  CHECK(a.deg_x == 1);
  CHECK(a.h_B == 1);
  CHECK(class_group_of_domain(line_domain(2, "T^2+T+1")).h_B == 2);
  CHECK(class_group_of_domain(line_domain(3, "T^2+1")).h_B == 2);
}

TEST_CASE("class group of a domain on an elliptic curve") {
  auto c = parse_curve("q=2 kind=artin-schreier poly=x^3");
  for (const auto& pl : places_of_degree(c, 1)) {
    auto r = class_group_of_domain(DrinfeldianDomain(c, pl));
    CHECK(r.h_K == 3);
    CHECK(r.h_B == 3);
    CHECK_FALSE(is_uniformizationally_rigid(DrinfeldianDomain(c, pl)));
  }
}

TEST_CASE("the direct oracle agrees with the exact sequence") {
  struct Case {
    std::uint64_t q;
    const char* prime;
    unsigned bound;
    std::uint64_t expected;
  };
  for (const auto& c : std::vector<Case>{{2, "T", 3, 1},
                                         {2, "inf", 3, 1},
                                         {2, "T^2+T+1", 3, 2},
                                         {2, "T^3+T+1", 3, 3},
                                         {3, "T^2+1", 2, 2},
                                         {3, "T+2", 2, 1},
                                         {4, "T^2+T+2", 2, 2},
                                         {5, "T^2+2", 2, 2}}) {
    auto dom = line_domain(c.q, c.prime);
    INFO("q=" << c.q << " place " << c.prime);
    auto oracle = class_group_oracle(dom, c.bound);
    CHECK(oracle == c.expected);
    CHECK(oracle == class_group_of_domain(dom).h_B);
  }
}

TEST_CASE("oracle restrictions") {
  auto c = parse_curve("q=2 kind=artin-schreier poly=x^3");
  DrinfeldianDomain dom(c, places_of_degree(c, 1).front());
  CHECK_THROWS_AS(class_group_oracle(dom, 2), InvalidInput);
}

TEST_CASE("report invariants") {
  std::vector<DrinfeldianDomain> doms;
  for (std::uint64_t q : {2, 3, 5}) {
    Field f = Field::make_q(q);
    auto line = CurveModel::projective_line(f);
    for (unsigned d = 1; d <= 3; ++d)
      for (const auto& pl : places_of_degree(line, d)) doms.emplace_back(line, pl);
  }
  for (const char* spec : {"q=2 kind=artin-schreier poly=x^3+x+1", "q=3 kind=hyperelliptic poly=x^3+2*x+1",
                           "q=2 kind=artin-schreier poly=x^5+x^3+1"}) {
    auto c = parse_curve(spec);
    for (unsigned d = 1; d <= 2; ++d)
      for (const auto& pl : places_of_degree(c, d)) doms.emplace_back(c, pl);
  }
  for (const auto& dom : doms) {
    auto r = class_group_of_domain(dom);
    CHECK(r.d1_order == 1);
    CHECK(r.d2_order == r.deg_x);
    CHECK(r.h_B == r.h_K * r.deg_x);
    CHECK((r.d2_order == 1) == (r.deg_x == 1));
    CHECK(is_uniformizationally_rigid(dom) == (r.h_K == 1 && r.deg_x == 1));
  }
}

TEST_CASE("rigidity examples") {
  CHECK(is_uniformizationally_rigid(line_domain(5, "T")));
  CHECK_FALSE(is_uniformizationally_rigid(line_domain(5, "T^2+2")));
}

TEST_CASE("domains need a place on their curve") {
  auto c = parse_curve("q=2 kind=artin-schreier poly=x^3+x+1");
  Place bogus;
  bogus.degree = 1;
  bogus.point.c = {1, 0, 0};
  CHECK_THROWS_AS(DrinfeldianDomain(c, bogus), InvalidInput);
  Field f = Field::make_q(2);
  CHECK_THROWS_AS(line_place(parse_poly(f, "T^2+1", 'T')), InvalidInput);
}

TEST_CASE("substitution automorphisms permute degree-one places of the line") {
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    Field f = Field::make_q(q);
    auto line = CurveModel::projective_line(f);
    auto places = places_of_degree(line, 1);
    CHECK(places.size() == q + 1);
    auto ref = class_group_of_domain(DrinfeldianDomain(line, places.front()));
    for (Elem alpha = 0; alpha < q; ++alpha) {
      Place moved = line_place(substitution_automorphism(alpha, *places.front().prime));
      auto r = class_group_of_domain(DrinfeldianDomain(line, moved));
      CHECK(r.h_B == ref.h_B);
      CHECK(std::find(places.begin(), places.end(), moved) != places.end());
    }
  }
}

TEST_CASE("search for q at least 5 finds no exceptional domain") {
  for (std::uint64_t q : {5, 7}) {
    auto res = search_rigid_domains(q, 1);
    CHECK(res.exceptional.empty());
    // Hasse: N_1 >= q + 1 - 2 sqrt(q) > 1, and h = N_1 in genus one
    CHECK(static_cast<double>(q) + 1 - 2 * std::sqrt(static_cast<double>(q)) > 1);
    REQUIRE(res.standard.size() == 1);
    CHECK(res.standard.front().curve.kind() == CurveKind::ProjectiveLine);
    CHECK(res.standard_place_count == q + 1);
  }
}

TEST_CASE("search over F_2 finds y^2+y=x^3+x+1") {
  auto res = search_rigid_domains(2, 1);
  REQUIRE(res.exceptional.size() == 1);
  const auto& e = res.exceptional.front();
  auto expected = parse_curve("q=2 kind=artin-schreier poly=x^3+x+1");
  CHECK(e.zeta == zeta_numerator(expected));
  CHECK(e.place.degree == 1);
  CHECK(e.report.h_K == 1);
  CHECK(e.report.h_B == 1);
  // same affine equation written as a plane cubic
  if (e.curve.kind() == CurveKind::SmoothPlane)
    CHECK(e.curve.equation() == "x^3+x*z^2+y^2*z+y*z^2+z^3 = 0");
}

TEST_CASE("exceptional entries are consistent and ordered") {
  for (std::uint64_t q : {2, 3, 4}) {
    auto res = search_rigid_domains(q, 2, SearchOptions{2, {}});
    CHECK_FALSE(res.exceptional.empty());
    for (const auto& e : res.exceptional) {
      CHECK(e.report.h_K == 1);
      CHECK(e.report.h_B == 1);
      CHECK(e.place.degree == 1);
      CHECK(e.curve.genus() >= 1);
      CHECK(zeta_numerator(e.curve) == e.zeta);
      CHECK(place_on_curve(e.curve, e.place));
    }
    for (std::size_t i = 1; i < res.exceptional.size(); ++i)
      CHECK(res.exceptional[i - 1].curve.sort_key() < res.exceptional[i].curve.sort_key());
  }
}

TEST_CASE("search results do not depend on the worker count") {
  auto a = search_rigid_domains(3, 2, SearchOptions{1, {}});
  auto b = search_rigid_domains(3, 2, SearchOptions{4, {}});
  CHECK(a.candidates_per_genus == b.candidates_per_genus);
  REQUIRE(a.exceptional.size() == b.exceptional.size());
  for (std::size_t i = 0; i < a.exceptional.size(); ++i) {
    CHECK(a.exceptional[i].curve.sort_key() == b.exceptional[i].curve.sort_key());
    CHECK(a.exceptional[i].place == b.exceptional[i].place);
  }
}

TEST_CASE("search input validation") {
  CHECK_THROWS_AS(search_rigid_domains(6, 1), InvalidInput);
  CHECK_THROWS_AS(search_rigid_domains(5, 3), InvalidInput);
  CHECK_THROWS_AS(search_rigid_domains(7, 2, SearchOptions{1, Limits{100}}), GuardExceeded);
}

TEST_CASE("search families") {
  Field f2 = Field::make_q(2);
  auto g1 = search_family(f2, 1);
  CHECK_FALSE(g1.empty());
  for (const auto& c : g1) CHECK(c.genus() == 1);
  CHECK(std::is_sorted(g1.begin(), g1.end(),
                       [](const CurveModel& a, const CurveModel& b) { return a.sort_key() < b.sort_key(); }));
}
