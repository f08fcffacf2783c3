#include <algorithm>
#include <map>

#include "fqrigid/belyi.hpp"

namespace fqrigid {

unsigned BranchReport::ramification_total() const {
  unsigned total = 0;
  for (const auto& b : points)
    for (unsigned e : b.indices) total += e - 1;
  return total;
}

bool BranchReport::has_wild() const {
  for (const auto& b : points)
    for (bool w : b.wild)
      if (w) return true;
  return false;
}

namespace {

unsigned root_multiplicity(const Poly& f, Elem a) {
  const Field& F = f.field();
  Poly lin(F, {F.neg(a), 1});
  Poly g = f;
  unsigned m = 0;
  while (!g.is_zero()) {
    auto [quo, rem] = g.divmod(lin);
    if (!rem.is_zero()) break;
    g = std::move(quo);
    ++m;
  }
  return m;
}

}  // namespace

BranchReport branch_locus(const RationalMap& map, const Limits& limits) {
  const Field& base = map.field();
  const Poly w = map.wronskian();
  if (w.is_zero())
    throw InseparableMap("map " + map.to_string() +
                         " is inseparable: its derivative vanishes identically (a p-th power composite)");
  const unsigned d = map.degree();

  // Least extension in which the Wronskian splits.
  unsigned r = 1;
  Field big = base;
  Embedding emb = base.embed_into(base);
  std::vector<std::pair<Elem, int>> roots;
  while (true) {
    check_guard("branch locus splitting field", ipow_sat(base.q(), r), limits);
    std::tie(big, emb) = base.extension(r, limits);
    roots = roots_with_multiplicity(w.mapped(big, emb));
    int total = 0;
    for (auto& [a, m] : roots) total += m;
    if (total == w.degree()) break;
    ++r;
  }

  const RationalMap f = map.mapped(big, emb);
  const Poly& N = f.num();
  const Poly& D = f.den();
  std::map<ProjPoint, std::vector<unsigned>> ramified;

  for (auto& [a, m] : roots) {
    (void)m;
    Elem da = D.eval(a);
    if (da == 0) {
      unsigned e = root_multiplicity(D, a);
      if (e > 1) ramified[ProjPoint::inf()].push_back(e);
    } else {
      Elem c = big.div(N.eval(a), da);
      unsigned e = root_multiplicity(N - D.scaled(c), a);
      if (e > 1) ramified[ProjPoint::at(c)].push_back(e);
    }
  }
  // The point at infinity of the source.
  {
    ProjPoint image = f(ProjPoint::inf());
    unsigned e = 0;
    if (N.degree() != D.degree()) {
      e = static_cast<unsigned>(std::abs(N.degree() - D.degree()));
    } else {
      Poly diff = N - D.scaled(image.x);
      e = d - static_cast<unsigned>(std::max(diff.degree(), 0));
    }
    if (e > 1) ramified[image].push_back(e);
  }

  BranchReport rep{big, r, d, {}};
  for (auto& [value, es] : ramified) {
    std::sort(es.rbegin(), es.rend());
    unsigned sum = 0;
    for (auto e : es) sum += e;
    if (sum > d) throw std::logic_error("ramification indices exceed map degree");
    BranchPoint bp{value, es, {}};
    bp.indices.insert(bp.indices.end(), d - sum, 1u);
    for (unsigned e : bp.indices) bp.wild.push_back(e % base.p() == 0);
    rep.points.push_back(std::move(bp));
  }
  // finite values ascending, infinity last
  std::sort(rep.points.begin(), rep.points.end(), [](const BranchPoint& a, const BranchPoint& b) {
    if (a.value.infinity != b.value.infinity) return b.value.infinity;
    return a.value.x < b.value.x;
  });
  return rep;
}

CollapseResult collapse_pipeline(const RationalMap& cover, std::pair<ProjPoint, ProjPoint> targets,
                                 const Limits& limits) {
  const Field& base = cover.field();
  if (targets.first == targets.second) throw InvalidInput("target points must be distinct");
  for (const auto& t : {targets.first, targets.second})
    if (!t.infinity && t.x >= base.q()) throw InvalidInput("target point outside " + base.name());

  BranchReport initial = branch_locus(cover, limits);
  const Field E = initial.field;
  const Embedding to_e = base.embed_into(E);
  RationalMap g = cover.mapped(E, to_e);

  // (i) send a designated branch point to infinity
  ProjPoint designated = ProjPoint::inf();
  std::vector<ProjPoint> finite;
  for (const auto& bp : initial.points)
    if (!bp.value.infinity) finite.push_back(bp.value);
  const bool has_inf = std::any_of(initial.points.begin(), initial.points.end(),
                                   [](const BranchPoint& b) { return b.value.infinity; });
  if (!has_inf && !finite.empty()) {
    designated = finite.front();
    RationalMap move = mobius_map(E, 0, 1, 1, E.neg(designated.x));
    g = move.after(g);
    std::vector<ProjPoint> moved;
    for (std::size_t i = 1; i < finite.size(); ++i) moved.push_back(move(finite[i]));
    finite = std::move(moved);
  }

  // (ii) collapse the remaining finite branch points to 0
  std::optional<AdditivePolynomial> psi;
  if (!finite.empty()) {
    std::vector<Elem> pts;
    for (const auto& pt : finite) pts.push_back(pt.x);
    psi = additive_span_polynomial(E, pts, limits);
    if (psi->order() == 0) psi.reset();
    else g = RationalMap::polynomial(psi->to_poly()).after(g);
  }

  // (iii) send 0 -> t0 and inf -> t1
  auto lift = [&](const ProjPoint& t) { return t.infinity ? t : ProjPoint::at(to_e(t.x)); };
  const ProjPoint t0 = lift(targets.first), t1 = lift(targets.second);
  const RationalMap place = t1.infinity   ? mobius_map(E, 1, t0.x, 0, 1)
                            : t0.infinity ? mobius_map(E, t1.x, 1, 1, 0)
                                          : mobius_map(E, t1.x, t0.x, 1, 1);
  g = place.after(g);

  BranchReport final_rep = branch_locus(g, limits);
  const Embedding e_to_final = E.embed_into(final_rep.field);
  auto in_final = [&](const ProjPoint& t) { return t.infinity ? t : ProjPoint::at(e_to_final(t.x)); };
  const ProjPoint f0 = in_final(t0), f1 = in_final(t1);
  for (const auto& bp : final_rep.points)
    if (bp.value != f0 && bp.value != f1)
      throw PipelineEscaped("composite is branched at " + bp.value.to_string() + " outside the target pair");

  const unsigned ext = E.n() / base.n();
  return CollapseResult{g, std::move(initial), std::move(final_rep), psi, designated, ext};
}

}  // namespace fqrigid
