#include <algorithm>
#include <numeric>

#include "fqrigid/modular.hpp"

namespace fqrigid {

SubgroupFrame::SubgroupFrame(const Poly& modulus, std::vector<MatrixModF> gens, const Limits& limits)
    : SubgroupFrame(AmbientGroup::make(modulus, limits), std::move(gens)) {}

SubgroupFrame::SubgroupFrame(std::shared_ptr<const AmbientGroup> amb, std::vector<MatrixModF> gens)
    : ambient_(std::move(amb)), gens_(std::move(gens)) {
  const auto& R = ambient_->ring();
  std::vector<std::uint32_t> ids;
  for (const auto& m : gens_) {
    for (auto e : m)
      if (e >= R.size()) throw InvalidInput("matrix entry is not a reduced residue");
    if (!ambient_->contains(m))
      throw InvalidInput("generator determinant is not in F_q^*; not the image of an element of GL_2(A)");
    ids.push_back(ambient_->id(m));
  }
  h_ = generate(*ambient_, ids);
}

SubgroupFrame SubgroupFrame::from_polys(const Poly& modulus, const std::vector<std::array<Poly, 4>>& gens,
                                        const Limits& limits) {
  auto amb = AmbientGroup::make(modulus, limits);
  std::vector<MatrixModF> reduced;
  for (const auto& g : gens)
    reduced.push_back({amb->ring().encode(g[0]), amb->ring().encode(g[1]), amb->ring().encode(g[2]),
                       amb->ring().encode(g[3])});
  return SubgroupFrame(std::move(amb), std::move(reduced));
}

SubgroupFrame SubgroupFrame::gamma_T(const Field& f, const Limits& limits) {
  return SubgroupFrame(Poly::x(f), {}, limits);
}

SubgroupFrame SubgroupFrame::full(const Poly& modulus, const Limits& limits) {
  auto amb = AmbientGroup::make(modulus, limits);
  std::vector<MatrixModF> gens;
  for (auto id : amb->generators()) gens.push_back(amb->matrix(id));
  return SubgroupFrame(std::move(amb), std::move(gens));
}

SubgroupFrame SubgroupFrame::full_congruence(const Poly& modulus, const Limits& limits) {
  return SubgroupFrame(modulus, {}, limits);
}

SubgroupFrame SubgroupFrame::conjugated(std::uint32_t g_id) const {
  const auto& G = *ambient_;
  const std::uint32_t g_inv = G.inv(g_id);
  std::vector<MatrixModF> gens;
  for (const auto& m : gens_) gens.push_back(G.matrix(G.mul(G.mul(g_id, G.id(m)), g_inv)));
  return SubgroupFrame(ambient_, std::move(gens));
}

bool QuasiLevel::contains(const Poly& a) const {
  QuotientRing tmp(modulus);
  return member[tmp.encode(a)];
}

namespace {

// Reduced row echelon form over F_q with pivots on the highest nonzero
// coordinate.
std::vector<std::vector<Elem>> echelon(const Field& F, std::vector<std::vector<Elem>> rows, unsigned dim) {
  std::vector<std::vector<Elem>> basis;
  for (int col = static_cast<int>(dim) - 1; col >= 0; --col) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r[col] != 0; });
    if (it == rows.end()) continue;
    std::vector<Elem> piv = *it;
    rows.erase(it);
    Elem s = F.inv(piv[col]);
    for (auto& e : piv) e = F.mul(e, s);
    auto eliminate = [&](std::vector<Elem>& r) {
      Elem c = r[col];
      if (c == 0) return;
      for (unsigned i = 0; i < dim; ++i) r[i] = F.sub(r[i], F.mul(c, piv[i]));
    };
    for (auto& r : rows) eliminate(r);
    for (auto& b : basis) eliminate(b);
    basis.push_back(std::move(piv));
  }
  std::reverse(basis.begin(), basis.end());  // ascending pivot degree
  return basis;
}

}  // namespace

QuasiLevel quasi_level(const SubgroupFrame& frame) {
  const AmbientGroup& G = frame.ambient();
  const QuotientRing& R = G.ring();
  const Field& F = R.field();
  Subgroup core = normal_core(G, frame.subgroup());

  QuasiLevel ql{R.modulus(), {}, std::vector<bool>(R.size(), false)};
  std::vector<std::uint32_t> members;
  for (std::uint32_t a = 0; a < R.size(); ++a)
    if (core.contains(G.unipotent(a))) {
      ql.member[a] = true;
      members.push_back(a);
    }

  if (!ql.member[0]) throw NotASubspace("quasi-level misses zero");
  for (auto a : members) {
    for (auto b : members)
      if (!ql.member[R.add(a, b)]) throw NotASubspace("quasi-level not closed under addition");
    for (Elem c = 0; c < F.q(); ++c)
      if (!ql.member[R.mul(c, a)]) throw NotASubspace("quasi-level not closed under F_q scaling");
  }

  std::vector<std::vector<Elem>> rows;
  for (auto a : members) rows.push_back(R.coords(a));
  for (auto& v : echelon(F, std::move(rows), R.dim())) ql.basis.emplace_back(F, v);
  return ql;
}

MonicIdeal level_of(const QuasiLevel& ql) {
  const Poly& f = ql.modulus;
  const Field& F = f.field();
  const unsigned m = static_cast<unsigned>(f.degree());
  QuotientRing R(f);
  for (unsigned e = 0; e <= m; ++e) {
    const std::uint64_t count = ipow_sat(F.q(), e);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly h = Poly::monic_from_index(F, e, idx);
      if (!divides(h, f)) continue;
      bool inside = true;
      Poly t_i = h;
      for (unsigned i = 0; i + e < m && inside; ++i) {
        inside = ql.member[R.encode(t_i)];
        t_i = t_i * Poly::x(F);
      }
      if (inside) return MonicIdeal(h);
    }
  }
  return MonicIdeal(f);
}

MonicIdeal level(const SubgroupFrame& frame) { return level_of(quasi_level(frame)); }

ModularVerdict is_modular_frame(const SubgroupFrame& frame) {
  const Poly& f = frame.modulus();
  const Field& F = frame.field();
  if (!divides(Poly::x(F), f)) return {false, "T does not divide the modulus, so Gamma is not inside Gamma_T"};
  auto const_term = [&](std::uint32_t code) { return static_cast<Elem>(code % F.q()); };
  for (const auto& m : frame.generators()) {
    if (const_term(m[0]) != 1 || const_term(m[1]) != 0 || const_term(m[2]) != 0 || const_term(m[3]) != 1)
      return {false, "a generator is not congruent to 1 mod T, so Gamma is not inside Gamma_T"};
  }
  MonicIdeal l = level(frame);
  if (l.is_unit()) return {false, "level is (1)"};
  return {true, "Gamma is inside Gamma_T with level " + l.to_string()};
}

bool is_classically_modular_frame(const SubgroupFrame& frame) {
  if (!is_modular_frame(frame).modular) return false;
  QuasiLevel ql = quasi_level(frame);
  MonicIdeal l = level_of(ql);
  return ql.dimension() == static_cast<unsigned>(frame.modulus().degree() - l.generator().degree());
}

std::uint64_t cusp_count(const SubgroupFrame& frame) {
  const AmbientGroup& G = frame.ambient();
  const QuotientRing& R = G.ring();
  const Field& F = R.field();
  const std::uint32_t r = R.size();

  // First columns of ambient elements, i.e. the cosets G / P up to F_q^*.
  std::vector<bool> column(std::size_t{r} * r, false);
  for (auto x : G.elements()) {
    auto m = G.matrix(x);
    column[m[0] + r * m[2]] = true;
  }

  std::vector<std::uint32_t> parent(std::size_t{r} * r);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  for (std::uint32_t v = 0; v < r * r; ++v) {
    if (!column[v]) continue;
    const std::uint32_t a = v % r, c = v / r;
    for (Elem l = 1; l < F.q(); ++l) unite(v, R.mul(l, a) + r * R.mul(l, c));
    for (const auto& m : frame.generators()) {
      std::uint32_t a2 = R.add(R.mul(m[0], a), R.mul(m[1], c));
      std::uint32_t c2 = R.add(R.mul(m[2], a), R.mul(m[3], c));
      unite(v, a2 + r * c2);
    }
  }
  std::uint64_t orbits = 0;
  for (std::uint32_t v = 0; v < r * r; ++v)
    if (column[v] && find(v) == v) ++orbits;
  return orbits;
}

}  // namespace fqrigid
