#include <algorithm>

#include "fqrigid/modular.hpp"

namespace fqrigid {

unsigned matrix_order(const std::array<Poly, 4>& m) {
  const Field& F = m[0].field();
  const Poly tr = m[0] + m[3];
  const Poly det = m[0] * m[3] - m[1] * m[2];
  if (det.is_zero() || !det.is_constant() || !tr.is_constant()) return 0;
  const Elem t = tr.coeff(0), d = det.coeff(0);

  const bool scalar = m[1].is_zero() && m[2].is_zero() && m[0] == m[3];
  if (scalar) {
    const Elem a = m[0].coeff(0);
    unsigned k = 1;
    for (Elem x = a; x != 1; x = F.mul(x, a)) ++k;
    return k;
  }
  // Cayley-Hamilton: M^k = alpha_k M + beta_k I with alpha, beta in F_q, and
  // {M, I} independent, so M^k = I iff (alpha_k, beta_k) = (0, 1). The pair
  // sequence is periodic with period at most q^2.
  Elem alpha = 1, beta = 0;
  const std::uint64_t limit = std::uint64_t{F.q()} * F.q() + 1;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (alpha == 0 && beta == 1) return static_cast<unsigned>(k);
    Elem na = F.add(F.mul(alpha, t), beta);
    Elem nb = F.neg(F.mul(alpha, d));
    alpha = na;
    beta = nb;
  }
  throw std::logic_error("matrix power sequence did not close");
}

std::vector<TorsionElement> torsion_scan(const SubgroupFrame& frame, unsigned degree_bound, const Limits& limits) {
  const Field& F = frame.field();
  const AmbientGroup& G = frame.ambient();
  const QuotientRing& R = G.ring();
  const std::uint64_t per_entry = ipow_sat(F.q(), degree_bound + 1);
  check_guard("torsion scan matrices", ipow_sat(per_entry, 4), limits);

  std::vector<Poly> polys;
  std::vector<std::uint32_t> codes;
  for (std::uint64_t i = 0; i < per_entry; ++i) {
    std::vector<Elem> c(degree_bound + 1);
    std::uint64_t t = i;
    for (auto& e : c) {
      e = static_cast<Elem>(t % F.q());
      t /= F.q();
    }
    polys.emplace_back(F, std::move(c));
  }
  std::sort(polys.begin(), polys.end());
  for (const auto& p : polys) codes.push_back(R.encode(p));

  std::vector<TorsionElement> out;
  const std::size_t N = polys.size();
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t c = 0; c < N; ++c)
        for (std::size_t d = 0; d < N; ++d) {
          if (!(polys[a] + polys[d]).is_constant()) continue;
          if (!frame.subgroup().contains(G.id({codes[a], codes[b], codes[c], codes[d]}))) continue;
          std::array<Poly, 4> m{polys[a], polys[b], polys[c], polys[d]};
          unsigned ord = matrix_order(m);
          if (ord > 1) out.push_back({std::move(m), ord});
        }
  return out;
}

}  // namespace fqrigid
