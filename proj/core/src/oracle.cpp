#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "fqrigid/drinfeldian.hpp"

namespace fqrigid {

namespace {

using Row = std::vector<std::int64_t>;

// |Z^n / span(rows)|, or 0 when the span has rank < n.
std::uint64_t lattice_index(std::vector<Row> rows, std::size_t n) {
  std::uint64_t det = 1;
  std::size_t top = 0;
  for (std::size_t col = 0; col < n; ++col) {
    // Euclid on column `col` among rows[top..] until one nonzero remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (best == rows.size() || std::llabs(rows[r][col]) < std::llabs(rows[best][col])))
          best = r;
      if (best == rows.size()) return 0;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        std::int64_t f = rows[r][col] / rows[top][col];
        for (std::size_t c = col; c < n; ++c) rows[r][c] -= f * rows[top][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    det *= static_cast<std::uint64_t>(std::llabs(rows[top][col]));
    ++top;
  }
  return det;
}

std::uint64_t oracle_once(const DrinfeldianDomain& domain, unsigned degree_bound, unsigned pole_bound,
                          const Limits& limits) {
  const Field& F = domain.curve().field();
  const Place& x = domain.point();
  const bool x_infinite = x.is_infinite();
  const unsigned dx = x.degree;

  // Generators of the divisor group of B: places of degree <= bound, not x.
  std::vector<Poly> primes;
  for (unsigned e = 1; e <= degree_bound; ++e)
    for (auto& p : poly_irreducibles(F, e, limits))
      if (x_infinite || p != *x.prime) primes.push_back(p);
  const std::size_t n = primes.size() + (x_infinite ? 0 : 1);
  if (n == 0) return 1;

  // Functions g / pi^k with the only pole at x; pole order k*deg x.
  const unsigned k = (degree_bound + pole_bound + dx - 1) / dx;
  const unsigned max_deg = k * dx;
  std::uint64_t total = 0;
  for (unsigned d = 0; d <= max_deg; ++d) total += ipow_sat(F.q(), d);
  check_guard("oracle function enumeration", total, limits);

  std::vector<Row> rows;
  for (unsigned d = 0; d <= max_deg; ++d) {
    const std::uint64_t count = ipow_sat(F.q(), d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = Poly::monic_from_index(F, d, idx);
      Row row(n, 0);
      for (std::size_t i = 0; i < primes.size() && g.degree() > 0; ++i) {
        while (g.degree() >= primes[i].degree()) {
          auto [quo, rem] = g.divmod(primes[i]);
          if (!rem.is_zero()) break;
          g = std::move(quo);
          ++row[i];
        }
      }
      if (!x_infinite)
        while (g.degree() > 0 && divides(*x.prime, g)) g = g / *x.prime;
      if (g.degree() > 0) continue;  // a factor outside the generator set
      if (!x_infinite) row[n - 1] = static_cast<std::int64_t>(max_deg) - d;
      if (std::any_of(row.begin(), row.end(), [](auto v) { return v != 0; })) rows.push_back(std::move(row));
    }
  }
  return lattice_index(std::move(rows), n);
}

}  // namespace

std::uint64_t class_group_oracle(const DrinfeldianDomain& domain, unsigned degree_bound, unsigned pole_bound,
                                 const Limits& limits) {
  if (domain.curve().kind() != CurveKind::ProjectiveLine)
    throw InvalidInput("class group oracle supports the projective line only");
  if (degree_bound == 0) throw InvalidInput("degree bound must be positive");
  std::uint64_t a = oracle_once(domain, degree_bound, pole_bound, limits);
  std::uint64_t b = oracle_once(domain, degree_bound + 1, pole_bound + 1, limits);
  if (a == 0 || a != b)
    throw UnstableOracle("class group order not stable: " + std::to_string(a) + " vs " + std::to_string(b));
  return a;
}

}  // namespace fqrigid
