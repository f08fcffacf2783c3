#include "fqrigid/zeta.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace fqrigid {

namespace {

__extension__ using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("zeta coefficient overflow");
  return static_cast<std::int64_t>(v);
}

i128 qpow(std::uint64_t q, unsigned e) {
  i128 r = 1;
  for (unsigned i = 0; i < e; ++i) r *= q;
  return r;
}

// Power sums s_k = sum alpha_i^k of inverse roots from P's coefficients.
std::vector<i128> power_sums(const std::vector<std::int64_t>& a, unsigned upto) {
  std::vector<i128> s(upto + 1, 0);
  auto coeff = [&](unsigned i) -> i128 { return i < a.size() ? a[i] : 0; };
  for (unsigned k = 1; k <= upto; ++k) {
    // k a_k = -sum_{i=1}^{k} s_i a_{k-i}
    i128 acc = -static_cast<i128>(k) * coeff(k);
    for (unsigned i = 1; i < k; ++i) acc -= s[i] * coeff(k - i);
    s[k] = acc;
  }
  return s;
}

}  // namespace

std::int64_t ZetaNumerator::at_one() const {
  i128 acc = 0;
  for (auto c : coeffs) acc += c;
  return narrow(acc);
}

std::int64_t ZetaNumerator::predicted_count(unsigned k) const {
  auto s = power_sums(coeffs, k);
  return narrow(qpow(q, k) + 1 - s[k]);
}

bool ZetaNumerator::satisfies_functional_equation() const {
  if (coeffs.size() != 2 * genus + 1 || coeffs[0] != 1) return false;
  for (unsigned i = 0; i <= genus; ++i)
    if (static_cast<i128>(coeffs[2 * genus - i]) != qpow(q, genus - i) * coeffs[i]) return false;
  return true;
}

double ZetaNumerator::max_root_deviation() const {
  if (genus == 0) return 0.0;
  // Inverse roots of P are the roots of the reversed polynomial
  // T^{2g} P(1/T), which is monic since a_0 = 1.
  const int n = static_cast<int>(2 * genus);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -static_cast<double>(coeffs[n - i]);
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  const double target = std::sqrt(static_cast<double>(q));
  double worst = 0.0;
  for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(std::abs(es.eigenvalues()[i]) - target));
  return worst;
}

std::string ZetaNumerator::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    std::int64_t c = coeffs[i];
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    std::uint64_t mag = static_cast<std::uint64_t>(c < 0 ? -c : c);
    if (i == 0 || mag != 1) out += std::to_string(mag);
    if (i > 0) out += "T" + (i > 1 ? "^" + std::to_string(i) : std::string());
  }
  return out.empty() ? "0" : out;
}

ZetaNumerator zeta_from_counts(std::uint64_t q, unsigned genus, const std::vector<std::uint64_t>& counts) {
  if (counts.size() < genus + 1)
    throw InvalidInput("need N_1..N_{g+1} to build and verify the zeta numerator");
  ZetaNumerator z;
  z.q = q;
  z.genus = genus;
  z.counts.assign(counts.begin(), counts.begin() + genus + 1);
  z.coeffs.assign(2 * genus + 1, 0);
  z.coeffs[0] = 1;
  std::vector<i128> s(genus + 1, 0);
  for (unsigned k = 1; k <= genus; ++k) s[k] = qpow(q, k) + 1 - static_cast<i128>(counts[k - 1]);
  for (unsigned k = 1; k <= genus; ++k) {
    i128 acc = 0;
    for (unsigned i = 1; i <= k; ++i) acc += s[i] * z.coeffs[k - i];
    if (acc % k != 0) throw InconsistentCounts("non-integral zeta coefficient at degree " + std::to_string(k));
    z.coeffs[k] = narrow(-acc / k);
  }
  for (unsigned i = 0; i < genus; ++i) z.coeffs[2 * genus - i] = narrow(qpow(q, genus - i) * z.coeffs[i]);

  const unsigned check = genus + 1;
  const std::int64_t predicted = z.predicted_count(check);
  if (predicted != static_cast<std::int64_t>(counts[check - 1]))
    throw InconsistentCounts("N_" + std::to_string(check) + " counted " + std::to_string(counts[check - 1]) +
                             " but P(T) predicts " + std::to_string(predicted));
  if (z.at_one() < 1) throw InconsistentCounts("P(1) < 1");
  return z;
}

ZetaNumerator zeta_numerator(const CurveModel& curve, const Limits& limits) {
  const unsigned g = curve.genus();
  std::vector<std::uint64_t> counts;
  for (unsigned k = 1; k <= g + 1; ++k) counts.push_back(count_points(curve, k, limits));
  return zeta_from_counts(curve.field().q(), g, counts);
}

std::uint64_t class_number(const CurveModel& curve, const Limits& limits) {
  return static_cast<std::uint64_t>(zeta_numerator(curve, limits).at_one());
}

}  // namespace fqrigid
