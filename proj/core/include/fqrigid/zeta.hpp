#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fqrigid/curve.hpp"

namespace fqrigid {

/// Numerator P(T) = sum a_i T^i of the zeta function, degree 2g.
struct ZetaNumerator {
  std::uint64_t q = 0;
  unsigned genus = 0;
  std::vector<std::int64_t> coeffs;  // a_0 .. a_{2g}
  std::vector<std::uint64_t> counts; // N_1 .. N_{g+1} as counted

  std::int64_t at_one() const;
  /// N_k implied by P(T), for any k >= 1.
  std::int64_t predicted_count(unsigned k) const;
  bool satisfies_functional_equation() const;
  /// max over inverse roots of | |alpha| - sqrt(q) |.
  double max_root_deviation() const;
  std::string to_string() const;

  friend bool operator==(const ZetaNumerator&, const ZetaNumerator&) = default;
};

/// Thrown when N_{g+1} predicted from P(T) disagrees with the counted value.
class InconsistentCounts : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// P(T) from point counts N_1..N_g via the log-derivative recurrence and
/// the functional equation, cross-checked against N_{g+1}.
ZetaNumerator zeta_from_counts(std::uint64_t q, unsigned genus, const std::vector<std::uint64_t>& counts);

ZetaNumerator zeta_numerator(const CurveModel& curve, const Limits& limits = {});

/// h = P(1) = |Pic^0(C)(F_q)|.
std::uint64_t class_number(const CurveModel& curve, const Limits& limits = {});

}  // namespace fqrigid
