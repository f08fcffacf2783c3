#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fqrigid/places.hpp"
#include "fqrigid/zeta.hpp"

namespace fqrigid {

/// Ring of functions on `curve` regular away from the closed point `point`.
class DrinfeldianDomain {
 public:
  /// Throws InvalidInput when the place does not lie on the curve.
  DrinfeldianDomain(CurveModel curve, Place point, const Limits& limits = {});

  const CurveModel& curve() const noexcept { return curve_; }
  const Place& point() const noexcept { return point_; }

 private:
  CurveModel curve_;
  Place point_;
};

/// Orders of the groups in 0 -> D1 -> Cl(K) -> Cl(B) -> D2 -> 0.
struct ClassGroupReport {
  std::uint64_t h_K = 0;
  unsigned deg_x = 0;
  std::uint64_t h_B = 0;
  std::uint64_t d1_order = 1;
  std::uint64_t d2_order = 0;
};

ClassGroupReport class_group_of_domain(const DrinfeldianDomain& domain, const Limits& limits = {});

/// |Cl(B)| computed directly from divisors and principal divisors.
/// Raised when enlarging the search bounds changes the answer.
class UnstableOracle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Order of Cl(B) by enumeration: divisors supported on places of degree
/// <= degree_bound away from x, modulo divisors of functions whose only
/// pole is at x (pole order up to pole_bound multiples of deg x). The
/// answer is recomputed with both bounds raised by one and must agree.
/// Supported for the projective line.
std::uint64_t class_group_oracle(const DrinfeldianDomain& domain, unsigned degree_bound,
                                 unsigned pole_bound = 2, const Limits& limits = {});

bool is_uniformizationally_rigid(const DrinfeldianDomain& domain, const Limits& limits = {});

struct RigidDomainEntry {
  std::uint64_t q = 0;
  CurveModel curve;
  Place place;
  ZetaNumerator zeta;
  ClassGroupReport report;
};

struct RigidSearchResult {
  std::uint64_t q = 0;
  unsigned genus_max = 0;
  std::vector<RigidDomainEntry> standard;
  std::vector<RigidDomainEntry> exceptional;
  /// Number of candidate models examined per genus (index = genus).
  std::vector<std::uint64_t> candidates_per_genus;
  /// Number of degree-one places of P^1; all give isomorphic domains.
  std::uint64_t standard_place_count = 0;
};

struct SearchOptions {
  unsigned workers = 1;
  Limits limits{};
};

/// Exhaustive search for Drinfeldian domains with trivial class group over
/// the supported model families up to genus_max (at most 2). Exceptional
/// entries are deduplicated by (genus, zeta numerator, place degree).
RigidSearchResult search_rigid_domains(std::uint64_t q, unsigned genus_max, const SearchOptions& opts = {});

/// Models enumerated by the search for the given genus, in canonical order.
std::vector<CurveModel> search_family(const Field& f, unsigned genus, const Limits& limits = {});

}  // namespace fqrigid
