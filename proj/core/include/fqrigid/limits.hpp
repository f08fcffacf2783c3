#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fqrigid {

/// Upper bound on the number of objects any exhaustive routine may
/// enumerate. Exceeding it raises GuardExceeded; nothing is truncated.
struct Limits {
  std::uint64_t max_elements = 1'000'000;
};

class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, std::uint64_t requested,
                std::uint64_t bound)
      : std::runtime_error(what + ": " + std::to_string(requested) +
                           " exceeds guard " + std::to_string(bound)),
        requested_(requested),
        bound_(bound) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t bound() const noexcept { return bound_; }

 private:
  std::uint64_t requested_;
  std::uint64_t bound_;
};

/// Raised for malformed or mathematically invalid input.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void check_guard(const char* what, std::uint64_t requested,
                        const Limits& limits) {
  if (requested > limits.max_elements)
    throw GuardExceeded(what, requested, limits.max_elements);
}

/// Saturating integer power; returns UINT64_MAX on overflow.
inline std::uint64_t ipow_sat(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace fqrigid
