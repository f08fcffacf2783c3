#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fqrigid/limits.hpp"

namespace fqrigid {

/// Element of a finite field, encoded by its coordinates in the power basis
/// of the field modulus read as base-p digits: code = sum c_i p^i.
/// The integer order of codes is the canonical element order.
using Elem = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Returns (p, n) with q = p^n, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

class Field;

/// Image of every element of a subfield inside a larger field.
class Embedding {
 public:
  Embedding() = default;
  Embedding(std::vector<Elem> image) : image_(std::move(image)) {}
  Elem operator()(Elem a) const { return image_.at(a); }
  std::size_t size() const { return image_.size(); }

 private:
  std::vector<Elem> image_;
};

/// The finite field F_{p^n}, defined by the least monic irreducible of
/// degree n over F_p. Handles are cheap to copy and immutable.
class Field {
 public:
  static Field make(std::uint32_t p, std::uint32_t n, const Limits& limits = {});
  static Field make_q(std::uint64_t q, const Limits& limits = {});

  std::uint32_t p() const noexcept;
  std::uint32_t n() const noexcept;
  std::uint32_t q() const noexcept;

  /// Coefficients of the defining modulus over F_p, ascending, monic.
  const std::vector<std::uint32_t>& modulus() const noexcept;

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem from_int(std::int64_t v) const;
  /// Least element whose powers exhaust the multiplicative group.
  Elem primitive() const noexcept;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// x -> x^p
  Elem frobenius(Elem a) const;

  /// Discrete log to the base primitive(); a must be nonzero.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t k) const;

  bool is_square(Elem a) const;
  std::optional<Elem> sqrt(Elem a) const;

  /// Absolute trace to F_p, returned as an integer in [0, p).
  std::uint32_t trace_to_prime(Elem a) const;

  /// Coordinates of a over F_p (length n).
  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;

  /// Deterministic embedding of this field into `big`; n must divide
  /// big.n(). The generator of the power basis goes to the least root of
  /// the modulus in `big`.
  Embedding embed_into(const Field& big) const;

  /// The field F_{q^k} together with the embedding of this field.
  std::pair<Field, Embedding> extension(std::uint32_t k, const Limits& limits = {}) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.data_ == b.data_;
  }

 private:
  struct Data;
  explicit Field(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

}  // namespace fqrigid
