#include <algorithm>
#include <deque>

#include "fqrigid/modular.hpp"

namespace fqrigid {

QuotientRing::QuotientRing(const Poly& modulus, const Limits& limits)
    : field_(modulus.field()), modulus_(modulus.monic()) {
  if (modulus_.degree() < 1) throw InvalidInput("quotient modulus must have positive degree");
  const std::uint64_t r = ipow_sat(field_.q(), static_cast<unsigned>(modulus_.degree()));
  check_guard("quotient ring size", r, limits);
  size_ = static_cast<std::uint32_t>(r);
  const std::uint64_t cells = std::uint64_t{size_} * size_;
  check_guard("quotient ring tables", cells, {limits.max_elements * 4});
  std::vector<Poly> elems;
  elems.reserve(size_);
  for (std::uint32_t a = 0; a < size_; ++a) elems.push_back(decode(a));
  add_.resize(cells);
  mul_.resize(cells);
  neg_.resize(size_);
  inv_.assign(size_, size_);
  for (std::uint32_t a = 0; a < size_; ++a) {
    neg_[a] = encode(-elems[a]);
    for (std::uint32_t b = 0; b < size_; ++b) {
      add_[a * size_ + b] = encode(elems[a] + elems[b]);
      std::uint32_t m = encode(elems[a] * elems[b]);
      mul_[a * size_ + b] = m;
      if (m == 1) inv_[a] = b;
    }
  }
}

std::uint32_t QuotientRing::inv(std::uint32_t a) const {
  if (!is_unit(a)) throw std::domain_error("residue is not a unit");
  return inv_[a];
}

std::uint32_t QuotientRing::encode(const Poly& a) const {
  Poly r = a % modulus_;
  std::uint64_t code = 0;
  for (std::size_t i = r.coeffs().size(); i-- > 0;) code = code * field_.q() + r.coeffs()[i];
  return static_cast<std::uint32_t>(code);
}

Poly QuotientRing::decode(std::uint32_t code) const {
  std::vector<Elem> c(dim(), 0);
  for (unsigned i = 0; i < dim(); ++i) {
    c[i] = code % field_.q();
    code /= field_.q();
  }
  return Poly(field_, std::move(c));
}

std::vector<Elem> QuotientRing::coords(std::uint32_t code) const {
  std::vector<Elem> c(dim(), 0);
  for (unsigned i = 0; i < dim(); ++i) {
    c[i] = code % field_.q();
    code /= field_.q();
  }
  return c;
}

std::shared_ptr<const AmbientGroup> AmbientGroup::make(const Poly& modulus, const Limits& limits) {
  return std::make_shared<const AmbientGroup>(modulus, limits);
}

AmbientGroup::AmbientGroup(const Poly& modulus, const Limits& limits) : ring_(modulus, limits) {
  const std::uint64_t r = ring_.size();
  const std::uint64_t space = r * r * r * r;
  check_guard("ambient matrix space", space, limits);
  id_space_ = static_cast<std::uint32_t>(space);
  identity_ = id({1, 0, 0, 1});
  for (std::uint32_t x = 0; x < id_space_; ++x)
    if (contains(matrix(x))) elements_.push_back(x);

  // Greedy generating set: walk elements in id order, keep those not yet
  // generated.
  std::vector<bool> member(id_space_, false);
  std::size_t reached = 0;
  for (std::uint32_t x : elements_) {
    if (reached == elements_.size()) break;
    if (member[x]) continue;
    generators_.push_back(x);
    Subgroup s = generate(*this, generators_);
    member = s.member;
    reached = s.order();
  }
}

std::uint32_t AmbientGroup::id(const MatrixModF& m) const {
  const std::uint32_t r = ring_.size();
  return m[0] + r * (m[1] + r * (m[2] + r * m[3]));
}

MatrixModF AmbientGroup::matrix(std::uint32_t x) const {
  const std::uint32_t r = ring_.size();
  MatrixModF m;
  for (auto& e : m) {
    e = x % r;
    x /= r;
  }
  return m;
}

std::uint32_t AmbientGroup::det(const MatrixModF& m) const {
  return ring_.sub(ring_.mul(m[0], m[3]), ring_.mul(m[1], m[2]));
}

std::uint32_t AmbientGroup::mul(std::uint32_t x, std::uint32_t y) const {
  const auto a = matrix(x), b = matrix(y);
  const auto& R = ring_;
  return id({R.add(R.mul(a[0], b[0]), R.mul(a[1], b[2])), R.add(R.mul(a[0], b[1]), R.mul(a[1], b[3])),
             R.add(R.mul(a[2], b[0]), R.mul(a[3], b[2])), R.add(R.mul(a[2], b[1]), R.mul(a[3], b[3]))});
}

std::uint32_t AmbientGroup::inv(std::uint32_t x) const {
  const auto a = matrix(x);
  const auto& R = ring_;
  std::uint32_t di = R.inv(det(a));
  return id({R.mul(di, a[3]), R.mul(di, R.neg(a[1])), R.mul(di, R.neg(a[2])), R.mul(di, a[0])});
}

Subgroup generate(const AmbientGroup& g, const std::vector<std::uint32_t>& gens) {
  Subgroup s;
  s.member.assign(g.id_space(), false);
  std::deque<std::uint32_t> queue{g.identity()};
  s.member[g.identity()] = true;
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    s.elements.push_back(x);
    for (std::uint32_t t : gens) {
      std::uint32_t y = g.mul(x, t);
      if (!s.member[y]) {
        s.member[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

Subgroup normal_core(const AmbientGroup& g, const Subgroup& h) {
  Subgroup k = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t s : g.generators()) {
      // keep x in K only if s^{-1} x s lies in K, i.e. x in s K s^{-1}
      const std::uint32_t s_inv = g.inv(s);
      std::vector<std::uint32_t> kept;
      for (std::uint32_t x : k.elements) {
        if (k.member[g.mul(g.mul(s_inv, x), s)]) kept.push_back(x);
      }
      if (kept.size() != k.elements.size()) {
        changed = true;
        std::vector<bool> mask(g.id_space(), false);
        for (auto x : kept) mask[x] = true;
        k.member = std::move(mask);
        k.elements = std::move(kept);
      }
    }
  }
  return k;
}

}  // namespace fqrigid
