#include "fqrigid/curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace fqrigid {

std::string kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::ProjectiveLine: return "projective-line";
    case CurveKind::SmoothPlane: return "smooth-plane";
    case CurveKind::Hyperelliptic: return "hyperelliptic";
    case CurveKind::ArtinSchreier: return "artin-schreier";
  }
  return "unknown";
}

std::optional<CurveKind> parse_kind(const std::string& name) {
  for (auto k : {CurveKind::ProjectiveLine, CurveKind::SmoothPlane, CurveKind::Hyperelliptic,
                 CurveKind::ArtinSchreier})
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

namespace {

// Plane form with coefficients in an extension field.
struct PlaneForm {
  const Field* F;
  std::vector<Monomial> terms;

  Elem eval(Elem x, Elem y, Elem z) const {
    Elem acc = 0;
    for (const auto& t : terms) {
      Elem v = t.coeff;
      v = F->mul(v, F->pow(x, t.ex));
      v = F->mul(v, F->pow(y, t.ey));
      v = F->mul(v, F->pow(z, t.ez));
      acc = F->add(acc, v);
    }
    return acc;
  }
};

PlaneForm map_form(const std::vector<Monomial>& terms, const Field& big, const Embedding& emb) {
  PlaneForm pf{&big, {}};
  for (const auto& t : terms) pf.terms.push_back({emb(t.coeff), t.ex, t.ey, t.ez});
  return pf;
}

PlaneForm partial(const PlaneForm& f, int var) {
  PlaneForm d{f.F, {}};
  for (auto t : f.terms) {
    unsigned& e = var == 0 ? t.ex : var == 1 ? t.ey : t.ez;
    if (e == 0) continue;
    Elem mult = f.F->from_int(e % f.F->p());
    t.coeff = f.F->mul(t.coeff, mult);
    --e;
    if (t.coeff != 0) d.terms.push_back(t);
  }
  return d;
}

// Calls visit(x, y, z) for every normalised point of P^2(F).
template <typename Visit>
void for_each_plane_point(const Field& F, Visit&& visit) {
  for (Elem x = 0; x < F.q(); ++x)
    for (Elem y = 0; y < F.q(); ++y) visit(x, y, Elem{1});
  for (Elem x = 0; x < F.q(); ++x) visit(x, Elem{1}, Elem{0});
  visit(Elem{1}, Elem{0}, Elem{0});
}

std::pair<Field, Embedding> extension_of(const Field& base, unsigned k, const Limits& limits) {
  return base.extension(k, limits);
}

void check_curve_field(const Field& base, unsigned k, const Limits& limits) {
  if (k == 0) throw InvalidInput("extension degree must be positive");
  check_guard("extension field size", ipow_sat(base.q(), k), limits);
}

}  // namespace

Elem weierstrass_discriminant(const Field& f, const WeierstrassCoeffs& a) {
  auto c = [&](std::int64_t v) { return f.from_int(v); };
  auto m = [&](Elem x, Elem y) { return f.mul(x, y); };
  auto ad = [&](Elem x, Elem y) { return f.add(x, y); };
  auto sb = [&](Elem x, Elem y) { return f.sub(x, y); };
  const Elem a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
  Elem b2 = ad(m(a1, a1), m(c(4), a2));
  Elem b4 = ad(m(c(2), a4), m(a1, a3));
  Elem b6 = ad(m(a3, a3), m(c(4), a6));
  Elem b8 = sb(ad(ad(m(m(a1, a1), a6), m(c(4), m(a2, a6))), m(a2, m(a3, a3))),
               ad(m(a1, m(a3, a4)), m(a4, a4)));
  Elem d = f.neg(m(m(b2, b2), b8));
  d = sb(d, m(c(8), m(b4, m(b4, b4))));
  d = sb(d, m(c(27), m(b6, b6)));
  d = ad(d, m(c(9), m(b2, m(b4, b6))));
  return d;
}

CurveModel CurveModel::projective_line(const Field& f) {
  CurveModel c(f, CurveKind::ProjectiveLine);
  c.genus_ = 0;
  return c;
}

CurveModel CurveModel::smooth_plane(const Field& f, std::vector<Monomial> terms, const Limits& limits) {
  std::map<std::tuple<unsigned, unsigned, unsigned>, Elem> merged;
  for (const auto& t : terms) {
    if (t.coeff >= f.q()) throw InvalidInput("coefficient code out of range");
    auto& slot = merged[{t.ex, t.ey, t.ez}];
    slot = f.add(slot, t.coeff);
  }
  CurveModel c(f, CurveKind::SmoothPlane);
  std::optional<unsigned> deg;
  // descending exponent order: x-heavy terms first
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
    if (it->second == 0) continue;
    auto [ex, ey, ez] = it->first;
    unsigned d = ex + ey + ez;
    if (deg && *deg != d) throw InvalidInput("plane form is not homogeneous");
    deg = d;
    c.terms_.push_back({it->second, ex, ey, ez});
  }
  if (!deg || *deg == 0) throw InvalidInput("plane form must have positive degree");
  c.plane_degree_ = *deg;
  c.genus_ = (*deg - 1) * (*deg - 2) / 2;

  // Recognise y^2 z + a1 xyz + a3 yz^2 = x^3 + a2 x^2 z + a4 xz^2 + a6 z^3.
  if (*deg == 3) {
    std::map<std::tuple<unsigned, unsigned, unsigned>, Elem> m;
    for (const auto& t : c.terms_) m[{t.ex, t.ey, t.ez}] = t.coeff;
    const std::vector<std::tuple<unsigned, unsigned, unsigned>> allowed = {
        {0, 2, 1}, {1, 1, 1}, {0, 1, 2}, {3, 0, 0}, {2, 0, 1}, {1, 0, 2}, {0, 0, 3}};
    bool shape = std::all_of(m.begin(), m.end(), [&](const auto& kv) {
      return std::find(allowed.begin(), allowed.end(), kv.first) != allowed.end();
    });
    auto get = [&](unsigned a, unsigned b, unsigned cc) {
      auto it = m.find({a, b, cc});
      return it == m.end() ? Elem{0} : it->second;
    };
    Elem lead_y = get(0, 2, 1), lead_x = get(3, 0, 0);
    if (shape && lead_y != 0 && f.add(lead_y, lead_x) == 0) {
      Elem s = f.inv(lead_y);
      auto norm = [&](Elem v) { return f.mul(v, s); };
      c.weier_ = WeierstrassCoeffs{norm(get(1, 1, 1)), f.neg(norm(get(2, 0, 1))), norm(get(0, 1, 2)),
                                   f.neg(norm(get(1, 0, 2))), f.neg(norm(get(0, 0, 3)))};
    }
  }

  if (c.weier_) {
    if (weierstrass_discriminant(f, *c.weier_) == 0) throw InvalidInput("singular Weierstrass cubic");
    return c;
  }

  // No Weierstrass shape: look for singular points over F_{q^k}, k = 1..deg,
  // as far as the guard allows.
  const Field& base = f;
  check_guard("plane points for smoothness check", ipow_sat(base.q(), 2), limits);
  for (unsigned k = 1; k <= *deg; ++k) {
    if (ipow_sat(base.q(), 2 * k) > limits.max_elements) break;
    auto [big, emb] = base.extension(k, limits);
    PlaneForm F = map_form(c.terms_, big, emb);
    PlaneForm Fx = partial(F, 0), Fy = partial(F, 1), Fz = partial(F, 2);
    bool singular = false;
    for_each_plane_point(big, [&](Elem x, Elem y, Elem z) {
      if (singular) return;
      if (F.eval(x, y, z) == 0 && Fx.eval(x, y, z) == 0 && Fy.eval(x, y, z) == 0 && Fz.eval(x, y, z) == 0)
        singular = true;
    });
    if (singular)
      throw InvalidInput("plane curve is singular over F_" + std::to_string(big.q()));
  }
  return c;
}

CurveModel CurveModel::weierstrass(const Field& f, const WeierstrassCoeffs& a) {
  for (Elem e : a)
    if (e >= f.q()) throw InvalidInput("coefficient code out of range");
  if (weierstrass_discriminant(f, a) == 0) throw InvalidInput("singular Weierstrass cubic");
  CurveModel c(f, CurveKind::SmoothPlane);
  c.plane_degree_ = 3;
  c.genus_ = 1;
  c.weier_ = a;
  // Same descending order that smooth_plane produces.
  auto push = [&](Elem v, unsigned ex, unsigned ey, unsigned ez) {
    if (v != 0) c.terms_.push_back({v, ex, ey, ez});
  };
  push(f.neg(1), 3, 0, 0);
  push(f.neg(a[1]), 2, 0, 1);
  push(a[0], 1, 1, 1);
  push(f.neg(a[3]), 1, 0, 2);
  push(1, 0, 2, 1);
  push(a[2], 0, 1, 2);
  push(f.neg(a[4]), 0, 0, 3);
  return c;
}

CurveModel CurveModel::hyperelliptic(const Poly& f) {
  const Field& F = f.field();
  if (F.p() == 2) throw InvalidInput("hyperelliptic model y^2 = f(x) needs odd characteristic");
  if (f.degree() < 1) throw InvalidInput("hyperelliptic f must have positive degree");
  if (!is_squarefree(f)) throw InvalidInput("hyperelliptic f must be squarefree");
  CurveModel c(F, CurveKind::Hyperelliptic);
  c.rhs_ = f;
  c.genus_ = static_cast<unsigned>((f.degree() - 1) / 2);
  return c;
}

CurveModel CurveModel::artin_schreier(const Poly& f) {
  const Field& F = f.field();
  if (f.degree() < 1) throw InvalidInput("Artin-Schreier f must have positive degree");
  if (static_cast<unsigned>(f.degree()) % F.p() == 0)
    throw InvalidInput("Artin-Schreier f must have degree prime to p");
  CurveModel c(F, CurveKind::ArtinSchreier);
  c.rhs_ = f;
  c.genus_ = (F.p() - 1) * static_cast<unsigned>(f.degree() - 1) / 2;
  return c;
}

namespace {
std::string term_string(Elem c, const std::string& mono) {
  if (mono.empty()) return std::to_string(c);
  return c == 1 ? mono : std::to_string(c) + "*" + mono;
}
std::string var_pow(char v, unsigned e) {
  if (e == 0) return "";
  return e == 1 ? std::string(1, v) : std::string(1, v) + "^" + std::to_string(e);
}
}  // namespace

std::string CurveModel::equation() const {
  switch (kind_) {
    case CurveKind::ProjectiveLine: return "P^1";
    case CurveKind::Hyperelliptic: return "y^2 = " + rhs_.to_string('x');
    case CurveKind::ArtinSchreier:
      return "y^" + std::to_string(field_.p()) + " - y = " + rhs_.to_string('x');
    case CurveKind::SmoothPlane: {
      std::string out;
      for (const auto& t : terms_) {
        std::string mono;
        for (auto [v, e] : {std::pair{'x', t.ex}, std::pair{'y', t.ey}, std::pair{'z', t.ez}}) {
          auto s = var_pow(v, e);
          if (s.empty()) continue;
          if (!mono.empty()) mono += "*";
          mono += s;
        }
        if (!out.empty()) out += "+";
        out += term_string(t.coeff, mono);
      }
      return out + " = 0";
    }
  }
  return "";
}

std::string CurveModel::poly_string() const {
  switch (kind_) {
    case CurveKind::ProjectiveLine: return "";
    case CurveKind::Hyperelliptic:
    case CurveKind::ArtinSchreier: return rhs_.to_string('x');
    case CurveKind::SmoothPlane: {
      auto eq = equation();
      return eq.substr(0, eq.size() - 4);
    }
  }
  return "";
}

std::vector<std::uint64_t> CurveModel::sort_key() const {
  std::vector<std::uint64_t> key{genus_, static_cast<std::uint64_t>(kind_)};
  if (kind_ == CurveKind::SmoothPlane) {
    key.push_back(plane_degree_);
    for (const auto& t : terms_) {
      key.push_back(t.ex);
      key.push_back(t.ey);
      key.push_back(t.coeff);
    }
  } else if (kind_ != CurveKind::ProjectiveLine) {
    key.push_back(static_cast<std::uint64_t>(rhs_.degree()));
    for (std::size_t i = rhs_.coeffs().size(); i-- > 0;) key.push_back(rhs_.coeffs()[i]);
  }
  return key;
}

std::uint64_t count_points(const CurveModel& curve, unsigned k, const Limits& limits) {
  const Field& base = curve.field();
  check_curve_field(base, k, limits);
  const std::uint64_t Q = ipow_sat(base.q(), k);
  switch (curve.kind()) {
    case CurveKind::ProjectiveLine: return Q + 1;
    case CurveKind::Hyperelliptic: {
      auto [F, emb] = extension_of(base, k, limits);
      Poly f = curve.rhs().mapped(F, emb);
      std::uint64_t n = 0;
      for (Elem x = 0; x < F.q(); ++x) {
        Elem v = f.eval(x);
        n += v == 0 ? 1 : (F.is_square(v) ? 2 : 0);
      }
      if (f.degree() % 2 == 1) n += 1;
      else n += F.is_square(f.lead()) ? 2 : 0;
      return n;
    }
    case CurveKind::ArtinSchreier: {
      auto [F, emb] = extension_of(base, k, limits);
      Poly f = curve.rhs().mapped(F, emb);
      std::uint64_t n = 1;
      for (Elem x = 0; x < F.q(); ++x)
        if (F.trace_to_prime(f.eval(x)) == 0) n += F.p();
      return n;
    }
    case CurveKind::SmoothPlane: {
      auto [F, emb] = extension_of(base, k, limits);
      if (const auto& w = curve.weierstrass_coeffs()) {
        const Elem a1 = emb((*w)[0]), a2 = emb((*w)[1]), a3 = emb((*w)[2]), a4 = emb((*w)[3]),
                   a6 = emb((*w)[4]);
        std::uint64_t n = 1;  // (0:1:0)
        for (Elem x = 0; x < F.q(); ++x) {
          Elem x2 = F.mul(x, x);
          Elem rhs = F.add(F.add(F.mul(x2, x), F.mul(a2, x2)), F.add(F.mul(a4, x), a6));
          Elem b = F.add(F.mul(a1, x), a3);
          // y^2 + b y - rhs = 0
          if (F.p() == 2) {
            if (b == 0) n += 1;
            else n += F.trace_to_prime(F.div(rhs, F.mul(b, b))) == 0 ? 2 : 0;
          } else {
            Elem disc = F.add(F.mul(b, b), F.mul(F.from_int(4), rhs));
            n += disc == 0 ? 1 : (F.is_square(disc) ? 2 : 0);
          }
        }
        return n;
      }
      check_guard("plane points", Q * Q + Q + 1, limits);
      PlaneForm form = map_form(curve.terms(), F, emb);
      std::uint64_t n = 0;
      for_each_plane_point(F, [&](Elem x, Elem y, Elem z) { n += form.eval(x, y, z) == 0; });
      return n;
    }
  }
  return 0;
}

std::vector<GeomPoint> enumerate_points(const CurveModel& curve, unsigned k, const Limits& limits) {
  const Field& base = curve.field();
  check_curve_field(base, k, limits);
  auto [F, emb] = extension_of(base, k, limits);
  std::vector<GeomPoint> pts;
  switch (curve.kind()) {
    case CurveKind::ProjectiveLine:
      for (Elem x = 0; x < F.q(); ++x) pts.push_back({false, {x, 0, 0}});
      pts.push_back({true, {0, 0, 0}});
      break;
    case CurveKind::Hyperelliptic: {
      Poly f = curve.rhs().mapped(F, emb);
      for (Elem x = 0; x < F.q(); ++x) {
        Elem v = f.eval(x);
        if (auto s = F.sqrt(v)) {
          pts.push_back({false, {x, *s, 0}});
          if (*s != 0) pts.push_back({false, {x, F.neg(*s), 0}});
        }
      }
      if (f.degree() % 2 == 1) {
        pts.push_back({true, {0, 0, 0}});
      } else if (auto s = F.sqrt(f.lead())) {
        pts.push_back({true, {*s, 0, 0}});
        pts.push_back({true, {F.neg(*s), 0, 0}});
      }
      break;
    }
    case CurveKind::ArtinSchreier: {
      Poly f = curve.rhs().mapped(F, emb);
      std::vector<std::vector<Elem>> fibre(F.q());
      for (Elem y = 0; y < F.q(); ++y) fibre[F.sub(F.pow(y, F.p()), y)].push_back(y);
      for (Elem x = 0; x < F.q(); ++x)
        for (Elem y : fibre[f.eval(x)]) pts.push_back({false, {x, y, 0}});
      pts.push_back({true, {0, 0, 0}});
      break;
    }
    case CurveKind::SmoothPlane: {
      const std::uint64_t Q = F.q();
      check_guard("plane points", Q * Q + Q + 1, limits);
      PlaneForm form = map_form(curve.terms(), F, emb);
      for_each_plane_point(F, [&](Elem x, Elem y, Elem z) {
        if (form.eval(x, y, z) == 0) pts.push_back({false, {x, y, z}});
      });
      break;
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

GeomPoint frobenius_q(const CurveModel& curve, const Field& big, const GeomPoint& pt) {
  const std::uint64_t q = curve.field().q();
  GeomPoint out = pt;
  for (auto& c : out.c) c = big.pow(c, q);
  return out;
}

bool lies_on(const CurveModel& curve, const Field& big, const GeomPoint& pt) {
  const Field& base = curve.field();
  if (big.p() != base.p() || big.n() % base.n() != 0) return false;
  Embedding emb = base.embed_into(big);
  switch (curve.kind()) {
    case CurveKind::ProjectiveLine: return true;
    case CurveKind::Hyperelliptic: {
      Poly f = curve.rhs().mapped(big, emb);
      if (pt.infinity) {
        if (f.degree() % 2 == 1) return pt.c == std::array<Elem, 3>{0, 0, 0};
        return big.mul(pt.c[0], pt.c[0]) == f.lead();
      }
      return big.mul(pt.c[1], pt.c[1]) == f.eval(pt.c[0]);
    }
    case CurveKind::ArtinSchreier: {
      if (pt.infinity) return pt.c == std::array<Elem, 3>{0, 0, 0};
      Poly f = curve.rhs().mapped(big, emb);
      return big.sub(big.pow(pt.c[1], big.p()), pt.c[1]) == f.eval(pt.c[0]);
    }
    case CurveKind::SmoothPlane: {
      if (pt.c == std::array<Elem, 3>{0, 0, 0}) return false;
      return map_form(curve.terms(), big, emb).eval(pt.c[0], pt.c[1], pt.c[2]) == 0;
    }
  }
  return false;
}

}  // namespace fqrigid
