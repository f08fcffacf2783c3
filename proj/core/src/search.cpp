#include <algorithm>
#include <map>
#include <thread>

#include "fqrigid/drinfeldian.hpp"

namespace fqrigid {

namespace {

Elem least_nonsquare(const Field& f) {
  for (Elem a = 1; a < f.q(); ++a)
    if (!f.is_square(a)) return a;
  return 0;
}

// Calls emit(coeffs) for every coefficient vector of length `len` over F_q.
template <typename Emit>
void for_each_vector(std::uint32_t q, std::size_t len, Emit&& emit) {
  std::vector<Elem> v(len, 0);
  while (true) {
    emit(v);
    std::size_t i = 0;
    while (i < len && ++v[i] == q) v[i++] = 0;
    if (i == len) return;
  }
}

// y^2 = f(x) with deg f = D. The leading coefficient is taken in
// {1, nonsquare} (rescaling y) and, when p does not divide D, the x^{D-1}
// coefficient is cleared by translating x.
void hyperelliptic_family(const Field& f, unsigned D, std::vector<CurveModel>& out, const Limits& limits) {
  if (f.p() == 2) return;
  const bool shift_normal = D % f.p() != 0;
  const std::size_t free = shift_normal ? D - 1 : D;
  check_guard("hyperelliptic candidates", 2 * ipow_sat(f.q(), static_cast<unsigned>(free)), limits);
  for (Elem lead : {Elem{1}, least_nonsquare(f)}) {
    for_each_vector(f.q(), free, [&](const std::vector<Elem>& low) {
      std::vector<Elem> c(D + 1, 0);
      for (std::size_t i = 0; i < free; ++i) c[i] = low[i];
      c[D] = lead;
      Poly g(f, std::move(c));
      if (is_squarefree(g)) out.push_back(CurveModel::hyperelliptic(g));
    });
  }
}

// y^p - y = f(x), deg f = D prime to p.
void artin_schreier_family(const Field& f, unsigned D, std::vector<CurveModel>& out, const Limits& limits) {
  if (D % f.p() == 0) return;
  check_guard("Artin-Schreier candidates", (f.q() - 1) * ipow_sat(f.q(), D), limits);
  for (Elem lead = 1; lead < f.q(); ++lead) {
    for_each_vector(f.q(), D, [&](const std::vector<Elem>& low) {
      std::vector<Elem> c(low.begin(), low.end());
      c.push_back(lead);
      out.push_back(CurveModel::artin_schreier(Poly(f, std::move(c))));
    });
  }
}

void weierstrass_family(const Field& f, std::vector<CurveModel>& out, const Limits& limits) {
  check_guard("Weierstrass candidates", ipow_sat(f.q(), 5), limits);
  for_each_vector(f.q(), 5, [&](const std::vector<Elem>& a) {
    WeierstrassCoeffs w{a[0], a[1], a[2], a[3], a[4]};
    if (weierstrass_discriminant(f, w) != 0) out.push_back(CurveModel::weierstrass(f, w));
  });
}

// P(1) from N_1..N_g without the N_{g+1} cross-check; used as a filter.
std::int64_t class_number_from_counts(std::uint64_t q, unsigned g, const std::vector<std::uint64_t>& counts) {
  std::vector<std::int64_t> a(2 * g + 1, 0), s(g + 1, 0);
  a[0] = 1;
  std::int64_t qk = 1;
  for (unsigned k = 1; k <= g; ++k) {
    qk *= static_cast<std::int64_t>(q);
    s[k] = qk + 1 - static_cast<std::int64_t>(counts[k - 1]);
  }
  for (unsigned k = 1; k <= g; ++k) {
    std::int64_t acc = 0;
    for (unsigned i = 1; i <= k; ++i) acc += s[i] * a[k - i];
    a[k] = -acc / static_cast<std::int64_t>(k);
  }
  for (unsigned i = 0; i < g; ++i) {
    std::int64_t qp = 1;
    for (unsigned j = 0; j < g - i; ++j) qp *= static_cast<std::int64_t>(q);
    a[2 * g - i] = qp * a[i];
  }
  std::int64_t h = 0;
  for (auto c : a) h += c;
  return h;
}

}  // namespace

std::vector<CurveModel> search_family(const Field& f, unsigned genus, const Limits& limits) {
  std::vector<CurveModel> out;
  const std::uint32_t p = f.p();
  if (genus == 0) {
    out.push_back(CurveModel::projective_line(f));
  } else if (genus == 1) {
    weierstrass_family(f, out, limits);
    hyperelliptic_family(f, 3, out, limits);
    hyperelliptic_family(f, 4, out, limits);
  } else if (genus == 2) {
    hyperelliptic_family(f, 5, out, limits);
    hyperelliptic_family(f, 6, out, limits);
  } else {
    throw InvalidInput("search supports genus <= 2");
  }
  // Artin-Schreier degree D gives genus (p-1)(D-1)/2.
  if (genus > 0 && (2 * genus) % (p - 1) == 0) {
    unsigned D = 2 * genus / (p - 1) + 1;
    artin_schreier_family(f, D, out, limits);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CurveModel& a, const CurveModel& b) { return a.sort_key() < b.sort_key(); });
  return out;
}

RigidSearchResult search_rigid_domains(std::uint64_t q, unsigned genus_max, const SearchOptions& opts) {
  if (genus_max > 2) throw InvalidInput("genus_max above 2 is outside the supported search");
  const Field F = Field::make_q(q, opts.limits);
  const Limits& limits = opts.limits;
  RigidSearchResult res;
  res.q = q;
  res.genus_max = genus_max;

  // Standard: P^1 with a degree-one place. All q+1 such places are related
  // by automorphisms of P^1, so one representative is listed.
  {
    CurveModel line = CurveModel::projective_line(F);
    auto places = places_of_degree(line, 1, limits);
    res.standard_place_count = places.size();
    res.candidates_per_genus.push_back(1);
    DrinfeldianDomain dom(line, places.front(), limits);
    auto rep = class_group_of_domain(dom, limits);
    res.standard.push_back({q, line, places.front(), zeta_numerator(line, limits), rep});
  }

  for (unsigned g = 1; g <= genus_max; ++g) {
    const auto family = search_family(F, g, limits);
    res.candidates_per_genus.push_back(family.size());
    const unsigned workers = std::max(1u, opts.workers);
    std::vector<std::vector<std::size_t>> hits(workers);
    auto work = [&](unsigned w) {
      for (std::size_t i = w; i < family.size(); i += workers) {
        const CurveModel& c = family[i];
        std::vector<std::uint64_t> counts;
        counts.push_back(count_points(c, 1, limits));
        if (counts[0] == 0) continue;  // no degree-one place
        for (unsigned k = 2; k <= g; ++k) counts.push_back(count_points(c, k, limits));
        if (class_number_from_counts(q, g, counts) == 1) hits[w].push_back(i);
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    std::vector<std::size_t> merged;
    for (auto& h : hits) merged.insert(merged.end(), h.begin(), h.end());
    std::sort(merged.begin(), merged.end());

    std::map<std::vector<std::int64_t>, bool> seen;
    for (std::size_t i : merged) {
      const CurveModel& c = family[i];
      ZetaNumerator z = zeta_numerator(c, limits);  // full check incl. N_{g+1}
      if (seen.count(z.coeffs)) continue;
      seen[z.coeffs] = true;
      auto places = places_of_degree(c, 1, limits);
      DrinfeldianDomain dom(c, places.front(), limits);
      auto rep = class_group_of_domain(dom, limits);
      if (rep.h_B != 1) throw std::logic_error("search filter disagrees with class group computation");
      res.exceptional.push_back({q, c, places.front(), z, rep});
    }
  }
  return res;
}

}  // namespace fqrigid
