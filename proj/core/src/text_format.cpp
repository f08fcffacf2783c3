#include "fqrigid/text_format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace fqrigid {

namespace {

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InvalidInput("bad " + what + ": '" + s + "'");
  return v;
}

Elem parse_code(const Field& f, const std::string& s) {
  auto v = parse_uint(s, "coefficient");
  if (v >= f.q()) throw InvalidInput("coefficient " + s + " is not an element code of " + f.name());
  return static_cast<Elem>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// One signed term of an expression: coefficient and exponents of vars.
struct Term {
  Elem coeff;
  std::map<char, unsigned> ex;
};

std::vector<Term> parse_terms(const Field& f, const std::string& text, const std::string& vars) {
  std::vector<Term> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto number = [&]() {
    std::size_t j = i;
    while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    std::string s = text.substr(i, j - i);
    i = j;
    return s;
  };
  if (text.empty()) throw InvalidInput("empty polynomial");
  while (i < n) {
    bool negate = false;
    if (text[i] == '+' || text[i] == '-') {
      negate = text[i] == '-';
      ++i;
    } else if (!out.empty()) {
      throw InvalidInput("expected '+' or '-' at position " + std::to_string(i) + " in '" + text + "'");
    }
    Term t{1, {}};
    bool any = false;
    if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      t.coeff = parse_code(f, number());
      any = true;
      if (i < n && text[i] == '*') ++i;
    }
    while (i < n && vars.find(text[i]) != std::string::npos) {
      char v = text[i++];
      unsigned e = 1;
      if (i < n && text[i] == '^') {
        ++i;
        e = static_cast<unsigned>(parse_uint(number(), "exponent"));
      }
      t.ex[v] += e;
      any = true;
      if (i < n && text[i] == '*') ++i;
    }
    if (!any) throw InvalidInput("cannot parse term at position " + std::to_string(i) + " in '" + text + "'");
    if (negate) t.coeff = f.neg(t.coeff);
    out.push_back(std::move(t));
  }
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

const std::string& require(const std::map<std::string, std::string>& m, const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) throw InvalidInput("missing field '" + key + "'");
  return it->second;
}

Field field_of(const std::map<std::string, std::string>& m, const Limits& limits) {
  return Field::make_q(parse_uint(require(m, "q"), "q"), limits);
}

}  // namespace

std::map<std::string, std::string> parse_fields(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::map<std::string, std::string> out;
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidInput("expected key=value, got '" + tok + "'");
    auto key = tok.substr(0, eq);
    if (!out.emplace(key, tok.substr(eq + 1)).second) throw InvalidInput("duplicate field '" + key + "'");
  }
  return out;
}

Poly parse_poly(const Field& f, const std::string& raw, char var) {
  const std::string text = trim(raw);
  if (text.find(',') != std::string::npos || (!text.empty() && text.find(var) == std::string::npos &&
                                               text.find_first_of("+-") == std::string::npos)) {
    std::vector<Elem> c;
    for (const auto& s : split(text, ',')) c.push_back(parse_code(f, trim(s)));
    return Poly(f, std::move(c));
  }
  Poly out(f);
  for (const auto& t : parse_terms(f, text, std::string(1, var))) {
    unsigned e = t.ex.count(var) ? t.ex.at(var) : 0;
    out += Poly::monomial(f, e, t.coeff);
  }
  return out;
}

std::vector<Monomial> parse_plane_form(const Field& f, const std::string& text) {
  std::vector<Monomial> out;
  for (const auto& t : parse_terms(f, trim(text), "xyz")) {
    auto get = [&](char v) { return t.ex.count(v) ? t.ex.at(v) : 0u; };
    out.push_back({t.coeff, get('x'), get('y'), get('z')});
  }
  return out;
}

bool parse_curve_line(const std::string& line, std::optional<CurveModel>& out, const Limits& limits) {
  auto m = parse_fields(line);
  if (m.empty()) return false;
  for (const auto& [k, v] : m)
    if (k != "q" && k != "kind" && k != "genus" && k != "poly") throw InvalidInput("unknown field '" + k + "'");
  Field f = field_of(m, limits);
  const auto& kname = require(m, "kind");
  auto kind = parse_kind(kname);
  if (!kind) throw InvalidInput("unknown curve kind '" + kname + "'");
  auto poly_text = [&]() { return require(m, "poly"); };
  switch (*kind) {
    case CurveKind::ProjectiveLine: out = CurveModel::projective_line(f); break;
    case CurveKind::Hyperelliptic: out = CurveModel::hyperelliptic(parse_poly(f, poly_text())); break;
    case CurveKind::ArtinSchreier: out = CurveModel::artin_schreier(parse_poly(f, poly_text())); break;
    case CurveKind::SmoothPlane:
      out = CurveModel::smooth_plane(f, parse_plane_form(f, poly_text()), limits);
      break;
  }
  if (auto it = m.find("genus"); it != m.end()) {
    auto g = parse_uint(it->second, "genus");
    if (g != out->genus())
      throw InvalidInput("declared genus " + it->second + " but the model has genus " +
                         std::to_string(out->genus()));
  }
  return true;
}

CurveModel parse_curve(const std::string& line, const Limits& limits) {
  std::optional<CurveModel> out;
  if (!parse_curve_line(line, out, limits)) throw InvalidInput("empty curve specification");
  return *out;
}

std::string format_curve(const CurveModel& c) {
  std::string s = "q=" + std::to_string(c.field().q()) + " kind=" + kind_name(c.kind()) +
                  " genus=" + std::to_string(c.genus());
  if (c.kind() != CurveKind::ProjectiveLine) s += " poly=" + c.poly_string();
  return s;
}

SubgroupFrame parse_frame(const std::string& line, const Limits& limits) {
  auto m = parse_fields(line);
  for (const auto& [k, v] : m)
    if (k != "q" && k != "f" && k != "gens") throw InvalidInput("unknown field '" + k + "'");
  Field f = field_of(m, limits);
  const auto& gtext = require(m, "gens");
  if (gtext == "gamma_T") {
    if (m.count("f") && parse_poly(f, m.at("f"), 'T') != Poly::x(f))
      throw InvalidInput("gamma_T frame has modulus T");
    return SubgroupFrame::gamma_T(f, limits);
  }
  Poly modulus = parse_poly(f, require(m, "f"), 'T');
  if (gtext == "full") return SubgroupFrame::full(modulus, limits);
  if (gtext == "full_congruence") return SubgroupFrame::full_congruence(modulus, limits);
  if (gtext.size() < 2 || gtext.front() != '[' || gtext.back() != ']')
    throw InvalidInput("gens must be [a/b/c/d;...] or a frame keyword");
  std::vector<std::array<Poly, 4>> gens;
  const std::string inner = gtext.substr(1, gtext.size() - 2);
  if (!trim(inner).empty()) {
    for (const auto& mat : split(inner, ';')) {
      auto entries = split(mat, '/');
      if (entries.size() != 4) throw InvalidInput("matrix '" + mat + "' needs four entries a/b/c/d");
      gens.push_back({parse_poly(f, entries[0], 'T'), parse_poly(f, entries[1], 'T'),
                      parse_poly(f, entries[2], 'T'), parse_poly(f, entries[3], 'T')});
    }
  }
  return SubgroupFrame::from_polys(modulus, gens, limits);
}

RationalMap parse_map(const std::string& line) {
  auto m = parse_fields(line);
  for (const auto& [k, v] : m)
    if (k != "q" && k != "num" && k != "den") throw InvalidInput("unknown field '" + k + "'");
  Field f = field_of(m, {});
  Poly num = parse_poly(f, require(m, "num"));
  Poly den = m.count("den") ? parse_poly(f, m.at("den")) : Poly::constant(f, 1);
  return RationalMap(std::move(num), std::move(den));
}

ProjPoint parse_proj_point(const Field& f, const std::string& text) {
  auto t = trim(text);
  if (t == "inf" || t == "infinity") return ProjPoint::inf();
  return ProjPoint::at(parse_code(f, t));
}

}  // namespace fqrigid
