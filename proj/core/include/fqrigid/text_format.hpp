#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fqrigid/belyi.hpp"
#include "fqrigid/curve.hpp"
#include "fqrigid/modular.hpp"

namespace fqrigid {

/// Splits `key=value` tokens on whitespace. Text after `#` is dropped.
/// Duplicate or malformed tokens raise InvalidInput.
std::map<std::string, std::string> parse_fields(const std::string& line);

/// Univariate polynomial in `var`, either as an expression such as
/// `x^3+2*x+1` (coefficients are element codes, `-` negates) or as a comma
/// list of ascending coefficient codes such as `1,2,0,1`.
Poly parse_poly(const Field& f, const std::string& text, char var = 'x');

/// Homogeneous form in x, y, z, e.g. `y^2*z+x^3+x*z^2`.
std::vector<Monomial> parse_plane_form(const Field& f, const std::string& text);

/// `q=<int> kind=<name> [genus=<int>] poly=<...>`. Returns false for blank
/// and comment-only lines.
bool parse_curve_line(const std::string& line, std::optional<CurveModel>& out, const Limits& limits = {});
CurveModel parse_curve(const std::string& line, const Limits& limits = {});
/// Inverse of parse_curve.
std::string format_curve(const CurveModel& curve);

/// `q=<int> f=<poly> gens=[a/b/c/d;...]`, entries as polynomials in T.
/// The keywords `gamma_T`, `full` and `full_congruence` may replace the
/// generator list.
SubgroupFrame parse_frame(const std::string& line, const Limits& limits = {});

/// `q=<int> num=<poly> [den=<poly>]`.
RationalMap parse_map(const std::string& line);

/// An element code or `inf`.
ProjPoint parse_proj_point(const Field& f, const std::string& text);

}  // namespace fqrigid
