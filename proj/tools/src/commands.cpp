#include "fqrigid_cli/commands.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "fqrigid/belyi.hpp"
#include "fqrigid/drinfeldian.hpp"
#include "fqrigid/modular.hpp"
#include "fqrigid/text_format.hpp"

namespace fqrigid::cli {

namespace {

Json base_report(const char* command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const InvalidInput& e) {
    return {kUsage, {}, e.what()};
  } catch (const GuardExceeded& e) {
    return {kFailure, {}, e.what()};
  } catch (const std::exception& e) {
    return {kFailure, {}, e.what()};
  }
}

std::vector<CurveModel> parse_curves(const std::vector<std::string>& lines, const Limits& limits) {
  std::vector<CurveModel> out;
  for (const auto& line : lines) {
    std::optional<CurveModel> c;
    if (parse_curve_line(line, c, limits)) out.push_back(*c);
  }
  if (out.empty()) throw InvalidInput("no curve given");
  return out;
}

Json curve_json(const CurveModel& c) {
  Json j;
  j["q"] = c.field().q();
  j["kind"] = kind_name(c.kind());
  j["genus"] = c.genus();
  j["poly"] = c.poly_string();
  return j;
}

Json coeff_list(const Poly& p) {
  Json j = Json::array();
  for (Elem c : p.coeffs()) j.push_back(c);
  return j;
}

Json entry_json(const RigidDomainEntry& e) {
  Json j = curve_json(e.curve);
  j["place"] = e.place.to_string();
  j["h_K"] = e.report.h_K;
  j["deg_x"] = e.report.deg_x;
  j["h_B"] = e.report.h_B;
  j["zeta"] = e.zeta.coeffs;
  return j;
}

Place parse_line_place(const Field& f, const std::string& text) {
  if (text == "inf" || text == "infinity") return line_place_at_infinity();
  return line_place(parse_poly(f, text, 'T'));
}

void render_human(const Json& j, const std::string& prefix, std::ostringstream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const Json& v = it.value();
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      for (std::size_t i = 0; i < v.size(); ++i) render_human(v[i], key + "[" + std::to_string(i) + "]", out);
    } else if (v.is_object()) {
      render_human(v, key, out);
    } else if (v.is_string()) {
      out << key << ": " << v.get<std::string>() << "\n";
    } else {
      out << key << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

CommandResult cmd_class_number(const std::vector<std::string>& lines, const RunConfig& cfg) {
  return guarded([&] {
    auto curves = parse_curves(lines, cfg.limits());
    Json report = base_report("class-number");
    Json arr = Json::array();
    for (const auto& c : curves) {
      auto z = zeta_numerator(c, cfg.limits());
      Json j = curve_json(c);
      j["counts"] = z.counts;
      j["zeta"] = z.coeffs;
      j["h"] = z.at_one();
      arr.push_back(std::move(j));
    }
    report["curves"] = std::move(arr);
    return CommandResult{kOk, std::move(report), {}};
  });
}

CommandResult cmd_zeta(const std::vector<std::string>& lines, const RunConfig& cfg) {
  return guarded([&] {
    auto curves = parse_curves(lines, cfg.limits());
    Json report = base_report("zeta");
    Json arr = Json::array();
    for (const auto& c : curves) {
      auto z = zeta_numerator(c, cfg.limits());
      Json j = curve_json(c);
      j["equation"] = c.equation();
      j["counts"] = z.counts;
      j["zeta"] = z.coeffs;
      j["zeta_poly"] = z.to_string();
      j["functional_equation"] = z.satisfies_functional_equation();
      j["weil_bound"] = z.max_root_deviation() < 1e-6;
      j["h"] = z.at_one();
      arr.push_back(std::move(j));
    }
    report["curves"] = std::move(arr);
    return CommandResult{kOk, std::move(report), {}};
  });
}

CommandResult cmd_places(const std::string& line, unsigned max_degree, const RunConfig& cfg) {
  return guarded([&] {
    if (max_degree == 0) throw InvalidInput("degree must be at least 1");
    auto curve = parse_curve(line, cfg.limits());
    Json report = base_report("places");
    report["curve"] = curve_json(curve);
    Json by_degree = Json::array();
    for (unsigned d = 1; d <= max_degree; ++d) {
      Json names = Json::array();
      for (const auto& pl : places_of_degree(curve, d, cfg.limits())) names.push_back(pl.to_string());
      Json j;
      j["degree"] = d;
      j["count"] = names.size();
      j["places"] = std::move(names);
      by_degree.push_back(std::move(j));
    }
    report["by_degree"] = std::move(by_degree);
    return CommandResult{kOk, std::move(report), {}};
  });
}

CommandResult cmd_rigid_search(std::uint64_t q, unsigned genus_max, const RunConfig& cfg) {
  return guarded([&] {
    SearchOptions opts{cfg.workers, cfg.limits()};
    auto res = search_rigid_domains(q, genus_max, opts);
    Json report = base_report("rigid-search");
    report["q"] = res.q;
    report["genus_max"] = res.genus_max;
    report["candidates_per_genus"] = res.candidates_per_genus;
    report["standard_place_count"] = res.standard_place_count;
    Json st = Json::array(), ex = Json::array();
    for (const auto& e : res.standard) st.push_back(entry_json(e));
    for (const auto& e : res.exceptional) ex.push_back(entry_json(e));
    report["standard"] = std::move(st);
    report["exceptional"] = std::move(ex);
    report["exceptional_count"] = res.exceptional.size();
    return CommandResult{res.exceptional.empty() ? kOk : kExceptional, std::move(report), {}};
  });
}

CommandResult cmd_subgroup(const std::vector<std::string>& lines, unsigned torsion_bound, const RunConfig& cfg) {
  return guarded([&] {
    std::vector<SubgroupFrame> frames;
    for (const auto& line : lines)
      if (!parse_fields(line).empty()) frames.push_back(parse_frame(line, cfg.limits()));
    if (frames.empty()) throw InvalidInput("no frame given");
    Json report = base_report("subgroup");
    Json arr = Json::array();
    for (const auto& fr : frames) {
      auto ql = quasi_level(fr);
      auto lv = level_of(ql);
      auto verdict = is_modular_frame(fr);
      Json j;
      j["q"] = fr.field().q();
      j["modulus"] = fr.modulus().to_string('T');
      j["image_order"] = fr.subgroup().order();
      Json basis = Json::array();
      for (const auto& b : ql.basis) basis.push_back(b.to_string('T'));
      j["quasi_level_basis"] = std::move(basis);
      j["level"] = lv.generator().to_string('T');
      j["cusps"] = cusp_count(fr);
      j["modular"] = verdict.modular;
      j["modular_reason"] = verdict.reason;
      j["classically_modular"] = is_classically_modular_frame(fr);
      if (torsion_bound > 0) {
        Json tors = Json::array();
        for (const auto& t : torsion_scan(fr, torsion_bound, cfg.limits())) {
          Json e;
          Json m = Json::array();
          for (const auto& x : t.entries) m.push_back(x.to_string('T'));
          e["matrix"] = std::move(m);
          e["order"] = t.order;
          tors.push_back(std::move(e));
        }
        j["torsion"] = std::move(tors);
      }
      arr.push_back(std::move(j));
    }
    report["frames"] = std::move(arr);
    return CommandResult{kOk, std::move(report), {}};
  });
}

CommandResult cmd_belyi(const std::string& spec, const std::string& targets, const RunConfig& cfg) {
  return guarded([&] {
    auto map = parse_map(spec);
    const Field& f = map.field();
    auto comma = targets.find(',');
    if (comma == std::string::npos) throw InvalidInput("targets must be two points, e.g. 0,inf");
    auto t0 = parse_proj_point(f, targets.substr(0, comma));
    auto t1 = parse_proj_point(f, targets.substr(comma + 1));
    Json report = base_report("belyi");
    report["map"] = map.to_string();
    try {
      auto res = collapse_pipeline(map, {t0, t1}, cfg.limits());
      Json pts = Json::array(), idx = Json::array(), wild = Json::array();
      for (const auto& bp : res.initial.points) {
        pts.push_back(bp.value.to_string());
        idx.push_back(bp.indices);
        Json w = Json::array();
        for (bool b : bp.wild) w.push_back(b);
        wild.push_back(std::move(w));
      }
      report["field"] = res.initial.field.name();
      report["branch_points"] = std::move(pts);
      report["indices"] = std::move(idx);
      report["wild_flags"] = std::move(wild);
      report["designated"] = res.designated.to_string();
      report["collapse"] = res.collapse ? res.collapse->to_poly().to_string('x') : "";
      report["composite_num"] = coeff_list(res.composite.num());
      report["composite_den"] = coeff_list(res.composite.den());
      report["composite"] = res.composite.to_string();
      report["composite_degree"] = res.composite.degree();
      Json fin = Json::array();
      for (const auto& bp : res.final.points) fin.push_back(bp.value.to_string());
      report["final_branch_points"] = std::move(fin);
      report["extension_degree"] = res.extension_degree;
      return CommandResult{kOk, std::move(report), {}};
    } catch (const PipelineEscaped& e) {
      return CommandResult{kEscaped, {}, e.what()};
    }
  });
}

CommandResult cmd_oracle_clb(const std::string& line, const std::string& place, unsigned degree_bound,
                             const RunConfig& cfg) {
  return guarded([&] {
    auto curve = parse_curve(line, cfg.limits());
    if (curve.kind() != CurveKind::ProjectiveLine)
      throw InvalidInput("the direct class-group oracle supports kind=projective-line only");
    DrinfeldianDomain dom(curve, parse_line_place(curve.field(), place), cfg.limits());
    auto formula = class_group_of_domain(dom, cfg.limits());
    auto direct = class_group_oracle(dom, degree_bound, 2, cfg.limits());
    Json report = base_report("oracle-clB");
    report["curve"] = curve_json(curve);
    report["place"] = dom.point().to_string();
    report["deg_x"] = formula.deg_x;
    report["h_K"] = formula.h_K;
    report["h_B_formula"] = formula.h_B;
    report["h_B_oracle"] = direct;
    report["agree"] = direct == formula.h_B;
    return CommandResult{direct == formula.h_B ? kOk : kFailure, std::move(report), {}};
  });
}

std::string render(const CommandResult& r, bool json) {
  if (json) return r.report.dump(2) + "\n";
  std::ostringstream out;
  render_human(r.report, "", out);
  return out.str();
}

std::vector<std::string> read_spec_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

}  // namespace fqrigid::cli
