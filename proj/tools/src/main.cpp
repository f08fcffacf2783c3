#include <iostream>

#include <CLI11.hpp>

#include "fqrigid_cli/commands.hpp"

using namespace fqrigid::cli;

int main(int argc, char** argv) {
  CLI::App app{"Class numbers, rigid Drinfeldian domains, congruence frames and Belyi collapses over F_q"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--guard", cfg.guard, "Maximum number of objects any enumeration may visit")
      ->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads for the rigid search")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_flag("--json", cfg.json, "Emit JSON instead of key: value lines");
  app.add_option("--seed", cfg.seed, "Seed for sampled checks (accepted for reproducible configs)")
      ->capture_default_str();

  std::vector<std::string> specs;
  std::string file;
  auto add_specs = [&](CLI::App* sub, const char* what) {
    sub->add_option("spec", specs, what);
    sub->add_option("--file", file, "Read one specification per line")->check(CLI::ExistingFile);
  };

  auto* class_number = app.add_subcommand("class-number", "N_1..N_{g+1}, zeta numerator and h for curves");
  add_specs(class_number, "Catalog line, e.g. \"q=2 kind=artin-schreier poly=x^3\"");

  auto* zeta = app.add_subcommand("zeta", "Zeta numerator with functional-equation and Weil-bound checks");
  add_specs(zeta, "Catalog line");

  unsigned degree = 1;
  auto* places = app.add_subcommand("places", "Closed points of a curve by degree");
  places->add_option("spec", specs, "Catalog line")->required();
  places->add_option("--degree", degree, "Largest place degree")->capture_default_str();

  std::uint64_t q = 0;
  unsigned genus_max = 2;
  auto* rigid = app.add_subcommand("rigid-search", "Drinfeldian domains with trivial class group");
  rigid->add_option("--q", q, "Field size")->required();
  rigid->add_option("--genus-max", genus_max, "Largest genus searched (at most 2)")->capture_default_str();

  unsigned torsion_bound = 0;
  auto* subgroup = app.add_subcommand("subgroup", "Quasi-level, level, cusps and modularity of a frame");
  add_specs(subgroup, "Frame line, e.g. \"q=3 f=T gens=[]\"");
  subgroup->add_option("--torsion-bound", torsion_bound, "Also scan for torsion with entries of this degree");

  std::string targets = "0,inf";
  auto* belyi = app.add_subcommand("belyi", "Collapse a cover of P^1 to one branched over two points");
  belyi->add_option("spec", specs, "Map, e.g. \"q=5 num=x^3-x\"")->required();
  belyi->add_option("--targets", targets, "Target pair t0,t1")->capture_default_str();

  std::string place;
  unsigned degree_bound = 3;
  auto* oracle = app.add_subcommand("oracle-clB", "Class group of a domain on P^1 by direct enumeration");
  oracle->add_option("spec", specs, "Catalog line (projective line)")->required();
  oracle->add_option("--place", place, "Monic irreducible in T, or inf")->required();
  oracle->add_option("--degree-bound", degree_bound, "Largest prime degree in the divisor lattice")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  CommandResult res;
  try {
    if (!file.empty())
      for (auto& line : read_spec_lines(file)) specs.push_back(line);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  auto first = [&] { return specs.empty() ? std::string() : specs.front(); };

  if (*class_number) res = cmd_class_number(specs, cfg);
  else if (*zeta) res = cmd_zeta(specs, cfg);
  else if (*places) res = cmd_places(first(), degree, cfg);
  else if (*rigid) res = cmd_rigid_search(q, genus_max, cfg);
  else if (*subgroup) res = cmd_subgroup(specs, torsion_bound, cfg);
  else if (*belyi) res = cmd_belyi(first(), targets, cfg);
  else if (*oracle) res = cmd_oracle_clb(first(), place, degree_bound, cfg);

  if (!res.error.empty()) {
    std::cerr << "error: " << res.error << "\n";
    return res.exit_code;
  }
  std::cout << render(res, cfg.json);
  return res.exit_code;
}
