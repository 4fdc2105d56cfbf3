#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>

#include "flasque/cohomology.hpp"
#include "flasque/error.hpp"
#include "flasque/ideles.hpp"
#include "flasque/io.hpp"
#include "flasque/klein.hpp"
#include "flasque/localfield.hpp"
#include "flasque/resolutions.hpp"

namespace flasque {

namespace {

CheckReport run_suite(const std::string& target) {
  CheckReport report;
  if (target == "klein" || target == "all") report.merge(verify_klein());
  if (target == "local" || target == "all") {
    report.merge(verify_local_counterexample());
    report.merge(verify_phi_eq_e_psi());
  }
  if (target == "global" || target == "all") report.merge(verify_global());
  return report;
}

LatticeFile load(const std::string& file, const std::string& preset) {
  if (!file.empty()) return read_lattice_file(file);
  if (preset == "klein") return klein_preset();
  throw Error(Errc::UnknownName, "no lattice preset named " + preset);
}

void print_resolution(std::ostream& out, const CoflasqueResolution& r) {
  out << "target rank " << r.target.rank() << '\n';
  out << "P rank " << r.P.rank() << ':';
  for (std::size_t i = 0; i < r.blocks.size(); ++i)
    out << (i ? ", " : " ") << "Z[G/" << r.blocks[i].subgroup.name() << "] x" << r.blocks[i].multiplicity;
  out << '\n';
  out << "F rank " << r.F.rank() << '\n';
  out << "exact: " << (exactness_check(r.inj, r.surj) ? "true" : "false") << '\n';
  out << "coflasque: " << (is_coflasque(r.F).holds ? "true" : "false") << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flasque and coflasque resolutions of lattices over finite groups", "flasque"};
  app.require_subcommand(1);

  std::string target, format = "text";
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("target", target, "klein, local, global or all")
      ->required()
      ->check(CLI::IsMember({"klein", "local", "global", "all"}));
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string file, preset = "klein", lattice, subgroup;
  int degree = 0;
  auto* cohom = app.add_subcommand("cohom", "Tate cohomology of a lattice in degree -1, 0 or 1");
  auto* cohom_file = cohom->add_option("--file", file, "lattice file");
  cohom->add_option("--preset", preset, "compiled-in lattice preset")->excludes(cohom_file);
  cohom->add_option("lattice", lattice, "lattice name")->required();
  cohom->add_option("subgroup", subgroup, "G, or comma-separated generator labels")->required();
  cohom->add_option("degree", degree, "-1, 0 or 1")->required()->check(CLI::Range(-1, 1));

  std::string method = "generic";
  auto* resolve = app.add_subcommand("resolve", "Coflasque resolution of a lattice");
  auto* resolve_file = resolve->add_option("--file", file, "lattice file");
  resolve->add_option("--preset", preset, "compiled-in lattice preset")->excludes(resolve_file);
  resolve->add_option("lattice", lattice, "lattice name")->required();
  resolve->add_option("--method", method, "generic or paper")->check(CLI::IsMember({"generic", "paper"}));

  std::string output;
  auto* exp = app.add_subcommand("export", "Write a compiled-in preset as a lattice file");
  exp->add_option("--preset", preset, "preset name");
  exp->add_option("--output", output, "destination (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      const CheckReport report = run_suite(target);
      if (format == "json")
        out << report_to_json(report).dump(2) << '\n';
      else
        out << report_to_text(report);
      return report.passed() ? 0 : 1;
    }
    if (*cohom) {
      const LatticeFile f = load(file, preset);
      const GLattice& m = f.lattice(lattice);
      out << tate_cohomology(parse_subgroup(f.group, subgroup), m, degree).to_string() << '\n';
      return 0;
    }
    if (*resolve) {
      const LatticeFile f = load(file, preset);
      const GLattice& m = f.lattice(lattice);
      if (method == "paper") {
        const KleinData k = build_T_star();
        if (!(m == k.Tstar)) {
          err << "--method paper applies only to the lattice T_* over the Klein four-group\n";
          return 2;
        }
        print_resolution(out, build_paper_resolution(k));
      } else {
        print_resolution(out, coflasque_resolution(m));
      }
      return 0;
    }
    if (*exp) {
      const std::string text = lattice_file_to_json(load("", preset)).dump(2) + "\n";
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream o(output);
        if (!o) throw Error(Errc::ParseError, "cannot write " + output);
        o << text;
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace flasque
