#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "trisect/cohomology.hpp"
#include "trisect/diagram.hpp"
#include "trisect/diagram_io.hpp"
#include "trisect/report.hpp"

using namespace trisect;

namespace {

struct Source {
  std::string path;
  std::string builtin_name;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> genus;
  bool json = false;
  std::string act_path;
};

void add_source_options(CLI::App* cmd, Source& s, bool with_act) {
  cmd->add_option("path", s.path, "Diagram file (JSON)");
  cmd->add_option("--builtin", s.builtin_name, "Catalog diagram, e.g. CP2 or CP2#CP2bar");
  cmd->add_option("--seed", s.seed, "Seed for a random diagram");
  cmd->add_option("--genus", s.genus, "Genus of the random diagram (default 2)");
  cmd->add_flag("--json", s.json, "Machine-readable output");
  if (with_act) cmd->add_option("--act", s.act_path, "Rep file {a1, a2, a3} to act by");
}

TrisectionDiagram load(const Source& s) {
  const int given = !s.path.empty() + !s.builtin_name.empty() + (s.seed || s.genus);
  if (given != 1) throw ParseError("give exactly one of: a diagram path, --builtin, --seed/--genus");
  if (!s.path.empty()) return load_diagram(s.path);
  if (!s.builtin_name.empty()) {
    try {
      return builtin(s.builtin_name);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return random_diagram(s.genus.value_or(2), s.seed.value_or(0));
}

int emit(const Report& r, bool json) {
  std::cout << r.render(json);
  return r.exit_code;
}

int run(const std::string& command, const Source& s) {
  TrisectionDiagram d;
  try {
    d = load(s);
  } catch (const ParseError& e) {
    return emit(error_report(command, "(none)", kExitParse, e.what()), s.json);
  }
  if (command == "validate") return emit(validate_report(d), s.json);
  const ValidationReport v = validate(d);
  if (!v.valid()) return emit(invalid_report(command, d, v), s.json);
  const Trisection t(d);
  const std::string label = d.label.empty() ? "(unlabeled)" : d.label;
  try {
    if (command == "homology") return emit(homology_report(t), s.json);
    if (command == "diamond") return emit(diamond_report(t), s.json);
    if (command == "form") return emit(form_report(t), s.json);
    if (command == "spin") return emit(spin_report(t), s.json);
    std::optional<std::array<IntVector, 3>> rep;
    if (!s.act_path.empty()) {
      try {
        rep = load_rep(s.act_path, t.genus());
      } catch (const ParseError& e) {
        return emit(error_report(command, label, kExitParse, e.what()), s.json);
      }
    }
    return emit(spinc_report(t, rep), s.json);
  } catch (const std::invalid_argument& e) {
    return emit(error_report(command, label, kExitInvalid, e.what()), s.json);
  } catch (const std::length_error& e) {
    return emit(error_report(command, label, kExitInvalid, e.what()), s.json);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology, intersection forms and spin data of trisection diagrams"};
  app.require_subcommand(1);
  const char* commands[][2] = {
      {"validate", "Check the diagram's homological validity conditions"},
      {"homology", "Integral homology H_0..H_4 with the three-way H_2 check"},
      {"diamond", "Cech grid H^i(T; C^j) and the Serre duality verdict"},
      {"form", "Intersection form: Gram matrix, signature, parity"},
      {"spin", "Spin structures as quadratic enhancements"},
      {"spinc", "Spin^C ledger: base, H^2 action, c1 difference"},
  };
  Source source;
  std::string chosen;
  for (const auto& c : commands) {
    CLI::App* cmd = app.add_subcommand(c[0], c[1]);
    add_source_options(cmd, source, std::string(c[0]) == "spinc");
    cmd->callback([&chosen, name = std::string(c[0])] { chosen = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }
  try {
    return run(chosen, source);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
