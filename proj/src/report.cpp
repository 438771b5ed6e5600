#include "trisect/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "trisect/cohomology.hpp"
#include "trisect/pairings.hpp"
#include "trisect/spin.hpp"
#include "trisect/spinc.hpp"

namespace trisect {

using nlohmann::ordered_json;

namespace {

std::string label_of(const TrisectionDiagram& d) { return d.label.empty() ? "(unlabeled)" : d.label; }

Report start(const std::string& command, const TrisectionDiagram& d) {
  Report r;
  r.command = command;
  r.label = label_of(d);
  r.results["genus"] = d.genus;
  r.lines.push_back("genus: " + std::to_string(d.genus));
  return r;
}

ordered_json group_json(const HomologyGroup& h) {
  ordered_json j;
  j["rank"] = h.rank;
  ordered_json torsion = ordered_json::array();
  for (const auto& t : h.torsion) torsion.push_back(to_json(t));
  j["torsion"] = torsion;
  j["text"] = h.to_string();
  return j;
}

std::string k_text(const std::array<std::size_t, 3>& k) {
  return "(" + std::to_string(k[0]) + ", " + std::to_string(k[1]) + ", " + std::to_string(k[2]) + ")";
}

std::string matrix_text(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += m(i, j).get_str();
    }
    s += "]";
  }
  return s + "]";
}

std::string triple_text(const std::array<IntVector, 3>& v) {
  return to_string(v[0]) + " " + to_string(v[1]) + " " + to_string(v[2]);
}

ordered_json triple_json(const std::array<IntVector, 3>& v) {
  return ordered_json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])});
}

ordered_json cocycle_json(const OneOneCocycle& x) { return triple_json(x.parts); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void add_checks(Report& r, const ValidationReport& v) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : v.checks) {
    ordered_json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
    std::string line = "check " + c.name + ": " + (c.passed ? "pass" : "FAIL");
    if (!c.passed && !c.detail.empty()) line += " (" + c.detail + ")";
    r.lines.push_back(line);
  }
  r.results["checks"] = checks;
  r.results["valid"] = v.valid();
  r.lines.push_back("valid: " + yes_no(v.valid()));
  if (const CheckResult* f = v.first_failure()) {
    r.results["failed_check"] = f->name;
    r.lines.push_back("failed check: " + f->name);
  }
}

ordered_json ledger_json(const SpinCLedger& s) {
  ordered_json j;
  j["base"] = s.base_id;
  j["euler"] = triple_json(s.euler);
  j["twists"] = triple_json(s.twists);
  j["c1_offset"] = s.c1_offset ? cocycle_json(*s.c1_offset) : ordered_json(nullptr);
  return j;
}

void add_ledger_lines(Report& r, const std::string& name, const SpinCLedger& s) {
  r.lines.push_back(name + " id: " + s.base_id);
  r.lines.push_back(name + " euler: " + triple_text(s.euler));
  r.lines.push_back(name + " twists: " + triple_text(s.twists));
  r.lines.push_back(name + " c1 offset: " + (s.c1_offset ? triple_text(s.c1_offset->parts) : "undefined"));
}

}  // namespace

ordered_json to_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

ordered_json to_json(const IntVector& v) {
  ordered_json j = ordered_json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

ordered_json to_json(const IntMatrix& m) {
  ordered_json j = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

std::string Report::render(bool json) const {
  if (json) {
    ordered_json doc;
    doc["command"] = command;
    doc["diagram"] = label;
    doc["results"] = results;
    doc["exit_code"] = exit_code;
    return doc.dump(2) + "\n";
  }
  std::string out = "command: " + command + "\n" + "diagram: " + label + "\n";
  for (const auto& line : lines) out += line + "\n";
  out += "exit: " + std::to_string(exit_code) + "\n";
  return out;
}

Report validate_report(const TrisectionDiagram& d) {
  Report r = start("validate", d);
  const ValidationReport v = validate(d);
  add_checks(r, v);
  if (v.k_values) {
    r.results["k"] = *v.k_values;
    r.lines.push_back("k: " + k_text(*v.k_values));
  }
  r.exit_code = v.valid() ? kExitOk : kExitInvalid;
  return r;
}

Report invalid_report(const std::string& command, const TrisectionDiagram& d, const ValidationReport& v) {
  Report r = start(command, d);
  add_checks(r, v);
  r.exit_code = kExitInvalid;
  return r;
}

Report error_report(const std::string& command, const std::string& label, int exit_code,
                    const std::string& message) {
  Report r;
  r.command = command;
  r.label = label;
  r.exit_code = exit_code;
  r.results["error"] = message;
  r.lines.push_back("error: " + message);
  return r;
}

Report homology_report(const Trisection& t) {
  Report r = start("homology", t.diagram());
  r.results["k"] = t.k_values();
  r.lines.push_back("k: " + k_text(t.k_values()));
  const auto h = fm_homology(t);
  ordered_json table = ordered_json::array();
  for (std::size_t i = 0; i < 5; ++i) {
    table.push_back(group_json(h[i]));
    r.lines.push_back("H_" + std::to_string(i) + ": " + h[i].to_string());
  }
  r.results["homology"] = table;
  const long chi = euler_characteristic(h);
  const std::array<std::size_t, 3>& k = t.k_values();
  const long predicted = 2 + static_cast<long>(t.genus()) - static_cast<long>(k[0] + k[1] + k[2]);
  r.results["euler_characteristic"] = chi;
  r.results["euler_from_k"] = predicted;
  r.lines.push_back("euler characteristic: " + std::to_string(chi) + " (2 + g - k1 - k2 - k3 = " +
                    std::to_string(predicted) + ")");
  const H2OracleCheck oracle = h2_oracle_check(t);
  ordered_json o;
  o["fm"] = group_json(oracle.fm);
  o["dual"] = group_json(oracle.dual);
  o["cech"] = group_json(oracle.cech);
  o["agree"] = oracle.agree();
  r.results["h2_oracle"] = o;
  r.lines.push_back("H_2 oracle: fm " + oracle.fm.to_string() + ", dual " + oracle.dual.to_string() +
                    ", cech " + oracle.cech.to_string() + ": " + (oracle.agree() ? "agree" : "DISAGREE"));
  return r;
}

Report diamond_report(const Trisection& t) {
  Report r = start("diamond", t.diagram());
  const HodgeDiamond h = hodge_diamond(t);
  std::size_t width = 3;
  for (const auto& row : h.entries)
    for (const auto& e : row) width = std::max(width, e.to_string().size());
  auto pad = [&](std::string s) {
    s.resize(std::max(s.size(), width + 2), ' ');
    return s;
  };
  ordered_json grid = ordered_json::array();
  std::string header = "      ";
  for (int j = 0; j < 3; ++j) header += pad("j=" + std::to_string(j));
  while (!header.empty() && header.back() == ' ') header.pop_back();
  r.lines.push_back("grid H^i(T; C^j):");
  r.lines.push_back(header);
  for (int i = 0; i < 3; ++i) {
    ordered_json row = ordered_json::array();
    std::string line = "  i=" + std::to_string(i) + " ";
    for (int j = 0; j < 3; ++j) {
      row.push_back(group_json(h.at(i, j)));
      line += pad(h.at(i, j).to_string());
    }
    while (line.back() == ' ') line.pop_back();
    grid.push_back(row);
    r.lines.push_back(line);
  }
  r.results["grid"] = grid;
  ordered_json totals = ordered_json::array();
  for (int k = 0; k <= 4; ++k) {
    const HomologyGroup c = h.cohomology(k);
    totals.push_back(group_json(c));
    r.lines.push_back("H^" + std::to_string(k) + ": " + c.to_string());
  }
  r.results["cohomology"] = totals;
  const bool serre = check_serre_duality(h);
  r.results["serre_duality"] = serre;
  r.lines.push_back(std::string("serre duality: ") + (serre ? "pass" : "FAIL"));
  return r;
}

Report form_report(const Trisection& t) {
  Report r = start("form", t.diagram());
  const IntersectionForm f = intersection_form(t);
  const SecondCohomology h2(t);
  r.results["rank"] = f.gram.rows();
  r.results["gram"] = to_json(f.gram);
  ordered_json sig;
  sig["positive"] = f.signature.positive;
  sig["negative"] = f.signature.negative;
  sig["value"] = f.signature.value();
  r.results["signature"] = sig;
  r.results["determinant"] = to_json(f.determinant);
  r.results["parity"] = f.even ? "even" : "odd";
  r.results["unimodular"] = f.unimodular;
  ordered_json basis = ordered_json::array();
  for (const auto& x : h2.basis()) basis.push_back(cocycle_json(x));
  r.results["basis"] = basis;

  r.lines.push_back("rank: " + std::to_string(f.gram.rows()));
  r.lines.push_back("gram: " + matrix_text(f.gram));
  r.lines.push_back("signature: (" + std::to_string(f.signature.positive) + ", " +
                    std::to_string(f.signature.negative) + ") = " + std::to_string(f.signature.value()));
  r.lines.push_back("determinant: " + f.determinant.get_str());
  r.lines.push_back(std::string("parity: ") + (f.even ? "even" : "odd"));
  r.lines.push_back("unimodular: " + yes_no(f.unimodular));
  for (std::size_t i = 0; i < h2.basis().size(); ++i)
    r.lines.push_back("x" + std::to_string(i + 1) + ": " + triple_text(h2.basis()[i].parts));
  return r;
}

Report spin_report(const Trisection& t) {
  Report r = start("spin", t.diagram());
  const auto spins = enumerate_spin(t);
  const Integer expected = hom_to_z2_order(fm_homology(t)[1]);
  r.results["count"] = spins.size();
  r.results["hom_h1_z2"] = to_json(expected);
  std::string order = "values on";
  for (std::size_t i = 1; i <= t.genus(); ++i)
    order += " a" + std::to_string(i) + " b" + std::to_string(i);
  r.lines.push_back("spin structures: " + std::to_string(spins.size()));
  r.lines.push_back("|Hom(H_1, Z/2)|: " + expected.get_str());
  if (!spins.empty()) r.lines.push_back(order + ":");
  ordered_json list = ordered_json::array();
  for (const auto& q : spins) {
    ordered_json bits = ordered_json::array();
    std::string line = "  q =";
    for (auto b : q.basis_values) {
      bits.push_back(static_cast<int>(b));
      line += " " + std::to_string(static_cast<int>(b));
    }
    list.push_back(bits);
    r.lines.push_back(line);
  }
  r.results["enhancements"] = list;
  return r;
}

Report spinc_report(const Trisection& t, const std::optional<std::array<IntVector, 3>>& rep) {
  Report r = start("spinc", t.diagram());
  const SecondCohomology h2(t);
  const SpinCLedger base = base_ledger(t, "base");
  r.results["base"] = ledger_json(base);
  add_ledger_lines(r, "base", base);
  r.results["base_admissible"] = is_admissible(t, base);
  r.lines.push_back("base admissible: " + yes_no(is_admissible(t, base)));

  if (!rep) {
    ordered_json gens = ordered_json::array();
    for (std::size_t i = 0; i < h2.dual_basis().size(); ++i) {
      const H2DualRep& k = h2.dual_basis()[i];
      ordered_json j;
      j["a1"] = to_json(k.lifts[0]);
      j["a2"] = to_json(k.lifts[1]);
      j["a3"] = to_json(k.lifts[2]);
      gens.push_back(j);
      r.lines.push_back("generator K" + std::to_string(i + 1) + ": a1 " + to_string(k.lifts[0]) + ", a2 " +
                        to_string(k.lifts[1]) + ", a3 " + to_string(k.lifts[2]));
    }
    r.results["generators"] = gens;
    return r;
  }

  if (auto v = cycle_violation(t, *rep)) throw std::invalid_argument("not a cycle: " + *v);
  const H2DualRep a = make_dual_rep(t, *rep);
  const SpinCLedger acted = act(h2, base, a);
  const OneOneCocycle diff = c1_difference(h2, acted, base);
  const OneOneCocycle a_class = h2.class_of(a);
  const auto violation = admissibility_violation(t, acted);

  ordered_json act_j;
  act_j["a1"] = to_json((*rep)[0]);
  act_j["a2"] = to_json((*rep)[1]);
  act_j["a3"] = to_json((*rep)[2]);
  act_j["coordinates"] = triple_json(a.coordinates);
  r.results["act"] = act_j;
  r.results["result"] = ledger_json(acted);
  r.results["admissible"] = !violation.has_value();
  if (violation) r.results["admissibility_violation"] = *violation;
  ordered_json c1;
  c1["cocycle"] = cocycle_json(diff);
  c1["coordinates"] = to_json(h2.coordinates(diff));
  c1["class_coordinates"] = to_json(h2.coordinates(a_class));
  r.results["c1_difference"] = c1;

  r.lines.push_back("act: a1 " + to_string((*rep)[0]) + ", a2 " + to_string((*rep)[1]) + ", a3 " +
                    to_string((*rep)[2]));
  r.lines.push_back("act coordinates: " + triple_text(a.coordinates));
  add_ledger_lines(r, "result", acted);
  r.lines.push_back("admissible: " + (violation ? "no (" + *violation + ")" : std::string("yes")));
  r.lines.push_back("class A: " + to_string(h2.coordinates(a_class)));
  r.lines.push_back("c1 difference: " + to_string(h2.coordinates(diff)) + " = 2 * " +
                    to_string(h2.coordinates(a_class)));
  r.lines.push_back("c1 difference cocycle: " + triple_text(diff.parts));
  return r;
}

}  // namespace trisect
