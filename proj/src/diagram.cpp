#include "trisect/diagram.hpp"

#include <map>
#include <random>
#include <string>
#include <utility>

namespace trisect {

namespace {

std::string pair_name(std::size_t l) {
  return std::string(kSystemNames[l]) + "+" + std::string(kSystemNames[(l + 1) % 3]);
}

std::string torsion_string(const std::vector<Integer>& torsion) {
  std::string s;
  for (const auto& t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.get_str();
  }
  return s;
}

bool shape_ok(const CutSystem& cs, std::size_t genus) {
  if (cs.curves.size() != genus) return false;
  for (const auto& c : cs.curves)
    if (c.size() != 2 * genus) return false;
  return true;
}

TrisectionDiagram make_diagram(std::size_t genus, std::vector<std::vector<long>> alpha,
                               std::vector<std::vector<long>> beta,
                               std::vector<std::vector<long>> gamma, std::string label) {
  auto convert = [](const std::vector<std::vector<long>>& rows) {
    CutSystem cs;
    for (const auto& r : rows) {
      IntVector v;
      for (long x : r) v.emplace_back(x);
      cs.curves.push_back(std::move(v));
    }
    return cs;
  };
  TrisectionDiagram d;
  d.genus = genus;
  d.systems = {convert(alpha), convert(beta), convert(gamma)};
  d.label = std::move(label);
  return d;
}

const std::map<std::string, TrisectionDiagram, std::less<>>& atom_catalog() {
  static const std::map<std::string, TrisectionDiagram, std::less<>> catalog = [] {
    std::map<std::string, TrisectionDiagram, std::less<>> c;
    c["S4"] = make_diagram(0, {}, {}, {}, "S4");
    c["CP2"] = make_diagram(1, {{1, 0}}, {{0, 1}}, {{1, 1}}, "CP2");
    c["CP2bar"] = make_diagram(1, {{1, 0}}, {{0, 1}}, {{1, -1}}, "CP2bar");
    c["S1xS3"] = make_diagram(1, {{0, 1}}, {{0, 1}}, {{0, 1}}, "S1xS3");
    // gamma is the graph of the hyperbolic matrix [[0, 1], [1, 0]] over the b's.
    c["S2xS2"] = make_diagram(2, {{1, 0, 0, 0}, {0, 0, 1, 0}}, {{0, 1, 0, 0}, {0, 0, 0, 1}},
                              {{0, 1, 1, 0}, {1, 0, 0, 1}}, "S2xS2");
    // Its intersection form computes to diag(1, 1): odd and positive definite.
    c["S2xS2_candidate"] =
        make_diagram(2, {{1, 0, 0, 0}, {0, 0, 1, 0}}, {{0, 1, 0, 0}, {0, 0, 0, 1}},
                     {{1, 1, 0, 0}, {0, 0, 1, 1}}, "CP2#CP2");
    return c;
  }();
  return catalog;
}

// T(x) = x + sign * <x, v> v, as a matrix acting on columns.
IntMatrix transvection(const SymplecticLattice& surface, const IntVector& v, int sign) {
  const IntVector jv = surface.form() * v;
  IntMatrix t = IntMatrix::identity(surface.rank());
  for (std::size_t i = 0; i < surface.rank(); ++i)
    for (std::size_t j = 0; j < surface.rank(); ++j) t(i, j) += sign * v[i] * jv[j];
  return t;
}

IntMatrix random_symplectic_word(std::size_t genus, std::mt19937_64& rng, std::size_t length) {
  const SymplecticLattice surface(genus);
  const std::size_t n = surface.rank();
  IntMatrix word = IntMatrix::identity(n);
  for (std::size_t step = 0; step < length; ++step) {
    IntVector v = zero_vector(n);
    const std::size_t k = rng() % n;
    v[k] = 1;
    if (rng() % 2 == 1 && n > 1) {
      std::size_t l = rng() % (n - 1);
      if (l >= k) ++l;
      v[l] = (rng() % 2 == 0) ? 1 : -1;
    }
    const int sign = (rng() % 2 == 0) ? 1 : -1;
    word = transvection(surface, v, sign) * word;
  }
  return word;
}

}  // namespace

bool ValidationReport::valid() const { return first_failure() == nullptr; }

const CheckResult* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

InvalidDiagramError::InvalidDiagramError(ValidationReport report)
    : std::runtime_error([&] {
        const CheckResult* f = report.first_failure();
        return std::string("invalid trisection diagram: ") +
               (f ? f->name + (f->detail.empty() ? "" : " (" + f->detail + ")") : "unknown");
      }()),
      report_(std::move(report)) {}

Subgroup lagrangian_subgroup(const TrisectionDiagram& d, std::size_t index) {
  if (index > 2) throw std::out_of_range("lagrangian_subgroup: index must be 0, 1 or 2");
  const CutSystem& cs = d.systems[index];
  if (!shape_ok(cs, d.genus))
    throw std::invalid_argument("lagrangian_subgroup: cut system has the wrong shape");
  return Subgroup::span(2 * d.genus, cs.curves);
}

ValidationReport validate(const TrisectionDiagram& d) {
  ValidationReport report;
  const SymplecticLattice surface(d.genus);
  bool systems_ok = true;
  for (std::size_t s = 0; s < 3; ++s) {
    const std::string name(kSystemNames[s]);
    const CutSystem& cs = d.systems[s];
    if (!shape_ok(cs, d.genus)) {
      report.checks.push_back({name + " shape", false,
                               "expected " + std::to_string(d.genus) + " curves of length " +
                                   std::to_string(2 * d.genus)});
      systems_ok = false;
      continue;
    }
    CheckResult lagrangian{name + " lagrangian", true, ""};
    for (std::size_t i = 0; i < cs.curves.size() && lagrangian.passed; ++i)
      for (std::size_t j = i + 1; j < cs.curves.size(); ++j) {
        const Integer n = surface.intersection_number(cs.curves[i], cs.curves[j]);
        if (n != 0) {
          lagrangian.passed = false;
          lagrangian.detail = "<c" + std::to_string(i + 1) + ", c" + std::to_string(j + 1) +
                              "> = " + n.get_str();
          break;
        }
      }
    report.checks.push_back(lagrangian);

    CheckResult primitive{name + " primitive", true, ""};
    if (d.genus > 0) {
      const SmithForm snf = smith_normal_form(IntMatrix::from_columns(2 * d.genus, cs.curves));
      const auto factors = snf.invariant_factors();
      if (factors.size() != d.genus) {
        primitive.passed = false;
        primitive.detail = "curves span rank " + std::to_string(factors.size());
      } else {
        std::vector<Integer> torsion;
        for (const auto& f : factors)
          if (f != 1) torsion.push_back(f);
        if (!torsion.empty()) {
          primitive.passed = false;
          primitive.detail = "span has index torsion " + torsion_string(torsion);
        }
      }
    }
    report.checks.push_back(primitive);
    systems_ok = systems_ok && lagrangian.passed && primitive.passed;
  }
  if (!systems_ok) return report;

  std::array<Subgroup, 3> lags;
  for (std::size_t s = 0; s < 3; ++s) lags[s] = lagrangian_subgroup(d, s);
  for (std::size_t l = 0; l < 3; ++l) {
    const Subgroup sum = subgroup_sum(lags[l], lags[(l + 1) % 3]);
    const QuotientPresentation q = quotient(2 * d.genus, sum);
    CheckResult c{pair_name(l) + " torsion-free", q.is_free(), ""};
    if (!c.passed) c.detail = "H1(Sigma)/(L+L') has torsion " + torsion_string(q.torsion());
    report.checks.push_back(c);
  }
  if (!report.valid()) return report;

  std::array<std::size_t, 3> k{};
  for (std::size_t l = 0; l < 3; ++l) k[l] = subgroup_intersection(lags[l], lags[(l + 1) % 3]).rank();
  report.k_values = k;
  return report;
}

std::array<std::size_t, 3> k_values(const TrisectionDiagram& d) {
  ValidationReport report = validate(d);
  if (!report.valid()) throw InvalidDiagramError(std::move(report));
  return *report.k_values;
}

TrisectionDiagram builtin(std::string_view name) {
  const auto& catalog = atom_catalog();
  std::optional<TrisectionDiagram> result;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = name.find('#', start);
    const std::string_view atom =
        name.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    const auto it = catalog.find(atom);
    if (it == catalog.end()) throw std::invalid_argument("unknown builtin diagram: " + std::string(atom));
    result = result ? connected_sum(*result, it->second) : it->second;
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return *result;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& [name, d] : atom_catalog()) names.push_back(name);
  return names;
}

TrisectionDiagram connected_sum(const TrisectionDiagram& d1, const TrisectionDiagram& d2) {
  for (const auto* d : {&d1, &d2}) {
    ValidationReport report = validate(*d);
    if (!report.valid()) throw InvalidDiagramError(std::move(report));
  }
  const std::size_t n1 = 2 * d1.genus, n2 = 2 * d2.genus;
  TrisectionDiagram out;
  out.genus = d1.genus + d2.genus;
  for (std::size_t s = 0; s < 3; ++s) {
    for (const auto& c : d1.systems[s].curves) {
      IntVector v = c;
      v.resize(n1 + n2, Integer(0));
      out.systems[s].curves.push_back(std::move(v));
    }
    for (const auto& c : d2.systems[s].curves) {
      IntVector v = zero_vector(n1);
      v.insert(v.end(), c.begin(), c.end());
      out.systems[s].curves.push_back(std::move(v));
    }
  }
  out.label = d1.label + "#" + d2.label;
  return out;
}

CutSystem handleslide(const CutSystem& cs, std::size_t i, std::size_t j, int sign) {
  if (i == j) throw std::invalid_argument("handleslide: a curve cannot slide over itself");
  if (i >= cs.curves.size() || j >= cs.curves.size())
    throw std::out_of_range("handleslide: curve index out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("handleslide: sign must be +1 or -1");
  CutSystem out = cs;
  out.curves[i] = add(cs.curves[i], scale(Integer(sign), cs.curves[j]));
  return out;
}

TrisectionDiagram apply_linear_map(const TrisectionDiagram& d, const IntMatrix& map) {
  if (map.rows() != 2 * d.genus || map.cols() != 2 * d.genus)
    throw std::invalid_argument("apply_linear_map: map has the wrong size");
  TrisectionDiagram out = d;
  for (auto& cs : out.systems)
    for (auto& c : cs.curves) c = map * c;
  return out;
}

TrisectionDiagram random_diagram(std::size_t genus, std::uint64_t seed,
                                 std::optional<std::size_t> word_length) {
  if (genus == 0) throw std::invalid_argument("random_diagram: genus must be at least 1");
  const SymplecticLattice surface(genus);
  TrisectionDiagram d;
  d.genus = genus;
  for (std::size_t i = 1; i <= genus; ++i) {
    d.systems[0].curves.push_back(surface.a(i));
    d.systems[1].curves.push_back(surface.b(i));
    d.systems[2].curves.push_back(add(surface.a(i), surface.b(i)));
  }
  d.label = "random(g=" + std::to_string(genus) + ",seed=" + std::to_string(seed) + ")";
  std::mt19937_64 rng(seed);
  const std::size_t length = word_length.value_or(4 * genus + 4);
  if (length == 0) return d;
  return apply_linear_map(d, random_symplectic_word(genus, rng, length));
}

TrisectionDiagram random_composite_diagram(std::uint64_t seed, std::size_t max_genus) {
  static const std::array<std::string_view, 5> atoms = {"S4", "CP2", "CP2bar", "S1xS3", "S2xS2"};
  std::mt19937_64 rng(seed);
  std::string name;
  std::size_t genus = 0;
  const std::size_t count = 1 + rng() % 3;
  for (std::size_t n = 0; n < count; ++n) {
    const std::string_view atom = atoms[rng() % atoms.size()];
    const std::size_t g = builtin(atom).genus;
    if (genus + g > max_genus) continue;
    genus += g;
    if (!name.empty()) name += "#";
    name += atom;
  }
  if (name.empty()) name = "CP2";
  TrisectionDiagram d = builtin(name);
  if (d.genus == 0) return d;
  d = apply_linear_map(d, random_symplectic_word(d.genus, rng, 4 * d.genus + 4));
  if (d.genus >= 2) {
    for (auto& cs : d.systems) {
      const std::size_t slides = rng() % 4;
      for (std::size_t k = 0; k < slides; ++k) {
        const std::size_t i = rng() % d.genus;
        std::size_t j = rng() % (d.genus - 1);
        if (j >= i) ++j;
        cs = handleslide(cs, i, j, rng() % 2 == 0 ? 1 : -1);
      }
    }
  }
  d.label = "composite(" + name + ",seed=" + std::to_string(seed) + ")";
  return d;
}

Trisection::Trisection(TrisectionDiagram d) : diagram_(std::move(d)), surface_(diagram_.genus) {
  ValidationReport report = validate(diagram_);
  if (!report.valid()) throw InvalidDiagramError(std::move(report));
  k_ = *report.k_values;
  const std::size_t n = rank();
  for (std::size_t l = 0; l < 3; ++l) lagrangians_.push_back(lagrangian_subgroup(diagram_, l));
  for (std::size_t l = 0; l < 3; ++l) {
    intersections_.push_back(subgroup_intersection(lagrangians_[l], lagrangians_[(l + 1) % 3]));
    sums_.push_back(subgroup_sum(lagrangians_[l], lagrangians_[(l + 1) % 3]));
  }
  triple_intersection_ = subgroup_intersection(intersections_[0], lagrangians_[2]);
  total_sum_ = subgroup_sum(sums_[0], lagrangians_[2]);
  for (std::size_t l = 0; l < 3; ++l) {
    handlebodies_.emplace_back(n, lagrangians_[l]);
    sectors_.emplace_back(n, sums_[l]);
  }
}

}  // namespace trisect
