#include "trisect/diagram_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace trisect {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Integer to_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    Integer out;
    const std::string s = v.get<std::string>();
    if (s.empty() || out.set_str(s, 10) != 0) throw ParseError(where + ": not a decimal integer");
    return out;
  }
  throw ParseError(where + ": expected an integer");
}

IntVector to_vector(const json& v, std::size_t length, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected a list of integers");
  if (v.size() != length)
    throw ParseError(where + ": expected " + std::to_string(length) + " entries, found " +
                     std::to_string(v.size()));
  IntVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(to_integer(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::ordered_json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

}  // namespace

TrisectionDiagram parse_diagram(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("diagram: expected a JSON object");
  static const std::set<std::string> known = {"genus", "alpha", "beta", "gamma", "label"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) throw ParseError("diagram: unknown field '" + key + "'");
  if (!doc.contains("genus")) throw ParseError("diagram: missing field 'genus'");
  const json& g = doc["genus"];
  if (!g.is_number_integer() || g.get<std::int64_t>() < 0)
    throw ParseError("diagram: 'genus' must be a nonnegative integer");
  TrisectionDiagram d;
  d.genus = g.get<std::size_t>();
  for (std::size_t s = 0; s < 3; ++s) {
    const std::string name(kSystemNames[s]);
    if (!doc.contains(name)) throw ParseError("diagram: missing field '" + name + "'");
    const json& rows = doc[name];
    if (!rows.is_array()) throw ParseError(name + ": expected a list of curves");
    if (rows.size() != d.genus)
      throw ParseError(name + ": expected " + std::to_string(d.genus) + " curves, found " +
                       std::to_string(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      d.systems[s].curves.push_back(to_vector(rows[i], 2 * d.genus, name + "[" + std::to_string(i) + "]"));
  }
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw ParseError("diagram: 'label' must be a string");
    d.label = doc["label"].get<std::string>();
  }
  return d;
}

TrisectionDiagram load_diagram(const std::string& path) { return parse_diagram(read_file(path)); }

std::array<IntVector, 3> parse_rep(std::string_view text, std::size_t genus) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("rep: expected a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "a1" && key != "a2" && key != "a3") throw ParseError("rep: unknown field '" + key + "'");
  std::array<IntVector, 3> out;
  for (std::size_t l = 0; l < 3; ++l) {
    const std::string name = "a" + std::to_string(l + 1);
    if (!doc.contains(name)) throw ParseError("rep: missing field '" + name + "'");
    out[l] = to_vector(doc[name], 2 * genus, name);
  }
  return out;
}

std::array<IntVector, 3> load_rep(const std::string& path, std::size_t genus) {
  return parse_rep(read_file(path), genus);
}

std::string diagram_to_json(const TrisectionDiagram& d) {
  nlohmann::ordered_json doc;
  doc["genus"] = d.genus;
  for (std::size_t s = 0; s < 3; ++s) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& c : d.systems[s].curves) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (const auto& x : c) row.push_back(integer_json(x));
      rows.push_back(row);
    }
    doc[std::string(kSystemNames[s])] = rows;
  }
  if (!d.label.empty()) doc["label"] = d.label;
  return doc.dump() + "\n";
}

}  // namespace trisect
