#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "trisect/diagram.hpp"

namespace trisect {

/// Malformed input text (bad JSON, wrong field names or shapes).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Diagram file: {"genus": g, "alpha": [[...2g ints], ... g rows], "beta": ...,
/// "gamma": ..., "label": "optional"}. Integers may also be given as decimal
/// strings. Unknown fields are rejected.
TrisectionDiagram parse_diagram(std::string_view text);
TrisectionDiagram load_diagram(const std::string& path);

/// Rep file: {"a1": [...], "a2": [...], "a3": [...]}, each of length 2g.
std::array<IntVector, 3> parse_rep(std::string_view text, std::size_t genus);
std::array<IntVector, 3> load_rep(const std::string& path, std::size_t genus);

std::string diagram_to_json(const TrisectionDiagram& d);

}  // namespace trisect
