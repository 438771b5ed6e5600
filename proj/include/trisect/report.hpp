#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "trisect/diagram.hpp"

namespace trisect {

/// Output of one CLI command: a text body and a structured body carrying
/// the same values. Both renderings are byte-deterministic.
struct Report {
  std::string command;
  std::string label;
  int exit_code = 0;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<std::string> lines;

  std::string render(bool json) const;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitParse = 2;

Report validate_report(const TrisectionDiagram& d);
/// Report for a diagram that failed validation under any other command.
Report invalid_report(const std::string& command, const TrisectionDiagram& d, const ValidationReport& v);
Report error_report(const std::string& command, const std::string& label, int exit_code,
                    const std::string& message);

Report homology_report(const Trisection& t);
Report diamond_report(const Trisection& t);
Report form_report(const Trisection& t);
Report spin_report(const Trisection& t);
/// Without a rep, lists the base ledger and the dual reps of an H^2 basis.
/// With one, acts on the base ledger and reports the trace. Throws
/// std::invalid_argument when the rep is not a cycle.
Report spinc_report(const Trisection& t, const std::optional<std::array<IntVector, 3>>& rep);

/// Decimal integers that fit in 64 bits become JSON numbers, others strings.
nlohmann::ordered_json to_json(const Integer& x);
nlohmann::ordered_json to_json(const IntVector& v);
nlohmann::ordered_json to_json(const IntMatrix& m);

}  // namespace trisect
