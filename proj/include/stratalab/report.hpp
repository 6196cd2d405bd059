#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "stratalab/analytics.hpp"
#include "stratalab/enumeration.hpp"
#include "stratalab/error.hpp"
#include "stratalab/monte_carlo.hpp"

namespace stratalab {

using Json = nlohmann::ordered_json;

// Wire conventions: rationals are {"num": "...", "den": "...", "decimal": "..."}
// in lowest terms; arbitrary-precision integers are decimal strings; machine
// sized parameters (ball_count, pot_counts, trials, ...) are JSON numbers.

Json to_json(const Rational& value);
Rational rational_from_json(const Json& node);

Json to_json(const LabelVector& label);
Json to_json(const AnalyticsReport& report);
Json to_json(const ComparisonReport& report);
Json to_json(const SimulationReport& report);
Json to_json(const MethodCheck& check);
Json to_json(const PairedReport& report);

/// Oracle pmf, its moments, the closed-form values and an `agrees` flag; a
/// `diff` object is added when the oracle and the closed forms disagree.
Json enumeration_to_json(const AlphaPmf& pmf, const AnalyticsReport& analytic);

/// {"code", "message", "detail"}.
Json to_json(const Error& error);

AnalyticsReport analytics_report_from_json(const Json& node);
ComparisonReport comparison_report_from_json(const Json& node);

struct CsvRow {
  std::string method;
  std::string field;
  std::string value;    // integers as digits, rationals as num/den
  std::string decimal;  // rationals only

  friend bool operator==(const CsvRow&, const CsvRow&) = default;
};

/// One row per (method, field) leaf of a JSON report. Nested keys are joined
/// with '.', array elements indexed as name[i]; `method` is inherited from
/// the nearest enclosing object that has one.
std::vector<CsvRow> csv_rows(const Json& report);

std::string render_csv(const std::vector<CsvRow>& rows);
std::vector<CsvRow> parse_csv(const std::string& text);

}  // namespace stratalab
