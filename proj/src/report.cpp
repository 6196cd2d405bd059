#include "stratalab/report.hpp"

#include <sstream>
#include <stdexcept>

namespace stratalab {

namespace {

Json spec_array(const ExperimentSpec& spec) {
  Json pots = Json::array();
  for (const auto n : spec.pot_counts()) pots.push_back(n);
  return pots;
}

void put_spec(Json& node, const ExperimentSpec& spec) {
  node["ball_count"] = spec.ball_count();
  node["pot_counts"] = spec_array(spec);
}

ExperimentSpec spec_from_json(const Json& node) {
  const auto pots = node.at("pot_counts").get<std::vector<std::int64_t>>();
  return validate_spec(node.at("ball_count").get<std::int64_t>(), pots);
}

Method method_from_json(const Json& node) {
  const auto text = node.at("method").get<std::string>();
  if (const auto method = parse_method(text)) return *method;
  throw std::invalid_argument("unknown method '" + text + "'");
}

Json optional_number(const std::optional<double>& value) { return value ? Json(*value) : Json(nullptr); }

bool is_rational(const Json& node) {
  return node.is_object() && node.size() == 3 && node.contains("num") && node.contains("den") &&
         node.contains("decimal");
}

}  // namespace

Json to_json(const Rational& value) {
  Json node;
  node["num"] = value.get_num().get_str();
  node["den"] = value.get_den().get_str();
  node["decimal"] = to_decimal(value);
  return node;
}

Rational rational_from_json(const Json& node) {
  return make_rational(BigInt(node.at("num").get<std::string>()), BigInt(node.at("den").get<std::string>()));
}

Json to_json(const LabelVector& label) {
  Json node = Json::array();
  for (const auto c : label.components) node.push_back(c);
  return node;
}

Json to_json(const AnalyticsReport& report) {
  Json node;
  node["method"] = std::string(to_string(report.method));
  put_spec(node, report.spec);
  node["outcome_count"] = report.outcome_count.get_str();
  node["average"] = to_json(report.average);
  node["w_statistic"] = to_json(report.w_statistic);
  node["variance_exact"] = to_json(report.variance_exact);
  node["variance_asymptotic"] = to_json(report.variance_asymptotic);
  node["pots_needed"] = report.pots_needed;
  return node;
}

AnalyticsReport analytics_report_from_json(const Json& node) {
  return AnalyticsReport{
      .method = method_from_json(node),
      .spec = spec_from_json(node),
      .outcome_count = BigInt(node.at("outcome_count").get<std::string>()),
      .average = rational_from_json(node.at("average")),
      .w_statistic = rational_from_json(node.at("w_statistic")),
      .variance_exact = rational_from_json(node.at("variance_exact")),
      .variance_asymptotic = rational_from_json(node.at("variance_asymptotic")),
      .pots_needed = node.at("pots_needed").get<std::uint64_t>(),
  };
}

Json to_json(const ComparisonReport& report) {
  Json node;
  put_spec(node, report.first.spec);
  node["methods"] = Json::array({to_json(report.first), to_json(report.second)});
  node["delta_exact"] = to_json(report.delta_exact);
  node["delta_asymptotic"] = to_json(report.delta_asymptotic);
  return node;
}

ComparisonReport comparison_report_from_json(const Json& node) {
  const auto& methods = node.at("methods");
  if (methods.size() != 2) throw std::invalid_argument("comparison report needs exactly two methods");
  return ComparisonReport{analytics_report_from_json(methods.at(0)), analytics_report_from_json(methods.at(1)),
                          rational_from_json(node.at("delta_exact")),
                          rational_from_json(node.at("delta_asymptotic"))};
}

Json to_json(const SimulationReport& report) {
  Json node;
  node["method"] = std::string(to_string(report.method));
  put_spec(node, report.spec);
  node["trials"] = report.trials;
  node["seed"] = report.seed;
  node["target_label"] = to_json(report.target);
  node["empirical_mean"] = report.empirical_mean;
  node["empirical_variance"] = optional_number(report.empirical_variance);
  node["min_count"] = report.min_count;
  node["max_count"] = report.max_count;
  node["chi_square_statistic"] = report.chi_square_statistic;
  node["stderr_of_variance"] = optional_number(report.stderr_of_variance);
  return node;
}

Json to_json(const MethodCheck& check) {
  Json node = to_json(check.simulation);
  node["average"] = to_json(check.exact.average);
  node["variance_exact"] = to_json(check.exact.variance_exact);
  node["pass"] = check.pass;
  return node;
}

Json to_json(const PairedReport& report) {
  Json node;
  node["checks"] = Json::array({to_json(report.first), to_json(report.second)});
  node["delta_exact"] = to_json(report.delta_exact);
  node["empirical_ordering"] = report.empirical_ordering > 0   ? "FIRST_GT_SECOND"
                               : report.empirical_ordering < 0 ? "FIRST_LT_SECOND"
                                                               : "EQUAL";
  return node;
}

Json enumeration_to_json(const AlphaPmf& pmf, const AnalyticsReport& analytic) {
  const Moments oracle = moments_from_pmf(pmf);
  Json node;
  node["method"] = std::string(to_string(pmf.method));
  put_spec(node, pmf.spec);
  node["target_label"] = to_json(pmf.target);
  node["outcome_count"] = pmf.outcomes.get_str();
  Json entries = Json::array();
  for (const auto& [alpha, probability] : pmf.support) {
    Json entry;
    entry["alpha"] = alpha;
    entry["probability"] = to_json(probability);
    entries.push_back(std::move(entry));
  }
  node["pmf"] = std::move(entries);
  node["mean"] = to_json(oracle.mean);
  node["variance"] = to_json(oracle.variance);
  node["average"] = to_json(analytic.average);
  node["variance_exact"] = to_json(analytic.variance_exact);
  const bool agrees = oracle.mean == analytic.average && oracle.variance == analytic.variance_exact &&
                      pmf.outcomes == analytic.outcome_count;
  node["agrees"] = agrees;
  if (!agrees) {
    Json diff;
    diff["outcome_count"] = BigInt(pmf.outcomes - analytic.outcome_count).get_str();
    diff["mean"] = to_json(oracle.mean - analytic.average);
    diff["variance"] = to_json(oracle.variance - analytic.variance_exact);
    node["diff"] = std::move(diff);
  }
  return node;
}

Json to_json(const Error& error) {
  Json node;
  node["code"] = std::string(to_string(error.code()));
  node["message"] = error.what();
  Json detail = Json::object();
  for (const auto& [key, value] : error.detail()) detail[key] = value;
  node["detail"] = std::move(detail);
  return node;
}

namespace {

void flatten(const Json& node, const std::string& path, const std::string& method, std::vector<CsvRow>& rows) {
  if (is_rational(node)) {
    rows.push_back({method, path,
                    node.at("num").get<std::string>() + "/" + node.at("den").get<std::string>(),
                    node.at("decimal").get<std::string>()});
    return;
  }
  if (node.is_object()) {
    const std::string inner = node.contains("method") ? node.at("method").get<std::string>() : method;
    for (const auto& [key, child] : node.items()) {
      if (key == "method") continue;
      flatten(child, path.empty() ? key : path + "." + key, inner, rows);
    }
    return;
  }
  if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      const Json& child = node[i];
      // Per-method sub-reports are keyed by their method column instead of a position.
      if (child.is_object() && child.contains("method")) {
        flatten(child, "", method, rows);
      } else {
        flatten(child, path + "[" + std::to_string(i) + "]", method, rows);
      }
    }
    return;
  }
  std::string value;
  if (node.is_string()) {
    value = node.get<std::string>();
  } else if (!node.is_null()) {
    value = node.dump();
  }
  rows.push_back({method, path, value, ""});
}

std::string quote(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (const char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<CsvRow> csv_rows(const Json& report) {
  std::vector<CsvRow> rows;
  flatten(report, "", "", rows);
  return rows;
}

std::string render_csv(const std::vector<CsvRow>& rows) {
  std::ostringstream out;
  out << "method,field,value,decimal\n";
  for (const auto& row : rows) {
    out << quote(row.method) << ',' << quote(row.field) << ',' << quote(row.value) << ',' << quote(row.decimal)
        << '\n';
  }
  return out.str();
}

std::vector<CsvRow> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(cell));
      cell.clear();
    } else if (c == '\n') {
      record.push_back(std::move(cell));
      cell.clear();
      records.push_back(std::move(record));
      record.clear();
    } else {
      cell += c;
    }
  }
  if (!cell.empty() || !record.empty()) {
    record.push_back(std::move(cell));
    records.push_back(std::move(record));
  }

  std::vector<CsvRow> rows;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& fields = records[r];
    if (fields.size() != 4) throw std::invalid_argument("csv record " + std::to_string(r) + " has wrong arity");
    rows.push_back({fields[0], fields[1], fields[2], fields[3]});
  }
  return rows;
}

}  // namespace stratalab
