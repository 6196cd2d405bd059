#include "stratalab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "stratalab/analytics.hpp"
#include "stratalab/enumeration.hpp"
#include "stratalab/error.hpp"
#include "stratalab/monte_carlo.hpp"
#include "stratalab/report.hpp"

namespace stratalab::cli {

namespace {

void emit_error(std::ostream& err, const std::string& code, const std::string& message, Json detail = Json::object()) {
  Json node;
  node["code"] = code;
  node["message"] = message;
  node["detail"] = std::move(detail);
  err << node.dump() << '\n';
}

std::vector<Method> selected_methods(const RunConfig& config) {
  if (config.method) return {*config.method};
  return {kMethods.begin(), kMethods.end()};
}

Json build_report(const RunConfig& config, std::ostream& err) {
  const ExperimentSpec spec = validate_spec(config.ball_count, config.pot_counts);
  std::optional<LabelVector> target;
  if (!config.target.empty()) {
    LabelVector label;
    for (const auto c : config.target) {
      if (c <= 0) throw Error(ErrorCode::BadLabel, "label components must be positive");
      label.components.push_back(static_cast<std::uint64_t>(c));
    }
    check_label(spec, label);
    target = std::move(label);
  }

  Json node;
  node["command"] = config.command;
  if (config.command == "compare") {
    if (config.method) err << "warning: compare always evaluates both methods; --method ignored\n";
    const Json body = to_json(compare_methods(spec));
    for (const auto& [key, value] : body.items()) node[key] = value;
  } else if (config.command == "analyze") {
    Json reports = Json::array();
    for (const auto method : selected_methods(config)) reports.push_back(to_json(analyze(method, spec)));
    node["reports"] = std::move(reports);
  } else if (config.command == "enumerate") {
    const LabelVector label = target.value_or(all_ones(spec));
    const BigInt budget(std::to_string(config.budget));
    Json reports = Json::array();
    for (const auto method : selected_methods(config)) {
      reports.push_back(enumeration_to_json(alpha_distribution(method, spec, label, budget), analyze(method, spec)));
    }
    node["reports"] = std::move(reports);
  } else if (config.command == "simulate") {
    const SimulationOptions options{target, config.threads};
    if (config.method) {
      SimulationReport sim = simulate(*config.method, spec, config.trials, config.seed, options);
      AnalyticsReport exact = analyze(*config.method, spec);
      const bool pass = within_band(sim, exact.variance_exact);
      node["reports"] = Json::array({to_json(MethodCheck{std::move(sim), std::move(exact), pass})});
    } else {
      const Json body = to_json(empirical_vs_exact(spec, config.trials, config.seed, options));
      for (const auto& [key, value] : body.items()) node[key] = value;
    }
  }
  return node;
}

void add_options(CLI::App& app, RunConfig& config, std::string& method_text, std::string& format_text) {
  app.add_option("--balls,-N", config.ball_count, "Number of balls N")->required();
  app.add_option("--pots,-n", config.pot_counts, "Comma-separated pot counts n_1,...,n_r")
      ->required()
      ->delimiter(',')
      ->expected(0, CLI::detail::expected_max_vector_size);
  app.add_option("--method,-m", method_text, "first | second (default: both)")
      ->check(CLI::IsMember({"first", "second", "FIRST_WAY", "SECOND_WAY"}));
  app.add_option("--seed", config.seed, "Base seed for simulation streams");
  app.add_option("--trials", config.trials, "Simulated experiments per method");
  app.add_option("--target", config.target, "Comma-separated target label (default all ones)")->delimiter(',');
  app.add_option("--budget", config.budget, "Maximum outcomes the enumeration may walk")->envname("STRATALAB_BUDGET");
  app.add_option("--format", format_text, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output,-o", config.output_path, "Write the report here instead of standard output");
  app.add_option("--threads", config.threads, "Simulation worker threads (0 = all cores)");
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Json report;
  try {
    report = build_report(config, err);
  } catch (const Error& e) {
    err << to_json(e).dump() << '\n';
    return e.code() == ErrorCode::BudgetExceeded ? kExitBudget : kExitValidation;
  }

  const std::string text = config.format == Format::Json ? report.dump(2) + "\n" : render_csv(csv_rows(report));
  if (!config.output_path) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(*config.output_path);
  file << text;
  if (!file) {
    emit_error(err, "IO_ERROR", "cannot write report", Json{{"path", *config.output_path}});
    return kExitFailure;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and simulated label-count statistics for two exact-capacity labelling schemes", "stratalab"};
  app.set_config("--config", "", "Flat key = value file with the same keys as the flags; flags win");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string method_text;
  std::string format_text = "json";
  add_options(app, config, method_text, format_text);
  for (const char* name : {"analyze", "simulate", "enumerate", "compare"}) {
    app.add_subcommand(name)->callback([&config, name] { config.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "MALFORMED_FLAGS", e.what());
    return kExitUsage;
  }

  if (!method_text.empty()) config.method = parse_method(method_text);
  config.format = format_text == "csv" ? Format::Csv : Format::Json;
  return execute(config, out, err);
}

}  // namespace stratalab::cli
