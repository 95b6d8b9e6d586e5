#include "paramsort/report/json.hpp"

#include <nlohmann/json.hpp>

namespace paramsort::report {

using nlohmann::json;

namespace {

template <class T>
json optional_to_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& value) {
  if (value.is_null()) return std::nullopt;
  return value.get<T>();
}

json metadata_to_json(const RunMetadata& meta) {
  json out;
  out["tool_version"] = meta.tool_version;
  out["generator"] = meta.generator;
  out["master_seed"] = optional_to_json(meta.master_seed);
  out["config"] = meta.config;
  out["timestamp"] = optional_to_json(meta.timestamp);
  return out;
}

RunMetadata metadata_from_json(const json& j) {
  RunMetadata meta;
  meta.tool_version = j.at("tool_version").get<std::string>();
  meta.generator = j.at("generator").get<std::string>();
  meta.master_seed = optional_from_json<std::uint64_t>(j.at("master_seed"));
  meta.config = j.at("config").get<std::string>();
  meta.timestamp = optional_from_json<std::string>(j.at("timestamp"));
  return meta;
}

json report_body(const RegressionReport& report) {
  json out;
  out["model"] = {{"degree", report.model.degree},
                  {"coefficients", report.model.coefficients}};
  const auto& s = report.summary;
  out["summary"] = {{"r", s.r},
                    {"r_squared", s.r_squared},
                    {"adjusted_r_squared", s.adjusted_r_squared},
                    {"std_error_of_estimate", s.std_error_of_estimate}};
  const auto& a = report.anova;
  out["anova"] = {{"ss_regression", a.ss_regression}, {"ss_residual", a.ss_residual},
                  {"ss_total", a.ss_total},           {"df_regression", a.df_regression},
                  {"df_residual", a.df_residual},     {"df_total", a.df_total},
                  {"ms_regression", a.ms_regression}, {"ms_residual", a.ms_residual},
                  {"f", optional_to_json(a.f)},       {"sig", optional_to_json(a.sig)}};
  json rows = json::array();
  for (const auto& row : report.coefficients) {
    rows.push_back({{"term", row.term_name},
                    {"b", row.b},
                    {"std_error", row.std_error},
                    {"beta", optional_to_json(row.beta)},
                    {"t", optional_to_json(row.t)},
                    {"sig", optional_to_json(row.sig)}});
  }
  out["coefficients"] = std::move(rows);
  out["m"] = report.m;
  out["exact_fit"] = report.exact_fit;
  return out;
}

RegressionReport report_from_body(const json& j) {
  RegressionReport report;
  report.model.degree = j.at("model").at("degree").get<int>();
  report.model.coefficients = j.at("model").at("coefficients").get<std::vector<double>>();
  const auto& s = j.at("summary");
  report.summary.r = s.at("r").get<double>();
  report.summary.r_squared = s.at("r_squared").get<double>();
  report.summary.adjusted_r_squared = s.at("adjusted_r_squared").get<double>();
  report.summary.std_error_of_estimate = s.at("std_error_of_estimate").get<double>();
  const auto& a = j.at("anova");
  report.anova.ss_regression = a.at("ss_regression").get<double>();
  report.anova.ss_residual = a.at("ss_residual").get<double>();
  report.anova.ss_total = a.at("ss_total").get<double>();
  report.anova.df_regression = a.at("df_regression").get<int>();
  report.anova.df_residual = a.at("df_residual").get<int>();
  report.anova.df_total = a.at("df_total").get<int>();
  report.anova.ms_regression = a.at("ms_regression").get<double>();
  report.anova.ms_residual = a.at("ms_residual").get<double>();
  report.anova.f = optional_from_json<double>(a.at("f"));
  report.anova.sig = optional_from_json<double>(a.at("sig"));
  for (const auto& row : j.at("coefficients")) {
    CoefficientRow r;
    r.term_name = row.at("term").get<std::string>();
    r.b = row.at("b").get<double>();
    r.std_error = row.at("std_error").get<double>();
    r.beta = optional_from_json<double>(row.at("beta"));
    r.t = optional_from_json<double>(row.at("t"));
    r.sig = optional_from_json<double>(row.at("sig"));
    report.coefficients.push_back(std::move(r));
  }
  report.m = j.at("m").get<std::size_t>();
  report.exact_fit = j.at("exact_fit").get<bool>();
  return report;
}

template <class F>
auto guarded(F&& parse) {
  try {
    return parse();
  } catch (const json::exception& e) {
    throw JsonFormatError(e.what());
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(e.what());
  }
}

}  // namespace

std::string regression_report_to_json(const RegressionReport& report, const RunMetadata& meta) {
  json out = report_body(report);
  out["metadata"] = metadata_to_json(meta);
  return out.dump(2) + "\n";
}

ParsedRegressionReport regression_report_from_json(std::string_view text) {
  return guarded([&] {
    const json j = json::parse(text);
    return ParsedRegressionReport{report_from_body(j), metadata_from_json(j.at("metadata"))};
  });
}

std::string verdict_to_json(const EmpiricalOVerdict& verdict, const RunMetadata& meta) {
  json out;
  out["selected_degree"] = verdict.selected_degree;
  out["label"] = verdict.label;
  out["flag"] = std::string(to_string(verdict.flag));
  out["alpha"] = verdict.alpha;
  json trace = json::array();
  for (const auto& step : verdict.decision_trace) {
    trace.push_back({{"degree", step.degree},
                     {"t", optional_to_json(step.t)},
                     {"sig", optional_to_json(step.sig)},
                     {"significant", step.significant},
                     {"decision", step.decision}});
  }
  out["trace"] = std::move(trace);
  json per_degree = json::object();
  for (const auto& [degree, report] : verdict.per_degree_reports) {
    per_degree[std::to_string(degree)] = report_body(report);
  }
  out["per_degree"] = std::move(per_degree);
  out["metadata"] = metadata_to_json(meta);
  return out.dump(2) + "\n";
}

ParsedVerdict verdict_from_json(std::string_view text) {
  return guarded([&] {
    const json j = json::parse(text);
    ParsedVerdict parsed;
    auto& v = parsed.verdict;
    v.selected_degree = j.at("selected_degree").get<int>();
    v.label = j.at("label").get<std::string>();
    v.flag = parse_verdict_flag(j.at("flag").get<std::string>());
    v.alpha = j.at("alpha").get<double>();
    for (const auto& step : j.at("trace")) {
      v.decision_trace.push_back({step.at("degree").get<int>(),
                                  optional_from_json<double>(step.at("t")),
                                  optional_from_json<double>(step.at("sig")),
                                  step.at("significant").get<bool>(),
                                  step.at("decision").get<std::string>()});
    }
    for (const auto& [key, body] : j.at("per_degree").items()) {
      v.per_degree_reports.emplace(std::stoi(key), report_from_body(body));
    }
    parsed.metadata = metadata_from_json(j.at("metadata"));
    return parsed;
  });
}

std::string theory_to_json(const TheoryPrediction& prediction, const RunMetadata& meta) {
  json out;
  json model;
  if (const auto* geo = std::get_if<Geometric>(&prediction.model)) {
    model = {{"distribution", "geometric"}, {"p", geo->param.p()}};
  } else {
    model = {{"distribution", "continuous"}};
  }
  out["model"] = std::move(model);
  out["n"] = prediction.n;
  out["tie_probability"] = prediction.tie_probability;
  out["interchange_probability"] = prediction.interchange_probability;
  out["expected_interchanges"] = prediction.expected_interchanges;
  out["note"] = "expected_interchanges is the exact expected inversion count of the input";
  out["metadata"] = metadata_to_json(meta);
  return out.dump(2) + "\n";
}

}  // namespace paramsort::report
