#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "paramsort/distributions.hpp"
#include "paramsort/model_select.hpp"
#include "paramsort/montecarlo.hpp"
#include "paramsort/polyfit.hpp"
#include "paramsort/report/csv.hpp"
#include "paramsort/report/fixture.hpp"
#include "paramsort/report/json.hpp"
#include "paramsort/report/metadata.hpp"
#include "paramsort/report/render.hpp"
#include "paramsort/report/svg.hpp"
#include "paramsort/theory.hpp"

namespace paramsort::cli {

namespace fs = std::filesystem;

namespace {

// Exact decimal "123.456" -> (123456, 3). No signs or exponents.
struct Decimal {
  std::int64_t units = 0;
  int places = 0;
};

std::optional<Decimal> parse_decimal(std::string_view text) {
  Decimal out;
  bool seen_point = false;
  bool seen_digit = false;
  for (const char c : text) {
    if (c == '.') {
      if (seen_point) return std::nullopt;
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      seen_digit = true;
      if (out.units > (INT64_MAX - 9) / 10) return std::nullopt;
      out.units = out.units * 10 + (c - '0');
      if (seen_point) ++out.places;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit || out.places > 15) return std::nullopt;
  return out;
}

std::int64_t rescale(const Decimal& d, int places) {
  std::int64_t v = d.units;
  for (int i = d.places; i < places; ++i) v *= 10;
  return v;
}

double parse_real_arg(std::string_view text, const std::string& what) {
  std::string buffer = text.starts_with('.') ? "0" + std::string(text) : std::string(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (buffer.empty() || ec != std::errc{} || ptr != buffer.data() + buffer.size()) {
    throw UsageError("invalid " + what + ": '" + std::string(text) + "'");
  }
  return value;
}

void check_p(double p, std::string_view text) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw UsageError("p must be in (0,1], got " + std::string(text));
  }
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t resolve_seed(const std::string& text, std::ostream& err) {
  if (text == "auto") {
    std::random_device rd;
    const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    err << "paramsort: using seed " << seed << "\n";
    return seed;
  }
  std::uint64_t seed = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("--seed must be a nonnegative 64-bit integer or 'auto', got '" + text + "'");
  }
  return seed;
}

std::string config_echo(const ExperimentConfig& config, const std::string& grid_text) {
  std::ostringstream os;
  os << "n=" << config.n << " trials=" << config.trials << " p=" << grid_text
     << " mode=" << to_string(config.counter_mode)
     << " sampler=" << to_string(config.sampler_method);
  return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  file << content;
  if (!file) throw std::runtime_error("failed writing " + path.string());
}

report::SummaryCsv load_summaries(const std::string& input, bool use_fixture) {
  if (use_fixture) {
    report::SummaryCsv csv;
    csv.rows = report::reference_summaries();
    csv.metadata.generator = "none";
    csv.metadata.config = "published reference table";
    return csv;
  }
  if (input.empty()) throw UsageError("either --input FILE or --fixture is required");
  std::ifstream file(input);
  if (!file) throw std::runtime_error("cannot open " + input);
  try {
    return report::read_summary_csv(file);
  } catch (const report::CsvError& e) {
    throw std::runtime_error(input + ": " + e.what());
  }
}

report::RunMetadata derived_metadata(const report::RunMetadata& source, const std::string& config,
                                     bool with_timestamp) {
  std::string echo = config;
  if (!source.config.empty()) echo += "; input: " + source.config;
  return report::make_metadata(source.generator.empty() ? "none" : source.generator,
                               source.master_seed, echo, with_timestamp);
}

// --- subcommand option holders ------------------------------------------------

struct SimulateOptions {
  std::size_t n = 1000;
  std::size_t trials = 100;
  std::string p_grid = "0.1..0.9:0.1";
  std::string mode = "exchange";
  std::string sampler = "inverse";
  std::string seed;
  unsigned jobs = 1;
  std::string output;
  bool no_timestamp = false;
};

struct TheoryOptions {
  std::string dist = "geometric";
  std::string p;
  std::uint64_t n = 1000;
  bool json = false;
};

struct FitOptions {
  std::string input;
  bool fixture = false;
  int degree = 3;
  std::string json_out;
  bool json = false;
  bool no_timestamp = false;
};

struct SelectOptions {
  std::string input;
  bool fixture = false;
  double alpha = 0.05;
  int d_min = 1;
  int d_max = 4;
  std::string json_out;
  bool json = false;
  bool no_timestamp = false;
};

struct ReproduceOptions {
  std::string out_dir = "repro";
  std::string seed;
  bool use_fixture = false;
  unsigned jobs = 0;
  bool no_timestamp = false;
};

// --- subcommands -------------------------------------------------------------

int cmd_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err) {
  ExperimentConfig config;
  config.n = opt.n;
  config.trials = opt.trials;
  config.p_values = parse_p_grid(opt.p_grid);
  try {
    config.counter_mode = parse_counter_mode(opt.mode);
    config.sampler_method = parse_sampler_method(opt.sampler);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (opt.seed.empty()) throw UsageError("--seed is required (pass --seed auto for a random one)");
  config.master_seed = resolve_seed(opt.seed, err);
  config.jobs = opt.jobs;
  if (config.n == 0) throw UsageError("--n must be at least 1");
  if (config.trials == 0) throw UsageError("--trials must be at least 1");
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const auto rows = run_experiment(config);
  const auto meta = report::make_metadata(std::string(RandomSource::kAlgorithmId),
                                          config.master_seed, config_echo(config, opt.p_grid),
                                          !opt.no_timestamp);
  std::ostringstream csv;
  report::write_summary_csv(csv, rows, meta);
  if (opt.output.empty() || opt.output == "-") {
    out << csv.str();
  } else {
    write_file(opt.output, csv.str());
  }
  return kExitOk;
}

int cmd_theory(const TheoryOptions& opt, std::ostream& out) {
  InputModel model = ContinuousUniform{};
  if (opt.dist == "geometric") {
    if (opt.p.empty()) throw UsageError("--p is required for --dist geometric");
    const double p = parse_real_arg(opt.p, "p");
    check_p(p, opt.p);
    model = Geometric{GeometricParam(p)};
  } else if (opt.dist != "continuous") {
    throw UsageError("--dist must be 'geometric' or 'continuous'");
  }
  if (opt.n == 0) throw UsageError("--n must be at least 1");
  const TheoryPrediction prediction = predict(model, opt.n);
  if (opt.json) {
    const auto meta = report::make_metadata("none", std::nullopt,
                                            describe(model) + " n=" + std::to_string(opt.n), false);
    out << report::theory_to_json(prediction, meta);
  } else {
    out << report::render_theory(prediction);
  }
  return kExitOk;
}

int cmd_fit(const FitOptions& opt, std::ostream& out) {
  if (opt.degree < 0) throw UsageError("--degree must be nonnegative");
  const auto data = load_summaries(opt.input, opt.fixture);
  const auto points = report::to_points(data.rows);
  const RegressionReport rep = fit_report(points, opt.degree);
  const auto meta = derived_metadata(data.metadata, "fit degree=" + std::to_string(opt.degree),
                                     !opt.no_timestamp);
  const std::string json = report::regression_report_to_json(rep, meta);
  if (!opt.json_out.empty()) write_file(opt.json_out, json);
  if (opt.json) {
    out << json;
  } else {
    out << report::render_report(rep);
  }
  return kExitOk;
}

int cmd_select(const SelectOptions& opt, std::ostream& out) {
  const auto data = load_summaries(opt.input, opt.fixture);
  const auto points = report::to_points(data.rows);
  SelectionPolicy policy{opt.alpha, opt.d_min, opt.d_max};
  EmpiricalOVerdict verdict;
  try {
    verdict = select_degree(points, policy);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ostringstream config;
  config << "select alpha=" << opt.alpha << " d_min=" << opt.d_min << " d_max=" << opt.d_max;
  const auto meta = derived_metadata(data.metadata, config.str(), !opt.no_timestamp);
  const std::string json = report::verdict_to_json(verdict, meta);
  if (!opt.json_out.empty()) write_file(opt.json_out, json);
  if (opt.json) {
    out << json;
  } else {
    out << render_verdict(verdict);
  }
  return kExitOk;
}

int cmd_reproduce(const ReproduceOptions& opt, std::ostream& out, std::ostream& err) {
  const fs::path dir(opt.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

  const bool stamp = !opt.no_timestamp;
  const auto reference = report::reference_summaries();
  std::vector<TrialSummary> rows;
  report::RunMetadata meta;
  if (opt.use_fixture) {
    rows = reference;
    meta = report::make_metadata("none", std::nullopt, "published reference table", stamp);
  } else {
    if (opt.seed.empty()) {
      throw UsageError("--seed is required (pass --seed auto, or --use-fixture to skip simulation)");
    }
    ExperimentConfig config = reference_experiment(resolve_seed(opt.seed, err));
    config.jobs = opt.jobs;
    rows = run_experiment(config);
    meta = report::make_metadata(std::string(RandomSource::kAlgorithmId), config.master_seed,
                                 config_echo(config, "0.1..0.9:0.1"), stamp);
  }

  {
    std::ostringstream csv;
    report::write_summary_csv(csv, rows, meta);
    write_file(dir / "table1_repro.csv", csv.str());
  }
  {
    std::ostringstream csv;
    report::write_comparison_csv(csv, rows, reference, meta);
    write_file(dir / "comparison.csv", csv.str());
  }

  const auto points = report::to_points(rows);
  std::vector<RegressionReport> fits;
  for (const int degree : {2, 3, 4}) {
    fits.push_back(fit_report(points, degree));
    const auto fit_meta = report::make_metadata(meta.generator, meta.master_seed,
                                                meta.config + "; fit degree=" +
                                                    std::to_string(degree),
                                                stamp);
    const std::string stem = "fit_d" + std::to_string(degree);
    write_file(dir / (stem + ".json"), report::regression_report_to_json(fits.back(), fit_meta));
    write_file(dir / (stem + ".txt"), report::render_report(fits.back()));
  }

  const EmpiricalOVerdict verdict = select_degree(points, SelectionPolicy{});
  const auto verdict_meta =
      report::make_metadata(meta.generator, meta.master_seed,
                            meta.config + "; select alpha=0.05 d_min=1 d_max=4", stamp);
  write_file(dir / "verdict.json", report::verdict_to_json(verdict, verdict_meta));
  write_file(dir / "verdict.txt", render_verdict(verdict));

  const char* titles[] = {"Polynomial fit of degree 2", "Polynomial fit of degree 3",
                          "Polynomial fit of degree 4"};
  for (std::size_t i = 0; i < fits.size(); ++i) {
    report::FitFigure fig;
    fig.title = titles[i];
    fig.points = points;
    fig.curves.push_back({"degree " + std::to_string(fits[i].model.degree), fits[i].model});
    write_file(dir / ("fig" + std::to_string(i + 1) + ".svg"), report::render_fit_svg(fig));
  }
  {
    report::FitFigure fig;
    fig.title = "Cubic fit of mean c against p";
    fig.points = points;
    fig.curves.push_back({"cubic", fits[1].model});
    write_file(dir / "fig4.svg", report::render_fit_svg(fig));
  }

  out << "wrote artifacts to " << dir.string() << "\n\n";
  out << "Cubic fit\n" << report::render_report(fits[1]) << "\n";
  out << render_verdict(verdict);
  return kExitOk;
}

}  // namespace

std::vector<double> parse_p_grid(std::string_view text) {
  const std::string grid_text = trim(text);
  if (grid_text.empty()) throw UsageError("empty p grid");

  std::vector<double> values;
  if (const auto dots = grid_text.find(".."); dots != std::string::npos) {
    const auto colon = grid_text.find(':', dots);
    if (colon == std::string::npos) throw UsageError("p range must look like a..b:step");
    const std::string first = grid_text.substr(0, dots);
    const std::string last = grid_text.substr(dots + 2, colon - dots - 2);
    const std::string step = grid_text.substr(colon + 1);
    const auto a = parse_decimal(first);
    const auto b = parse_decimal(last);
    const auto s = parse_decimal(step);
    if (!a || !b || !s) throw UsageError("p range must look like a..b:step, got '" + grid_text + "'");
    const int places = std::max({a->places, b->places, s->places});
    const std::int64_t lo = rescale(*a, places);
    const std::int64_t hi = rescale(*b, places);
    const std::int64_t inc = rescale(*s, places);
    if (inc <= 0) throw UsageError("p step must be positive");
    if (hi < lo) throw UsageError("p range end must not be below its start");
    double denom = 1.0;
    for (int i = 0; i < places; ++i) denom *= 10.0;
    for (std::int64_t k = lo; k <= hi; k += inc) {
      // k / 10^places is correctly rounded, so 0.3 comes out as the double nearest 0.3.
      const double p = static_cast<double>(k) / denom;
      check_p(p, std::to_string(p));
      values.push_back(p);
    }
    check_p(values.front(), first);
    return values;
  }

  std::stringstream ss(grid_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    const double p = parse_real_arg(item, "p value");
    check_p(p, item);
    values.push_back(p);
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i - 1] < values[i])) throw UsageError("p values must be strictly increasing");
  }
  if (values.empty()) throw UsageError("empty p grid");
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"paramsort: parameterized complexity workbench for sorting experiments",
               "paramsort"};
  app.require_subcommand(1);
  app.set_version_flag("--version", report::tool_version());

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo interchange counts per p");
  simulate->add_option("--n", sim.n, "array length")->capture_default_str();
  simulate->add_option("--trials", sim.trials, "trials per p")->capture_default_str();
  simulate->add_option("--p", sim.p_grid, "p grid: a..b:step, comma list, or single value")
      ->capture_default_str();
  simulate->add_option("--mode", sim.mode, "exchange | textbook | inversions")
      ->capture_default_str();
  simulate->add_option("--sampler", sim.sampler, "loop | inverse")->capture_default_str();
  simulate->add_option("--seed", sim.seed, "master seed (integer) or 'auto'");
  simulate->add_option("--jobs", sim.jobs, "worker threads (0 = all cores)")
      ->capture_default_str();
  simulate->add_option("-o,--output", sim.output, "CSV path (default stdout)");
  simulate->add_flag("--no-timestamp", sim.no_timestamp, "omit the timestamp metadata line");

  TheoryOptions th;
  auto* theory = app.add_subcommand("theory", "closed-form tie/interchange probabilities");
  theory->add_option("--dist", th.dist, "geometric | continuous")->capture_default_str();
  theory->add_option("--p", th.p, "geometric success probability");
  theory->add_option("--n", th.n, "array length")->capture_default_str();
  theory->add_flag("--json", th.json, "emit JSON");

  FitOptions fo;
  auto* fit_cmd = app.add_subcommand("fit", "polynomial regression of mean_c on p");
  fit_cmd->add_option("-i,--input", fo.input, "TrialSummary CSV");
  fit_cmd->add_flag("--fixture", fo.fixture, "use the embedded published reference table");
  fit_cmd->add_option("--degree", fo.degree, "polynomial degree")->capture_default_str();
  fit_cmd->add_option("--json-out", fo.json_out, "also write the JSON report here");
  fit_cmd->add_flag("--json", fo.json, "print JSON instead of tables");
  fit_cmd->add_flag("--no-timestamp", fo.no_timestamp, "omit the timestamp metadata");

  SelectOptions so;
  auto* select = app.add_subcommand("select", "empirical-O degree selection");
  select->add_option("-i,--input", so.input, "TrialSummary CSV");
  select->add_flag("--fixture", so.fixture, "use the embedded published reference table");
  select->add_option("--alpha", so.alpha, "significance level")->capture_default_str();
  select->add_option("--d-min", so.d_min, "lowest degree scanned")->capture_default_str();
  select->add_option("--d-max", so.d_max, "highest degree scanned")->capture_default_str();
  select->add_option("--json-out", so.json_out, "also write the verdict JSON here");
  select->add_flag("--json", so.json, "print JSON instead of text");
  select->add_flag("--no-timestamp", so.no_timestamp, "omit the timestamp metadata");

  ReproduceOptions ro;
  auto* reproduce = app.add_subcommand("reproduce", "run the full pipeline into a directory");
  reproduce->add_option("--out-dir", ro.out_dir, "output directory")->capture_default_str();
  reproduce->add_option("--seed", ro.seed, "master seed (integer) or 'auto'");
  reproduce->add_flag("--use-fixture", ro.use_fixture,
                      "skip simulation and analyse the published reference table");
  reproduce->add_option("--jobs", ro.jobs, "worker threads (0 = all cores)")
      ->capture_default_str();
  reproduce->add_flag("--no-timestamp", ro.no_timestamp, "omit timestamp metadata");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << report::tool_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "paramsort: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(sim, out, err);
    if (theory->parsed()) return cmd_theory(th, out);
    if (fit_cmd->parsed()) return cmd_fit(fo, out);
    if (select->parsed()) return cmd_select(so, out);
    if (reproduce->parsed()) return cmd_reproduce(ro, out, err);
  } catch (const UsageError& e) {
    err << "paramsort: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "paramsort: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace paramsort::cli
