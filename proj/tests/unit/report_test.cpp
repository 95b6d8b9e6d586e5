#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "paramsort/model_select.hpp"
#include "paramsort/montecarlo.hpp"
#include "paramsort/report/csv.hpp"
#include "paramsort/report/fixture.hpp"
#include "paramsort/report/json.hpp"
#include "paramsort/report/metadata.hpp"
#include "paramsort/report/render.hpp"
#include "paramsort/report/svg.hpp"
#include "paramsort/theory.hpp"

namespace paramsort::report {
namespace {

RunMetadata fixed_meta() {
  return make_metadata("mt19937_64", 42, "n=10 trials=3", false);
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(Fixture, RowsAndChecksum) {
  const auto rows = reference_table();
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows.front().p, ".1");
  EXPECT_EQ(rows.front().mean_c, "30590.93");
  EXPECT_EQ(rows.back().sd_c, "353.7879");
  // Frozen: any edit to the published text changes this value.
  EXPECT_EQ(reference_table_checksum(), 12842853668014891141ULL);
  const auto pts = reference_points();
  ASSERT_EQ(pts.size(), 9u);
  EXPECT_DOUBLE_EQ(pts[4].x, 0.5);
  EXPECT_DOUBLE_EQ(pts[4].y, 6832.90);
  const auto sums = reference_summaries();
  EXPECT_EQ(sums[0].n, kReferenceN);
  EXPECT_EQ(sums[0].trials, kReferenceTrials);
  EXPECT_DOUBLE_EQ(*sums[8].cv_c, 0.1634132);
}

TEST(FormatDouble, ShortestRoundTrip) {
  for (const double v : {0.1, 30590.93, 1.0 / 3.0, 1e-300, 6.02e23, -0.0, 12345678.9}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1000.0), "1000");
}

TEST(SummaryCsv, RoundTrip) {
  ExperimentConfig config;
  config.n = 10;
  config.trials = 3;
  config.p_values = {0.3, 1.0};
  config.master_seed = 42;
  const auto rows = run_experiment(config);
  std::ostringstream out;
  write_summary_csv(out, rows, fixed_meta());

  std::istringstream in(out.str());
  const auto parsed = read_summary_csv(in);
  EXPECT_EQ(parsed.rows, rows);
  EXPECT_EQ(parsed.metadata, fixed_meta());
  EXPECT_FALSE(parsed.rows[1].cv_c.has_value());
  EXPECT_NE(out.str().find(std::string(kSummaryHeader)), std::string::npos);
}

TEST(SummaryCsv, TimestampIsOptional) {
  auto meta = fixed_meta();
  meta.timestamp = "2026-01-01T00:00:00Z";
  std::ostringstream out;
  write_summary_csv(out, reference_summaries(), meta);
  std::istringstream in(out.str());
  EXPECT_EQ(read_summary_csv(in).metadata, meta);
}

TEST(SummaryCsv, EmptyInputNamesHeader) {
  std::istringstream in("");
  try {
    read_summary_csv(in);
    FAIL() << "expected CsvError";
  } catch (const CsvError& e) {
    EXPECT_NE(std::string(e.what()).find("missing header"), std::string::npos);
  }
}

TEST(SummaryCsv, MalformedLineIsReported) {
  std::istringstream in(
      "# tool: x\n"
      "p,n,trials,mean_c,sd_c,cv_c\n"
      "0.1,1000,100,1,2,3\n"
      "0.2,1000,100,abc,2,3\n");
  try {
    read_summary_csv(in);
    FAIL() << "expected CsvError";
  } catch (const CsvError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("mean_c"), std::string::npos);
  }

  std::istringstream short_row("p,n,trials,mean_c,sd_c,cv_c\n0.1,1000\n");
  EXPECT_THROW(read_summary_csv(short_row), CsvError);
}

TEST(ComparisonCsv, ColumnsAndRows) {
  std::ostringstream out;
  write_comparison_csv(out, reference_summaries(), reference_summaries(), fixed_meta());
  const std::string text = out.str();
  EXPECT_NE(text.find("z_vs_reference"), std::string::npos);
  EXPECT_NE(text.find("closed_form_expected_inversions"), std::string::npos);
  std::size_t data_lines = 0;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty() && line[0] != '#' && line[0] != 'p') ++data_lines;
  }
  EXPECT_EQ(data_lines, 9u);
}

TEST(Json, RegressionReportRoundTrip) {
  const auto report = fit_report(reference_points(), 3);
  const auto text = regression_report_to_json(report, fixed_meta());
  const auto parsed = regression_report_from_json(text);
  EXPECT_EQ(parsed.report, report);
  EXPECT_EQ(parsed.metadata, fixed_meta());
}

TEST(Json, ExactFitUsesNull) {
  std::vector<DataPoint> pts;
  for (int i = 1; i <= 5; ++i) pts.push_back({double(i), 2.0 * i});
  const auto report = fit_report(pts, 1);
  ASSERT_TRUE(report.exact_fit);
  const auto text = regression_report_to_json(report, fixed_meta());
  EXPECT_NE(text.find("null"), std::string::npos);
  EXPECT_EQ(regression_report_from_json(text).report, report);
}

TEST(Json, VerdictRoundTrip) {
  const auto verdict = select_degree(reference_points());
  const auto text = verdict_to_json(verdict, fixed_meta());
  const auto parsed = verdict_from_json(text);
  EXPECT_EQ(parsed.verdict, verdict);
  EXPECT_NE(text.find("\"cap-limited\""), std::string::npos);
}

TEST(Json, MalformedInputThrows) {
  EXPECT_THROW(regression_report_from_json("{"), JsonFormatError);
  EXPECT_THROW(regression_report_from_json("{}"), JsonFormatError);
  EXPECT_THROW(verdict_from_json("[1,2]"), JsonFormatError);
}

TEST(Json, Theory) {
  const auto text = theory_to_json(predict(Geometric{GeometricParam(0.5)}, 1000), fixed_meta());
  EXPECT_NE(text.find("166500"), std::string::npos);
}

TEST(Render, DisplayFormatting) {
  EXPECT_EQ(format_display(0.99115), ".991");
  EXPECT_EQ(format_display(-0.5), "-.500");
  EXPECT_EQ(format_display(654795000.0), "6.548E8");
  EXPECT_EQ(format_display(5846595.0794), "5846595.079");
  EXPECT_EQ(format_display(186.6599), "186.660");
  EXPECT_EQ(format_sig(1.4962e-5), ".000");
  EXPECT_EQ(format_sig(0.0018468), ".002");
  EXPECT_EQ(format_sig(0.0054394), ".005");
}

TEST(Render, ReferenceCubicTables) {
  const auto report = fit_report(reference_points(), 3);
  const auto summary = render_model_summary(report);
  EXPECT_NE(summary.find(".996"), std::string::npos);
  EXPECT_NE(summary.find(".991"), std::string::npos);
  EXPECT_NE(summary.find(".986"), std::string::npos);
  EXPECT_NE(summary.find("1081.351"), std::string::npos);

  const auto anova = render_anova(report);
  EXPECT_NE(anova.find("6.548E8"), std::string::npos);
  EXPECT_NE(anova.find("186.660"), std::string::npos);
  EXPECT_NE(anova.find("5846595.079"), std::string::npos);

  const auto coef = render_coefficients(report);
  for (const char* cell : {"-173518.487", "19171.152", "-5.229", "-9.051", "260373.301",
                           "6.000", ".002", "-4.679", ".005", "44576.213", "19.066"}) {
    EXPECT_NE(coef.find(cell), std::string::npos) << cell;
  }
  EXPECT_EQ(render_report(report), summary + "\n" + anova + "\n" + coef);
}

TEST(Svg, WellFormedFigure) {
  const auto pts = reference_points();
  FitFigure figure;
  figure.title = "Fits";
  figure.points = pts;
  for (int d = 2; d <= 4; ++d) figure.curves.push_back({"degree " + std::to_string(d), fit(pts, d)});
  const auto svg = render_fit_svg(figure);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_EQ(count(svg, "<svg"), 1u);
  EXPECT_EQ(count(svg, "</svg>"), 1u);
  EXPECT_EQ(count(svg, "<polyline"), 3u);
  EXPECT_EQ(count(svg, "<circle"), 9u);
  EXPECT_EQ(count(svg, "<script"), 0u);
  EXPECT_NE(svg.find("degree 3"), std::string::npos);

  // Each polyline carries kCurveSamples vertices.
  const auto start = svg.find("points=\"", svg.find("<polyline")) + 8;
  const auto end = svg.find('"', start);
  const std::string vertices = svg.substr(start, end - start);
  EXPECT_EQ(static_cast<int>(std::count(vertices.begin(), vertices.end(), ',')), kCurveSamples);
}

TEST(Svg, RejectsEmptyFigure) {
  EXPECT_THROW(render_fit_svg(FitFigure{}), std::invalid_argument);
}

TEST(Metadata, Version) {
  EXPECT_EQ(tool_version(), "paramsort 1.0.0");
  const auto meta = make_metadata("none", std::nullopt, "x", true);
  ASSERT_TRUE(meta.timestamp.has_value());
  EXPECT_EQ(meta.timestamp->size(), 20u);
  EXPECT_EQ(meta.timestamp->back(), 'Z');
}

}  // namespace
}  // namespace paramsort::report
