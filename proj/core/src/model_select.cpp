#include "paramsort/model_select.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace paramsort {

std::string_view to_string(VerdictFlag flag) noexcept {
  switch (flag) {
    case VerdictFlag::none:
      return "none";
    case VerdictFlag::cap_limited:
      return "cap-limited";
    case VerdictFlag::degenerate:
      return "degenerate";
    case VerdictFlag::exact_fit:
      return "exact-fit";
  }
  return "unknown";
}

VerdictFlag parse_verdict_flag(std::string_view text) {
  for (auto flag : {VerdictFlag::none, VerdictFlag::cap_limited, VerdictFlag::degenerate,
                    VerdictFlag::exact_fit}) {
    if (text == to_string(flag)) return flag;
  }
  throw std::invalid_argument("unknown verdict flag: " + std::string(text));
}

std::string empirical_o_label(int degree) {
  if (degree == 0) return "O_emp(1)";
  return "O_emp(p^" + std::to_string(degree) + ")";
}

namespace {

void validate_policy(const SelectionPolicy& policy, std::size_t m) {
  if (!(policy.alpha > 0.0 && policy.alpha < 1.0)) {
    throw std::invalid_argument("alpha must be in (0,1)");
  }
  if (policy.d_min < 1) throw std::invalid_argument("d_min must be at least 1");
  if (policy.d_min > policy.d_max) throw std::invalid_argument("d_min must not exceed d_max");
  if (m < static_cast<std::size_t>(policy.d_max) + 2) {
    throw std::invalid_argument("need at least d_max + 2 = " + std::to_string(policy.d_max + 2) +
                                " points, got " + std::to_string(m));
  }
}

bool all_equal_response(std::span<const DataPoint> points) {
  return std::all_of(points.begin(), points.end(),
                     [&](const DataPoint& pt) { return pt.y == points.front().y; });
}

}  // namespace

EmpiricalOVerdict select_degree(std::span<const DataPoint> points, const SelectionPolicy& policy) {
  validate_policy(policy, points.size());

  EmpiricalOVerdict verdict;
  verdict.alpha = policy.alpha;

  if (all_equal_response(points)) {
    verdict.selected_degree = 0;
    verdict.flag = VerdictFlag::degenerate;
    verdict.label = empirical_o_label(0);
    verdict.per_degree_reports.emplace(0, fit_report(points, 0));
    verdict.decision_trace.push_back(
        {0, std::nullopt, std::nullopt, false, "constant response; degree 0"});
    return verdict;
  }

  auto report_for = [&](int degree) -> const RegressionReport& {
    auto it = verdict.per_degree_reports.find(degree);
    if (it == verdict.per_degree_reports.end()) {
      it = verdict.per_degree_reports.emplace(degree, fit_report(points, degree)).first;
    }
    return it->second;
  };
  auto make_step = [&](int degree) {
    const RegressionReport& report = report_for(degree);
    const CoefficientRow& top = coefficient_for_power(report, degree);
    TraceStep step;
    step.degree = degree;
    step.t = top.t;
    step.sig = top.sig;
    step.significant = top.sig.has_value() && *top.sig < policy.alpha;
    return step;
  };

  for (int d = policy.d_min; d <= policy.d_max; ++d) {
    TraceStep own = make_step(d);

    if (report_for(d).exact_fit) {
      own.decision = "exact fit; selected";
      verdict.decision_trace.push_back(own);
      verdict.selected_degree = d;
      verdict.flag = VerdictFlag::exact_fit;
      break;
    }

    if (d == policy.d_max) {
      own.decision = own.significant ? "significant; reached d_max, selected (cap-limited)"
                                     : "not significant; reached d_max, selected (cap-limited)";
      verdict.decision_trace.push_back(own);
      verdict.selected_degree = d;
      verdict.flag = VerdictFlag::cap_limited;
      break;
    }

    TraceStep extension = make_step(d + 1);
    if (own.significant && !extension.significant) {
      own.decision = "significant; extension not significant, selected";
      verdict.decision_trace.push_back(own);
      extension.decision = "extension term not significant; stop";
      verdict.decision_trace.push_back(extension);
      verdict.selected_degree = d;
      break;
    }

    own.decision = own.significant ? "significant; extension term also significant, continue"
                                   : "not significant; continue";
    verdict.decision_trace.push_back(own);
  }

  verdict.label = empirical_o_label(verdict.selected_degree);
  return verdict;
}

std::string render_verdict(const EmpiricalOVerdict& verdict) {
  std::ostringstream os;
  os << "Empirical O verdict: " << verdict.label;
  if (verdict.flag != VerdictFlag::none) os << "  [" << to_string(verdict.flag) << "]";
  os << "\nselected degree: " << verdict.selected_degree << "  (alpha = " << verdict.alpha
     << ")\n\n";

  os << "Decision trace\n";
  os << std::left << std::setw(8) << "degree" << std::right << std::setw(12) << "t"
     << std::setw(14) << "sig" << "  decision\n";
  for (const auto& step : verdict.decision_trace) {
    os << std::left << std::setw(8) << step.degree << std::right;
    if (step.t) {
      os << std::setw(12) << std::fixed << std::setprecision(3) << *step.t;
    } else {
      os << std::setw(12) << "-";
    }
    if (step.sig) {
      os << std::setw(14) << std::scientific << std::setprecision(4) << *step.sig;
    } else {
      os << std::setw(14) << "-";
    }
    os << std::defaultfloat << "  " << step.decision << "\n";
  }

  os << "\nPer-degree fit quality\n";
  os << std::left << std::setw(8) << "degree" << std::right << std::setw(12) << "R Square"
     << std::setw(20) << "Adjusted R Square" << "\n";
  for (const auto& [degree, report] : verdict.per_degree_reports) {
    os << std::left << std::setw(8) << degree << std::right << std::fixed << std::setprecision(4)
       << std::setw(12) << report.summary.r_squared << std::setw(20)
       << report.summary.adjusted_r_squared << "\n";
  }
  return os.str();
}

}  // namespace paramsort
