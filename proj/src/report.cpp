#include "cyl/report.hpp"

#include <algorithm>
#include <cmath>

namespace cyl {

void ReportBuilder::fail(const nlohmann::json& context) {
  if (report_.passed) {
    report_.passed = false;
    report_.counterexample = context;
  }
}

bool ReportBuilder::residual(double value, double tol, const nlohmann::json& context) {
  ++report_.checks;
  report_.worst_residual =
      any_value_ ? std::max(report_.worst_residual, value) : value;
  any_value_ = true;
  const bool ok = std::isfinite(value) && value <= tol;
  if (!ok) {
    nlohmann::json c = context;
    c["residual"] = value;
    c["tolerance"] = tol;
    fail(c);
  }
  return ok;
}

bool ReportBuilder::margin(double value, const nlohmann::json& context) {
  ++report_.checks;
  margin_mode_ = true;
  report_.worst_residual =
      any_value_ ? std::min(report_.worst_residual, value) : value;
  any_value_ = true;
  const bool ok = value > 0.0;
  if (!ok) {
    nlohmann::json c = context;
    c["margin"] = value;
    fail(c);
  }
  return ok;
}

bool ReportBuilder::require(bool ok, const nlohmann::json& context) {
  ++report_.checks;
  if (!ok) fail(context);
  return ok;
}

void ReportBuilder::merge(const VerificationReport& sub) {
  report_.checks += sub.checks;
  if (sub.checks > 0) {
    if (!any_value_) {
      report_.worst_residual = sub.worst_residual;
      any_value_ = true;
    } else if (margin_mode_) {
      report_.worst_residual = std::min(report_.worst_residual, sub.worst_residual);
    } else {
      report_.worst_residual = std::max(report_.worst_residual, sub.worst_residual);
    }
  }
  if (!sub.passed) fail({{"suite", sub.name}, {"detail", *sub.counterexample}});
}

}  // namespace cyl
