#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

namespace cyl {

/// Outcome of one verification suite. passed holds exactly when there is no
/// counterexample.
struct VerificationReport {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  double worst_residual = 0.0;
  std::optional<nlohmann::json> counterexample;

  bool operator==(const VerificationReport&) const = default;
};

/// Collects checks for a report. The first failure is kept as the
/// counterexample; later ones only count.
class ReportBuilder {
 public:
  explicit ReportBuilder(std::string name) { report_.name = std::move(name); }

  // Residual-type check: smaller is better, fails when residual > tol.
  bool residual(double value, double tol, const nlohmann::json& context);
  // Margin-type check: larger is better, fails when margin <= 0.
  bool margin(double value, const nlohmann::json& context);
  bool require(bool ok, const nlohmann::json& context);

  void merge(const VerificationReport& sub);

  VerificationReport finish() const { return report_; }

 private:
  void fail(const nlohmann::json& context);

  VerificationReport report_;
  bool margin_mode_ = false;
  bool any_value_ = false;
};

}  // namespace cyl
