#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cyl/report.hpp"

namespace cyl::cli {

enum Exit : int { kOk = 0, kUsage = 1, kComputation = 2, kVerifyFailed = 3 };

/// args excludes the program name. Artifacts go to out (or --out), and all
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0.5", "pi", "pi/4", "-3pi/4", "2*pi/3".
double parse_angle(const std::string& text);

/// The fixed battery behind `verify all`.
std::vector<VerificationReport> run_battery(unsigned threads);

}  // namespace cyl::cli
