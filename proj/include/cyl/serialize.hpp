#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cyl/interlace.hpp"
#include "cyl/report.hpp"
#include "cyl/theorems.hpp"
#include "cyl/wronskian.hpp"
#include "cyl/zeros.hpp"

namespace cyl {

// Objects are ordered_json so that field order is fixed; doubles use the
// shortest representation that round-trips.
using ojson = nlohmann::ordered_json;

ojson to_json(const VerificationReport& r);
ojson to_json(const CylinderSpec& s);
ojson to_json(const ZeroSequence& z);
ojson to_json(const Violation& v);
ojson to_json(const InterlaceReport& r);
ojson to_json(const ShiftReport& r);
ojson to_json(const WronskianProfile& p);
ojson to_json(const BreakdownCell& c);
ojson to_json(const BreakdownMap& m);

VerificationReport report_from_json(const nlohmann::json& j);
CylinderSpec spec_from_json(const nlohmann::json& j);
ZeroSequence zeros_from_json(const nlohmann::json& j);
Violation violation_from_json(const nlohmann::json& j);
InterlaceReport interlace_from_json(const nlohmann::json& j);
ShiftReport shift_from_json(const nlohmann::json& j);
WronskianProfile profile_from_json(const nlohmann::json& j);
BreakdownCell cell_from_json(const nlohmann::json& j);
BreakdownMap map_from_json(const nlohmann::json& j);

std::string kind_to_string(EvalKind k);
EvalKind kind_from_string(const std::string& s);
Family family_from_string(const std::string& s, const MixingAngle& delta);

/// Shortest round-trip text for a double.
std::string format_double(double v);

inline constexpr const char* kSweepHeader =
    "family,nu,mu,delta,delta_bar,n,interlaced,first_violation,sign_changes,proviso";

std::string sweep_csv(const std::vector<BreakdownMap>& maps);

}  // namespace cyl
