#include "cyl/serialize.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "cyl/errors.hpp"

namespace cyl {

namespace {

template <class T>
ojson optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, Violation>) {
    return to_json(*v);
  } else {
    return *v;
  }
}

const char* source_name(ZeroSource s) { return s == ZeroSource::A ? "A" : "B"; }

}  // namespace

std::string kind_to_string(EvalKind k) {
  return k == EvalKind::Function ? "function" : "derivative";
}

EvalKind kind_from_string(const std::string& s) {
  if (s == "function") return EvalKind::Function;
  if (s == "derivative") return EvalKind::Derivative;
  throw PreconditionError("unknown kind '" + s + "' (function|derivative)");
}

Family family_from_string(const std::string& s, const MixingAngle& delta) {
  if (s == "cylinder") return Family::cylinder(delta);
  if (s == "jprime") return Family::jprime();
  if (s == "yprime") return Family::yprime();
  if (s == "jvsy") return Family::jvsy();
  throw PreconditionError("unknown family '" + s + "' (cylinder|jprime|yprime|jvsy)");
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

ojson to_json(const VerificationReport& r) {
  ojson j;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["checks"] = r.checks;
  j["worst_residual"] = r.worst_residual;
  j["counterexample"] = r.counterexample ? ojson::parse(r.counterexample->dump()) : ojson();
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.name = j.at("name").get<std::string>();
  r.passed = j.at("passed").get<bool>();
  r.checks = j.at("checks").get<std::size_t>();
  r.worst_residual = j.at("worst_residual").get<double>();
  if (!j.at("counterexample").is_null()) r.counterexample = j.at("counterexample");
  return r;
}

ojson to_json(const CylinderSpec& s) {
  return ojson{{"nu", s.order.value()}, {"delta", s.angle.radians()}};
}

CylinderSpec spec_from_json(const nlohmann::json& j) {
  return {Order{j.at("nu").get<double>()}, MixingAngle{j.at("delta").get<double>()}};
}

ojson to_json(const ZeroSequence& z) {
  ojson j;
  j["spec"] = to_json(z.spec);
  j["kind"] = kind_to_string(z.kind);
  j["refined_to"] = z.refined_to;
  j["zeros"] = z.zeros;
  return j;
}

ZeroSequence zeros_from_json(const nlohmann::json& j) {
  return {spec_from_json(j.at("spec")), kind_from_string(j.at("kind").get<std::string>()),
          j.at("zeros").get<std::vector<double>>(), j.at("refined_to").get<double>()};
}

ojson to_json(const Violation& v) {
  ojson j;
  j["index"] = v.index;
  j["count"] = v.count;
  j["coincident"] = v.coincident;
  j["position"] = v.position;
  return j;
}

Violation violation_from_json(const nlohmann::json& j) {
  return {j.at("index").get<std::size_t>(), j.at("count").get<std::size_t>(),
          j.at("coincident").get<bool>(), j.at("position").get<double>()};
}

ojson to_json(const InterlaceReport& r) {
  ojson j;
  j["interlaced"] = r.interlaced;
  j["first_violation"] = optional_json(r.first_violation);
  j["pairs_checked"] = r.pairs_checked;
  j["window_end"] = r.window_end;
  return j;
}

InterlaceReport interlace_from_json(const nlohmann::json& j) {
  InterlaceReport r;
  r.interlaced = j.at("interlaced").get<bool>();
  if (!j.at("first_violation").is_null()) {
    r.first_violation = violation_from_json(j.at("first_violation"));
  }
  r.pairs_checked = j.at("pairs_checked").get<std::size_t>();
  r.window_end = j.at("window_end").get<double>();
  return r;
}

ojson to_json(const ShiftReport& r) {
  ojson j;
  j["shift_d"] = optional_json(r.shift_d);
  if (r.shift_d) {
    j["window"] = ojson::array({r.window_first, r.window_last});
  } else {
    j["window"] = nullptr;
  }
  return j;
}

ShiftReport shift_from_json(const nlohmann::json& j) {
  ShiftReport r;
  if (!j.at("shift_d").is_null()) {
    r.shift_d = j.at("shift_d").get<int>();
    r.window_first = j.at("window").at(0).get<std::size_t>();
    r.window_last = j.at("window").at(1).get<std::size_t>();
  }
  return r;
}

ojson to_json(const WronskianProfile& p) {
  ojson j;
  j["spec_a"] = to_json(p.spec_a);
  j["spec_b"] = to_json(p.spec_b);
  j["kind"] = kind_to_string(p.kind);
  ojson ex = ojson::array();
  for (const Extremum& e : p.extrema) {
    ex.push_back(ojson{{"position", e.position}, {"value", e.value}, {"source", source_name(e.source)}});
  }
  j["extrema"] = std::move(ex);
  j["sign_changes"] = p.sign_changes;
  j["degenerate"] = p.degenerate;
  j["tail_sign_change"] = p.tail_sign_change;
  j["asymptote"] = p.asymptote;
  j["tail_value"] = p.tail_value;
  j["window"] = ojson::array({p.x_lo, p.x_hi});
  return j;
}

WronskianProfile profile_from_json(const nlohmann::json& j) {
  WronskianProfile p{spec_from_json(j.at("spec_a")),
                     spec_from_json(j.at("spec_b")),
                     kind_from_string(j.at("kind").get<std::string>()),
                     {},
                     j.at("sign_changes").get<std::size_t>(),
                     j.at("degenerate").get<bool>(),
                     j.at("tail_sign_change").get<bool>(),
                     j.at("asymptote").get<double>(),
                     j.at("tail_value").get<double>(),
                     j.at("window").at(0).get<double>(),
                     j.at("window").at(1).get<double>()};
  for (const auto& e : j.at("extrema")) {
    p.extrema.push_back({e.at("position").get<double>(), e.at("value").get<double>(),
                         e.at("source").get<std::string>() == "A" ? ZeroSource::A : ZeroSource::B});
  }
  return p;
}

ojson to_json(const BreakdownCell& c) {
  ojson j;
  j["nu"] = c.nu;
  j["mu"] = c.mu;
  j["delta"] = c.delta;
  j["delta_bar"] = c.delta_bar;
  j["n"] = c.n;
  j["excluded"] = c.excluded;
  j["interlaced"] = c.interlaced;
  j["window_interlaced"] = c.window_interlaced;
  j["tail_sign_change"] = c.tail_sign_change;
  j["degenerate"] = c.degenerate;
  j["first_violation"] = optional_json(c.first_violation);
  j["sign_changes"] = c.sign_changes;
  j["proviso"] = optional_json(c.proviso);
  return j;
}

BreakdownCell cell_from_json(const nlohmann::json& j) {
  BreakdownCell c;
  c.nu = j.at("nu").get<double>();
  c.mu = j.at("mu").get<double>();
  c.delta = j.at("delta").get<double>();
  c.delta_bar = j.at("delta_bar").get<double>();
  c.n = j.at("n").get<std::size_t>();
  c.excluded = j.at("excluded").get<bool>();
  c.interlaced = j.at("interlaced").get<bool>();
  c.window_interlaced = j.at("window_interlaced").get<bool>();
  c.tail_sign_change = j.at("tail_sign_change").get<bool>();
  c.degenerate = j.at("degenerate").get<bool>();
  if (!j.at("first_violation").is_null()) {
    c.first_violation = j.at("first_violation").get<std::size_t>();
  }
  c.sign_changes = j.at("sign_changes").get<std::size_t>();
  if (!j.at("proviso").is_null()) c.proviso = j.at("proviso").get<bool>();
  return c;
}

ojson to_json(const BreakdownMap& m) {
  ojson j;
  j["family"] = m.family.name();
  j["family_delta"] = m.family.delta.radians();
  j["nu"] = m.nu;
  ojson cells = ojson::array();
  for (const auto& c : m.cells) cells.push_back(to_json(c));
  j["cells"] = std::move(cells);
  return j;
}

BreakdownMap map_from_json(const nlohmann::json& j) {
  BreakdownMap m{family_from_string(j.at("family").get<std::string>(),
                                    MixingAngle{j.at("family_delta").get<double>()}),
                 j.at("nu").get<double>(),
                 {}};
  for (const auto& c : j.at("cells")) m.cells.push_back(cell_from_json(c));
  return m;
}

std::string sweep_csv(const std::vector<BreakdownMap>& maps) {
  std::ostringstream out;
  out << kSweepHeader << '\n';
  for (const BreakdownMap& m : maps) {
    for (const BreakdownCell& c : m.cells) {
      out << m.family.name() << ',' << format_double(c.nu) << ',' << format_double(c.mu) << ','
          << format_double(c.delta) << ',' << format_double(c.delta_bar) << ',' << c.n << ',';
      if (c.excluded) {
        out << "excluded";
      } else {
        out << (c.interlaced ? "true" : "false");
      }
      out << ',';
      if (c.first_violation) out << *c.first_violation;
      out << ',' << c.sign_changes << ',';
      if (c.proviso) out << (*c.proviso ? "true" : "false");
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace cyl
