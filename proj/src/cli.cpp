#include "cyl/cli.hpp"

#include <algorithm>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "cyl/errors.hpp"
#include "cyl/interlace.hpp"
#include "cyl/serialize.hpp"
#include "cyl/theorems.hpp"
#include "cyl/wronskian.hpp"
#include "cyl/zeros.hpp"

namespace cyl::cli {

namespace {

constexpr double kPi = std::numbers::pi;

// Raised for bad option values found after CLI11 has parsed.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double to_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not a number: '" + text + "'");
  return v;
}

struct Options {
  std::string format = "json";
  std::string out_path;
  unsigned threads = 0;

  double nu = 1.0;
  double mu = 3.0;
  std::string delta = "0";
  std::optional<std::string> delta_bar;
  std::string kind = "function";
  std::size_t n = 0;
  std::vector<double> x;
  std::string family = "cylinder";
  std::vector<double> nus;
  std::vector<double> gaps;
  double a = 2.0;
  double b = 1.0;
  double c = 1.0;
  double lo = 0.1;
  double hi = 60.0;
  std::string suite;
};

Order order_arg(double v, const char* name) {
  try {
    return Order{v};
  } catch (const DomainError& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

MixingAngle angle_arg(const std::string& text, const char* name) {
  try {
    return MixingAngle{parse_angle(text)};
  } catch (const std::exception& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

EvalKind kind_arg(const std::string& text) {
  try {
    return kind_from_string(text);
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("--kind: ") + e.what());
  }
}

Family family_arg(const std::string& text, const MixingAngle& delta) {
  try {
    return family_from_string(text, delta);
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("--family: ") + e.what());
  }
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

int emit_report(const VerificationReport& r, std::string& artifact, std::ostream& err) {
  artifact = dump(to_json(r));
  err << r.name << ": " << (r.passed ? "passed" : "FAILED") << " (" << r.checks << " checks)\n";
  return r.passed ? kOk : kVerifyFailed;
}

const std::vector<double> kDefaultGrid = {0.5, 1.0, 5.0, 20.0, 100.0};
const std::vector<double> kIffNus = {0.3, 1.0, 2.5, 7.1};
const std::vector<double> kIffGaps = {0.5, 1.0, 2.0, 2.1, 3.0, 5.0};
const std::vector<double> kJvsyNus = {6.0, 8.0, 10.0, 15.0};
const std::vector<double> kJvsyGaps = {-1.5, -0.8, 0.8, 1.5};

std::vector<Family> iff_families() {
  return {Family::cylinder(MixingAngle{0.0}), Family::cylinder(MixingAngle{kPi / 4}),
          Family::cylinder(MixingAngle{kPi / 2}), Family::jprime(), Family::yprime()};
}

VerificationReport transitivity_battery() {
  ReportBuilder rb("transitivity");
  const MixingAngle zero{0.0};
  const Triple fn{{Order{1.0}, zero}, {Order{2.0}, zero}, {Order{3.0}, zero}, EvalKind::Function};
  Triple der = fn;
  der.kind = EvalKind::Derivative;
  const TransitivityResult r1 = verify_transitivity(fn, 0.1, 60.0);
  const TransitivityResult r2 = verify_transitivity(der, std::sqrt(6.0) + 0.1, 60.0);
  // The probe below straddles a coefficient root; a premise failure is the
  // expected outcome and no conclusion is drawn.
  const TransitivityResult r3 = verify_transitivity(der, 1.0, 60.0);
  rb.merge(r1.report);
  rb.merge(r2.report);
  rb.require(r3.status == TransitivityStatus::PremiseFailure,
             {{"case", "probe containing a coefficient root"},
              {"expected", "premise failure"}});
  return rb.finish();
}

VerificationReport equivalence_battery() {
  ReportBuilder rb("wronskian_equivalence");
  const MixingAngle zero{0.0};
  const MixingAngle half{kPi / 2};
  rb.merge(interlace_wronskian_equivalence({Order{2.0}, zero}, {Order{3.5}, zero}, 20).report);
  rb.merge(interlace_wronskian_equivalence({Order{1.0}, zero}, {Order{4.5}, zero}, 25).report);
  rb.merge(interlace_wronskian_equivalence({Order{1.0}, zero}, {Order{2.5}, half}, 25).report);
  rb.merge(interlace_wronskian_equivalence({Order{1.0}, zero}, {Order{2.0}, zero}, 15).report);
  return rb.finish();
}

}  // namespace

double parse_angle(const std::string& text) {
  static const std::regex kPiForm(
      R"(^\s*([+-]?)\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*pi\s*(?:/\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, kPiForm)) {
    const double sign = m[1] == "-" ? -1.0 : 1.0;
    const double num = m[2].matched ? std::stod(m[2]) : 1.0;
    const double den = m[3].matched ? std::stod(m[3]) : 1.0;
    if (den == 0.0) throw std::invalid_argument("zero denominator in angle");
    return sign * num * kPi / den;
  }
  return to_number(text);
}

std::vector<VerificationReport> run_battery(unsigned threads) {
  std::vector<VerificationReport> out;
  {
    ReportBuilder rb("recurrences");
    for (double nu : {0.5, 1.0, 2.5, 7.0}) {
      for (double d : {0.0, kPi / 3, kPi / 2}) {
        rb.merge(verify_recurrences(Order{nu}, MixingAngle{d}, kDefaultGrid));
      }
    }
    out.push_back(rb.finish());
  }
  {
    ReportBuilder rb("theorem1");
    for (double nu : {0.3, 1.0, 3.7}) {
      for (double c : {0.5, 1.0}) rb.merge(verify_theorem1(Order{nu}, 2.0, 1.0, c, 15));
    }
    out.push_back(rb.finish());
  }
  const std::vector<Family> fams = iff_families();
  const auto maps = scan_grid(fams, kIffNus, kIffGaps, 30, threads);
  out.push_back(verify_iff_grid(maps));
  const std::vector<Family> jvsy = {Family::jvsy()};
  const auto jmaps = scan_grid(jvsy, kJvsyNus, kJvsyGaps, 30, threads);
  out.push_back(verify_jvsy(jmaps));
  std::vector<BreakdownMap> all_maps = maps;
  all_maps.insert(all_maps.end(), jmaps.begin(), jmaps.end());
  out.push_back(verify_lemma5(all_maps));
  out.push_back(transitivity_battery());
  out.push_back(equivalence_battery());
  return out;
}

namespace {

int run_verify(const Options& o, std::string& artifact, std::ostream& err) {
  const std::string& s = o.suite;
  const std::size_t n = o.n;
  if (s == "all") {
    const auto reports = run_battery(o.threads);
    ojson arr = ojson::array();
    bool ok = true;
    for (const auto& r : reports) {
      arr.push_back(to_json(r));
      err << r.name << ": " << (r.passed ? "passed" : "FAILED") << " (" << r.checks
          << " checks)\n";
      ok = ok && r.passed;
    }
    artifact = dump(arr);
    return ok ? kOk : kVerifyFailed;
  }
  if (s == "recurrences") {
    const std::vector<double> grid = o.x.empty() ? kDefaultGrid : o.x;
    return emit_report(
        verify_recurrences(order_arg(o.nu, "nu"), angle_arg(o.delta, "delta"), grid), artifact,
        err);
  }
  if (s == "chain") {
    return emit_report(verify_chain(order_arg(o.nu, "nu"), o.c, n ? n : 15), artifact, err);
  }
  if (s == "theorem1") {
    return emit_report(verify_theorem1(order_arg(o.nu, "nu"), o.a, o.b, o.c, n ? n : 15),
                       artifact, err);
  }
  if (s == "theorem3") {
    const Family fam = family_arg(o.family, angle_arg(o.delta, "delta"));
    const Theorem3Outcome t =
        verify_theorem3(order_arg(o.nu, "nu"), order_arg(o.mu, "mu"), fam, n ? n : 30);
    artifact = dump(to_json(t.report));
    if (t.excluded) {
      err << "excluded: identical functions\n";
    } else {
      err << (t.interlaced ? "interlaced" : "not interlaced") << "; predicate "
          << (t.predicate ? "true" : "false") << "; " << (t.agree ? "agree" : "DISAGREE")
          << "\n";
    }
    return t.report.passed ? kOk : kVerifyFailed;
  }
  if (s == "iff-grid") {
    const auto fams = iff_families();
    return emit_report(verify_iff_grid(scan_grid(fams, kIffNus, kIffGaps, n ? n : 30, o.threads)),
                       artifact, err);
  }
  if (s == "transitivity") {
    const Order nu = order_arg(o.nu, "nu");
    const MixingAngle d = angle_arg(o.delta, "delta");
    const Triple t{{nu, d}, {order_arg(o.nu + 1.0, "nu"), d}, {order_arg(o.nu + 2.0, "nu"), d},
                   kind_arg(o.kind)};
    const TransitivityResult r = verify_transitivity(t, o.lo, o.hi);
    if (r.status == TransitivityStatus::PremiseFailure) {
      err << "premise failure: no conclusion asserted\n";
    }
    return emit_report(r.report, artifact, err);
  }
  if (s == "equivalence") {
    const MixingAngle d = angle_arg(o.delta, "delta");
    const MixingAngle db = o.delta_bar ? angle_arg(*o.delta_bar, "delta-bar") : d;
    const EquivalenceReport e = interlace_wronskian_equivalence(
        {order_arg(o.nu, "nu"), d}, {order_arg(o.mu, "mu"), db}, n ? n : 20, kind_arg(o.kind));
    err << "root free " << (e.root_free ? "true" : "false") << "; interlaced "
        << (e.interlaced ? "true" : "false") << "\n";
    return emit_report(e.report, artifact, err);
  }
  throw UsageError("unknown suite '" + s + "'");
}

int dispatch(const std::string& cmd, const Options& o, std::string& artifact,
             std::ostream& err) {
  const bool csv = o.format == "csv";
  if (cmd == "eval") {
    const CylinderSpec spec{order_arg(o.nu, "nu"), angle_arg(o.delta, "delta")};
    const EvalKind kind = kind_arg(o.kind);
    if (o.x.empty()) throw UsageError("--x is required");
    std::vector<double> values;
    for (double x : o.x) values.push_back(evaluate(spec, kind, x).value);
    if (csv) {
      std::ostringstream s;
      s << "x,value\n";
      for (std::size_t i = 0; i < values.size(); ++i) {
        s << format_double(o.x[i]) << ',' << format_double(values[i]) << '\n';
      }
      artifact = s.str();
    } else {
      ojson j;
      j["spec"] = to_json(spec);
      j["kind"] = kind_to_string(kind);
      ojson pts = ojson::array();
      for (std::size_t i = 0; i < values.size(); ++i) {
        pts.push_back(ojson{{"x", o.x[i]}, {"value", values[i]}});
      }
      j["points"] = std::move(pts);
      artifact = dump(j);
    }
    return kOk;
  }
  if (cmd == "zeros") {
    const CylinderSpec spec{order_arg(o.nu, "nu"), angle_arg(o.delta, "delta")};
    const ZeroSequence z = find_zeros(spec, kind_arg(o.kind), o.n ? o.n : 10);
    if (csv) {
      std::ostringstream s;
      s << "s,zero\n";
      for (std::size_t i = 0; i < z.zeros.size(); ++i) {
        s << i + 1 << ',' << format_double(z.zeros[i]) << '\n';
      }
      artifact = s.str();
    } else {
      artifact = ojson(z.zeros).dump() + "\n";
    }
    return kOk;
  }
  if (cmd == "interlace" || cmd == "wronskian") {
    const MixingAngle d = angle_arg(o.delta, "delta");
    const MixingAngle db = o.delta_bar ? angle_arg(*o.delta_bar, "delta-bar") : d;
    const CylinderSpec sa{order_arg(o.nu, "nu"), d};
    const CylinderSpec sb{order_arg(o.mu, "mu"), db};
    const EvalKind kind = kind_arg(o.kind);
    const std::size_t n = o.n ? o.n : 30;
    if (csv && cmd == "interlace") throw UsageError("interlace supports --format json only");
    if (cmd == "interlace") {
      const ZeroSequence za = find_zeros(sa, kind, n);
      const ZeroSequence zb = find_zeros(sb, kind, n);
      ojson j;
      j["interlace"] = to_json(check_interlaced(za, zb));
      j["shift"] = to_json(detect_shifted(za, zb));
      artifact = dump(j);
      return kOk;
    }
    const WronskianProfile p = wronskian_profile(sa, sb, n, kind);
    if (csv) {
      std::ostringstream s;
      s << "position,value,source\n";
      for (const Extremum& e : p.extrema) {
        s << format_double(e.position) << ',' << format_double(e.value) << ','
          << (e.source == ZeroSource::A ? "A" : "B") << '\n';
      }
      artifact = s.str();
    } else {
      artifact = dump(to_json(p));
    }
    err << "sign changes " << p.sign_changes << "; asymptote " << format_double(p.asymptote)
        << "\n";
    return kOk;
  }
  if (cmd == "verify") return run_verify(o, artifact, err);
  if (cmd == "sweep") {
    const Family fam = family_arg(o.family, angle_arg(o.delta, "delta"));
    const std::vector<double> nus = o.nus.empty() ? std::vector<double>{o.nu} : o.nus;
    if (o.gaps.empty()) throw UsageError("--gaps is required");
    for (double nu : nus) {
      order_arg(nu, "nu");
      for (double g : o.gaps) order_arg(nu + g, "gaps");
    }
    const std::vector<Family> fams = {fam};
    const auto maps = scan_grid(fams, nus, o.gaps, o.n ? o.n : 30, o.threads);
    if (csv) {
      artifact = sweep_csv(maps);
    } else {
      ojson arr = ojson::array();
      for (const auto& m : maps) arr.push_back(to_json(m));
      artifact = dump(arr);
    }
    return kOk;
  }
  throw UsageError("unknown command '" + cmd + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cylinder function zeros, interlacing and Wronskian checks", "cylzeros"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", o.out_path, "write the artifact here instead of stdout");
  app.add_option("--threads", o.threads, "worker threads for sweeps (0 = all cores)");

  auto add_spec = [&](CLI::App* sub, bool two) {
    sub->add_option("--nu", o.nu, "order nu in [0, 30]");
    sub->add_option("--delta", o.delta, "mixing angle, e.g. 0, pi/4, 1.2");
    if (two) {
      sub->add_option("--mu", o.mu, "second order");
      sub->add_option("--delta-bar", o.delta_bar, "second mixing angle (default: --delta)");
    }
    sub->add_option("--kind", o.kind, "function or derivative");
    sub->add_option("--n", o.n, "number of zeros");
  };
  CLI::App* eval = app.add_subcommand("eval", "evaluate C or C' at points");
  add_spec(eval, false);
  eval->add_option("--x", o.x, "points")->expected(1, -1);
  CLI::App* zeros = app.add_subcommand("zeros", "first n positive zeros");
  add_spec(zeros, false);
  CLI::App* inter = app.add_subcommand("interlace", "interlacing and shift of two zero sets");
  add_spec(inter, true);
  CLI::App* wr = app.add_subcommand("wronskian", "Wronskian values at the merged zeros");
  add_spec(wr, true);
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite,
                     "recurrences|chain|theorem1|theorem3|iff-grid|transitivity|equivalence|all")
      ->required();
  add_spec(verify, true);
  verify->add_option("--family", o.family, "cylinder|jprime|yprime|jvsy");
  verify->add_option("--x", o.x, "grid for recurrences")->expected(1, -1);
  verify->add_option("--a", o.a);
  verify->add_option("--b", o.b);
  verify->add_option("--c", o.c);
  verify->add_option("--lo", o.lo, "probe interval start");
  verify->add_option("--hi", o.hi, "probe interval end");
  CLI::App* sweep = app.add_subcommand("sweep", "breakdown atlas over gaps");
  sweep->add_option("--family", o.family, "cylinder|jprime|yprime|jvsy");
  sweep->add_option("--nu", o.nus, "one or more base orders")->expected(1, -1);
  sweep->add_option("--gaps", o.gaps, "mu - nu values")->expected(1, -1);
  sweep->add_option("--delta", o.delta, "angle for the cylinder family");
  sweep->add_option("--n", o.n, "zeros per cell");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  std::string artifact;
  int code = kOk;
  try {
    code = dispatch(cmd, o, artifact, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "computation error: " << e.what() << "\n";
    return kComputation;
  }

  if (o.out_path.empty()) {
    out << artifact;
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    f << artifact;
    if (!f) {
      err << "cannot write " << o.out_path << "\n";
      return kComputation;
    }
  }
  return code;
}

}  // namespace cyl::cli
