#include "cli.hpp"

#include "eulerpoly/audit.hpp"
#include "eulerpoly/bernoulli.hpp"
#include "eulerpoly/congruence.hpp"
#include "eulerpoly/eulerian.hpp"
#include "eulerpoly/io.hpp"
#include "eulerpoly/shift.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace eulerpoly::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr unsigned kUnbounded = std::numeric_limits<unsigned>::max();

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Options {
  unsigned ell = 0;
  unsigned m = 0;
  std::string f;
  std::string format;
  std::optional<std::size_t> order;
  std::uint64_t seed = 42;
  bool both = false;
  bool corrupt_table = false;
};

int cmd_eulerian(const Options& o, std::ostream& out) {
  const EulerianTable table = eulerian_table(o.ell);
  const Polynomial a = eulerian_poly(table, o.ell);
  if (o.format == "json") {
    print_json(out, {{"ell", o.ell}, {"polynomial", to_json(a)}, {"table", to_json(table)}});
  } else if (o.format == "csv") {
    out << to_csv(table);
  } else {
    out << to_pretty(a) << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << to_string(row[k]);
      out << '\n';
    }
  }
  return kExitOk;
}

int cmd_bernoulli(const Options& o, std::ostream& out) {
  const std::vector<Polynomial> rows = bernoulli_table(o.ell);
  const Polynomial& b = rows.back();
  bool bridge_ok = true;
  json j{{"ell", o.ell}, {"polynomial", to_json(b)}, {"number", to_string(b.coefficient(0))}};
  if (o.ell >= 1) {
    const Rational bridged = bernoulli_number_from_eulerian(o.ell);
    bridge_ok = bridged == b.coefficient(0);
    j["number_via_eulerian"] = to_string(bridged);
  }
  j["table"] = bernoulli_table_json(rows);
  if (o.format == "json") {
    print_json(out, j);
  } else if (o.format == "csv") {
    out << bernoulli_table_csv(rows);
  } else {
    out << to_pretty(b, "x", TermOrder::descending) << '\n';
    for (const auto& row : rows) out << to_canonical(row) << '\n';
  }
  return bridge_ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.format == "csv") throw UsageError("verify supports --format json or plain");
  Polynomial f;
  if (o.f.empty()) {
    f = eulerian_poly(o.ell);
  } else {
    try {
      f = parse_canonical(o.f);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--f: ") + e.what());
    }
    if (f.degree() > static_cast<long>(o.ell)) {
      throw UsageError("--f has degree " + std::to_string(f.degree()) + " > ell");
    }
  }
  const CongruenceReport report = congruence_report(f, o.ell, o.m);
  bool ok = report.holds;
  json j = to_json(report);
  std::optional<PolynomialityCheck> poly;
  if (o.order) {
    if (*o.order < polynomiality_min_order(o.ell, o.m)) {
      throw UsageError("--order must be at least " +
                       std::to_string(polynomiality_min_order(o.ell, o.m)));
    }
    poly = polynomiality_check(o.ell, o.m, *o.order);
    ok = ok && poly->holds;
    j["polynomiality"] = {{"order", *o.order},
                          {"holds", poly->holds},
                          {"polynomial", to_json(poly->polynomial)}};
  }
  if (o.format == "plain") {
    out << "holds: " << yes_no(report.holds) << '\n'
        << "defect: " << to_canonical(report.defect) << '\n'
        << "remainder: " << to_canonical(report.remainder) << '\n'
        << "quotient: " << to_canonical(report.quotient) << '\n';
    if (poly) out << "polynomiality: " << yes_no(poly->holds) << '\n';
  } else {
    print_json(out, j);
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_solve(const Options& o, std::ostream& out) {
  if (o.format == "csv") throw UsageError("solve supports --format json or plain");
  const CharacterizationSolution s = solve_characterization(o.ell, o.m);
  const bool matches = s.unique && s.solution == eulerian_poly(o.ell);
  if (o.format == "json") {
    json j = to_json(s);
    j["matches_recurrence"] = matches;
    print_json(out, j);
  } else {
    out << to_pretty(s.solution) << '\n';
  }
  return matches ? kExitOk : kExitCheckFailed;
}

int cmd_linial(const Options& o, std::ostream& out) {
  if (o.format == "csv") throw UsageError("linial supports --format json or plain");
  const Polynomial averaging = linial_char_poly_ps(o.ell, o.m);
  const auto pretty = [](const Polynomial& p) { return to_pretty(p, "t", TermOrder::descending); };
  if (!o.both) {
    if (o.format == "json") {
      print_json(out, {{"ell", o.ell}, {"m", o.m}, {"averaging", to_json(averaging)}});
    } else {
      out << pretty(averaging) << '\n';
    }
    return kExitOk;
  }
  const Polynomial eulerian = linial_char_poly_worp(o.ell, o.m);
  const bool agree = averaging == eulerian;
  if (o.format == "json") {
    print_json(out, {{"ell", o.ell},
                     {"m", o.m},
                     {"averaging", to_json(averaging)},
                     {"eulerian", to_json(eulerian)},
                     {"agree", agree}});
  } else {
    out << "averaging: " << pretty(averaging) << '\n'
        << "eulerian: " << pretty(eulerian) << '\n'
        << "agree=" << yes_no(agree) << '\n';
  }
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_worpitzky(const Options& o, std::ostream& out) {
  if (o.format == "csv") throw UsageError("worpitzky supports --format json or plain");
  const WorpitzkyCheck check = worpitzky_check(o.ell);
  if (o.format == "json") {
    print_json(out, {{"ell", o.ell}, {"value", to_json(check.value)}, {"holds", check.holds}});
  } else {
    out << to_pretty(check.value, "t", TermOrder::descending) << '\n'
        << "holds=" << yes_no(check.holds) << '\n';
  }
  return check.holds ? kExitOk : kExitCheckFailed;
}

int cmd_audit(const Options& o, std::ostream& out) {
  if (o.format == "csv") throw UsageError("audit supports --format json or plain");
  AuditOptions options;
  options.max_ell = o.ell;
  options.max_m = o.m;
  options.seed = o.seed;
  options.corrupt_table = o.corrupt_table;
  const std::vector<AuditCheck> checks = run_audit(options);

  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.passed() ? 0 : 1;

  if (o.format == "json") {
    json list = json::array();
    for (const auto& c : checks) {
      list.push_back({{"name", c.name},
                      {"cases", c.cases},
                      {"failures", c.failures},
                      {"first_failure", c.first_failure}});
    }
    print_json(out, {{"max_ell", o.ell},
                     {"max_m", o.m},
                     {"seed", o.seed},
                     {"checks", list},
                     {"passed", failed == 0}});
  } else {
    out << std::left << std::setw(40) << "check" << std::right << std::setw(8) << "cases"
        << "  result\n";
    for (const auto& c : checks) {
      out << std::left << std::setw(40) << c.name << std::right << std::setw(8) << c.cases << "  "
          << (c.passed() ? "pass" : "FAIL (" + std::to_string(c.failures) +
                                        " failed, first: " + c.first_failure + ")")
          << '\n';
    }
    if (failed == 0) {
      out << "all " << checks.size() << " checks passed\n";
    } else {
      out << failed << " of " << checks.size() << " checks failed\n";
    }
  }
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

CLI::Option* add_format(CLI::App* sub, Options& o, const std::string& fallback) {
  o.format = fallback;
  return sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Eulerian, Bernoulli and Linial polynomial toolkit", "eulerpoly"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "eulerpoly 0.1.0");

  // One option set per subcommand; only the parsed one is read.
  std::map<std::string, Options> opts;
  using Handler = int (*)(const Options&, std::ostream&);
  std::map<std::string, Handler> handlers;

  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    handlers[name] = h;
    return app.add_subcommand(name, help);
  };

  {
    auto& o = opts["eulerian"];
    auto* sub = add("eulerian", "Print A_ell(x) and the Eulerian triangle", cmd_eulerian);
    sub->add_option("--ell", o.ell, "Degree")->required();
    add_format(sub, o, "plain");
  }
  {
    auto& o = opts["bernoulli"];
    auto* sub = add("bernoulli", "Print B_ell(x) and the Bernoulli table", cmd_bernoulli);
    sub->add_option("--ell", o.ell, "Degree")->required();
    add_format(sub, o, "plain");
  }
  {
    auto& o = opts["verify"];
    auto* sub = add("verify", "Check the congruence modulo (x-1)^(ell+1)", cmd_verify);
    sub->add_option("--ell", o.ell, "Degree bound")->required()->check(CLI::Range(1U, kUnbounded));
    sub->add_option("--m", o.m, "Exponent m >= 2")->required()->check(CLI::Range(2U, kUnbounded));
    sub->add_option("--f", o.f, "Coefficients, lowest degree first (default A_ell)");
    sub->add_option("--order", o.order, "Also run the truncated polynomiality check");
    add_format(sub, o, "json");
  }
  {
    auto& o = opts["solve"];
    auto* sub = add("solve", "Solve for the monic polynomial satisfying the congruence", cmd_solve);
    sub->add_option("--ell", o.ell, "Degree")->required()->check(CLI::Range(1U, kUnbounded));
    sub->add_option("--m", o.m, "Exponent m >= 2")->required()->check(CLI::Range(2U, kUnbounded));
    add_format(sub, o, "plain");
  }
  {
    auto& o = opts["linial"];
    o.m = 1;
    auto* sub = add("linial", "Characteristic polynomial of the extended Linial arrangement",
                    cmd_linial);
    sub->add_option("--ell", o.ell, "Rank")->required()->check(CLI::Range(1U, kUnbounded));
    sub->add_option("--m", o.m, "Extension m >= 1")
        ->check(CLI::Range(1U, kUnbounded))
        ->capture_default_str();
    sub->add_flag("--both", o.both, "Compute with both formulas and compare");
    add_format(sub, o, "plain");
  }
  {
    auto& o = opts["worpitzky"];
    auto* sub = add("worpitzky", "Check t^ell = A_ell(S) C(t+ell, ell)", cmd_worpitzky);
    sub->add_option("--ell", o.ell, "Degree")->required()->check(CLI::Range(1U, kUnbounded));
    add_format(sub, o, "plain");
  }
  {
    auto& o = opts["audit"];
    o.ell = 6;
    o.m = 4;
    auto* sub = add("audit", "Run every invariant battery within the given bounds", cmd_audit);
    sub->add_option("--ell", o.ell, "Largest ell")
        ->check(CLI::Range(1U, kUnbounded))
        ->capture_default_str();
    sub->add_option("--m", o.m, "Largest m")
        ->check(CLI::Range(1U, kUnbounded))
        ->capture_default_str();
    sub->add_option("--seed", o.seed, "Seed for random falsification")->capture_default_str();
    sub->add_flag("--corrupt-table", o.corrupt_table)->group("");
    add_format(sub, o, "plain");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return handlers.at(name)(opts.at(name), out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace eulerpoly::cli
