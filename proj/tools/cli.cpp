#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "modspace/errors.hpp"
#include "modspace/experiments.hpp"
#include "modspace/families.hpp"
#include "modspace/norms.hpp"
#include "modspace/oracle.hpp"
#include "modspace/report.hpp"
#include "modspace/space_spec.hpp"

namespace modspace::cli {

namespace {

// Numerical or I/O failure that is neither a verdict nor a usage error.
constexpr int kExitRuntime = 70;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Sends text to --output when given, else to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<Rational> parse_rational_list(const std::vector<std::string>& items) {
  std::vector<Rational> values;
  for (const auto& item : items) values.push_back(parse_rational(item));
  return values;
}

struct DecideArgs {
  std::string from, to;
  int d = 1;
  bool json = false;
};

struct TableArgs {
  std::string pair = "B-M";
  std::string s = "0";
  int resolution = 32;
  int d = 1;
  std::string p;
  std::string output;
};

struct ExperimentArgs {
  std::string from, to, family;
  int d = 1;
  int lmin = 4;
  int lmax = 8;
  double tolerance = 0.2;
  double bound = 8.0;
  std::string comb_width = "1";
  int refine = 1;
  std::string format = "json";
  std::string output;
};

struct NormArgs {
  std::string family, space;
  int level = 0;
  int d = 1;
  std::string comb_width = "1";
  int refine = 1;
  bool json = false;
};

struct TailArgs {
  std::string q = "1";
  std::vector<std::string> t{"1/8", "1/32", "1/128", "1/512"};
  int d = 1;
  double factor = 2.0;
  double residual = 0.05;
  std::string output;
};

struct NecessityArgs {
  std::string r, q, s;
  int d = 1;
  std::vector<std::int64_t> cubes{16, 64, 256, 1024, 4096};
  double tail_tol = 1e-3;
  std::string output;
};

int cmd_decide(const DecideArgs& a, std::ostream& out) {
  const SpaceSpec from = parse_space_spec(a.from, a.d);
  const SpaceSpec to = parse_space_spec(a.to, a.d);
  const Verdict v = decide(from, to);
  if (a.json) {
    nlohmann::json j = to_json(v);
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = "verdict";
    j["from"] = render(from);
    j["to"] = render(to);
    j["d"] = a.d;
    out << j.dump(2) << '\n';
  } else {
    out << (v.holds ? "holds" : "fails") << '\n'
        << "clause: " << v.clause << '\n'
        << "critical_s: " << to_string(v.critical_s) << (v.strict ? " (strict)" : " (attained)") << '\n';
    if (v.piece) out << "piece: " << to_string(*v.piece) << '\n';
    if (!v.explanation.empty()) out << v.explanation << '\n';
  }
  return v.holds ? kExitHolds : kExitFails;
}

int cmd_table(const TableArgs& a, std::ostream& out) {
  if (a.resolution < 1 || a.resolution > 64) throw std::invalid_argument("--resolution must lie in [1, 64]");
  RegionQuery query;
  query.pair = parse_region_pair(a.pair);
  query.s = parse_rational(a.s);
  query.d = a.d;
  if (!a.p.empty()) query.fixed_p = Exponent::parse(a.p);
  const auto [x_max, y_max] = region_extent(query.pair);
  const auto cells = classify_region(query, region_grid(a.resolution, x_max, y_max));
  emit(to_csv(cells), a.output, out);
  return kExitHolds;
}

int cmd_experiment(const ExperimentArgs& a, ExperimentMode mode, std::ostream& out) {
  if (a.format != "json" && a.format != "csv") throw std::invalid_argument("--format must be json or csv");
  const SpaceSpec source = parse_space_spec(a.from, a.d);
  const SpaceSpec target = parse_space_spec(a.to, a.d);
  ExperimentOptions options;
  options.level_min = a.lmin;
  options.level_max = a.lmax;
  options.tolerance = a.tolerance;
  options.spread_bound = a.bound;
  options.comb_width = to_double(parse_rational(a.comb_width));
  options.refine = a.refine;
  const FamilyKind family = parse_family_kind(a.family);
  const ExperimentReport report = mode == ExperimentMode::Sharpness
                                      ? run_sharpness(source, target, family, options)
                                      : run_boundedness(source, target, family, options);
  emit(a.format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n", a.output, out);
  return report.pass ? kExitHolds : kExitFails;
}

int cmd_norm(const NormArgs& a, std::ostream& out) {
  const FamilyKind family = parse_family_kind(a.family);
  const SpaceSpec space = parse_space_spec(a.space, a.d);
  const double width = to_double(parse_rational(a.comb_width));
  const GridSpec grid = grid_for_family(family, a.level, a.d, width, a.refine);
  const double value = space_norm(family_member(grid, family, a.level, width), space);
  if (a.json) {
    const nlohmann::json j = {{"schema_version", kReportSchemaVersion},
                              {"kind", "norm"},
                              {"family", std::string(to_string(family))},
                              {"level", a.level},
                              {"comb_width", width},
                              {"space", render(space)},
                              {"grid", to_json(grid)},
                              {"value", value}};
    out << j.dump(2) << '\n';
  } else {
    out << format_double(value) << '\n';
  }
  return kExitHolds;
}

int cmd_tail(const TailArgs& a, std::ostream& out) {
  const TailReport report =
      run_weighted_tail(Exponent::parse(a.q), parse_rational_list(a.t), a.d, a.factor, a.residual);
  emit(to_json(report).dump(2) + "\n", a.output, out);
  return report.pass ? kExitHolds : kExitFails;
}

int cmd_necessity(const NecessityArgs& a, std::ostream& out) {
  const NecessityReport report = run_discrete_necessity(Exponent::parse(a.r), Exponent::parse(a.q),
                                                        parse_rational(a.s), a.d, a.cubes, a.tail_tol);
  emit(to_json(report).dump(2) + "\n", a.output, out);
  // Exit 0 when the sum converges, 1 when it diverges, 2 when undecided.
  if (report.converges) return kExitHolds;
  return report.diverges ? kExitFails : kExitUncharacterized;
}

int cmd_selftest(const std::string& output, std::ostream& out) {
  const nlohmann::json report = selftest_report();
  emit(report.dump(2) + "\n", output, out);
  return report.at("pass").get<bool>() ? kExitHolds : kExitFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Embedding oracle and numerical norm toolkit for modulation, Besov, Triebel and Sobolev spaces",
               "modspace"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Key-value config file; one [section] per subcommand, flags override it");
  app.set_version_flag("--version", "modspace 1.0");

  DecideArgs decide_args;
  auto* decide_cmd = app.add_subcommand("decide", "Decide whether one space embeds in another");
  decide_cmd->add_option("--from", decide_args.from, "Source space, e.g. B[p=1,q=1,s=1/2]")->required();
  decide_cmd->add_option("--to", decide_args.to, "Target space, e.g. M[p=2,q=2]")->required();
  decide_cmd->add_option("-d,--dim", decide_args.d, "Dimension")->check(CLI::Range(1, 64));
  decide_cmd->add_flag("--json", decide_args.json, "Emit JSON");

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "Sweep an oracle direction over an index plane (CSV)");
  table_cmd->add_option("--pair", table_args.pair, "B-M, M-B, W-M, M-W, F-M, M-F, F2-M, M-F2, M-FL, FL-M");
  table_cmd->add_option("--s", table_args.s, "Smoothness (rational)");
  table_cmd->add_option("--resolution", table_args.resolution, "Points per axis, at most 64");
  table_cmd->add_option("-d,--dim", table_args.d, "Dimension")->check(CLI::Range(1, 64));
  table_cmd->add_option("--p", table_args.p, "Pinned p for the FL pairs");
  table_cmd->add_option("--output", table_args.output, "CSV path (stdout when omitted)");

  ExperimentArgs sharp_args;
  ExperimentArgs bound_args;
  auto add_experiment = [&](const char* name, const char* help, ExperimentArgs& a) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--from", a.from, "Source space")->required();
    cmd->add_option("--to", a.to, "Target space")->required();
    cmd->add_option("--family", a.family, "dilation, single-box, annulus, comb, dilated-kernel")->required();
    cmd->add_option("-d,--dim", a.d, "Dimension (1 or 2)");
    cmd->add_option("--lmin", a.lmin, "First level");
    cmd->add_option("--lmax", a.lmax, "Last level");
    cmd->add_option("--tolerance", a.tolerance, "Sharpness slope tolerance");
    cmd->add_option("--bound", a.bound, "Boundedness spread bound");
    cmd->add_option("--comb-width", a.comb_width, "Comb bump width a (rational, 0 < a <= 1)");
    cmd->add_option("--refine", a.refine, "Oversampling multiplier for M")->check(CLI::PositiveNumber);
    cmd->add_option("--format", a.format, "json or csv");
    cmd->add_option("--output", a.output, "Report path (stdout when omitted)");
    return cmd;
  };
  auto* sharp_cmd = add_experiment("sharpness", "Fit the norm-ratio slope and compare with the prediction", sharp_args);
  auto* bound_cmd = add_experiment("boundedness", "Check the norm ratio stays bounded across levels", bound_args);

  NormArgs norm_args;
  auto* norm_cmd = app.add_subcommand("norm", "Norm of one family member");
  norm_cmd->add_option("--family", norm_args.family, "Family name")->required();
  norm_cmd->add_option("--l", norm_args.level, "Level")->required();
  norm_cmd->add_option("--space", norm_args.space, "Space, e.g. M[p=2,q=1,s=0]")->required();
  norm_cmd->add_option("-d,--dim", norm_args.d, "Dimension (1 or 2)");
  norm_cmd->add_option("--comb-width", norm_args.comb_width, "Comb bump width a");
  norm_cmd->add_option("--refine", norm_args.refine, "Oversampling multiplier for M")->check(CLI::PositiveNumber);
  norm_cmd->add_flag("--json", norm_args.json, "Emit JSON");

  TailArgs tail_args;
  auto* tail_cmd = app.add_subcommand("tail", "Growth of the weighted l^q tail over K_t");
  tail_cmd->add_option("--q", tail_args.q, "Exponent q");
  tail_cmd->add_option("--t", tail_args.t, "Decreasing t values (rationals)")->delimiter(',');
  tail_cmd->add_option("-d,--dim", tail_args.d, "Dimension (1 or 2)");
  tail_cmd->add_option("--factor", tail_args.factor, "Required growth factor");
  tail_cmd->add_option("--residual", tail_args.residual, "Logarithmic fit residual bound");
  tail_cmd->add_option("--output", tail_args.output, "Report path (stdout when omitted)");

  NecessityArgs nec_args;
  auto* nec_cmd = app.add_subcommand("necessity", "Partial sums of the discrete necessity series");
  nec_cmd->add_option("--r", nec_args.r, "Exponent r")->required();
  nec_cmd->add_option("--q", nec_args.q, "Exponent q")->required();
  nec_cmd->add_option("--s", nec_args.s, "Smoothness (rational)")->required();
  nec_cmd->add_option("-d,--dim", nec_args.d, "Dimension (1 or 2)");
  nec_cmd->add_option("--cubes", nec_args.cubes, "Increasing cube sizes")->delimiter(',');
  nec_cmd->add_option("--tail-tolerance", nec_args.tail_tol, "Convergence threshold on the tail bound");
  nec_cmd->add_option("--output", nec_args.output, "Report path (stdout when omitted)");

  std::string selftest_output;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suite");
  selftest_cmd->add_option("--output", selftest_output, "Report path (stdout when omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitHolds;
  } catch (const CLI::CallForVersion&) {
    out << "modspace 1.0\n";
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (decide_cmd->parsed()) return cmd_decide(decide_args, out);
    if (table_cmd->parsed()) return cmd_table(table_args, out);
    if (sharp_cmd->parsed()) return cmd_experiment(sharp_args, ExperimentMode::Sharpness, out);
    if (bound_cmd->parsed()) return cmd_experiment(bound_args, ExperimentMode::Boundedness, out);
    if (norm_cmd->parsed()) return cmd_norm(norm_args, out);
    if (tail_cmd->parsed()) return cmd_tail(tail_args, out);
    if (nec_cmd->parsed()) return cmd_necessity(nec_args, out);
    if (selftest_cmd->parsed()) return cmd_selftest(selftest_output, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const UncharacterizedError& e) {
    err << "uncharacterized: " << e.what() << '\n';
    return kExitUncharacterized;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitUncharacterized;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitParse;
}

}  // namespace modspace::cli
