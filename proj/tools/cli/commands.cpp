#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "CLI11.hpp"
#include "report_io.hpp"

namespace amgm::cli {
namespace {

struct CommonFlags {
  double tol_rel = kChainTolerance.relative;
  double tol_abs = kChainTolerance.absolute;
  bool json = false;

  void attach(CLI::App& cmd) {
    cmd.add_option("--tol-rel", tol_rel, "Relative chain tolerance")->capture_default_str();
    cmd.add_option("--tol-abs", tol_abs, "Absolute chain tolerance")->capture_default_str();
    cmd.add_flag("--json", json, "Emit one JSON document instead of a table");
  }

  [[nodiscard]] Tolerance tolerance() const {
    Tolerance t{tol_rel, tol_abs};
    t.validate();
    return t;
  }
};

struct BoundsFlags {
  std::string input;
  std::string format = "auto";
  bool renormalize = false;
  CommonFlags common;
};

struct HolderFlags {
  std::string input;
  CommonFlags common;
};

struct SearchFlags {
  SearchConfig config;
  bool delta_given = false;
  std::vector<double> table;
  bool trace = false;
  bool json = false;
};

// The ratio can never drop below 1, so a smaller search result signals a bug.
constexpr double kRatioFloor = 1.0 - 1e-9;

int cmd_bounds(const BoundsFlags& f, std::ostream& out) {
  const auto tol = f.common.tolerance();
  const std::string text = read_file(f.input);
  InputFormat format = InputFormat::kAuto;
  if (f.format == "json") format = InputFormat::kJson;
  if (f.format == "csv") format = InputFormat::kCsv;
  if (format == InputFormat::kAuto) format = detect_format(f.input, text);

  const auto ws = parse_sample(
      text, format, f.renormalize ? WeightPolicy::kRenormalize : WeightPolicy::kStrict);
  const auto report = verify_chain(ws, tol);
  if (f.common.json) {
    out << to_json(report).dump() << '\n';
  } else {
    print_table(out, report);
  }
  return report.chain_ok ? kExitOk : kExitViolation;
}

int cmd_holder(const HolderFlags& f, std::ostream& out) {
  const auto tol = f.common.tolerance();
  const auto input = parse_holder_input(read_file(f.input));
  const auto report = refined_holder(input.functions, input.exponents);
  const bool ok = holder_chain_holds(report, tol);
  if (f.common.json) {
    out << to_json(report, ok).dump() << '\n';
  } else {
    print_table(out, report, ok);
  }
  return ok ? kExitOk : kExitViolation;
}

int cmd_search(const SearchFlags& f, std::ostream& out) {
  if (!f.table.empty()) {
    const auto rows = ratio_vs_delta_table(f.config.n, f.table, f.config);
    if (f.json) {
      out << to_json(rows, f.config.n).dump() << '\n';
    } else {
      print_table(out, rows);
    }
    const bool ok = std::all_of(rows.begin(), rows.end(),
                                [](const RatioRow& r) { return r.best_ratio >= kRatioFloor; });
    return ok ? kExitOk : kExitViolation;
  }
  if (!f.delta_given) throw ParameterError("search: --delta is required unless --table is given");

  const auto result = maximize_ratio(f.config);
  if (f.json) {
    out << to_json(result, f.trace).dump() << '\n';
  } else {
    print_table(out, result);
  }
  return result.best_ratio >= kRatioFloor ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Refined AM-GM, Hoelder and Cartwright-Field bounds", "amgm"};
  app.require_subcommand(1);

  BoundsFlags bounds;
  auto* bounds_cmd = app.add_subcommand(
      "bounds", "Evaluate the refined AM-GM chain for a weighted sample");
  bounds_cmd->add_option("input", bounds.input, "JSON {weights, values} or CSV weight,value file")
      ->required();
  bounds_cmd->add_option("--format", bounds.format, "Input format")
      ->check(CLI::IsMember({"auto", "json", "csv"}))
      ->capture_default_str();
  bounds_cmd->add_flag("--renormalize-weights", bounds.renormalize,
                       "Rescale weights whose sum is within 1e-6 of 1");
  bounds.common.attach(*bounds_cmd);

  HolderFlags holder;
  auto* holder_cmd = app.add_subcommand(
      "holder", "Evaluate the refined Hoelder bound for discretized functions");
  holder_cmd->add_option("input", holder.input, "JSON {quadrature, exponents, functions}")
      ->required();
  holder.common.attach(*holder_cmd);

  SearchFlags search;
  auto* search_cmd = app.add_subcommand(
      "search", "Maximize (AM - GM) / Var(sqrt x) under a minimum-weight floor");
  search_cmd->add_option("--n", search.config.n, "Sample size")->capture_default_str();
  auto* delta_opt = search_cmd->add_option("--delta", search.config.delta,
                                           "Minimum weight, in (0, 1/n]");
  search_cmd->add_option("--restarts", search.config.restarts, "Independent restarts")
      ->capture_default_str();
  search_cmd->add_option("--iters", search.config.iterations, "Pattern sweeps per restart")
      ->capture_default_str();
  search_cmd->add_option("--seed", search.config.seed, "Random seed")->capture_default_str();
  search_cmd->add_option("--step-scale", search.config.step_scale, "Initial pattern step")
      ->capture_default_str();
  search_cmd->add_option("--threads", search.config.threads, "Worker threads")
      ->capture_default_str();
  search_cmd->add_option("--table", search.table,
                         "Comma-separated deltas; prints a delta/ratio table instead")
      ->delimiter(',');
  search_cmd->add_flag("--trace", search.trace, "Include per-restart traces in JSON output");
  search_cmd->add_flag("--json", search.json, "Emit one JSON document instead of a table");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  search.delta_given = delta_opt->count() > 0;

  try {
    if (bounds_cmd->parsed()) return cmd_bounds(bounds, out);
    if (holder_cmd->parsed()) return cmd_holder(holder, out);
    return cmd_search(search, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "error: input: " << e.what() << '\n';
  }
  return kExitInvalid;
}

}  // namespace amgm::cli
