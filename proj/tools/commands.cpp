#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eulerhall/errors.hpp"
#include "eulerhall/json_io.hpp"
#include "selftest.hpp"
#include "sweep.hpp"

namespace eulerhall::cli {
namespace {

constexpr std::size_t kSweepMaxM = 4;
constexpr std::size_t kSweepMaxAtom = 5;
constexpr std::int64_t kDynamicsMaxWindow = 4;
constexpr std::size_t kDynamicsMaxDepth = 5;

struct Options {
  bool text = false;
  unsigned jobs = 1;
};

BundleFamily read_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

void emit(std::ostream& out, const Options& opt, const std::string& command, const Json& result) {
  if (opt.text) {
    out << command << "\n";
    for (const auto& [key, value] : result.items()) {
      out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    return;
  }
  Json doc;
  doc["header"] = Json{{"tool", "eulerhall"}, {"version", kVersion}, {"command", command}};
  doc["result"] = result;
  out << doc.dump(2) << "\n";
}

int cmd_analyze(const std::string& path, const Options& opt, std::ostream& out) {
  const auto family = read_family(path);
  if (family.trivial_lines > 0) {
    throw InvalidInput("trivial_lines: analyze needs 0 (the Euler class is zero whenever theta is present; use euler)");
  }
  const auto eq = equivalence_report(family);
  const auto verdict = subordination_verdict(family);
  if ((verdict.tag == VerdictTag::NotSubordinate) != eq.hall) {
    throw InvariantViolation("verdict disagrees with Hall's condition");
  }
  emit(out, opt, "analyze", analysis_to_json(family, eq, verdict));
  return kSuccess;
}

int cmd_euler(const std::string& path, const Options& opt, std::ostream& out) {
  const auto family = read_family(path);
  const auto e = euler_class(family);
  Json result;
  result["family"] = family_to_json(family);
  result["dimension"] = dimension(family);
  result["euler_class"] = e.to_string();
  result["euler_nonzero"] = !e.is_zero();
  const auto degree = e.homogeneous_degree();
  result["euler_class_degree"] = degree ? Json(*degree) : Json(nullptr);
  emit(out, opt, "euler", result);
  return kSuccess;
}

int cmd_sweep(std::size_t max_m, std::size_t max_atom, std::size_t cap_m, std::size_t cap_atom, const Options& opt,
              std::ostream& out) {
  if (max_m < 1 || max_atom < 1) throw InvalidInput("--max-m and --max-atom must be positive");
  if (max_m > cap_m) throw CapExceeded("--max-m " + std::to_string(max_m) + " above cap " + std::to_string(cap_m));
  if (max_atom > cap_atom) {
    throw CapExceeded("--max-atom " + std::to_string(max_atom) + " above cap " + std::to_string(cap_atom));
  }
  if (max_m > kHallExhaustiveCap || max_atom > 20) throw CapExceeded("sweep size beyond hard limits");
  const auto summary = run_sweep(max_m, max_atom, opt.jobs);
  emit(out, opt, "sweep", to_json(summary));
  return summary.clean() ? kSuccess : kInvariantViolation;
}

int cmd_dynamics(std::int64_t window, std::size_t depth, const Options& opt, std::ostream& out) {
  if (window < 1) throw InvalidInput("--window must be positive");
  if (window > kDynamicsMaxWindow) throw CapExceeded("--window above cap " + std::to_string(kDynamicsMaxWindow));
  if (depth > kDynamicsMaxDepth) throw CapExceeded("--depth above cap " + std::to_string(kDynamicsMaxDepth));

  const auto gamma = gamma_generations({window, depth});
  const auto labeling = verify_labeling(gamma);
  if (!labeling.passed()) throw InvariantViolation("labeling check failed: " + to_json(labeling).dump());
  const auto sdr = hall_certificate_for_prefix(gamma, depth);

  Json sizes = Json::array();
  Json labels = Json::array();
  for (const auto& gen : gamma.generations) {
    sizes.push_back(gen.size());
    Json row = Json::array();
    for (const auto& s : gen) row.push_back(id(s.label));
    labels.push_back(std::move(row));
  }
  Json result;
  result["window"] = window;
  result["depth"] = depth;
  result["j_range"] = Json::array({-window, window});
  result["generation_sizes"] = std::move(sizes);
  result["labels"] = std::move(labels);
  result["labeling"] = to_json(labeling);
  result["prefix_sdr_size"] = sdr.assignment->size();
  result["prefix_hall_confirmed"] = true;
  emit(out, opt, "dynamics", result);
  return kSuccess;
}

int cmd_selftest(const Options& opt, std::ostream& out) {
  const auto report = run_selftest();
  emit(out, opt, "selftest", report);
  return report.at("passed").get<bool>() ? kSuccess : kInvariantViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler classes, Hall's condition and index-set dynamics for sums of line bundles over products of "
               "2-spheres"};
  app.require_subcommand(1);
  Options opt;
  bool json_flag = false;
  auto* json_opt = app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_flag("--text", opt.text, "plain text output")->excludes(json_opt);
  app.add_option("--jobs", opt.jobs, "worker threads for sweeps")->check(CLI::Range(1U, 256U));
  app.fallthrough();

  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "Euler class, Hall, matching and verdict for a family file");
  analyze->add_option("file", analyze_path, "family JSON")->required();

  std::string euler_path;
  auto* euler = app.add_subcommand("euler", "Euler class of a family file");
  euler->add_option("file", euler_path, "family JSON")->required();

  std::size_t max_m = 4, max_atom = 4, cap_m = kSweepMaxM, cap_atom = kSweepMaxAtom;
  auto* sweep = app.add_subcommand("sweep", "exhaustive equivalence check over small families");
  sweep->add_option("--max-m", max_m, "largest family size")->required();
  sweep->add_option("--max-atom", max_atom, "atoms range over 1..A")->required();
  sweep->add_option("--cap-m", cap_m, "raise the --max-m limit")->capture_default_str();
  sweep->add_option("--cap-atom", cap_atom, "raise the --max-atom limit")->capture_default_str();

  std::int64_t window = 1;
  std::size_t depth = 0;
  auto* dynamics = app.add_subcommand("dynamics", "generations, labeling and prefix Hall certificate");
  dynamics->add_option("--window", window, "j ranges over [-W, W]")->required();
  dynamics->add_option("--depth", depth, "number of generations")->required();

  auto* selftest = app.add_subcommand("selftest", "run embedded property checks");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_path, opt, out);
    if (*euler) return cmd_euler(euler_path, opt, out);
    if (*sweep) return cmd_sweep(max_m, max_atom, cap_m, cap_atom, opt, out);
    if (*dynamics) return cmd_dynamics(window, depth, opt, out);
    if (*selftest) return cmd_selftest(opt, out);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace eulerhall::cli
