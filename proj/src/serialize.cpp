#include "riesz/serialize.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace riesz {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string csv_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

ordered_json finite_or_string(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

std::string coefficient_table_json(const CoefficientTable& table) {
  ordered_json j;
  j["space"] = table.space.spec();
  j["kernel"] = table.kernel_spec;
  j["n_max"] = table.n_max();
  j["tol"] = table.tol;
  ordered_json entries = ordered_json::array();
  int positive = 0, negative = 0, indeterminate = 0;
  double min_value = std::numeric_limits<double>::infinity();
  int argmin = -1;
  for (const auto& e : table.entries) {
    entries.push_back({{"n", e.n}, {"coefficient", e.value}, {"error", e.error_estimate}});
    if (e.n == 0) continue;
    if (e.value < min_value) {
      min_value = e.value;
      argmin = e.n;
    }
    if (e.value > 1e-9)
      ++positive;
    else if (e.value < -1e-9)
      ++negative;
    else
      ++indeterminate;
  }
  j["entries"] = entries;
  if (argmin >= 0) {
    j["summary"] = {{"min_coefficient", min_value},
                    {"argmin", argmin},
                    {"positive", positive},
                    {"negative", negative},
                    {"indeterminate", indeterminate},
                    {"all_positive", min_value > 1e-9}};
  }
  return j.dump(2);
}

std::string coefficient_table_csv(const CoefficientTable& table) {
  std::ostringstream os;
  os << "n,coefficient,error\n";
  for (const auto& e : table.entries)
    os << e.n << "," << csv_number(e.value) << "," << csv_number(e.error_estimate) << "\n";
  return os.str();
}

std::string transition_report_json(const TransitionReport& report) {
  ordered_json j;
  j["space"] = report.space_spec;
  j["family"] = report.family;
  j["axis"] = report.axis;
  j["estimate"] = report.estimate;
  j["bracket"] = {report.bracket_lo, report.bracket_hi};
  j["n_max"] = report.n_max;
  j["endpoint_statistics"] = {report.stat_lo, report.stat_hi};
  ordered_json hist = ordered_json::array();
  for (const auto& [param, stat] : report.history)
    hist.push_back({{"parameter", param}, {"extremal_coefficient", stat}});
  j["history"] = hist;
  return j.dump(2);
}

std::string optimization_run_json(const OptimizationRun& run) {
  ordered_json j;
  j["config"] = {{"space", run.config.space.spec()},
                 {"kernel", run.config.kernel.spec()},
                 {"n", run.config.n_points},
                 {"direction", run.config.direction == Direction::Maximize ? "maximize" : "minimize"},
                 {"restarts", run.config.restarts},
                 {"max_iters", run.config.max_iters},
                 {"step_init", run.config.step_init},
                 {"step_shrink", run.config.step_shrink},
                 {"armijo_c", run.config.armijo_c},
                 {"seed", run.config.seed}};
  j["best_energy"] = finite_or_string(run.best_energy);
  j["best_restart"] = run.best_restart;
  j["iterations_used"] = run.iterations_used;
  j["near_singular_flagged"] = run.near_singular_flagged;
  ordered_json energies = ordered_json::array();
  for (double e : run.restart_energies) energies.push_back(finite_or_string(e));
  j["restart_energies"] = energies;
  ordered_json pts = ordered_json::array();
  for (const auto& p : run.best_points) pts.push_back(p);
  j["best_points"] = pts;
  return j.dump(2);
}

std::string optimization_trace_csv(const OptimizationRun& run) {
  std::ostringstream os;
  os << "step,energy\n";
  for (std::size_t i = 0; i < run.trace.size(); ++i)
    os << i << "," << csv_number(run.trace[i]) << "\n";
  return os.str();
}

std::string configuration_histogram_csv(const ConfigurationStats& stats) {
  std::ostringstream os;
  os << "angle_lo,angle_hi,count\n";
  for (std::size_t b = 0; b < stats.histogram.size(); ++b)
    os << csv_number(b * stats.bin_width) << "," << csv_number((b + 1) * stats.bin_width) << ","
       << stats.histogram[b] << "\n";
  return os.str();
}

std::string quadrature_rule_csv(const QuadratureRule& rule) {
  std::ostringstream os;
  os << "node,weight\n";
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    os << csv_number(rule.nodes[i]) << "," << csv_number(rule.weights[i]) << "\n";
  return os.str();
}

std::string measure_json(const DiscreteMeasure& mu) {
  ordered_json j;
  j["space"] = mu.space.spec();
  ordered_json pts = ordered_json::array();
  for (const auto& p : mu.points) pts.push_back(p.coords());
  j["points"] = pts;
  j["weights"] = mu.weights;
  return j.dump(2);
}

DiscreteMeasure parse_measure_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("bad measure JSON: ") + e.what());
  }
  try {
    Space space = Space::parse(j.at("space").get<std::string>());
    std::vector<Point> pts;
    for (const auto& arr : j.at("points")) pts.emplace_back(space, arr.get<std::vector<double>>());
    std::vector<double> w = j.at("weights").get<std::vector<double>>();
    return DiscreteMeasure(space, std::move(pts), std::move(w));
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("measure JSON missing fields: ") + e.what());
  }
}

DiscreteMeasure load_measure_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open measure file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_measure_json(buf.str());
}

}  // namespace riesz
