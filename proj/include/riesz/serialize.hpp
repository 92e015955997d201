#pragma once

#include <string>

#include "riesz/coeffs.hpp"
#include "riesz/measures.hpp"
#include "riesz/optimize.hpp"

namespace riesz {

// JSON payloads are deterministic for identical inputs: keys are emitted in a
// fixed order and doubles use shortest round-trip formatting. Timestamps are
// never part of these payloads.

std::string coefficient_table_json(const CoefficientTable& table);
std::string coefficient_table_csv(const CoefficientTable& table);

std::string transition_report_json(const TransitionReport& report);

std::string optimization_run_json(const OptimizationRun& run);
std::string optimization_trace_csv(const OptimizationRun& run);
std::string configuration_histogram_csv(const ConfigurationStats& stats);

std::string quadrature_rule_csv(const QuadratureRule& rule);

std::string measure_json(const DiscreteMeasure& mu);
DiscreteMeasure load_measure_json(const std::string& path);
DiscreteMeasure parse_measure_json(const std::string& text);

}  // namespace riesz
