#include "riesz.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "riesz/coeffs.hpp"
#include "riesz/measures.hpp"
#include "riesz/optimize.hpp"
#include "riesz/serialize.hpp"
#include "riesz/spaces.hpp"

namespace {

thread_local std::string g_last_error;

riesz_status status_of(const riesz::Error& e) {
  switch (e.code()) {
    case riesz::ErrorCode::InvalidArgument:
    case riesz::ErrorCode::Unsupported:
    case riesz::ErrorCode::Domain: return RIESZ_ERR_USAGE;
    case riesz::ErrorCode::Numeric:
    case riesz::ErrorCode::Resource: return RIESZ_ERR_NUMERIC;
    case riesz::ErrorCode::Bracket: return RIESZ_ERR_BRACKET;
  }
  return RIESZ_ERR_INTERNAL;
}

template <typename Fn>
riesz_status guard(Fn&& fn) {
  try {
    fn();
    return RIESZ_OK;
  } catch (const riesz::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RIESZ_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return RIESZ_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct riesz_space {
  riesz::Space impl;
};
struct riesz_kernel {
  riesz::RadialKernel impl;
};
struct riesz_coeff_table {
  riesz::CoefficientTable impl;
};
struct riesz_opt_run {
  riesz::OptimizationRun impl;
};

extern "C" {

const char* riesz_version(void) { return "0.1.0"; }

const char* riesz_last_error(void) { return g_last_error.c_str(); }

void riesz_string_free(char* s) { std::free(s); }

riesz_status riesz_space_parse(const char* spec, riesz_space** out) {
  return guard([&] {
    if (!spec || !out) riesz::fail(riesz::ErrorCode::InvalidArgument, "null argument");
    *out = new riesz_space{riesz::Space::parse(spec)};
  });
}

riesz_status riesz_space_params(const riesz_space* space, double* alpha, double* beta, int* dim) {
  return guard([&] {
    if (!space) riesz::fail(riesz::ErrorCode::InvalidArgument, "null space");
    if (alpha) *alpha = space->impl.alpha();
    if (beta) *beta = space->impl.beta();
    if (dim) *dim = space->impl.dim();
  });
}

void riesz_space_free(riesz_space* space) { delete space; }

riesz_status riesz_kernel_parse(const char* spec, riesz_kernel** out) {
  return guard([&] {
    if (!spec || !out) riesz::fail(riesz::ErrorCode::InvalidArgument, "null argument");
    *out = new riesz_kernel{riesz::RadialKernel::parse(spec)};
  });
}

void riesz_kernel_free(riesz_kernel* kernel) { delete kernel; }

riesz_status riesz_coeffs_compute(const riesz_space* space, const riesz_kernel* kernel, int n_max,
                                  double tol, riesz_coeff_table** out) {
  return guard([&] {
    if (!space || !kernel || !out) riesz::fail(riesz::ErrorCode::InvalidArgument, "null argument");
    *out = new riesz_coeff_table{riesz::coefficient_table(space->impl, kernel->impl, n_max, tol)};
  });
}

int riesz_coeff_table_size(const riesz_coeff_table* table) {
  return table ? static_cast<int>(table->impl.entries.size()) : 0;
}

riesz_status riesz_coeff_table_entry(const riesz_coeff_table* table, int n, double* coefficient,
                                     double* error) {
  return guard([&] {
    if (!table || n < 0 || n > table->impl.n_max())
      riesz::fail(riesz::ErrorCode::InvalidArgument, "entry index out of range");
    if (coefficient) *coefficient = table->impl.entries[n].value;
    if (error) *error = table->impl.entries[n].error_estimate;
  });
}

riesz_status riesz_coeff_table_json(const riesz_coeff_table* table, char** out) {
  return guard([&] {
    if (!table || !out) riesz::fail(riesz::ErrorCode::InvalidArgument, "null argument");
    *out = dup_string(riesz::coefficient_table_json(table->impl));
  });
}

riesz_status riesz_coeff_table_csv(const riesz_coeff_table* table, char** out) {
  return guard([&] {
    if (!table || !out) riesz::fail(riesz::ErrorCode::InvalidArgument, "null argument");
    *out = dup_string(riesz::coefficient_table_csv(table->impl));
  });
}

void riesz_coeff_table_free(riesz_coeff_table* table) { delete table; }

riesz_status riesz_transition(const riesz_space* space, const char* family, double lo, double hi,
                              int n_max, double param_tol, double* estimate, char** json_report) {
  return guard([&] {
    if (!space || !family) riesz::fail(riesz::ErrorCode::InvalidArgument, "null argument");
    riesz::TransitionReport report =
        riesz::find_transition(space->impl, family, lo, hi, n_max, param_tol);
    if (estimate) *estimate = report.estimate;
    if (json_report) *json_report = dup_string(riesz::transition_report_json(report));
  });
}

riesz_status riesz_energy(const riesz_space* space, const riesz_kernel* kernel,
                          const char* measure_spec, double tol, double* value) {
  return guard([&] {
    if (!space || !kernel || !measure_spec || !value)
      riesz::fail(riesz::ErrorCode::InvalidArgument, "null argument");
    *value = riesz::energy_of_spec(space->impl, kernel->impl, measure_spec, tol);
  });
}

riesz_status riesz_optimal_pole_weight(double lambda, double* w, double* value) {
  return guard([&] {
    riesz::PoleWeight pw = riesz::optimal_pole_weight(lambda);
    if (w) *w = pw.w;
    if (value) *value = pw.value;
  });
}

riesz_status riesz_optimize(const riesz_space* space, const riesz_kernel* kernel, int n_points,
                            int restarts, int max_iters, uint64_t seed, riesz_opt_run** out) {
  return guard([&] {
    if (!space || !kernel || !out) riesz::fail(riesz::ErrorCode::InvalidArgument, "null argument");
    riesz::OptimizationConfig cfg(space->impl, kernel->impl, n_points,
                                  riesz::default_direction(kernel->impl));
    cfg.restarts = restarts;
    cfg.max_iters = max_iters;
    cfg.seed = seed;
    *out = new riesz_opt_run{riesz::optimize_configuration(cfg)};
  });
}

riesz_status riesz_opt_run_best_energy(const riesz_opt_run* run, double* energy) {
  return guard([&] {
    if (!run || !energy) riesz::fail(riesz::ErrorCode::InvalidArgument, "null argument");
    *energy = run->impl.best_energy;
  });
}

riesz_status riesz_opt_run_json(const riesz_opt_run* run, char** out) {
  return guard([&] {
    if (!run || !out) riesz::fail(riesz::ErrorCode::InvalidArgument, "null argument");
    *out = dup_string(riesz::optimization_run_json(run->impl));
  });
}

riesz_status riesz_opt_run_trace_csv(const riesz_opt_run* run, char** out) {
  return guard([&] {
    if (!run || !out) riesz::fail(riesz::ErrorCode::InvalidArgument, "null argument");
    *out = dup_string(riesz::optimization_trace_csv(run->impl));
  });
}

riesz_status riesz_opt_run_histogram_csv(const riesz_opt_run* run, char** out) {
  return guard([&] {
    if (!run || !out) riesz::fail(riesz::ErrorCode::InvalidArgument, "null argument");
    *out = dup_string(
        riesz::configuration_histogram_csv(riesz::configuration_stats(run->impl.best_points)));
  });
}

void riesz_opt_run_free(riesz_opt_run* run) { delete run; }

riesz_status riesz_isometry_check(char field, int pairs, uint64_t seed, double* max_deviation) {
  return guard([&] {
    if (!max_deviation) riesz::fail(riesz::ErrorCode::InvalidArgument, "null argument");
    riesz::Field f;
    switch (field) {
      case 'R': f = riesz::Field::Real; break;
      case 'C': f = riesz::Field::Complex; break;
      case 'H': f = riesz::Field::Quat; break;
      case 'O':
        riesz::fail(riesz::ErrorCode::Unsupported, "octonions are out of the point-level scope");
      default:
        riesz::fail(riesz::ErrorCode::InvalidArgument, "field must be one of R, C, H");
    }
    if (pairs < 1) riesz::fail(riesz::ErrorCode::InvalidArgument, "need at least one pair");
    riesz::Rng rng(seed);
    int fd = riesz::field_dim(f);
    double worst = 0;
    for (int i = 0; i < pairs; ++i) {
      std::vector<double> a1(fd), b1(fd), a2(fd), b2(fd);
      auto fill = [&](std::vector<double>& v) {
        for (auto& x : v) x = rng.gaussian();
      };
      fill(a1), fill(b1), fill(a2), fill(b2);
      double proj = riesz::fp1_geodesic(f, a1, b1, a2, b2);
      riesz::Point p = riesz::isometry_tau(f, a1, b1);
      riesz::Point q = riesz::isometry_tau(f, a2, b2);
      double sphere = riesz::geodesic_distance(p.space(), p, q);
      worst = std::max(worst, std::abs(proj - sphere));
    }
    *max_deviation = worst;
  });
}

riesz_status riesz_gauss_jacobi_csv(double alpha, double beta, int nodes, char** out) {
  return guard([&] {
    if (!out) riesz::fail(riesz::ErrorCode::InvalidArgument, "null argument");
    riesz::JacobiParams params(alpha, beta);
    *out = dup_string(riesz::quadrature_rule_csv(riesz::gauss_jacobi(params, nodes)));
  });
}

}  // extern "C"
