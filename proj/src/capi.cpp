#include "centralspin.h"

#include <exception>
#include <memory>
#include <new>
#include <string>

#include "centralspin/error.hpp"
#include "centralspin/oracles.hpp"
#include "centralspin/qfi.hpp"
#include "centralspin/reduced_state.hpp"
#include "centralspin/scenario.hpp"

struct cs_model {
  cspin::reduced_state::ReducedStateModel analytic;
  cspin::dicke::CollectiveOps ops;
};

struct cs_result {
  cspin::scenario::Output output;
};

namespace {

thread_local std::string last_error;

cs_status fail(cs_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Maps the library's exception hierarchy onto status codes.
template <class Body>
cs_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const cspin::ParseError& e) {
    return fail(CS_ERR_PARSE, e.what());
  } catch (const cspin::ValidationError& e) {
    return fail(CS_ERR_VALIDATION, e.what());
  } catch (const cspin::ToleranceError& e) {
    return fail(CS_ERR_TOLERANCE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CS_ERR_INTERNAL, "unknown error");
  }
}

cs_status write_matrix(const cspin::numkit::ComplexMatrix& m, double* out, size_t len) {
  const auto dim = static_cast<size_t>(m.rows());
  if (len < 2 * dim * dim) return fail(CS_ERR_ARGUMENT, "output buffer too small");
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < dim; ++j) {
      const auto value = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      out[2 * (i * dim + j)] = value.real();
      out[2 * (i * dim + j) + 1] = value.imag();
    }
  }
  return CS_OK;
}

}  // namespace

extern "C" {

const char* cs_version(void) { return cspin::scenario::kVersion; }

const char* cs_last_error(void) { return last_error.c_str(); }

cs_status cs_model_create(const cs_chain_params* chain, const cs_central_params* central, cs_model** out) {
  if (!chain || !central || !out) return fail(CS_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const cspin::xychain::ChainParams c{chain->n_sites, chain->coupling, chain->anisotropy, chain->field};
    const cspin::dicke::CentralParams p{central->n_central, central->coupling, central->beta,
                                        central->polar, central->azimuth};
    *out = new cs_model{cspin::reduced_state::ReducedStateModel(c, p),
                        cspin::dicke::collective_ops(p.n_central)};
    return CS_OK;
  });
}

void cs_model_destroy(cs_model* model) { delete model; }

int cs_model_dim(const cs_model* model) { return model ? model->analytic.central().dim() : 0; }

cs_status cs_model_reduced_density(const cs_model* model, double t, double* out, size_t len) {
  if (!model || !out) return fail(CS_ERR_ARGUMENT, "null argument");
  return guarded([&] { return write_matrix(model->analytic.at(t).matrix(), out, len); });
}

cs_status cs_model_reduced_density_oracle(const cs_model* model, double t, double* out, size_t len) {
  if (!model || !out) return fail(CS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const cspin::oracles::CentralOracle oracle(model->analytic.chain(), model->analytic.central());
    return write_matrix(oracle.at(t).matrix(), out, len);
  });
}

cs_status cs_model_entanglement(const cs_model* model, double t, cs_entanglement* out) {
  if (!model || !out) return fail(CS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto report = cspin::qfi::analyze(model->analytic.at(t), model->ops);
    out->qfi = report.qfi;
    for (int a = 0; a < 3; ++a) out->direction[a] = report.direction(a);
    out->depth = report.depth;
    return CS_OK;
  });
}

cs_status cs_scenario_run(const char* text, const char* const* overrides, size_t n_overrides, int jobs,
                          cs_result** out) {
  if (!text || !out || (n_overrides && !overrides)) return fail(CS_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto scenario = cspin::scenario::Scenario::parse(text);
    for (size_t i = 0; i < n_overrides; ++i) scenario.apply_override(overrides[i]);
    auto result = std::make_unique<cs_result>(cs_result{cspin::scenario::run(scenario, jobs)});
    const bool failed = result->output.tolerance_failed;
    *out = result.release();
    return failed ? fail(CS_ERR_TOLERANCE, "oracle deviation above tolerance: " + (*out)->output.summary)
                  : CS_OK;
  });
}

cs_status cs_check_run(uint64_t seed, int draws, int jobs, cs_result** out) {
  if (!out) return fail(CS_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto result = std::make_unique<cs_result>(cs_result{cspin::scenario::run_check(seed, draws, jobs)});
    const bool failed = result->output.tolerance_failed;
    *out = result.release();
    return failed ? fail(CS_ERR_TOLERANCE, "oracle deviation above tolerance: " + (*out)->output.summary)
                  : CS_OK;
  });
}

const char* cs_result_csv(const cs_result* result) { return result ? result->output.csv.c_str() : ""; }

const char* cs_result_summary(const cs_result* result) {
  return result ? result->output.summary.c_str() : "";
}

const char* cs_result_output_path(const cs_result* result) {
  return result ? result->output.out_path.c_str() : "";
}

void cs_result_destroy(cs_result* result) { delete result; }

}  // extern "C"
