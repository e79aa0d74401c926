#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace gkd {

struct SvmError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SvmOptions {
  // Stop when the maximal KKT violation drops below this.
  double tolerance = 1e-3;
  // Hard budget; exceeding it is a solver failure, not a silent cutoff.
  std::size_t max_iterations = 10'000'000;
  // Test hook: called once per iteration with the current dual objective.
  std::function<void(std::size_t iteration, double objective)> trace;
};

struct SvmModel {
  std::vector<double> alphas;        // one per training point, in [0, C]
  std::vector<std::int8_t> labels;   // +1 / -1 per training point
  double bias = 0.0;
  double c = 0.0;
  std::size_t iterations = 0;
  std::vector<std::size_t> support;  // indices with alpha > 0
};

// Trains a C-SVC on a precomputed kernel matrix (row-major n*n) via
// sequential minimal optimization with maximal-violating-pair selection.
// Deterministic: ties in the selection break toward the smaller index.
SvmModel svm_train(const std::vector<double>& kernel, std::size_t n,
                   std::span<const int> labels, double c, const SvmOptions& options = {});

// Decision value for a point given its kernel row against the training set.
double svm_decision(const SvmModel& model, std::span<const double> kernel_row);

// Prediction; a decision value of exactly zero counts as +1.
int svm_predict(const SvmModel& model, std::span<const double> kernel_row);

// Dual objective sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij.
double dual_objective(const std::vector<double>& kernel, std::size_t n,
                      std::span<const int> labels, std::span<const double> alphas);

}  // namespace gkd
