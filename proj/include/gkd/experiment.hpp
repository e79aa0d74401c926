#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gkd/kernels.hpp"
#include "gkd/svm.hpp"

namespace gkd {

// Deterministic 80/10/10 index split: a seeded shuffle of 0..n-1, with
// floor(n/10) validation and test indices and the remainder in train.
struct SplitPlan {
  std::uint64_t seed = 0;
  std::vector<std::size_t> train;
  std::vector<std::size_t> valid;
  std::vector<std::size_t> test;
};

// Requires n >= 10 so every fold is non-empty.
SplitPlan make_splits(std::size_t n, std::uint64_t seed);

struct ExperimentConfig {
  std::vector<std::uint64_t> seeds;
  std::vector<double> c_grid;
  std::vector<int> h_grid;  // refinement depths tried for wl/wloa
  int threads = 0;

  static ExperimentConfig defaults();
};

struct SelectionResult {
  double c = 0.0;
  int h = 0;
  double valid_accuracy = 0.0;  // percent
};

struct SeedResult {
  std::uint64_t seed = 0;
  double c = 0.0;
  int h = -1;  // -1 when the kernel has no depth parameter
  double valid_accuracy = 0.0;
  double test_accuracy = 0.0;
};

struct EvalReport {
  std::vector<SeedResult> per_seed;
  double mean = 0.0;    // of test accuracy, percent
  double stddev = 0.0;  // sample standard deviation
};

// Accuracy (percent) on eval indices of an SVM trained on the train indices
// of the (already normalized) Gram matrix.
double fold_accuracy(const GramMatrix& gram, std::span<const int> labels,
                     std::span<const std::size_t> train, std::span<const std::size_t> eval,
                     double c, const SvmOptions& options = {});

// Grid selection over (C, depth) by validation accuracy. grams[k] is the
// Gram matrix for depth h_values[k]. Ties prefer smaller C, then smaller
// depth. Throws on empty grids.
SelectionResult model_select(std::span<const GramMatrix> grams, std::span<const int> h_values,
                             std::span<const int> labels, const SplitPlan& plan,
                             std::span<const double> c_grid);

// Full protocol: per seed, split; pick (C, depth) by validation accuracy;
// report the test accuracy of that winner. Labels must be +1/-1.
EvalReport run_experiment(std::span<const LabeledDigraph> graphs, std::span<const int> labels,
                          const KernelSpec& spec, const ExperimentConfig& config);

// One line per seed plus a "mean=<x> std=<y>" aggregate, fixed formatting.
std::string format_report(const EvalReport& report);

}  // namespace gkd
