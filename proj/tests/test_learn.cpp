#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "gkd/experiment.hpp"
#include "gkd/graph.hpp"
#include "gkd/kernels.hpp"
#include "gkd/rng.hpp"
#include "gkd/svm.hpp"
#include "testutil.hpp"

using gkd::BaseKernel;
using gkd::EvalReport;
using gkd::ExperimentConfig;
using gkd::GramMatrix;
using gkd::GraphVariant;
using gkd::KernelSpec;
using gkd::LabeledDigraph;
using gkd::SeedResult;
using gkd::SelectionResult;
using gkd::SplitPlan;
using gkd::SvmError;
using gkd::SvmModel;
using gkd::SvmOptions;
using gkdtest::TestLabels;

namespace {

const TestLabels& labels() {
  static TestLabels L;
  return L;
}

// Kernel where two points see each other iff they share a class: each class
// collapses to one of two orthogonal unit vectors, so any SVM separates the
// classes perfectly on every fold.
GramMatrix indicator_gram(const std::vector<int>& y) {
  GramMatrix m(y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      m.at(i, j) = y[i] == y[j] ? 1.0 : 0.0;
  m.set_normalized(true);
  return m;
}

// Kernel where every point looks the same; carries no class signal at all.
GramMatrix ones_gram(std::size_t n) {
  GramMatrix m(n, 1.0);
  m.set_normalized(true);
  return m;
}

std::vector<int> alternating_labels(std::size_t n) {
  std::vector<int> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = i % 2 == 0 ? 1 : -1;
  return y;
}

// Train fold 0..7, validation 8..9, empty test fold. With alternating
// labels both folds hold both classes.
SplitPlan handmade_plan(std::uint64_t seed = 1) {
  SplitPlan plan;
  plan.seed = seed;
  plan.train = {0, 1, 2, 3, 4, 5, 6, 7};
  plan.valid = {8, 9};
  return plan;
}

std::vector<double> kernel_row(const std::vector<double>& kernel, std::size_t n,
                               std::size_t i) {
  return {kernel.begin() + static_cast<std::ptrdiff_t>(i * n),
          kernel.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)};
}

// KKT violation recomputed from scratch: max over ascent-feasible points of
// -y*grad minus min over descent-feasible points, the solver's stop measure.
double kkt_violation(const std::vector<double>& kernel, std::size_t n,
                     const std::vector<int>& y, const std::vector<double>& alphas, double c) {
  double gmax = -std::numeric_limits<double>::infinity();
  double gmin = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < n; ++t) {
    double grad = -1.0;
    for (std::size_t s = 0; s < n; ++s)
      grad += y[t] * y[s] * kernel[t * n + s] * alphas[s];
    double v = -y[t] * grad;
    bool in_up = (y[t] > 0 && alphas[t] < c) || (y[t] < 0 && alphas[t] > 0);
    bool in_low = (y[t] > 0 && alphas[t] > 0) || (y[t] < 0 && alphas[t] < c);
    if (in_up) gmax = std::max(gmax, v);
    if (in_low) gmin = std::min(gmin, v);
  }
  return gmax - gmin;
}

}  // namespace

TEST_CASE("splits have the documented fold shape") {
  gkd::SplitPlan plan = gkd::make_splits(10, 42);
  CHECK(plan.seed == 42);
  CHECK(plan.train.size() == 8);
  CHECK(plan.valid.size() == 1);
  CHECK(plan.test.size() == 1);

  plan = gkd::make_splits(1113, 7);
  CHECK(plan.train.size() == 891);
  CHECK(plan.valid.size() == 111);
  CHECK(plan.test.size() == 111);

  // fold size rounds down, the remainder stays in train
  plan = gkd::make_splits(19, 0);
  CHECK(plan.train.size() == 17);
  CHECK(plan.valid.size() == 1);
  CHECK(plan.test.size() == 1);
}

TEST_CASE("splits partition the index range in sorted order") {
  for (std::uint64_t seed : {0ull, 1ull, 7ull, 2020ull}) {
    gkd::SplitPlan plan = gkd::make_splits(100, seed);
    CHECK(std::is_sorted(plan.train.begin(), plan.train.end()));
    CHECK(std::is_sorted(plan.valid.begin(), plan.valid.end()));
    CHECK(std::is_sorted(plan.test.begin(), plan.test.end()));

    std::vector<std::size_t> all;
    all.insert(all.end(), plan.train.begin(), plan.train.end());
    all.insert(all.end(), plan.valid.begin(), plan.valid.end());
    all.insert(all.end(), plan.test.begin(), plan.test.end());
    REQUIRE(all.size() == 100);
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i] == i);
  }
}

TEST_CASE("splits are reproducible and seed sensitive") {
  gkd::SplitPlan a = gkd::make_splits(100, 5);
  gkd::SplitPlan b = gkd::make_splits(100, 5);
  CHECK(a.train == b.train);
  CHECK(a.valid == b.valid);
  CHECK(a.test == b.test);

  gkd::SplitPlan c = gkd::make_splits(100, 6);
  CHECK(a.train != c.train);
}

TEST_CASE("splitting fewer than ten items is an error") {
  CHECK_THROWS_WITH_AS(gkd::make_splits(9, 1), "need at least 10 items to split 80/10/10",
                       std::invalid_argument);
  CHECK_THROWS_AS(gkd::make_splits(0, 1), std::invalid_argument);
}

TEST_CASE("orthogonal two-point problem solves analytically") {
  // K = I, y = (+1, -1): the dual is 2a - a^2 along the feasible ray, so
  // alpha = (1, 1), both points free, zero bias.
  std::vector<double> kernel = {1.0, 0.0, 0.0, 1.0};
  std::vector<int> y = {1, -1};
  SvmModel model = gkd::svm_train(kernel, 2, y, 10.0);

  CHECK(model.alphas == std::vector<double>{1.0, 1.0});
  CHECK(model.bias == 0.0);
  CHECK(model.c == 10.0);
  CHECK(model.iterations == 1);
  CHECK(model.support == std::vector<std::size_t>{0, 1});
  CHECK(model.labels == std::vector<std::int8_t>{1, -1});

  CHECK(gkd::svm_decision(model, std::vector<double>{1.0, 0.0}) == 1.0);
  CHECK(gkd::svm_decision(model, std::vector<double>{0.0, 1.0}) == -1.0);
  CHECK(gkd::svm_predict(model, std::vector<double>{1.0, 0.0}) == 1);
  CHECK(gkd::svm_predict(model, std::vector<double>{0.0, 1.0}) == -1);
  CHECK(gkd::dual_objective(kernel, 2, y, model.alphas) == 1.0);
}

TEST_CASE("duplicate points share the optimum mass deterministically") {
  // Points 0 and 1 are identical; the pair selection breaks ties toward the
  // smaller index, so all of the positive mass lands on point 0.
  std::vector<double> kernel = {1.0, 1.0, 0.0,
                                1.0, 1.0, 0.0,
                                0.0, 0.0, 1.0};
  std::vector<int> y = {1, 1, -1};
  SvmModel model = gkd::svm_train(kernel, 3, y, 10.0);

  CHECK(model.alphas == std::vector<double>{1.0, 0.0, 1.0});
  CHECK(model.bias == 0.0);
  CHECK(model.support == std::vector<std::size_t>{0, 2});
  CHECK(gkd::dual_objective(kernel, 3, y, model.alphas) == 1.0);

  CHECK(gkd::svm_predict(model, kernel_row(kernel, 3, 0)) == 1);
  CHECK(gkd::svm_predict(model, kernel_row(kernel, 3, 1)) == 1);
  CHECK(gkd::svm_predict(model, kernel_row(kernel, 3, 2)) == -1);
}

TEST_CASE("a zero decision value counts as positive") {
  std::vector<double> kernel = {1.0, 0.0, 0.0, 1.0};
  std::vector<int> y = {1, -1};
  SvmModel model = gkd::svm_train(kernel, 2, y, 10.0);

  // alpha = (1, 1) and zero bias make this row an exact tie
  CHECK(gkd::svm_decision(model, std::vector<double>{0.5, 0.5}) == 0.0);
  CHECK(gkd::svm_predict(model, std::vector<double>{0.5, 0.5}) == 1);

  SvmModel empty;
  empty.alphas = {0.0};
  empty.labels = {1};
  CHECK(gkd::svm_decision(empty, std::vector<double>{3.0}) == 0.0);
  CHECK(gkd::svm_predict(empty, std::vector<double>{3.0}) == 1);
}

TEST_CASE("decision rows must match the training size") {
  std::vector<double> kernel = {1.0, 0.0, 0.0, 1.0};
  std::vector<int> y = {1, -1};
  SvmModel model = gkd::svm_train(kernel, 2, y, 1.0);
  CHECK_THROWS_WITH_AS(gkd::svm_decision(model, std::vector<double>{1.0}),
                       "kernel row length does not match the training set", SvmError);
  CHECK_THROWS_WITH_AS(gkd::svm_predict(model, std::vector<double>{1.0, 2.0, 3.0}),
                       "kernel row length does not match the training set", SvmError);
}

TEST_CASE("training input validation") {
  std::vector<double> good_kernel = {1.0, 0.0, 0.0, 1.0};
  std::vector<int> good_y = {1, -1};

  CHECK_THROWS_WITH_AS(gkd::svm_train({}, 0, std::vector<int>{}, 1.0), "empty training set",
                       SvmError);
  CHECK_THROWS_WITH_AS(gkd::svm_train({1.0, 0.0, 1.0}, 2, good_y, 1.0),
                       "kernel matrix size mismatch", SvmError);
  CHECK_THROWS_WITH_AS(gkd::svm_train(good_kernel, 2, std::vector<int>{1}, 1.0),
                       "label count mismatch", SvmError);
  CHECK_THROWS_WITH_AS(gkd::svm_train(good_kernel, 2, good_y, 0.0),
                       "C must be positive and finite", SvmError);
  CHECK_THROWS_WITH_AS(gkd::svm_train(good_kernel, 2, good_y, -3.0),
                       "C must be positive and finite", SvmError);
  CHECK_THROWS_WITH_AS(
      gkd::svm_train(good_kernel, 2, good_y, std::numeric_limits<double>::infinity()),
      "C must be positive and finite", SvmError);
  CHECK_THROWS_WITH_AS(gkd::svm_train(good_kernel, 2, std::vector<int>{1, 0}, 1.0),
                       "labels must be +1 or -1", SvmError);
  CHECK_THROWS_WITH_AS(gkd::svm_train(good_kernel, 2, std::vector<int>{1, 1}, 1.0),
                       "training set needs both classes", SvmError);

  std::vector<double> bad_kernel = {1.0, std::nan(""), std::nan(""), 1.0};
  CHECK_THROWS_WITH_AS(gkd::svm_train(bad_kernel, 2, good_y, 1.0),
                       "kernel matrix has a non-finite entry", SvmError);
}

TEST_CASE("the iteration budget is a hard error, not a cutoff") {
  // K = I with two +/- pairs needs exactly two pair updates
  std::vector<double> kernel(16, 0.0);
  for (std::size_t i = 0; i < 4; ++i) kernel[i * 4 + i] = 1.0;
  std::vector<int> y = {1, -1, 1, -1};

  SvmOptions starved;
  starved.max_iterations = 1;
  CHECK_THROWS_WITH_AS(gkd::svm_train(kernel, 4, y, 1.0, starved),
                       "solver did not converge within 1 iterations", SvmError);

  SvmOptions enough;
  enough.max_iterations = 2;
  SvmModel model = gkd::svm_train(kernel, 4, y, 1.0, enough);
  CHECK(model.iterations == 2);
  CHECK(model.alphas == std::vector<double>{1.0, 1.0, 1.0, 1.0});
}

TEST_CASE("solutions satisfy the dual constraints") {
  gkd::SplitMix64 rng(401);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = 3 + trial % 7;
    double c = trial % 2 == 0 ? 0.5 : 8.0;
    std::vector<double> kernel = gkdtest::random_psd_kernel(rng, n, 2 + trial % 3);
    std::vector<int> y = gkdtest::random_binary_labels(rng, n);

    SvmModel model = gkd::svm_train(kernel, n, y, c);
    double balance = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(model.alphas[i] >= 0.0);
      CHECK(model.alphas[i] <= c);
      balance += y[i] * model.alphas[i];
    }
    CHECK(std::abs(balance) <= 1e-10 * (1.0 + c * static_cast<double>(n)));
    CHECK(kkt_violation(kernel, n, y, model.alphas, c) <= 1e-3 + 1e-7);
  }
}

TEST_CASE("the traced dual objective never decreases") {
  gkd::SplitMix64 rng(402);
  std::size_t n = 8;
  std::vector<double> kernel = gkdtest::random_psd_kernel(rng, n, 3);
  std::vector<int> y = gkdtest::random_binary_labels(rng, n);

  std::vector<double> objectives;
  SvmOptions options;
  options.tolerance = 1e-9;
  options.trace = [&](std::size_t iteration, double objective) {
    CHECK(iteration == objectives.size());
    objectives.push_back(objective);
  };

  SvmModel model = gkd::svm_train(kernel, n, y, 4.0, options);
  REQUIRE(objectives.size() == model.iterations + 1);
  CHECK(objectives.front() == 0.0);
  for (std::size_t i = 1; i < objectives.size(); ++i)
    CHECK(objectives[i] >= objectives[i - 1] - 1e-9 * (1.0 + std::abs(objectives[i - 1])));

  // the incremental gradient drifts by at most rounding noise
  double final_objective = gkd::dual_objective(kernel, n, y, model.alphas);
  CHECK(objectives.back() == doctest::Approx(final_objective).epsilon(1e-7));
}

TEST_CASE("solver matches the projected-gradient reference") {
  gkd::SplitMix64 rng(403);
  const double cs[3] = {0.1, 1.0, 10.0};
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 3 + trial % 6;
    double c = cs[trial % 3];
    std::vector<double> kernel = gkdtest::random_psd_kernel(rng, n, 2 + trial % 3);
    std::vector<int> y = gkdtest::random_binary_labels(rng, n);

    SvmOptions tight;
    tight.tolerance = 1e-9;
    SvmModel model = gkd::svm_train(kernel, n, y, c, tight);
    double smo_objective = gkd::dual_objective(kernel, n, y, model.alphas);

    gkdtest::ReferenceDual ref = gkdtest::solve_dual_reference(kernel, n, y, c);
    CHECK(std::abs(smo_objective - ref.objective) <= 1e-6);

    // the two optimizers may distribute mass differently, but they must
    // classify every training point the same way
    double ref_bias = gkdtest::reference_bias(kernel, n, y, ref.alphas, c);
    for (std::size_t i = 0; i < n; ++i) {
      double ref_decision = ref_bias;
      for (std::size_t j = 0; j < n; ++j)
        ref_decision += ref.alphas[j] * y[j] * kernel[i * n + j];
      int ref_prediction = ref_decision >= 0.0 ? 1 : -1;
      CHECK(gkd::svm_predict(model, kernel_row(kernel, n, i)) == ref_prediction);
    }
  }
}

TEST_CASE("scaling the kernel and C together rescales the dual") {
  gkd::SplitMix64 rng(404);
  std::size_t n = 6;
  std::vector<double> kernel = gkdtest::random_psd_kernel(rng, n, 3);
  std::vector<int> y = gkdtest::random_binary_labels(rng, n);

  const double scale = 4.0;  // a power of two keeps the rescaling exact
  std::vector<double> scaled = kernel;
  for (double& v : scaled) v *= scale;

  SvmModel base = gkd::svm_train(kernel, n, y, 2.0);
  SvmModel rescaled = gkd::svm_train(scaled, n, y, 2.0 / scale);

  REQUIRE(base.alphas.size() == rescaled.alphas.size());
  for (std::size_t i = 0; i < n; ++i)
    CHECK(rescaled.alphas[i] ==
          doctest::Approx(base.alphas[i] / scale).epsilon(1e-10).scale(1.0));
  CHECK(rescaled.bias == doctest::Approx(base.bias).epsilon(1e-10).scale(1.0));

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row = kernel_row(kernel, n, i);
    std::vector<double> scaled_row = kernel_row(scaled, n, i);
    CHECK(gkd::svm_decision(rescaled, scaled_row) ==
          doctest::Approx(gkd::svm_decision(base, row)).epsilon(1e-9).scale(1.0));
    CHECK(gkd::svm_predict(rescaled, scaled_row) == gkd::svm_predict(base, row));
  }
}

TEST_CASE("a vanishing C predicts the majority class") {
  gkd::SplitMix64 rng(405);
  std::size_t n = 5;
  std::vector<double> kernel = gkdtest::random_psd_kernel(rng, n, 3);

  // with alpha capped at 1e-9 the kernel term is negligible against the
  // bias, which lands on the heavier class
  std::vector<int> majority_positive = {1, 1, 1, -1, -1};
  SvmModel model = gkd::svm_train(kernel, n, majority_positive, 1e-9);
  for (std::size_t i = 0; i < n; ++i)
    CHECK(gkd::svm_predict(model, kernel_row(kernel, n, i)) == 1);

  std::vector<int> majority_negative = {-1, -1, -1, 1, 1};
  model = gkd::svm_train(kernel, n, majority_negative, 1e-9);
  for (std::size_t i = 0; i < n; ++i)
    CHECK(gkd::svm_predict(model, kernel_row(kernel, n, i)) == -1);
}

TEST_CASE("fold accuracy is exact on class-indicator kernels") {
  std::vector<int> y = alternating_labels(10);
  SplitPlan plan = handmade_plan();

  GramMatrix separable = indicator_gram(y);
  CHECK(gkd::fold_accuracy(separable, y, plan.train, plan.valid, 1.0) == 100.0);
  CHECK(gkd::fold_accuracy(separable, y, plan.train, plan.train, 1.0) == 100.0);

  // an all-ones kernel predicts +1 everywhere: half right on a mixed fold
  GramMatrix flat = ones_gram(10);
  CHECK(gkd::fold_accuracy(flat, y, plan.train, plan.valid, 1.0) == 50.0);

  CHECK(gkd::fold_accuracy(separable, y, plan.train, {}, 1.0) == 0.0);
}

TEST_CASE("model selection prefers accuracy, then smaller C, then smaller depth") {
  std::vector<int> y = alternating_labels(10);
  SplitPlan plan = handmade_plan();
  std::vector<double> c_grid = {1.0, 0.001, 1000.0};  // deliberately unsorted

  std::vector<GramMatrix> grams;
  grams.push_back(ones_gram(10));
  grams.push_back(indicator_gram(y));
  std::vector<int> h_values = {0, 1};

  SelectionResult pick = gkd::model_select(grams, h_values, y, plan, c_grid);
  CHECK(pick.h == 1);
  CHECK(pick.c == 0.001);
  CHECK(pick.valid_accuracy == 100.0);

  // identical grams tie everywhere: smallest C wins, then the smaller depth
  std::vector<GramMatrix> twins;
  twins.push_back(indicator_gram(y));
  twins.push_back(indicator_gram(y));
  std::vector<int> twin_depths = {5, 2};
  pick = gkd::model_select(twins, twin_depths, y, plan, c_grid);
  CHECK(pick.h == 2);
  CHECK(pick.c == 0.001);
  CHECK(pick.valid_accuracy == 100.0);
}

TEST_CASE("model selection input validation") {
  std::vector<int> y = alternating_labels(10);
  SplitPlan plan = handmade_plan();
  std::vector<double> c_grid = {1.0};

  std::vector<GramMatrix> one;
  one.push_back(indicator_gram(y));
  std::vector<int> two_depths = {0, 1};
  CHECK_THROWS_WITH_AS(gkd::model_select(one, two_depths, y, plan, c_grid),
                       "need one Gram matrix per depth value", std::invalid_argument);
  CHECK_THROWS_WITH_AS(gkd::model_select({}, {}, y, plan, c_grid),
                       "need one Gram matrix per depth value", std::invalid_argument);

  std::vector<int> one_depth = {0};
  CHECK_THROWS_WITH_AS(gkd::model_select(one, one_depth, y, plan, {}), "empty C grid",
                       std::invalid_argument);

  std::vector<int> ternary = y;
  ternary[3] = 2;
  CHECK_THROWS_WITH_AS(gkd::model_select(one, one_depth, ternary, plan, c_grid),
                       "experiment labels must be +1/-1 (binary datasets only)",
                       std::invalid_argument);

  SplitPlan lopsided;
  lopsided.seed = 123;
  lopsided.train = {0, 2, 4, 6};  // alternating labels: all +1
  lopsided.valid = {8, 9};
  CHECK_THROWS_WITH_AS(gkd::model_select(one, one_depth, y, lopsided, c_grid),
                       "degenerate split: train fold of seed 123 has a single class",
                       std::invalid_argument);
}

TEST_CASE("the full protocol is deterministic on a separable toy set") {
  std::vector<LabeledDigraph> graphs;
  std::vector<int> y;
  gkdtest::toy_dataset(labels(), 10, graphs, y);
  REQUIRE(graphs.size() == 20);

  KernelSpec spec;
  spec.base = BaseKernel::kWl;
  spec.variant = GraphVariant::kPlain;

  ExperimentConfig config;
  config.seeds = {11, 12, 13};
  config.c_grid = {0.1, 10.0};
  config.h_grid = {1, 2};
  config.threads = 1;

  EvalReport first = gkd::run_experiment(graphs, y, spec, config);
  REQUIRE(first.per_seed.size() == 3);
  double sum = 0.0;
  for (std::size_t s = 0; s < first.per_seed.size(); ++s) {
    const SeedResult& r = first.per_seed[s];
    CHECK(r.seed == config.seeds[s]);
    CHECK((r.h == 1 || r.h == 2));
    CHECK((r.c == 0.1 || r.c == 10.0));
    sum += r.test_accuracy;
  }
  CHECK(first.mean == doctest::Approx(sum / 3.0));
  CHECK(first.mean >= 80.0);

  EvalReport second = gkd::run_experiment(graphs, y, spec, config);
  CHECK(gkd::format_report(first) == gkd::format_report(second));

  // duplicated depths collapse to the same grid
  ExperimentConfig shuffled = config;
  shuffled.h_grid = {2, 1, 2, 1};
  EvalReport third = gkd::run_experiment(graphs, y, spec, shuffled);
  CHECK(gkd::format_report(first) == gkd::format_report(third));
}

TEST_CASE("depthless kernels run without a depth grid and report none") {
  std::vector<LabeledDigraph> graphs;
  std::vector<int> y;
  gkdtest::toy_dataset(labels(), 10, graphs, y);

  KernelSpec spec;
  spec.base = BaseKernel::kSp;
  spec.variant = GraphVariant::kPlain;

  ExperimentConfig config;
  config.seeds = {5, 6};
  config.c_grid = {1.0};
  config.threads = 1;  // h_grid stays empty: shortest-path has no depth

  EvalReport report = gkd::run_experiment(graphs, y, spec, config);
  REQUIRE(report.per_seed.size() == 2);
  for (const SeedResult& r : report.per_seed) CHECK(r.h == -1);
  CHECK(gkd::format_report(report).find(" h=") == std::string::npos);
  CHECK(report.mean >= 50.0);
}

TEST_CASE("experiment configuration defaults") {
  ExperimentConfig cfg = ExperimentConfig::defaults();

  REQUIRE(cfg.seeds.size() == 10);
  CHECK(cfg.seeds.front() == 2020);
  CHECK(cfg.seeds.back() == 2029);

  REQUIRE(cfg.c_grid.size() == 11);
  CHECK(cfg.c_grid.front() == doctest::Approx(1e-7));
  CHECK(cfg.c_grid.back() == doctest::Approx(1e3));
  for (std::size_t i = 1; i < cfg.c_grid.size(); ++i)
    CHECK(cfg.c_grid[i] == doctest::Approx(10.0 * cfg.c_grid[i - 1]));

  CHECK(cfg.h_grid == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(cfg.threads == 0);
}

TEST_CASE("experiment input validation") {
  std::vector<LabeledDigraph> graphs;
  std::vector<int> y;
  gkdtest::toy_dataset(labels(), 1, graphs, y);

  KernelSpec spec;
  spec.base = BaseKernel::kWl;

  ExperimentConfig config;
  config.seeds = {1};
  config.c_grid = {1.0};
  config.h_grid = {0};

  std::vector<int> longer = {1, -1, 1};
  CHECK_THROWS_WITH_AS(gkd::run_experiment(graphs, longer, spec, config),
                       "label count does not match graph count", std::invalid_argument);

  std::vector<int> ternary = {1, 3};
  CHECK_THROWS_WITH_AS(gkd::run_experiment(graphs, ternary, spec, config),
                       "experiment labels must be +1/-1 (binary datasets only)",
                       std::invalid_argument);

  ExperimentConfig broken = config;
  broken.seeds = {};
  CHECK_THROWS_WITH_AS(gkd::run_experiment(graphs, y, spec, broken), "empty seed list",
                       std::invalid_argument);

  broken = config;
  broken.c_grid = {};
  CHECK_THROWS_WITH_AS(gkd::run_experiment(graphs, y, spec, broken), "empty C grid",
                       std::invalid_argument);

  broken = config;
  broken.h_grid = {};
  CHECK_THROWS_WITH_AS(gkd::run_experiment(graphs, y, spec, broken), "empty depth grid",
                       std::invalid_argument);

  broken = config;
  broken.h_grid = {-1, 0};
  CHECK_THROWS_WITH_AS(gkd::run_experiment(graphs, y, spec, broken), "negative depth in grid",
                       std::invalid_argument);

  // a malformed kernel spec surfaces before any data is touched
  KernelSpec bad = spec;
  bad.extended = true;
  CHECK_THROWS_AS(gkd::run_experiment(graphs, y, bad, config), std::invalid_argument);

  // two graphs cannot fill three folds
  CHECK_THROWS_WITH_AS(gkd::run_experiment(graphs, y, spec, config),
                       "need at least 10 items to split 80/10/10", std::invalid_argument);
}

TEST_CASE("report formatting is fixed") {
  EvalReport report;
  report.per_seed.push_back(SeedResult{7, 0.1, 2, 91.5, 88.25});
  report.per_seed.push_back(SeedResult{2020, 1e-7, -1, 50.0, 42.0});
  report.mean = 65.125;
  report.stddev = 32.7;

  CHECK(gkd::format_report(report) ==
        "seed=7 C=0.1 h=2 valid=91.5000 test=88.2500\n"
        "seed=2020 C=1e-07 valid=50.0000 test=42.0000\n"
        "mean=65.1250 std=32.7000\n");

  EvalReport empty;
  CHECK(gkd::format_report(empty) == "mean=0.0000 std=0.0000\n");
}
