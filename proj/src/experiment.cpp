#include "gkd/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

#include "gkd/rng.hpp"

namespace gkd {

SplitPlan make_splits(std::size_t n, std::uint64_t seed) {
  if (n < 10) throw std::invalid_argument("need at least 10 items to split 80/10/10");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i)
    std::swap(order[i], order[rng.next_below(i + 1)]);

  const std::size_t fold = n / 10;
  SplitPlan plan;
  plan.seed = seed;
  plan.train.assign(order.begin(), order.end() - 2 * fold);
  plan.valid.assign(order.end() - 2 * fold, order.end() - fold);
  plan.test.assign(order.end() - fold, order.end());
  std::sort(plan.train.begin(), plan.train.end());
  std::sort(plan.valid.begin(), plan.valid.end());
  std::sort(plan.test.begin(), plan.test.end());
  return plan;
}

ExperimentConfig ExperimentConfig::defaults() {
  ExperimentConfig cfg;
  for (std::uint64_t s = 2020; s <= 2029; ++s) cfg.seeds.push_back(s);
  for (int p = -7; p <= 3; ++p) cfg.c_grid.push_back(std::pow(10.0, p));
  for (int h = 0; h <= 5; ++h) cfg.h_grid.push_back(h);
  return cfg;
}

namespace {

struct FoldContext {
  std::vector<double> train_kernel;  // contiguous train x train
  std::vector<int> train_labels;

  FoldContext(const GramMatrix& gram, std::span<const int> labels,
              std::span<const std::size_t> train) {
    const std::size_t k = train.size();
    train_kernel.resize(k * k);
    train_labels.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
      train_labels[a] = labels[train[a]];
      for (std::size_t b = 0; b < k; ++b)
        train_kernel[a * k + b] = gram.at(train[a], train[b]);
    }
  }

  double accuracy(const GramMatrix& gram, std::span<const int> labels,
                  std::span<const std::size_t> train, std::span<const std::size_t> eval,
                  double c, const SvmOptions& options) const {
    SvmModel model = svm_train(train_kernel, train_labels.size(), train_labels, c, options);
    std::vector<double> row(train.size());
    std::size_t hits = 0;
    for (std::size_t e : eval) {
      for (std::size_t a = 0; a < train.size(); ++a) row[a] = gram.at(e, train[a]);
      if (svm_predict(model, row) == labels[e]) ++hits;
    }
    return eval.empty() ? 0.0 : 100.0 * static_cast<double>(hits) / static_cast<double>(eval.size());
  }
};

// Grid row ordering shared by model_select and run_experiment: higher
// validation accuracy wins, ties prefer smaller C, then smaller depth.
struct GridRow {
  double c = 0.0;
  int h = 0;
  double valid_accuracy = 0.0;
  double test_accuracy = 0.0;
};

bool better(const GridRow& a, const GridRow& b) {
  if (a.valid_accuracy != b.valid_accuracy) return a.valid_accuracy > b.valid_accuracy;
  if (a.c != b.c) return a.c < b.c;
  return a.h < b.h;
}

void check_binary(std::span<const int> labels) {
  for (int y : labels)
    if (y != 1 && y != -1)
      throw std::invalid_argument("experiment labels must be +1/-1 (binary datasets only)");
}

void check_not_degenerate(std::span<const int> labels, std::span<const std::size_t> train,
                          std::uint64_t seed) {
  bool pos = false, neg = false;
  for (std::size_t i : train) (labels[i] > 0 ? pos : neg) = true;
  if (!pos || !neg)
    throw std::invalid_argument("degenerate split: train fold of seed " +
                                std::to_string(seed) + " has a single class");
}

}  // namespace

double fold_accuracy(const GramMatrix& gram, std::span<const int> labels,
                     std::span<const std::size_t> train, std::span<const std::size_t> eval,
                     double c, const SvmOptions& options) {
  FoldContext ctx(gram, labels, train);
  return ctx.accuracy(gram, labels, train, eval, c, options);
}

SelectionResult model_select(std::span<const GramMatrix> grams, std::span<const int> h_values,
                             std::span<const int> labels, const SplitPlan& plan,
                             std::span<const double> c_grid) {
  if (grams.empty() || grams.size() != h_values.size())
    throw std::invalid_argument("need one Gram matrix per depth value");
  if (c_grid.empty()) throw std::invalid_argument("empty C grid");
  check_binary(labels);
  check_not_degenerate(labels, plan.train, plan.seed);

  GridRow best;
  bool first = true;
  for (std::size_t k = 0; k < grams.size(); ++k) {
    FoldContext ctx(grams[k], labels, plan.train);
    for (double c : c_grid) {
      GridRow row{c, h_values[k],
                  ctx.accuracy(grams[k], labels, plan.train, plan.valid, c, {}), 0.0};
      if (first || better(row, best)) {
        best = row;
        first = false;
      }
    }
  }
  return SelectionResult{best.c, best.h, best.valid_accuracy};
}

EvalReport run_experiment(std::span<const LabeledDigraph> graphs, std::span<const int> labels,
                          const KernelSpec& spec, const ExperimentConfig& config) {
  spec.check();
  if (graphs.size() != labels.size())
    throw std::invalid_argument("label count does not match graph count");
  check_binary(labels);
  if (config.seeds.empty()) throw std::invalid_argument("empty seed list");
  if (config.c_grid.empty()) throw std::invalid_argument("empty C grid");

  const bool refined = spec.base == BaseKernel::kWl || spec.base == BaseKernel::kWloa;
  std::vector<int> h_values;
  if (refined) {
    if (config.h_grid.empty()) throw std::invalid_argument("empty depth grid");
    std::set<int> dedup(config.h_grid.begin(), config.h_grid.end());
    h_values.assign(dedup.begin(), dedup.end());
    if (h_values.front() < 0) throw std::invalid_argument("negative depth in grid");
  } else {
    h_values.push_back(-1);
  }

  std::vector<SplitPlan> plans;
  for (std::uint64_t seed : config.seeds) {
    plans.push_back(make_splits(graphs.size(), seed));
    check_not_degenerate(labels, plans.back().train, seed);
  }

  // One streamed pass per depth: the series carries feature blocks forward,
  // so depth h+1 costs only its own block. Models are trained on the train
  // fold only; test rows are scored on the same models, and the test number
  // actually reported is looked up after selection freezes (C, depth).
  GramSeries series(graphs, spec, refined ? h_values.back() : 0, config.threads);
  std::vector<std::vector<GridRow>> rows(config.seeds.size());
  for (int h : h_values) {
    GramMatrix gram = series.normalized(refined ? h : 0);
    for (std::size_t s = 0; s < plans.size(); ++s) {
      const SplitPlan& plan = plans[s];
      FoldContext ctx(gram, labels, plan.train);
      for (double c : config.c_grid) {
        GridRow row;
        row.c = c;
        row.h = h;
        row.valid_accuracy = ctx.accuracy(gram, labels, plan.train, plan.valid, c, {});
        row.test_accuracy = ctx.accuracy(gram, labels, plan.train, plan.test, c, {});
        rows[s].push_back(row);
      }
    }
  }

  EvalReport report;
  for (std::size_t s = 0; s < plans.size(); ++s) {
    const GridRow* best = &rows[s].front();
    for (const GridRow& row : rows[s])
      if (better(row, *best)) best = &row;
    report.per_seed.push_back(SeedResult{config.seeds[s], best->c, best->h,
                                         best->valid_accuracy, best->test_accuracy});
  }

  double mean = 0.0;
  for (const SeedResult& r : report.per_seed) mean += r.test_accuracy;
  mean /= static_cast<double>(report.per_seed.size());
  double var = 0.0;
  for (const SeedResult& r : report.per_seed) {
    double d = r.test_accuracy - mean;
    var += d * d;
  }
  report.mean = mean;
  report.stddev = report.per_seed.size() > 1
                      ? std::sqrt(var / static_cast<double>(report.per_seed.size() - 1))
                      : 0.0;
  return report;
}

std::string format_report(const EvalReport& report) {
  std::ostringstream out;
  char buf[160];
  for (const SeedResult& r : report.per_seed) {
    if (r.h >= 0)
      std::snprintf(buf, sizeof buf, "seed=%llu C=%g h=%d valid=%.4f test=%.4f\n",
                    static_cast<unsigned long long>(r.seed), r.c, r.h, r.valid_accuracy,
                    r.test_accuracy);
    else
      std::snprintf(buf, sizeof buf, "seed=%llu C=%g valid=%.4f test=%.4f\n",
                    static_cast<unsigned long long>(r.seed), r.c, r.valid_accuracy,
                    r.test_accuracy);
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "mean=%.4f std=%.4f\n", report.mean, report.stddev);
  out << buf;
  return out.str();
}

}  // namespace gkd
