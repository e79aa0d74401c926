#include "gkd/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gkd {

namespace {

constexpr double kTau = 1e-12;

void check_inputs(const std::vector<double>& kernel, std::size_t n,
                  std::span<const int> labels, double c) {
  if (n == 0) throw SvmError("empty training set");
  if (kernel.size() != n * n) throw SvmError("kernel matrix size mismatch");
  if (labels.size() != n) throw SvmError("label count mismatch");
  if (!(c > 0.0) || !std::isfinite(c)) throw SvmError("C must be positive and finite");
  bool pos = false, neg = false;
  for (int y : labels) {
    if (y == 1) pos = true;
    else if (y == -1) neg = true;
    else throw SvmError("labels must be +1 or -1");
  }
  if (!pos || !neg) throw SvmError("training set needs both classes");
  for (double v : kernel)
    if (!std::isfinite(v)) throw SvmError("kernel matrix has a non-finite entry");
}

}  // namespace

SvmModel svm_train(const std::vector<double>& kernel, std::size_t n,
                   std::span<const int> labels, double c, const SvmOptions& options) {
  check_inputs(kernel, n, labels, c);

  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = labels[i] > 0 ? 1.0 : -1.0;

  std::vector<double> alpha(n, 0.0);
  // gradient of 1/2 a'Qa - e'a with Q_ij = y_i y_j K_ij; starts at -e
  std::vector<double> grad(n, -1.0);

  auto q = [&](std::size_t i, std::size_t j) { return y[i] * y[j] * kernel[i * n + j]; };

  std::size_t iter = 0;
  while (true) {
    if (options.trace) {
      double objective = 0.0;
      for (std::size_t t = 0; t < n; ++t) objective += alpha[t] * (1.0 - 0.5 * (grad[t] + 1.0));
      options.trace(iter, objective);
    }

    // maximal violating pair: i maximizes -y*grad over I_up,
    //                         j minimizes -y*grad over I_low
    std::size_t i = n, j = n;
    double gmax = -std::numeric_limits<double>::infinity();
    double gmin = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      bool in_up = (y[t] > 0 && alpha[t] < c) || (y[t] < 0 && alpha[t] > 0);
      bool in_low = (y[t] > 0 && alpha[t] > 0) || (y[t] < 0 && alpha[t] < c);
      double v = -y[t] * grad[t];
      if (in_up && v > gmax) {
        gmax = v;
        i = t;
      }
      if (in_low && v < gmin) {
        gmin = v;
        j = t;
      }
    }
    if (i == n || j == n || gmax - gmin <= options.tolerance) break;
    if (iter >= options.max_iterations)
      throw SvmError("solver did not converge within " +
                     std::to_string(options.max_iterations) + " iterations");
    ++iter;

    // Two-variable subproblem on (i, j), clipped to the box while keeping
    // y_i a_i + y_j a_j fixed.
    double old_ai = alpha[i], old_aj = alpha[j];
    if (y[i] != y[j]) {
      double quad = q(i, i) + q(j, j) + 2.0 * q(i, j);
      if (quad <= 0.0) quad = kTau;
      double delta = (-grad[i] - grad[j]) / quad;
      double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0.0) {
        if (alpha[j] < 0.0) {
          alpha[j] = 0.0;
          alpha[i] = diff;
        }
      } else {
        if (alpha[i] < 0.0) {
          alpha[i] = 0.0;
          alpha[j] = -diff;
        }
      }
      if (diff > 0.0) {
        if (alpha[i] > c) {
          alpha[i] = c;
          alpha[j] = c - diff;
        }
      } else {
        if (alpha[j] > c) {
          alpha[j] = c;
          alpha[i] = c + diff;
        }
      }
    } else {
      double quad = q(i, i) + q(j, j) - 2.0 * q(i, j);
      if (quad <= 0.0) quad = kTau;
      double delta = (grad[i] - grad[j]) / quad;
      double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > c) {
        if (alpha[i] > c) {
          alpha[i] = c;
          alpha[j] = sum - c;
        }
      } else {
        if (alpha[j] < 0.0) {
          alpha[j] = 0.0;
          alpha[i] = sum;
        }
      }
      if (sum > c) {
        if (alpha[j] > c) {
          alpha[j] = c;
          alpha[i] = sum - c;
        }
      } else {
        if (alpha[i] < 0.0) {
          alpha[i] = 0.0;
          alpha[j] = sum;
        }
      }
    }

    double dai = alpha[i] - old_ai;
    double daj = alpha[j] - old_aj;
    for (std::size_t t = 0; t < n; ++t) grad[t] += q(t, i) * dai + q(t, j) * daj;
  }

  // Bias from the KKT conditions: average over free points when possible,
  // midpoint of the feasible interval otherwise.
  double upper = std::numeric_limits<double>::infinity();
  double lower = -std::numeric_limits<double>::infinity();
  double free_sum = 0.0;
  std::size_t free_count = 0;
  for (std::size_t t = 0; t < n; ++t) {
    double yg = y[t] * grad[t];
    if (alpha[t] >= c) {
      if (y[t] < 0) upper = std::min(upper, yg);
      else lower = std::max(lower, yg);
    } else if (alpha[t] <= 0.0) {
      if (y[t] > 0) upper = std::min(upper, yg);
      else lower = std::max(lower, yg);
    } else {
      ++free_count;
      free_sum += yg;
    }
  }
  double rho = free_count > 0 ? free_sum / static_cast<double>(free_count)
                              : (upper + lower) / 2.0;

  SvmModel model;
  model.alphas = std::move(alpha);
  model.labels.resize(n);
  for (std::size_t t = 0; t < n; ++t) model.labels[t] = labels[t] > 0 ? 1 : -1;
  model.bias = -rho;
  model.c = c;
  model.iterations = iter;
  for (std::size_t t = 0; t < n; ++t)
    if (model.alphas[t] > 0.0) model.support.push_back(t);
  return model;
}

double svm_decision(const SvmModel& model, std::span<const double> kernel_row) {
  if (kernel_row.size() != model.alphas.size())
    throw SvmError("kernel row length does not match the training set");
  double sum = model.bias;
  for (std::size_t t : model.support)
    sum += model.alphas[t] * static_cast<double>(model.labels[t]) * kernel_row[t];
  return sum;
}

int svm_predict(const SvmModel& model, std::span<const double> kernel_row) {
  return svm_decision(model, kernel_row) >= 0.0 ? 1 : -1;
}

double dual_objective(const std::vector<double>& kernel, std::size_t n,
                      std::span<const int> labels, std::span<const double> alphas) {
  double linear = 0.0, quad = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    linear += alphas[i];
    for (std::size_t j = 0; j < n; ++j)
      quad += alphas[i] * alphas[j] * labels[i] * labels[j] * kernel[i * n + j];
  }
  return linear - 0.5 * quad;
}

}  // namespace gkd
