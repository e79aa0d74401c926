#include "gkd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gkd {

const char* to_string(BaseKernel k) {
  switch (k) {
    case BaseKernel::kWl: return "wl";
    case BaseKernel::kWloa: return "wloa";
    case BaseKernel::kSp: return "sp";
    case BaseKernel::kGr3: return "gr";
  }
  return "?";
}

const char* to_string(GraphVariant v) {
  switch (v) {
    case GraphVariant::kPlain: return "plain";
    case GraphVariant::kDummyAugmented: return "gphi";
    case GraphVariant::kEdgeToVertex: return "hphi";
  }
  return "?";
}

void KernelSpec::check() const {
  if (iterations < 0) throw std::invalid_argument("negative iteration count");
  if (extended && variant == GraphVariant::kPlain)
    throw std::invalid_argument("extended kernel needs a non-plain variant");
}

std::string KernelSpec::summary() const {
  std::ostringstream out;
  out << "base=" << to_string(base);
  if (base == BaseKernel::kWl || base == BaseKernel::kWloa) out << " h=" << iterations;
  out << " variant=" << to_string(variant) << " extended=" << (extended ? 1 : 0);
  if (extended) out << " addend_norm=" << (normalize_addends ? 1 : 0);
  return out.str();
}

double GramMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

bool GramMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GKD_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Runs fn(begin, end) over [0, count) split across workers. Chunks are fixed
// by index, so results are placement-deterministic regardless of scheduling.
void parallel_chunks(std::size_t count, int threads,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (threads <= 1 || count < 2) {
    fn(0, count);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::size_t begin = chunk * static_cast<std::size_t>(t);
    std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (std::thread& th : pool) th.join();
}

LabeledDigraph single_dummy_graph() {
  GraphBuilder b;
  b.add_vertex(0, LabelSet::single(kDummyVertexLabel));
  return b.build();
}

}  // namespace

LabeledDigraph apply_variant(const LabeledDigraph& g, GraphVariant variant) {
  switch (variant) {
    case GraphVariant::kPlain:
      return g;
    case GraphVariant::kDummyAugmented:
      return augment_dummy(g);
    case GraphVariant::kEdgeToVertex:
      if (g.edge_count() == 0) {
        std::cerr << "warning: graph without edges; its transformed form is the "
                     "lone dummy vertex\n";
        return single_dummy_graph();
      }
      return edge_to_vertex(g);
  }
  throw std::invalid_argument("unknown graph variant");
}

namespace {

std::vector<FeatureVector> extract_blocks(const LabeledDigraph& g, const KernelSpec& spec,
                                          Interner& dict) {
  switch (spec.base) {
    case BaseKernel::kWl:
    case BaseKernel::kWloa:
      return wl_feature_blocks(g, spec.iterations, dict);
    case BaseKernel::kSp:
      return {sp_features(g, dict)};
    case BaseKernel::kGr3:
      return {gr_features(g, dict)};
  }
  throw std::invalid_argument("unknown base kernel");
}

double combine_blocks(const std::vector<FeatureVector>& a, const std::vector<FeatureVector>& b,
                      bool intersect) {
  double sum = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t)
    sum += intersect ? intersection(a[t], b[t]) : dot(a[t], b[t]);
  return sum;
}

double normalized_addend(double value, double self1, double self2) {
  if (self1 <= 0.0 || self2 <= 0.0) return 0.0;
  return value / std::sqrt(self1 * self2);
}

}  // namespace

double base_kernel(const KernelSpec& spec, const LabeledDigraph& g1, const LabeledDigraph& g2) {
  spec.check();
  LabeledDigraph a = apply_variant(g1, spec.variant);
  LabeledDigraph b = apply_variant(g2, spec.variant);
  Interner dict;
  auto ba = extract_blocks(a, spec, dict);
  auto bb = extract_blocks(b, spec, dict);
  return combine_blocks(ba, bb, spec.base == BaseKernel::kWloa);
}

double extended_kernel(const KernelSpec& spec, const LabeledDigraph& g1,
                       const LabeledDigraph& g2) {
  spec.check();
  if (!spec.extended) throw std::invalid_argument("spec is not extended");

  const bool intersect = spec.base == BaseKernel::kWloa;
  Interner dict;
  auto p1 = extract_blocks(g1, spec, dict);
  auto p2 = extract_blocks(g2, spec, dict);
  LabeledDigraph t1 = apply_variant(g1, spec.variant);
  LabeledDigraph t2 = apply_variant(g2, spec.variant);
  auto v1 = extract_blocks(t1, spec, dict);
  auto v2 = extract_blocks(t2, spec, dict);

  double plain = combine_blocks(p1, p2, intersect);
  double variant = combine_blocks(v1, v2, intersect);
  if (!spec.normalize_addends) return plain + variant;
  return normalized_addend(plain, combine_blocks(p1, p1, intersect),
                           combine_blocks(p2, p2, intersect)) +
         normalized_addend(variant, combine_blocks(v1, v1, intersect),
                           combine_blocks(v2, v2, intersect));
}

double kernel_value(const KernelSpec& spec, const LabeledDigraph& g1, const LabeledDigraph& g2) {
  return spec.extended ? extended_kernel(spec, g1, g2) : base_kernel(spec, g1, g2);
}

GramMatrix normalize_gram(const GramMatrix& m) {
  if (!m.is_symmetric()) throw GraphError("cannot normalize an asymmetric matrix");
  const std::size_t n = m.size();
  std::vector<double> scale(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double d = m.at(i, i);
    if (d < 0.0) throw GraphError("negative diagonal entry in kernel matrix");
    scale[i] = d > 0.0 ? 1.0 / std::sqrt(d) : 0.0;
  }
  GramMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.at(i, i) = m.at(i, i) > 0.0 ? 1.0 : 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      // computed once and mirrored so the result is symmetric to the bit
      double v = m.at(i, j) * (scale[i] * scale[j]);
      out.at(i, j) = v;
      out.at(j, i) = v;
    }
  }
  out.set_normalized(true);
  out.set_spec_summary(m.spec_summary());
  return out;
}

GramSeries::GramSeries(std::span<const LabeledDigraph> graphs, const KernelSpec& spec,
                       int max_iterations, int threads)
    : spec_(spec), n_(graphs.size()), threads_(resolve_threads(threads)) {
  spec_.check();
  if (max_iterations < 0) throw std::invalid_argument("negative iteration count");
  const bool refined = spec.base == BaseKernel::kWl || spec.base == BaseKernel::kWloa;
  max_iterations_ = refined ? max_iterations : 0;
  intersect_ = spec.base == BaseKernel::kWloa;

  KernelSpec extraction = spec_;
  extraction.iterations = max_iterations_;

  Interner dict;
  variant_blocks_.resize(n_);
  if (spec_.extended) plain_blocks_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    LabeledDigraph t = [&] {
      try {
        return apply_variant(graphs[i], spec_.variant);
      } catch (const GraphError& e) {
        throw GraphError("graph " + std::to_string(i) + ": " + e.what());
      }
    }();
    variant_blocks_[i] = extract_blocks(t, extraction, dict);
    if (spec_.extended) plain_blocks_[i] = extract_blocks(graphs[i], extraction, dict);
  }

  variant_sums_.assign(n_ * n_, 0.0);
  if (spec_.extended) plain_sums_.assign(n_ * n_, 0.0);
}

void GramSeries::accumulate(std::vector<double>& sums,
                            const std::vector<std::vector<FeatureVector>>& blocks, int t) {
  // Upper triangle only; mirrored on read. Pairs are split row-wise across
  // workers writing disjoint entries.
  parallel_chunks(n_, threads_, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const FeatureVector& bi = blocks[i][static_cast<std::size_t>(t)];
      for (std::size_t j = i; j < n_; ++j) {
        const FeatureVector& bj = blocks[j][static_cast<std::size_t>(t)];
        sums[i * n_ + j] += intersect_ ? intersection(bi, bj) : dot(bi, bj);
      }
    }
  });
}

void GramSeries::advance(int h) {
  if (h < 0 || h > max_iterations_)
    throw std::invalid_argument("iteration count outside the computed range");
  if (h < current_) throw std::invalid_argument("GramSeries only advances forward");
  for (int t = current_ + 1; t <= h; ++t) {
    accumulate(variant_sums_, variant_blocks_, t);
    if (spec_.extended) accumulate(plain_sums_, plain_blocks_, t);
  }
  current_ = std::max(current_, h);
}

GramMatrix GramSeries::raw(int h) {
  advance(h);
  KernelSpec reported = spec_;
  reported.iterations = h;

  GramMatrix out(n_);
  auto upper = [this](const std::vector<double>& sums, std::size_t i, std::size_t j) {
    return i <= j ? sums[i * n_ + j] : sums[j * n_ + i];
  };
  if (!spec_.extended) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out.at(i, j) = upper(variant_sums_, i, j);
  } else if (!spec_.normalize_addends) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        out.at(i, j) = upper(plain_sums_, i, j) + upper(variant_sums_, i, j);
  } else {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        out.at(i, j) =
            normalized_addend(upper(plain_sums_, i, j), upper(plain_sums_, i, i),
                              upper(plain_sums_, j, j)) +
            normalized_addend(upper(variant_sums_, i, j), upper(variant_sums_, i, i),
                              upper(variant_sums_, j, j));
      }
    }
  }
  out.set_spec_summary(reported.summary());
  return out;
}

GramMatrix GramSeries::normalized(int h) { return normalize_gram(raw(h)); }

GramMatrix gram_matrix(std::span<const LabeledDigraph> graphs, const KernelSpec& spec,
                       int threads) {
  spec.check();
  GramSeries series(graphs, spec, spec.iterations, threads);
  return series.raw(spec.base == BaseKernel::kWl || spec.base == BaseKernel::kWloa
                        ? spec.iterations
                        : 0);
}

}  // namespace gkd
