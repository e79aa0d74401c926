#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gkd/features.hpp"
#include "gkd/graph.hpp"
#include "gkd/transform.hpp"

namespace gkd {

enum class BaseKernel { kWl, kWloa, kSp, kGr3 };
enum class GraphVariant { kPlain, kDummyAugmented, kEdgeToVertex };

const char* to_string(BaseKernel k);
const char* to_string(GraphVariant v);

// Which kernel to evaluate and on which form of the inputs. `extended` adds
// the same base kernel evaluated on the untransformed pair, the usual way to
// combine a transformed view with the original graphs; the two addends are
// normalized by their own self-kernels first unless normalize_addends is off
// (then the raw sums are only normalized at the Gram level).
struct KernelSpec {
  BaseKernel base = BaseKernel::kWl;
  int iterations = 5;  // refinement rounds for kWl/kWloa; ignored otherwise
  GraphVariant variant = GraphVariant::kPlain;
  bool extended = false;
  bool normalize_addends = true;

  // Throws std::invalid_argument on inconsistent combinations
  // (extended with the plain variant, negative iterations).
  void check() const;
  std::string summary() const;
};

// Dense symmetric kernel matrix.
class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(std::size_t n, double fill = 0.0)
      : n_(n), values_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  double at(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  double& at(std::size_t i, std::size_t j) { return values_[i * n_ + j]; }
  const std::vector<double>& values() const noexcept { return values_; }

  bool normalized() const noexcept { return normalized_; }
  void set_normalized(bool v) noexcept { normalized_ = v; }
  const std::string& spec_summary() const noexcept { return spec_summary_; }
  void set_spec_summary(std::string s) { spec_summary_ = std::move(s); }

  double trace() const;
  bool is_symmetric() const;

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
  bool normalized_ = false;
  std::string spec_summary_;
};

// Applies the input variant. For kEdgeToVertex an edgeless graph becomes the
// single dummy vertex (with a warning on stderr) instead of an error, so
// dataset pipelines survive degenerate graphs.
LabeledDigraph apply_variant(const LabeledDigraph& g, GraphVariant variant);

// Base kernel value on the variant-transformed pair.
double base_kernel(const KernelSpec& spec, const LabeledDigraph& g1, const LabeledDigraph& g2);

// base kernel on the plain pair + base kernel on the variant pair, each
// addend normalized per spec.normalize_addends. Requires spec.extended.
double extended_kernel(const KernelSpec& spec, const LabeledDigraph& g1,
                       const LabeledDigraph& g2);

// extended_kernel or base_kernel depending on spec.extended.
double kernel_value(const KernelSpec& spec, const LabeledDigraph& g1, const LabeledDigraph& g2);

// Pairwise kernel matrix over the list; entry (i,j) equals
// kernel_value(spec, g[i], g[j]). Exactly symmetric by construction.
// threads <= 0 picks the GKD_THREADS env var or the hardware default.
GramMatrix gram_matrix(std::span<const LabeledDigraph> graphs, const KernelSpec& spec,
                       int threads = 0);

// Cosine normalization: out[i][j] = in[i][j] / sqrt(in[i][i] * in[j][j]),
// with rows/columns of zero-diagonal entries zeroed and the diagonal set to
// exactly 1 (or 0). Requires a symmetric input.
GramMatrix normalize_gram(const GramMatrix& m);

// Incremental Gram computation over refinement depths: features are
// extracted once, and the pair matrix for depth h reuses all work done for
// depth h-1. raw(h)/normalized(h) must be called with nondecreasing h.
// For kSp/kGr3 only h = 0 exists.
class GramSeries {
 public:
  GramSeries(std::span<const LabeledDigraph> graphs, const KernelSpec& spec,
             int max_iterations, int threads = 0);

  int max_iterations() const noexcept { return max_iterations_; }
  GramMatrix raw(int h);
  GramMatrix normalized(int h);

 private:
  void advance(int h);
  void accumulate(std::vector<double>& sums,
                  const std::vector<std::vector<FeatureVector>>& blocks, int t);

  KernelSpec spec_;
  std::size_t n_ = 0;
  int max_iterations_ = 0;
  int current_ = -1;
  int threads_ = 0;
  bool intersect_ = false;
  // blocks[graph][t]; plain addend only present for extended specs
  std::vector<std::vector<FeatureVector>> variant_blocks_;
  std::vector<std::vector<FeatureVector>> plain_blocks_;
  std::vector<double> variant_sums_;
  std::vector<double> plain_sums_;
};

// Resolved worker count: explicit argument, else GKD_THREADS, else hardware.
int resolve_threads(int requested);

}  // namespace gkd
