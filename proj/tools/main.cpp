// Command-line front end: graph file transforms, dataset statistics, Gram
// matrix computation, and the SVM evaluation protocol.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gkd/dataset_io.hpp"
#include "gkd/experiment.hpp"
#include "gkd/graph.hpp"
#include "gkd/kernels.hpp"
#include "gkd/rng.hpp"
#include "gkd/svm.hpp"
#include "gkd/transform.hpp"

namespace {

using namespace gkd;

// "5", "0..5", or comma-separated mixtures of both, all inclusive.
std::vector<std::int64_t> parse_range_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t dots = token.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoll(token));
      } else {
        std::int64_t lo = std::stoll(token.substr(0, dots));
        std::int64_t hi = std::stoll(token.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("descending range");
        for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad range token '" + token + "' in '" + text + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty range list '" + text + "'");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      out.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number '" + token + "' in '" + text + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty number list '" + text + "'");
  return out;
}

GraphVariant parse_variant(const std::string& name) {
  if (name == "plain" || name == "g") return GraphVariant::kPlain;
  if (name == "gphi") return GraphVariant::kDummyAugmented;
  if (name == "hphi") return GraphVariant::kEdgeToVertex;
  throw std::invalid_argument("unknown variant '" + name + "'");
}

BaseKernel parse_kernel(const std::string& name) {
  if (name == "wl") return BaseKernel::kWl;
  if (name == "wloa") return BaseKernel::kWloa;
  if (name == "sp") return BaseKernel::kSp;
  if (name == "gr") return BaseKernel::kGr3;
  throw std::invalid_argument("unknown kernel '" + name + "'");
}

struct DataArgs {
  std::string dataset_dir;
  std::string dataset_name;
  std::vector<std::string> graph_files;
};

// Loads either the named dataset or the listed graph files (as a dataset
// with no class labels). Exactly one source must be present.
Dataset load_input(const DataArgs& args) {
  if (!args.dataset_dir.empty()) {
    return load_tudataset(args.dataset_dir, args.dataset_name);
  }
  Dataset ds;
  ds.name = "files";
  for (const std::string& path : args.graph_files)
    ds.graphs.push_back(read_graph(path, ds.labels));
  return ds;
}

void add_data_options(CLI::App* sub, DataArgs& args, bool allow_files) {
  auto* dir = sub->add_option("--dataset", args.dataset_dir,
                              "directory holding the benchmark files");
  auto* name = sub->add_option("--name", args.dataset_name, "dataset name (file prefix)");
  dir->needs(name);
  name->needs(dir);
  if (allow_files) {
    auto* files =
        sub->add_option("--in", args.graph_files, "graph file(s) in the plain text format");
    files->excludes(dir);
    dir->excludes(files);
  }
}

int require_input(const DataArgs& args) {
  if (args.dataset_dir.empty() && args.graph_files.empty()) {
    std::cerr << "error: no input; pass --dataset/--name or --in\n";
    return 2;
  }
  return 0;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path);
}

// ---- transform ----

int run_transform(const std::string& op, const std::string& in, const std::string& out) {
  LabelDictionary dict;
  LabeledDigraph g = read_graph(in, dict);
  LabeledDigraph result;
  if (op == "dummy")
    result = augment_dummy(g);
  else if (op == "line")
    result = line_graph(g);
  else if (op == "e2v")
    result = edge_to_vertex(g);
  else
    result = inverse_edge_to_vertex(g);
  write_graph(out, result, dict);
  return 0;
}

// ---- stats ----

int run_stats(const DataArgs& data, const std::string& variant, bool per_graph) {
  if (int rc = require_input(data)) return rc;
  Dataset ds = load_input(data);
  if (ds.graphs.empty()) {
    std::cerr << "error: no graphs in input\n";
    return 1;
  }

  const bool want_g = variant == "all" || variant == "g" || variant == "plain";
  const bool want_gphi = variant == "all" || variant == "gphi";
  const bool want_hphi = variant == "all" || variant == "hphi";

  double sum_v[3] = {0, 0, 0}, sum_e[3] = {0, 0, 0};
  std::set<LabelId> vertex_labels, edge_labels;
  std::size_t i = 0;
  for (const LabeledDigraph& g : ds.graphs) {
    // Closed forms only; materialization cross-checks live in the tests and
    // would make D&D-sized inputs crawl.
    TransformStats s = transform_stats(g, 0);
    sum_v[0] += static_cast<double>(s.vertices);
    sum_e[0] += static_cast<double>(s.edges);
    sum_v[1] += static_cast<double>(s.augmented_vertices);
    sum_e[1] += static_cast<double>(s.augmented_edges);
    sum_v[2] += static_cast<double>(s.transformed_vertices);
    sum_e[2] += static_cast<double>(s.transformed_edges);
    for (const VertexRecord& v : g.vertices())
      for (LabelId l : v.labels.ids()) vertex_labels.insert(l);
    for (const EdgeRecord& e : g.edges())
      for (LabelId l : e.labels.ids()) edge_labels.insert(l);
    if (per_graph) {
      std::printf("graph=%zu", i);
      if (want_g) std::printf(" v=%lld e=%lld", (long long)s.vertices, (long long)s.edges);
      if (want_gphi)
        std::printf(" gphi_v=%lld gphi_e=%lld", (long long)s.augmented_vertices,
                    (long long)s.augmented_edges);
      if (want_hphi)
        std::printf(" hphi_v=%lld hphi_e=%lld", (long long)s.transformed_vertices,
                    (long long)s.transformed_edges);
      std::printf("\n");
    }
    ++i;
  }

  const double n = static_cast<double>(ds.graphs.size());
  const std::size_t xg = vertex_labels.size();
  const std::size_t yg = edge_labels.size();
  std::printf("dataset=%s graphs=%zu\n", ds.name.c_str(), ds.graphs.size());
  if (want_g)
    std::printf("variant=g avg_vertices=%.2f avg_edges=%.2f vertex_labels=%zu edge_labels=%zu\n",
                sum_v[0] / n, sum_e[0] / n, xg, yg);
  if (want_gphi)
    std::printf(
        "variant=gphi avg_vertices=%.2f avg_edges=%.2f vertex_labels=%zu edge_labels=%zu\n",
        sum_v[1] / n, sum_e[1] / n, xg + 1, yg + 1);
  if (want_hphi)
    std::printf(
        "variant=hphi avg_vertices=%.2f avg_edges=%.2f vertex_labels=%zu edge_labels=%zu\n",
        sum_v[2] / n, sum_e[2] / n, yg + 1, xg);
  return 0;
}

// ---- gram ----

int run_gram(const DataArgs& data, const std::string& kernel, int h, const std::string& variant,
             bool extended, bool raw_addends, bool raw, const std::string& out, int threads) {
  if (int rc = require_input(data)) return rc;
  Dataset ds = load_input(data);

  KernelSpec spec;
  spec.base = parse_kernel(kernel);
  spec.iterations = h;
  spec.variant = parse_variant(variant);
  spec.extended = extended;
  spec.normalize_addends = !raw_addends;
  spec.check();

  GramMatrix gram = gram_matrix(ds.graphs, spec, threads);
  if (!raw) gram = normalize_gram(gram);
  write_gram(out, gram);
  std::printf("wrote %s (n=%zu, %s, %s)\n", out.c_str(), gram.size(), spec.summary().c_str(),
              raw ? "raw" : "normalized");
  return 0;
}

// ---- classify ----

int run_classify(const DataArgs& data, const std::string& gram_file, const std::string& kernel,
                 const std::string& variant, bool extended, bool raw_addends,
                 const std::string& seeds, const std::string& c_grid, const std::string& h_grid,
                 const std::string& out, int threads) {
  if (data.dataset_dir.empty()) {
    std::cerr << "error: classify needs --dataset/--name for the class labels\n";
    return 2;
  }
  Dataset ds = load_tudataset(data.dataset_dir, data.dataset_name);

  ExperimentConfig config = ExperimentConfig::defaults();
  config.threads = threads;
  if (!seeds.empty()) {
    config.seeds.clear();
    for (std::int64_t s : parse_range_list(seeds))
      config.seeds.push_back(static_cast<std::uint64_t>(s));
  }
  if (!c_grid.empty()) config.c_grid = parse_double_list(c_grid);
  if (!h_grid.empty()) {
    config.h_grid.clear();
    for (std::int64_t h : parse_range_list(h_grid)) config.h_grid.push_back(static_cast<int>(h));
  }

  EvalReport report;
  if (!gram_file.empty()) {
    GramMatrix gram = read_gram(gram_file);
    if (gram.size() != ds.graphs.size())
      throw IoError("Gram matrix is " + std::to_string(gram.size()) + "x" +
                    std::to_string(gram.size()) + " but the dataset has " +
                    std::to_string(ds.graphs.size()) + " graphs");
    if (!gram.normalized())
      std::cerr << "warning: " << gram_file << " holds a raw (unnormalized) Gram matrix\n";
    const std::vector<GramMatrix> grams{gram};
    const std::vector<int> h_values{-1};
    for (std::uint64_t seed : config.seeds) {
      SplitPlan plan = make_splits(ds.graphs.size(), seed);
      SelectionResult sel = model_select(grams, h_values, ds.class_labels, plan, config.c_grid);
      double test = fold_accuracy(gram, ds.class_labels, plan.train, plan.test, sel.c);
      report.per_seed.push_back({seed, sel.c, sel.h, sel.valid_accuracy, test});
    }
    double sum = 0.0;
    for (const SeedResult& r : report.per_seed) sum += r.test_accuracy;
    report.mean = sum / static_cast<double>(report.per_seed.size());
    double ss = 0.0;
    for (const SeedResult& r : report.per_seed)
      ss += (r.test_accuracy - report.mean) * (r.test_accuracy - report.mean);
    report.stddev = report.per_seed.size() > 1
                        ? std::sqrt(ss / static_cast<double>(report.per_seed.size() - 1))
                        : 0.0;
  } else {
    KernelSpec spec;
    spec.base = parse_kernel(kernel);
    spec.variant = parse_variant(variant);
    spec.extended = extended;
    spec.normalize_addends = !raw_addends;
    spec.check();
    report = run_experiment(ds.graphs, ds.class_labels, spec, config);
  }

  std::string text = format_report(report);
  std::fputs(text.c_str(), stdout);
  if (!out.empty()) write_text(out, text);
  return 0;
}

// ---- roundtrip ----

int run_roundtrip(const DataArgs& data) {
  if (int rc = require_input(data)) return rc;
  Dataset ds = load_input(data);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
    const LabeledDigraph& g = ds.graphs[i];
    LabeledDigraph back = inverse_edge_to_vertex(edge_to_vertex(g));
    if (!(back == g)) {
      std::printf("graph=%zu roundtrip=MISMATCH\n", i);
      ++failures;
    }
  }
  if (failures) {
    std::printf("roundtrip failed: %zu of %zu graphs\n", failures, ds.graphs.size());
    return 1;
  }
  std::printf("roundtrip ok: %zu graphs\n", ds.graphs.size());
  return 0;
}

// ---- selftest ----

LabeledDigraph random_connected_graph(SplitMix64& rng, const std::vector<LabelId>& vlabels,
                                      const std::vector<LabelId>& elabels) {
  for (;;) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng.next_below(9));
    GraphBuilder b;
    for (std::int64_t v = 0; v < n; ++v)
      b.add_vertex(v, LabelSet::single(vlabels[rng.next_below(vlabels.size())]));
    std::set<std::pair<VertexId, VertexId>> used;
    const std::uint64_t tries = static_cast<std::uint64_t>(n) + rng.next_below(2 * n);
    for (std::uint64_t t = 0; t < tries; ++t) {
      VertexId u = static_cast<VertexId>(rng.next_below(n));
      VertexId v = static_cast<VertexId>(rng.next_below(n));
      if (u == v || !used.emplace(u, v).second) continue;
      b.add_edge(static_cast<EdgeId>(used.size() - 1), u, v,
                 LabelSet::single(elabels[rng.next_below(elabels.size())]));
    }
    if (used.empty()) continue;
    LabeledDigraph g = b.build();
    bool isolated = false;
    for (const VertexRecord& v : g.vertices()) {
      DegreeProfile d = g.degrees(v.id);
      if (d.indegree == 0 && d.outdegree == 0) isolated = true;
    }
    if (!isolated && weakly_connected(g)) return g;
  }
}

int run_selftest() {
  int failures = 0;
  auto report = [&](const char* name, bool ok, const std::string& detail = "") {
    std::printf("[%s] %s%s%s\n", ok ? "ok" : "fail", name, detail.empty() ? "" : ": ",
                detail.c_str());
    if (!ok) ++failures;
  };

  LabelDictionary dict;
  std::vector<LabelId> vlabels, elabels;
  for (const char* t : {"VA", "VB", "VC", "VD"}) vlabels.push_back(dict.intern(t));
  for (const char* t : {"ea", "eb", "ec"}) elabels.push_back(dict.intern(t));

  SplitMix64 rng(7);
  std::vector<LabeledDigraph> graphs;
  for (int i = 0; i < 100; ++i) graphs.push_back(random_connected_graph(rng, vlabels, elabels));

  // Transform round trip and size bookkeeping on every sample graph.
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < graphs.size() && ok; ++i) {
      try {
        if (!(inverse_edge_to_vertex(edge_to_vertex(graphs[i])) == graphs[i])) {
          ok = false;
          detail = "graph " + std::to_string(i) + " did not survive the round trip";
        }
        transform_stats(graphs[i], -1);  // throws when a cross-check fails
      } catch (const GraphError& e) {
        ok = false;
        detail = e.what();
      }
    }
    report("transform round trip", ok, detail);
    report("transform size formulas", ok, detail);
  }

  // Copy counts: a vertex's record reappears once per incident 2-walk plus
  // once per incident edge.
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < 20 && ok; ++i) {
      const LabeledDigraph& g = graphs[i];
      LabeledDigraph h = edge_to_vertex(g);
      for (const VertexRecord& v : g.vertices()) {
        std::int64_t copies = 0;
        for (const EdgeRecord& e : h.edges())
          if (e.id == v.id && e.labels == v.labels) ++copies;
        DegreeProfile d = g.degrees(v.id);
        std::int64_t want = d.indegree * d.outdegree + d.indegree + d.outdegree;
        if (copies != want) {
          ok = false;
          detail = "graph " + std::to_string(i) + " vertex " + std::to_string(v.id) + ": " +
                   std::to_string(copies) + " copies, expected " + std::to_string(want);
          break;
        }
      }
    }
    report("transform copy counts", ok, detail);
  }

  // Gram sanity on a small slice: symmetry, unit diagonal, invariance under
  // a vertex relabeling.
  {
    bool ok = true;
    std::string detail;
    std::vector<LabeledDigraph> slice(graphs.begin(), graphs.begin() + 8);
    for (GraphVariant variant :
         {GraphVariant::kPlain, GraphVariant::kDummyAugmented, GraphVariant::kEdgeToVertex}) {
      KernelSpec spec;
      spec.base = BaseKernel::kWl;
      spec.iterations = 2;
      spec.variant = variant;
      spec.extended = variant != GraphVariant::kPlain;
      GramMatrix gram = normalize_gram(gram_matrix(slice, spec));
      if (!gram.is_symmetric()) {
        ok = false;
        detail = std::string("asymmetric Gram for variant ") + to_string(variant);
        break;
      }
      for (std::size_t i = 0; i < gram.size(); ++i)
        if (gram.at(i, i) != 1.0 && gram.at(i, i) != 0.0) {
          ok = false;
          detail = "normalized diagonal off unit";
          break;
        }
      std::unordered_map<VertexId, VertexId> pi;
      const std::size_t nv = slice[0].vertex_count();
      for (const VertexRecord& v : slice[0].vertices())
        pi[v.id] = static_cast<VertexId>(nv - 1) - v.id;
      double before = kernel_value(spec, slice[0], slice[1]);
      double after = kernel_value(spec, permute(slice[0], pi), slice[1]);
      if (before != after) {
        ok = false;
        detail = "kernel changed under a vertex relabeling";
        break;
      }
    }
    report("gram properties", ok, detail);
  }

  // Two-point SVM with an identity kernel has the closed-form solution
  // alpha = (1, 1), bias 0.
  {
    bool ok = true;
    std::string detail;
    try {
      const std::vector<double> kernel{1.0, 0.0, 0.0, 1.0};
      const std::vector<int> labels{1, -1};
      SvmModel model = svm_train(kernel, 2, labels, 10.0);
      if (std::abs(model.alphas[0] - 1.0) > 1e-9 || std::abs(model.alphas[1] - 1.0) > 1e-9 ||
          std::abs(model.bias) > 1e-9) {
        ok = false;
        detail = "solver missed the closed-form optimum";
      }
      const std::vector<double> row{1.0, 0.0};
      if (svm_predict(model, row) != 1) {
        ok = false;
        detail = "prediction flipped on a training point";
      }
    } catch (const SvmError& e) {
      ok = false;
      detail = e.what();
    }
    report("svm closed form", ok, detail);
  }

  // Splits partition the index range and are reproducible.
  {
    SplitPlan a = make_splits(20, 2020);
    SplitPlan b = make_splits(20, 2020);
    std::vector<std::size_t> all;
    all.insert(all.end(), a.train.begin(), a.train.end());
    all.insert(all.end(), a.valid.begin(), a.valid.end());
    all.insert(all.end(), a.test.begin(), a.test.end());
    std::sort(all.begin(), all.end());
    bool ok = all.size() == 20 && a.valid.size() == 2 && a.test.size() == 2;
    for (std::size_t i = 0; i < all.size() && ok; ++i) ok = all[i] == i;
    ok = ok && a.train == b.train && a.valid == b.valid && a.test == b.test;
    report("split protocol", ok);
  }

  std::printf("%s\n", failures ? "selftest FAILED" : "selftest passed");
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"labeled digraph transforms, graph kernels, and SVM evaluation"};
  // long-form help only; -h is too close to the kernel depth option --h
  app.set_help_flag("--help", "print help and exit");
  app.set_config("--config", "", "read options from a config file");
  bool dump_config = false;
  app.add_flag("--dump-config", dump_config, "print the resolved config and exit")
      ->configurable(false);
  int threads = 0;
  app.add_option("--threads", threads,
                 "worker threads (0 = GKD_THREADS env var, else all cores)");
  app.require_subcommand(0, 1);

  const std::vector<std::string> kernels{"wl", "wloa", "sp", "gr"};
  const std::vector<std::string> variants{"plain", "g", "gphi", "hphi"};

  auto add_subcommand = [&app](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->set_help_flag("--help", "print help and exit");
    return sub;
  };

  auto* transform = add_subcommand("transform", "apply a graph transform to a file");
  transform->configurable();
  std::string op, in_path, out_path;
  transform->add_option("--op", op, "dummy | line | e2v | inv-e2v")
      ->required()
      ->check(CLI::IsMember({"dummy", "line", "e2v", "inv-e2v"}));
  transform->add_option("--in", in_path, "input graph file")->required();
  transform->add_option("--out", out_path, "output graph file")->required();

  auto* stats = add_subcommand("stats", "per-variant size statistics");
  stats->configurable();
  DataArgs stats_data;
  std::string stats_variant = "all";
  bool per_graph = false;
  add_data_options(stats, stats_data, true);
  stats->add_option("--variant", stats_variant, "g | gphi | hphi | all")
      ->check(CLI::IsMember({"g", "plain", "gphi", "hphi", "all"}));
  stats->add_flag("--per-graph", per_graph, "also print one line per graph");

  auto* gram = add_subcommand("gram", "compute and write a Gram matrix");
  gram->configurable();
  DataArgs gram_data;
  std::string gram_kernel = "wl", gram_variant = "plain", gram_out;
  int gram_h = 5;
  bool gram_extended = false, gram_raw_addends = false, gram_raw = false;
  add_data_options(gram, gram_data, true);
  gram->add_option("--kernel", gram_kernel, "wl | wloa | sp | gr")->check(CLI::IsMember(kernels));
  gram->add_option("--h", gram_h, "refinement depth for wl/wloa");
  gram->add_option("--variant", gram_variant, "plain | gphi | hphi")
      ->check(CLI::IsMember(variants));
  gram->add_flag("--extended", gram_extended, "add the plain-pair kernel to the variant pair");
  gram->add_flag("--raw-addends", gram_raw_addends,
                 "skip per-addend normalization of extended kernels");
  gram->add_flag("--raw", gram_raw, "write the unnormalized matrix");
  gram->add_option("--out", gram_out, "output file")->required();

  auto* classify = add_subcommand("classify", "run the split/select/test protocol");
  classify->configurable();
  DataArgs classify_data;
  std::string classify_gram, classify_kernel = "wl", classify_variant = "plain";
  std::string classify_seeds, classify_c_grid, classify_h_grid, classify_out;
  bool classify_extended = false, classify_raw_addends = false;
  add_data_options(classify, classify_data, false);
  classify->add_option("--gram", classify_gram, "precomputed Gram matrix file");
  classify->add_option("--kernel", classify_kernel, "wl | wloa | sp | gr")
      ->check(CLI::IsMember(kernels));
  classify->add_option("--variant", classify_variant, "plain | gphi | hphi")
      ->check(CLI::IsMember(variants));
  classify->add_flag("--extended", classify_extended,
                     "add the plain-pair kernel to the variant pair");
  classify->add_flag("--raw-addends", classify_raw_addends,
                     "skip per-addend normalization of extended kernels");
  classify->add_option("--seeds", classify_seeds, "e.g. 2020..2029 (default)");
  classify->add_option("--c-grid", classify_c_grid, "comma-separated C values");
  classify->add_option("--h-grid", classify_h_grid, "e.g. 0..5 (default)");
  classify->add_option("--out", classify_out, "also write the report here");

  auto* roundtrip = add_subcommand("roundtrip", "verify transform-and-back identity");
  roundtrip->configurable();
  DataArgs roundtrip_data;
  add_data_options(roundtrip, roundtrip_data, true);

  auto* selftest = add_subcommand("selftest", "run the built-in property checks");
  selftest->configurable();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dump_config) {
      std::cout << app.config_to_str(false, false);
      return 0;
    }
    if (transform->parsed()) return run_transform(op, in_path, out_path);
    if (stats->parsed()) return run_stats(stats_data, stats_variant, per_graph);
    if (gram->parsed())
      return run_gram(gram_data, gram_kernel, gram_h, gram_variant, gram_extended,
                      gram_raw_addends, gram_raw, gram_out, threads);
    if (classify->parsed())
      return run_classify(classify_data, classify_gram, classify_kernel, classify_variant,
                          classify_extended, classify_raw_addends, classify_seeds,
                          classify_c_grid, classify_h_grid, classify_out, threads);
    if (roundtrip->parsed()) return run_roundtrip(roundtrip_data);
    if (selftest->parsed()) return run_selftest();
    std::cerr << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
