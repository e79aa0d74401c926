#include "gkd/dataset_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace gkd {

namespace {

std::string location(const std::filesystem::path& path, std::size_t line) {
  return path.filename().string() + ":" + std::to_string(line);
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  // ignore trailing blank lines, common in shipped datasets
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos)
    lines.pop_back();
  return lines;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& token, const std::filesystem::path& path,
                       std::size_t line) {
  std::string t = trim(token);
  if (t.empty()) throw IoError(location(path, line) + ": expected an integer");
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw IoError(location(path, line) + ": not an integer: '" + t + "'");
  }
  if (used != t.size())
    throw IoError(location(path, line) + ": trailing characters after integer: '" + t + "'");
  return value;
}

LabelSet parse_labelset(const std::string& field, LabelDictionary& dict,
                        const std::filesystem::path& path, std::size_t line) {
  LabelSet set;
  std::stringstream ss(field);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token = trim(token);
    if (token.empty()) throw IoError(location(path, line) + ": empty label");
    set.insert(dict.intern(token));
  }
  if (set.empty()) throw IoError(location(path, line) + ": empty label set");
  return set;
}

std::string labelset_text(const LabelSet& set, const LabelDictionary& dict) {
  if (set.empty()) throw IoError("cannot serialize an empty label set");
  std::string out;
  for (LabelId id : set.ids()) {
    if (!out.empty()) out.push_back(',');
    out += dict.text(id);
  }
  return out;
}

void append_u32_le(std::string& s, std::uint32_t x) {
  for (int i = 0; i < 4; ++i) {
    s.push_back(static_cast<char>(x & 0xff));
    x >>= 8;
  }
}

std::uint32_t read_u32_le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

}  // namespace

Dataset load_tudataset(const std::filesystem::path& dir, const std::string& name) {
  const auto file = [&](const char* suffix) { return dir / (name + suffix); };

  std::vector<std::string> indicator = read_lines(file("_graph_indicator.txt"));
  std::vector<std::string> graph_labels = read_lines(file("_graph_labels.txt"));
  std::vector<std::string> adjacency = read_lines(file("_A.txt"));

  const std::filesystem::path node_path = file("_node_labels.txt");
  const std::filesystem::path edge_path = file("_edge_labels.txt");
  std::vector<std::string> node_labels, edge_labels;
  if (std::filesystem::exists(node_path)) node_labels = read_lines(node_path);
  if (std::filesystem::exists(edge_path)) edge_labels = read_lines(edge_path);

  Dataset ds;
  ds.name = name;

  const std::size_t total_vertices = indicator.size();
  const std::size_t graph_count = graph_labels.size();
  if (!node_labels.empty() && node_labels.size() != total_vertices)
    throw IoError(name + "_node_labels.txt has " + std::to_string(node_labels.size()) +
                  " rows for " + std::to_string(total_vertices) + " vertices");
  if (!edge_labels.empty() && edge_labels.size() != adjacency.size())
    throw IoError(name + "_edge_labels.txt has " + std::to_string(edge_labels.size()) +
                  " rows for " + std::to_string(adjacency.size()) + " adjacency rows");

  // global vertex -> (graph index, local 0-based id)
  std::vector<std::uint32_t> graph_of(total_vertices);
  std::vector<std::int64_t> local_id(total_vertices);
  std::vector<std::int64_t> vertices_per_graph(graph_count, 0);
  for (std::size_t i = 0; i < total_vertices; ++i) {
    std::int64_t gid = parse_int(indicator[i], file("_graph_indicator.txt"), i + 1);
    if (gid < 1 || static_cast<std::size_t>(gid) > graph_count)
      throw IoError(location(file("_graph_indicator.txt"), i + 1) + ": graph id " +
                    std::to_string(gid) + " out of range");
    graph_of[i] = static_cast<std::uint32_t>(gid - 1);
    local_id[i] = vertices_per_graph[gid - 1]++;
  }

  const LabelId default_node = ds.labels.intern(kDefaultNodeLabelText);
  const LabelId default_edge = ds.labels.intern(kDefaultEdgeLabelText);

  std::vector<LabelId> vertex_label(total_vertices, default_node);
  for (std::size_t i = 0; i < node_labels.size(); ++i) {
    std::string text = trim(node_labels[i]);
    if (text.empty())
      throw IoError(location(node_path, i + 1) + ": empty node label");
    vertex_label[i] = ds.labels.intern(text);
  }

  // Per graph: merged edge map (src,dst) -> label set.
  std::vector<std::map<std::pair<std::int64_t, std::int64_t>, LabelSet>> edges(graph_count);
  for (std::size_t row = 0; row < adjacency.size(); ++row) {
    const std::string& text = adjacency[row];
    std::size_t comma = text.find(',');
    if (comma == std::string::npos)
      throw IoError(location(file("_A.txt"), row + 1) + ": expected 'u, v'");
    std::int64_t u = parse_int(text.substr(0, comma), file("_A.txt"), row + 1);
    std::int64_t v = parse_int(text.substr(comma + 1), file("_A.txt"), row + 1);
    if (u < 1 || static_cast<std::size_t>(u) > total_vertices || v < 1 ||
        static_cast<std::size_t>(v) > total_vertices)
      throw IoError(location(file("_A.txt"), row + 1) + ": vertex id out of range");
    if (u == v)
      throw IoError(location(file("_A.txt"), row + 1) + ": self-loop at vertex " +
                    std::to_string(u));
    if (graph_of[u - 1] != graph_of[v - 1])
      throw IoError(location(file("_A.txt"), row + 1) + ": edge crosses graph boundary");

    LabelId label = default_edge;
    if (!edge_labels.empty()) {
      std::string lt = trim(edge_labels[row]);
      if (lt.empty()) throw IoError(location(edge_path, row + 1) + ": empty edge label");
      label = ds.labels.intern(lt);
    }
    edges[graph_of[u - 1]][{local_id[u - 1], local_id[v - 1]}].insert(label);
  }

  // Class labels, remapped to -1/+1 when exactly two values occur.
  std::vector<std::int64_t> raw_classes(graph_count);
  std::set<std::int64_t> distinct;
  for (std::size_t i = 0; i < graph_count; ++i) {
    raw_classes[i] = parse_int(graph_labels[i], file("_graph_labels.txt"), i + 1);
    distinct.insert(raw_classes[i]);
  }
  for (std::size_t i = 0; i < graph_count; ++i) {
    if (distinct.size() == 2)
      ds.class_labels.push_back(raw_classes[i] == *distinct.begin() ? -1 : 1);
    else
      ds.class_labels.push_back(static_cast<int>(raw_classes[i]));
  }

  std::vector<std::vector<LabelId>> vertex_labels_per_graph(graph_count);
  for (std::size_t i = 0; i < total_vertices; ++i)
    vertex_labels_per_graph[graph_of[i]].push_back(vertex_label[i]);

  for (std::size_t gi = 0; gi < graph_count; ++gi) {
    GraphBuilder b;
    for (std::int64_t v = 0; v < vertices_per_graph[gi]; ++v)
      b.add_vertex(v, LabelSet::single(vertex_labels_per_graph[gi][static_cast<std::size_t>(v)]));
    EdgeId next_id = 0;
    for (const auto& [key, labels] : edges[gi])
      b.add_edge(next_id++, key.first, key.second, labels);
    try {
      ds.graphs.push_back(b.build());
    } catch (const GraphError& e) {
      throw IoError(name + " graph " + std::to_string(gi + 1) + ": " + e.what());
    }
  }
  return ds;
}

void write_tudataset(const std::filesystem::path& dir, const Dataset& ds) {
  std::filesystem::create_directories(dir);
  const auto file = [&](const char* suffix) { return dir / (ds.name + suffix); };
  if (ds.graphs.size() != ds.class_labels.size())
    throw IoError("class label count does not match graph count");

  std::ofstream indicator(file("_graph_indicator.txt"), std::ios::binary);
  std::ofstream adjacency(file("_A.txt"), std::ios::binary);
  std::ofstream classes(file("_graph_labels.txt"), std::ios::binary);
  std::ostringstream nodes, edges;

  const auto default_edge = ds.labels.find(kDefaultEdgeLabelText);
  bool need_edge_file = false;
  for (const LabeledDigraph& g : ds.graphs)
    for (const EdgeRecord& e : g.edges())
      if (!(default_edge && e.labels == LabelSet::single(*default_edge))) need_edge_file = true;

  std::int64_t offset = 0;
  for (std::size_t gi = 0; gi < ds.graphs.size(); ++gi) {
    const LabeledDigraph& g = ds.graphs[gi];
    classes << ds.class_labels[gi] << '\n';
    for (const VertexRecord& v : g.vertices()) {
      if (v.labels.size() != 1)
        throw IoError("dataset vertices must carry exactly one label");
      indicator << (gi + 1) << '\n';
      nodes << ds.labels.text(v.labels.ids()[0]) << '\n';
      if (v.id < 0 || v.id >= static_cast<VertexId>(g.vertex_count()))
        throw IoError("dataset graphs must use contiguous 0-based vertex ids");
    }
    for (const EdgeRecord& e : g.edges()) {
      adjacency << (offset + e.src + 1) << ", " << (offset + e.dst + 1) << '\n';
      if (need_edge_file) edges << labelset_text(e.labels, ds.labels) << '\n';
    }
    offset += static_cast<std::int64_t>(g.vertex_count());
  }

  std::ofstream(file("_node_labels.txt"), std::ios::binary) << nodes.str();
  if (need_edge_file) std::ofstream(file("_edge_labels.txt"), std::ios::binary) << edges.str();
}

std::vector<std::pair<VertexId, VertexId>> to_directed(
    std::span<const std::pair<VertexId, VertexId>> undirected) {
  std::set<std::pair<VertexId, VertexId>> out;
  for (auto [u, v] : undirected) {
    out.emplace(u, v);
    out.emplace(v, u);
  }
  return {out.begin(), out.end()};
}

void write_graph(const std::filesystem::path& path, const LabeledDigraph& g,
                 const LabelDictionary& dict) {
  std::ostringstream out;
  out << "g " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const VertexRecord& v : g.vertices())
    out << "v " << v.id << ' ' << labelset_text(v.labels, dict) << '\n';
  for (const EdgeRecord& e : g.edges())
    out << "e " << e.id << ' ' << e.src << ' ' << e.dst << ' '
        << labelset_text(e.labels, dict) << '\n';

  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << out.str();
  if (!f) throw IoError("failed writing " + path.string());
}

LabeledDigraph read_graph(const std::filesystem::path& path, LabelDictionary& dict) {
  std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) throw IoError(location(path, 1) + ": missing header");

  auto fields = [&](const std::string& line, std::size_t lineno, std::size_t expect) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string token;
    while (ss >> token) out.push_back(token);
    if (out.size() != expect)
      throw IoError(location(path, lineno) + ": expected " + std::to_string(expect) +
                    " fields, got " + std::to_string(out.size()));
    return out;
  };

  auto header = fields(lines[0], 1, 3);
  if (header[0] != "g") throw IoError(location(path, 1) + ": header must start with 'g'");
  std::int64_t n = parse_int(header[1], path, 1);
  std::int64_t m = parse_int(header[2], path, 1);
  if (n < 0 || m < 0) throw IoError(location(path, 1) + ": negative counts");
  if (lines.size() != static_cast<std::size_t>(1 + n + m))
    throw IoError(path.filename().string() + ": header promises " + std::to_string(n) +
                  " vertices and " + std::to_string(m) + " edges, file has " +
                  std::to_string(lines.size() - 1) + " records");

  GraphBuilder b;
  for (std::int64_t i = 0; i < n; ++i) {
    std::size_t lineno = static_cast<std::size_t>(2 + i);
    auto f = fields(lines[lineno - 1], lineno, 3);
    if (f[0] != "v") throw IoError(location(path, lineno) + ": expected a 'v' line");
    b.add_vertex(parse_int(f[1], path, lineno), parse_labelset(f[2], dict, path, lineno));
  }
  for (std::int64_t i = 0; i < m; ++i) {
    std::size_t lineno = static_cast<std::size_t>(2 + n + i);
    auto f = fields(lines[lineno - 1], lineno, 5);
    if (f[0] != "e") throw IoError(location(path, lineno) + ": expected an 'e' line");
    b.add_edge(parse_int(f[1], path, lineno), parse_int(f[2], path, lineno),
               parse_int(f[3], path, lineno), parse_labelset(f[4], dict, path, lineno));
  }

  std::vector<std::string> violations = b.validate();
  if (!violations.empty()) {
    std::string msg = path.filename().string() + ": invalid graph:";
    for (const std::string& v : violations) msg += " [" + v + "]";
    throw IoError(msg);
  }
  return b.build();
}

void write_gram(const std::filesystem::path& path, const GramMatrix& gram) {
  if (!gram.is_symmetric()) throw IoError("refusing to write an asymmetric Gram matrix");
  for (double v : gram.values())
    if (!std::isfinite(v)) throw IoError("refusing to write a non-finite Gram matrix");
  if (gram.size() > 0xffffffffull) throw IoError("Gram matrix too large for the format");
  static_assert(sizeof(double) == 8 && std::numeric_limits<double>::is_iec559);

  std::string blob = "GRAMMAT1";
  append_u32_le(blob, static_cast<std::uint32_t>(gram.size()));
  blob.push_back(gram.normalized() ? 1 : 0);
  append_u32_le(blob, static_cast<std::uint32_t>(gram.spec_summary().size()));
  blob += gram.spec_summary();
  for (double v : gram.values()) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    for (int k = 0; k < 8; ++k) {
      blob.push_back(static_cast<char>(bits & 0xff));
      bits >>= 8;
    }
  }

  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f.write(blob.data(), static_cast<std::streamsize>(blob.size()));
  if (!f) throw IoError("failed writing " + path.string());
}

GramMatrix read_gram(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string());
  std::string blob((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());

  const auto* p = reinterpret_cast<const unsigned char*>(blob.data());
  if (blob.size() < 17 || blob.compare(0, 8, "GRAMMAT1") != 0)
    throw IoError(path.filename().string() + ": not a Gram matrix file");
  std::uint32_t n = read_u32_le(p + 8);
  std::uint8_t normalized = p[12];
  std::uint32_t spec_len = read_u32_le(p + 13);
  std::size_t expected = 17ull + spec_len + 8ull * n * n;
  if (blob.size() != expected)
    throw IoError(path.filename().string() + ": truncated or oversized (want " +
                  std::to_string(expected) + " bytes, have " + std::to_string(blob.size()) + ")");

  GramMatrix gram(n);
  gram.set_normalized(normalized != 0);
  gram.set_spec_summary(blob.substr(17, spec_len));
  const unsigned char* data = p + 17 + spec_len;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t bits = 0;
      for (int k = 7; k >= 0; --k) bits = (bits << 8) | data[k];
      data += 8;
      gram.at(i, j) = std::bit_cast<double>(bits);
    }
  return gram;
}

}  // namespace gkd
