// Copyright 2026 The csbm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "csbm/graph.h"

#include <algorithm>
#include <charconv>
#include <utility>

#include "csbm/error.h"

namespace csbm {
namespace {

std::string EdgeLabel(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

}  // namespace

ColoredGraph ColoredGraph::FromEdges(int n, int m, std::vector<Edge> edges) {
  if (n < 1) ThrowValidation("graph_size", "graph needs at least one vertex");
  if (m < 1) ThrowValidation("graph_colors", "graph needs at least one color");
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) {
      ThrowValidation("vertex_range", "edge " + EdgeLabel(e) +
                                          " has a vertex outside [0, " +
                                          std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      ThrowValidation("self_loop", "self-loop at vertex " +
                                       std::to_string(e.u));
    }
    if (e.color < 1 || e.color > m) {
      ThrowValidation("color_range", "edge " + EdgeLabel(e) + " has color " +
                                         std::to_string(e.color) +
                                         " outside [1, " + std::to_string(m) +
                                         "]");
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      ThrowValidation("duplicate_pair",
                      "pair " + EdgeLabel(edges[i]) + " appears twice");
    }
  }

  ColoredGraph graph;
  graph.n_ = n;
  graph.m_ = m;
  graph.offsets_.assign(n + 1, 0);
  for (const auto& e : edges) {
    ++graph.offsets_[e.u + 1];
    ++graph.offsets_[e.v + 1];
  }
  for (int v = 0; v < n; ++v) graph.offsets_[v + 1] += graph.offsets_[v];
  graph.adjacency_.resize(edges.size() * 2);
  std::vector<int64_t> cursor(graph.offsets_.begin(), graph.offsets_.end() - 1);
  // Filling in (u, v) edge order leaves every list sorted: a vertex's lower
  // neighbors come from edges with a smaller first endpoint.
  for (const auto& e : edges) {
    graph.adjacency_[cursor[e.u]++] = {e.v, e.color};
    graph.adjacency_[cursor[e.v]++] = {e.u, e.color};
  }
  graph.edges_ = std::move(edges);
  return graph;
}

std::span<const Neighbor> ColoredGraph::neighbors(int v) const {
  if (v < 0 || v >= n_) {
    ThrowValidation("vertex_range", "vertex " + std::to_string(v) +
                                        " out of range");
  }
  return std::span<const Neighbor>(adjacency_.data() + offsets_[v],
                                   adjacency_.data() + offsets_[v + 1]);
}

int ColoredGraph::color_between(int u, int v) const {
  const auto list = neighbors(u);
  const auto it = std::lower_bound(
      list.begin(), list.end(), v,
      [](const Neighbor& nb, int target) { return nb.vertex < target; });
  return (it != list.end() && it->vertex == v) ? it->color : 0;
}

std::vector<int64_t> count_colored_edges(const ColoredGraph& graph, int v,
                                         std::span<const int> set) {
  if (v < 0 || v >= graph.n()) {
    ThrowValidation("vertex_range", "vertex " + std::to_string(v) +
                                        " out of range");
  }
  std::vector<char> in_set(graph.n(), 0);
  for (const int u : set) {
    if (u < 0 || u >= graph.n()) {
      ThrowValidation("vertex_range", "set member " + std::to_string(u) +
                                          " out of range");
    }
    in_set[u] = 1;
  }
  std::vector<int64_t> counts(graph.m(), 0);
  for (const auto& nb : graph.neighbors(v)) {
    if (in_set[nb.vertex]) ++counts[nb.color - 1];
  }
  return counts;
}

EdgeCounts inner_and_cross_counts(const ColoredGraph& graph,
                                  const Partition& partition) {
  if (graph.n() != partition.n()) {
    ThrowValidation("size_mismatch", "graph has " + std::to_string(graph.n()) +
                                         " vertices, partition has " +
                                         std::to_string(partition.n()));
  }
  EdgeCounts counts{std::vector<int64_t>(graph.m(), 0),
                    std::vector<int64_t>(graph.m(), 0)};
  for (const auto& e : graph.edges()) {
    auto& bucket = partition.same_side(e.u, e.v) ? counts.inner : counts.cross;
    ++bucket[e.color - 1];
  }
  return counts;
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool Next(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    const size_t end = text_.find('\n', pos_);
    const size_t stop = end == std::string_view::npos ? text_.size() : end;
    line = text_.substr(pos_, stop - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = stop + 1;
    ++number_;
    return true;
  }

  int number() const { return number_; }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  int number_ = 0;
};

// Parses exactly `count` whitespace-separated integers.
bool ParseInts(std::string_view line, int* out, int count) {
  const char* p = line.data();
  const char* end = line.data() + line.size();
  for (int i = 0; i < count; ++i) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    const auto [next, ec] = std::from_chars(p, end, out[i]);
    if (ec != std::errc() || next == p) return false;
    p = next;
  }
  while (p < end && (*p == ' ' || *p == '\t')) ++p;
  return p == end;
}

}  // namespace

ColoredGraph parse_graph(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.Next(line)) ThrowValidation("graph_syntax", "empty graph file");
  int header[2];
  if (!ParseInts(line, header, 2)) {
    ThrowValidation("graph_syntax", "line 1: expected \"n m\"");
  }
  std::vector<Edge> edges;
  while (reader.Next(line)) {
    if (line.empty()) continue;
    int fields[3];
    if (!ParseInts(line, fields, 3)) {
      ThrowValidation("graph_syntax", "line " + std::to_string(reader.number()) +
                                          ": expected \"u v c\"");
    }
    edges.push_back({fields[0], fields[1], fields[2]});
  }
  return ColoredGraph::FromEdges(header[0], header[1], std::move(edges));
}

std::string serialize_graph(const ColoredGraph& graph) {
  std::string out = std::to_string(graph.n()) + " " +
                    std::to_string(graph.m()) + "\n";
  for (const auto& e : graph.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += ' ';
    out += std::to_string(e.color);
    out += '\n';
  }
  return out;
}

}  // namespace csbm
