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

#ifndef CSBM_GRAPH_H_
#define CSBM_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csbm/partition.h"

namespace csbm {

// Undirected edge with u < v and a color in 1..m.
struct Edge {
  int u = 0;
  int v = 0;
  int color = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  int vertex = 0;
  int color = 0;
};

// Simple undirected graph where each present edge carries exactly one color.
// Edges are kept sorted by (u, v); neighbor lists are sorted by vertex.
class ColoredGraph {
 public:
  // Normalizes each pair to u < v. Throws on self-loops, duplicate pairs,
  // vertices outside [0, n) and colors outside [1, m].
  static ColoredGraph FromEdges(int n, int m, std::vector<Edge> edges);
  static ColoredGraph Empty(int n, int m) { return FromEdges(n, m, {}); }

  int n() const { return n_; }
  int m() const { return m_; }
  int64_t edge_count() const { return static_cast<int64_t>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Neighbor> neighbors(int v) const;
  // Color of the (u, v) edge, or 0 when absent.
  int color_between(int u, int v) const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Edge> edges_;
  std::vector<int64_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

// Per-color counts of edges from v to the vertices of `set` other than v.
// Index c - 1 holds color c.
std::vector<int64_t> count_colored_edges(const ColoredGraph& graph, int v,
                                         std::span<const int> set);

// inner[c-1]: color-c edges with both ends on one side. cross[c-1]: color-c
// edges between the sides.
struct EdgeCounts {
  std::vector<int64_t> inner;
  std::vector<int64_t> cross;
};

EdgeCounts inner_and_cross_counts(const ColoredGraph& graph,
                                  const Partition& partition);

// Text format: header "n m", then one "u v c" line per edge in ascending
// (u, v) order; 0-based vertices, 1-based colors.
ColoredGraph parse_graph(std::string_view text);
std::string serialize_graph(const ColoredGraph& graph);

}  // namespace csbm

#endif  // CSBM_GRAPH_H_
