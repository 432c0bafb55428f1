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

#ifndef CSBM_PARTITION_H_
#define CSBM_PARTITION_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace csbm {

enum class Side : uint8_t { kA = 0, kB = 1 };

inline Side Opposite(Side s) { return s == Side::kA ? Side::kB : Side::kA; }

// Balanced two-community labeling: exactly n/2 vertices on each side.
class Partition {
 public:
  static Partition FromLabels(std::vector<Side> labels);
  // One character per vertex over {A, B}, e.g. "AABB".
  static Partition FromString(std::string_view text);
  // Vertices 0..n/2-1 in A, the rest in B.
  static Partition Planted(int n);
  // Uniform over all balanced labelings; pure function of (n, seed).
  static Partition RandomBalanced(int n, uint64_t seed);

  int n() const { return static_cast<int>(labels_.size()); }
  Side side(int v) const { return labels_[v]; }
  bool same_side(int u, int v) const { return labels_[u] == labels_[v]; }
  const std::vector<Side>& labels() const { return labels_; }
  std::vector<int> members(Side s) const;

  Partition complement() const;
  // Representative of the {p, complement(p)} class with vertex 0 in A.
  Partition canonical() const;
  // Moves u to v's side and v to u's side; u and v must be on opposite sides.
  Partition swapped(int u, int v) const;

  std::string ToString() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  explicit Partition(std::vector<Side> labels) : labels_(std::move(labels)) {}

  std::vector<Side> labels_;
};

// Partition file: a single line of n characters, newline terminated.
Partition parse_partition(std::string_view text);
std::string serialize_partition(const Partition& partition);

}  // namespace csbm

#endif  // CSBM_PARTITION_H_
