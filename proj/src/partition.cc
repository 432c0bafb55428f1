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

#include "csbm/partition.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "csbm/error.h"
#include "csbm/rng.h"

namespace csbm {

Partition Partition::FromLabels(std::vector<Side> labels) {
  const auto n = static_cast<int64_t>(labels.size());
  if (n < 2 || n % 2 != 0) {
    ThrowValidation("partition_size",
                    "partition needs an even number (>= 2) of vertices, got " +
                        std::to_string(n));
  }
  const auto in_a = std::count(labels.begin(), labels.end(), Side::kA);
  if (in_a * 2 != n) {
    ThrowValidation("unbalanced_partition",
                    "partition must have n/2 vertices per side, got " +
                        std::to_string(in_a) + " of " + std::to_string(n) +
                        " in A");
  }
  return Partition(std::move(labels));
}

Partition Partition::FromString(std::string_view text) {
  std::vector<Side> labels;
  labels.reserve(text.size());
  for (const char c : text) {
    if (c == 'A') {
      labels.push_back(Side::kA);
    } else if (c == 'B') {
      labels.push_back(Side::kB);
    } else {
      ThrowValidation("partition_syntax",
                      std::string("unexpected partition character '") + c +
                          "'");
    }
  }
  return FromLabels(std::move(labels));
}

Partition Partition::Planted(int n) {
  std::vector<Side> labels(n, Side::kB);
  std::fill(labels.begin(), labels.begin() + n / 2, Side::kA);
  return FromLabels(std::move(labels));
}

Partition Partition::RandomBalanced(int n, uint64_t seed) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(DeriveSeed(seed, 0x7061727469ULL));
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.Below(static_cast<uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }
  std::vector<Side> labels(n, Side::kB);
  for (int i = 0; i < n / 2; ++i) labels[order[i]] = Side::kA;
  return FromLabels(std::move(labels));
}

std::vector<int> Partition::members(Side s) const {
  std::vector<int> out;
  out.reserve(labels_.size() / 2);
  for (int v = 0; v < n(); ++v) {
    if (labels_[v] == s) out.push_back(v);
  }
  return out;
}

Partition Partition::complement() const {
  std::vector<Side> flipped(labels_.size());
  std::transform(labels_.begin(), labels_.end(), flipped.begin(), Opposite);
  return Partition(std::move(flipped));
}

Partition Partition::canonical() const {
  return labels_.front() == Side::kA ? *this : complement();
}

Partition Partition::swapped(int u, int v) const {
  if (labels_[u] == labels_[v]) {
    ThrowValidation("swap_same_side", "swap needs vertices on opposite sides");
  }
  Partition out = *this;
  std::swap(out.labels_[u], out.labels_[v]);
  return out;
}

std::string Partition::ToString() const {
  std::string out(labels_.size(), 'A');
  for (size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == Side::kB) out[v] = 'B';
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.find('\n') != std::string_view::npos) {
    ThrowValidation("partition_syntax", "partition file must be one line");
  }
  return Partition::FromString(text);
}

std::string serialize_partition(const Partition& partition) {
  return partition.ToString() + "\n";
}

}  // namespace csbm
