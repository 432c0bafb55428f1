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

#include <cmath>
#include <limits>
#include <vector>

#include "csbm/decoder.h"
#include "csbm/error.h"
#include "csbm/oracle.h"
#include "csbm/sampler.h"
#include "doctest.h"
#include "test_support.h"

namespace csbm {
namespace {

ColoredGraph TwoEdges() {
  return ColoredGraph::FromEdges(4, 1, {{0, 1, 1}, {2, 3, 1}});
}

const Weights kNineToOne{{std::log(9.0)}};

TEST_CASE("score of the hand example") {
  CHECK(score_partition(TwoEdges(), kNineToOne,
                        Partition::FromString("AABB")) ==
        doctest::Approx(2 * std::log(9.0)));
  CHECK(score_partition(TwoEdges(), kNineToOne,
                        Partition::FromString("ABAB")) == 0.0);
}

TEST_CASE("exact decoder on the hand example") {
  const auto r = ml_decode_exact(TwoEdges(), kNineToOne);
  CHECK(r.best.ToString() == "AABB");
  CHECK(!r.tie);
  CHECK(r.explored == 3);
  CHECK(r.best_score == doctest::Approx(2 * std::log(9.0)));
}

TEST_CASE("empty graph is a tie") {
  const auto r = ml_decode_exact(ColoredGraph::Empty(6, 1), kNineToOne);
  CHECK(r.tie);
  CHECK(r.explored == 10);
  CHECK(r.best.ToString() == "AAABBB");
}

TEST_CASE("exact decoder refuses above the cap") {
  try {
    ml_decode_exact(ColoredGraph::Empty(26, 1), kNineToOne);
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.tag() == "exact_cap");
  }
}

TEST_CASE("exact decoder matches the brute-force oracle") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = testing::RandomEvenN(rng, 4, 10);
    const int m = 1 + static_cast<int>(rng.Below(3));
    const auto g = testing::RandomGraph(rng, n, m, 0.2 + 0.5 * rng.Uniform());
    const auto w = testing::RandomWeights(rng, m);
    const auto fast = ml_decode_exact(g, w);
    const auto slow = oracle::brute_force_ml(g, w);
    CHECK(fast.tie == slow.tie);
    CHECK(fast.best == slow.best);
    CHECK(fast.best_score == doctest::Approx(slow.best_score));
  }
}

TEST_CASE("exact decoder recovers strong planted structure at n=10") {
  // Largest admissible separation at n=10 (ln 10 / 10 caps alpha near 4.3).
  const auto params = make_params(10, {4}, {0.01});
  int recovered = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const auto planted = Partition::RandomBalanced(10, DeriveSeed(seed, 1));
    const auto g = sample_graph(params, planted, DeriveSeed(seed, 2));
    const auto r = ml_decode_exact(g, params.weights());
    if (!r.tie && partitions_equal_up_to_swap(r.best, planted)) ++recovered;
  }
  CHECK(recovered >= 50);
}

TEST_CASE("best_swap agrees with explicit rescoring") {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = testing::RandomEvenN(rng, 4, 16);
    const int m = 1 + static_cast<int>(rng.Below(3));
    const auto g = testing::RandomGraph(rng, n, m, 0.4);
    const auto w = testing::RandomWeights(rng, m);
    const auto part = Partition::RandomBalanced(n, trial);
    const double base = score_partition(g, w, part);
    double best = -std::numeric_limits<double>::infinity();
    for (int a : part.members(Side::kA)) {
      for (int b : part.members(Side::kB)) {
        best = std::max(best, score_partition(g, w, part.swapped(a, b)) - base);
      }
    }
    const auto move = best_swap(g, w, part);
    if (best > kScoreTolerance) {
      REQUIRE(move.has_value());
      CHECK(move->gain == doctest::Approx(best));
      CHECK(score_partition(g, w, part.swapped(move->from_a, move->from_b)) -
                base ==
            doctest::Approx(move->gain));
    } else {
      CHECK(!move.has_value());
    }
  }
}

TEST_CASE("local refinement of the hand example") {
  const auto r = local_refine(TwoEdges(), kNineToOne,
                              Partition::FromString("ABAB"), 10);
  CHECK(r.canonical().ToString() == "AABB");
}

TEST_CASE("local refinement never lowers the score and ends at a local max") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testing::RandomEvenN(rng, 4, 30);
    const auto g = testing::RandomGraph(rng, n, 2, 0.3);
    const auto w = testing::RandomWeights(rng, 2);
    const auto init = Partition::RandomBalanced(n, trial);
    const auto out = local_refine(g, w, init, 10000);
    CHECK(score_partition(g, w, out) >= score_partition(g, w, init) - 1e-9);
    CHECK(!best_swap(g, w, out).has_value());
  }
}

TEST_CASE("planted partition is swap-stable above the threshold at n=500") {
  const int n = 500;
  const auto params = make_params(n, {16}, {1});
  int stable = 0;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const auto planted = Partition::RandomBalanced(n, DeriveSeed(seed, 1));
    const auto g = sample_graph(params, planted, DeriveSeed(seed, 2));
    if (!best_swap(g, params.weights(), planted).has_value()) ++stable;
  }
  CHECK(stable >= 45);
}

TEST_CASE("vertex failure events on hand graphs") {
  const auto planted = Partition::FromString("AABB");
  auto r = vertex_failure_events(TwoEdges(), kNineToOne, planted);
  CHECK(!r.f_a);
  CHECK(!r.f_b);
  const auto cross = ColoredGraph::FromEdges(4, 1, {{0, 2, 1}});
  r = vertex_failure_events(cross, kNineToOne, planted);
  CHECK(r.f_a);
  CHECK(r.f_b);
  CHECK(r.f_a_vertices == std::vector<int>{0});
  CHECK(r.f_b_vertices == std::vector<int>{2});
}

TEST_CASE("joint vertex failure with non-adjacent witnesses implies ML failure") {
  SplitMix64 rng(99);
  int witnessed = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = testing::RandomEvenN(rng, 4, 10);
    const int m = 1 + static_cast<int>(rng.Below(2));
    const auto params = testing::RandomParams(rng, n, m);
    const auto planted = Partition::RandomBalanced(n, trial);
    const auto g = sample_graph(params, planted, DeriveSeed(trial, 7));
    const auto events = vertex_failure_events(g, params.weights(), planted);
    bool separated = false;
    for (int a : events.f_a_vertices) {
      for (int b : events.f_b_vertices) {
        separated = separated || g.color_between(a, b) == 0;
      }
    }
    if (!separated) continue;
    ++witnessed;
    const auto r = ml_decode_exact(g, params.weights());
    CHECK((r.tie || !partitions_equal_up_to_swap(r.best, planted)));
    CHECK(best_swap(g, params.weights(), planted).has_value());
  }
  CHECK(witnessed > 100);
}

TEST_CASE("joint vertex failure through an adjacent pair need not break ML") {
  // The swap keeps the edge between the two witnesses as a cross edge, so
  // its weight counts against both vertices and the swap can lose.
  const auto g = ColoredGraph::FromEdges(4, 2, {{0, 3, 2}, {1, 3, 1}, {2, 3, 2}});
  const Weights w({0.578, 0.376});
  const auto planted = Partition::FromString("ABAB");
  const auto events = vertex_failure_events(g, w, planted);
  CHECK(events.f_a);
  CHECK(events.f_b);
  const auto r = ml_decode_exact(g, w);
  CHECK(!r.tie);
  CHECK(r.best == planted);
}

TEST_CASE("equality up to swap") {
  const auto p = Partition::FromString("AABB");
  CHECK(partitions_equal_up_to_swap(p, Partition::FromString("BBAA")));
  CHECK(!partitions_equal_up_to_swap(p, Partition::FromString("ABAB")));
}

}  // namespace
}  // namespace csbm
