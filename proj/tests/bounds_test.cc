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
#include <numbers>
#include <vector>

#include "csbm/bounds.h"
#include "csbm/error.h"
#include "csbm/json_io.h"
#include "csbm/ldp.h"
#include "csbm/oracle.h"
#include "doctest.h"
#include "test_support.h"

namespace csbm {
namespace {

FiniteLaw NineToOne() {
  return pair_diff_distribution(make_params(100, {9}, {1})).law;
}

std::string TagOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.tag();
  }
  return "";
}

TEST_CASE("pnk bound is the Cramer form at theta one half") {
  const auto params = make_params(100, {9}, {1});
  for (int k = 1; k <= 25; ++k) {
    const auto b = pnk_theoretical_bound(params, k);
    const double terms = 2.0 * k * (50 - k);
    CHECK(b.input("terms") == terms);
    const double expected =
        std::numbers::ln2 + terms * log_mgf(params, 0.5).value;
    CHECK(b.log_value == doctest::Approx(expected).epsilon(1e-15));
    CHECK(b.formula_id == "pnk_theta_half");
  }
  CHECK(pnk_theoretical_bound(params, 25).input("terms") == 100.0 * 100 / 8);
  CHECK(TagOf([&] { pnk_theoretical_bound(params, 26); }) == "k_range");
  CHECK(TagOf([&] { pnk_theoretical_bound(params, 0); }) == "k_range");
}

TEST_CASE("weightless colors drop out of the pnk bound") {
  const auto one = pnk_theoretical_bound(make_params(100, {9}, {1}), 3);
  const auto two = pnk_theoretical_bound(make_params(100, {9, 2}, {1, 2}), 3);
  CHECK(two.log_value == doctest::Approx(one.log_value).epsilon(1e-12));
}

TEST_CASE("cramer upper bound at the mean is vacuous") {
  const auto law = NineToOne();
  const auto b = cramer_upper_bound(law, 10, law.mean());
  CHECK(b.value == doctest::Approx(2.0));
  CHECK(b.vacuous);
}

TEST_CASE("cramer upper bound dominates the exact tail") {
  const auto law = NineToOne();
  const auto exact = oracle::exact_sum_distribution(law.atoms(), 10);
  const auto b = cramer_upper_bound(law, 10, 0.0);
  CHECK(b.value >= exact.tail_at_least(0.0));
  CHECK(!b.vacuous);
}

TEST_CASE("cramer upper bound flags thresholds past the support") {
  const auto law = NineToOne();
  const auto b = cramer_upper_bound(law, 10, law.max_value() + 1.0);
  CHECK(b.value == 0.0);
  CHECK(b.flag == "infinite_rate");
}

TEST_CASE("cramer lower bound clamps when the Chebyshev factor is negative") {
  const auto b = cramer_lower_bound(NineToOne(), 1, 0.0, 0.05);
  CHECK(b.value == 0.0);
  CHECK(b.vacuous);
}

TEST_CASE("cramer lower bound approaches one at the mean") {
  const auto law = NineToOne();
  double previous = 0.0;
  for (long long terms : {1000LL, 10000LL, 100000LL, 1000000LL}) {
    const double v = cramer_lower_bound(law, terms, law.mean(), 0.05).value;
    CHECK(v >= previous);
    previous = v;
  }
  CHECK(previous > 0.99);
}

TEST_CASE("cramer lower bound is dominated by the exact window") {
  const auto law = NineToOne();
  const auto exact = oracle::exact_sum_distribution(law.atoms(), 40);
  const auto b = cramer_lower_bound(law, 40, 0.0, 0.05);
  CHECK(b.value <= exact.probability_in_open(-2.0, 2.0));
  CHECK(b.input("eta") == doctest::Approx(
                              rate_function(law, 0.0).theta_star));
}

TEST_CASE("cramer lower bound outside the hull is zero with a flag") {
  const auto law = NineToOne();
  const auto b = cramer_lower_bound(law, 10, law.max_value() + 1.0, 0.1);
  CHECK(b.value == 0.0);
  CHECK(b.flag == "outside_hull");
  CHECK(TagOf([&] { cramer_lower_bound(law, 10, 0.0, 0.0); }) ==
        "epsilon_range");
}

TEST_CASE("cramer bounds bracket exact probabilities on random laws") {
  SplitMix64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const auto params = testing::RandomParams(
        rng, testing::RandomEvenN(rng, 10, 2000), 1 + static_cast<int>(rng.Below(2)));
    const auto law = pair_diff_distribution(params).law;
    const int terms = 1 + static_cast<int>(rng.Below(30));
    const auto exact = oracle::exact_sum_distribution(law.atoms(), terms);
    const double span = law.max_value() - law.min_value();
    const double thr = law.min_value() + span * rng.Uniform();
    CHECK(cramer_upper_bound(law, terms, thr).value + 1e-10 >=
          exact.tail_at_least(terms * thr));
    const double eps = 0.01 + 0.5 * rng.Uniform();
    CHECK(cramer_lower_bound(law, terms, thr, eps).value <=
          exact.probability_in_open(terms * (thr - eps), terms * (thr + eps)) +
              1e-10);
  }
}

TEST_CASE("union bound at divergence 4 decays") {
  const double frozen[] = {1.9911028476880351e-7, 4.2487949570230447e-9,
                           4.8736317589834119e-11};
  const int ns[] = {1000, 10000, 100000};
  double previous = 1.0;
  for (int i = 0; i < 3; ++i) {
    const auto b = ml_failure_union_bound(make_params(ns[i], {9}, {1}));
    CHECK(b.value == doctest::Approx(frozen[i]).epsilon(1e-9));
    CHECK(b.value < previous);
    CHECK(!b.vacuous);
    previous = b.value;
  }
}

TEST_CASE("union bound at divergence 1.07 is vacuous") {
  const double frozen_log[] = {std::log(74921432903.552583),
                               std::log(1.6006911441335255e+31),
                               std::log(4.7009993063241662e+90)};
  const int ns[] = {1000, 10000, 100000};
  for (int i = 0; i < 3; ++i) {
    const auto b = ml_failure_union_bound(make_params(ns[i], {3, 1}, {1, 3}));
    CHECK(b.vacuous);
    CHECK(b.log_value == doctest::Approx(frozen_log[i]).epsilon(1e-9));
  }
}

TEST_CASE("union bound term count") {
  CHECK(ml_failure_union_bound(make_params(8, {2}, {1})).input("k_terms") ==
        2.0);
}

TEST_CASE("delta complement bound") {
  const double frozen[] = {2.0141584433394342e-4, 1.5381710475301419e-5,
                           1.2318567989196033e-6};
  const int ns[] = {10000, 100000, 1000000};
  double previous = 1.0;
  for (int i = 0; i < 3; ++i) {
    const auto b = delta_complement_bound(ns[i], {9});
    CHECK(b.value == doctest::Approx(frozen[i]).epsilon(1e-9));
    CHECK(b.value < previous);
    previous = b.value;
  }
  // Far from the -2 log n asymptote at this size: log_n(value) ~ -0.985.
  CHECK(std::log(previous) / std::log(1e6) < -0.9);
  CHECK(delta_complement_bound(10000, {12}).value >
        delta_complement_bound(10000, {9}).value);
  CHECK(TagOf([] { delta_complement_bound(10, {9}); }) == "n_too_small");
}

TEST_CASE("chebyshev tail") {
  CHECK(chebyshev_tail(0.0, 1.0, 1e8).value == doctest::Approx(1.0));
  CHECK(chebyshev_tail(0.0, 0.0, 0.1).value == 1.0);
  CHECK(chebyshev_tail(0.0, 4.0, 1.0).value == 0.0);
  CHECK(chebyshev_tail(0.0, 1.0, 2.0).value == doctest::Approx(0.75));
  CHECK(TagOf([] { chebyshev_tail(0.0, 1.0, 0.0); }) == "t_range");
}

TEST_CASE("cross-sum chebyshev bound is dominated by the exact tail") {
  const auto params = make_params(10000, {9}, {1});
  const auto b = cross_sum_chebyshev_bound(params, 5.0);
  const int terms = static_cast<int>(b.input("terms"));
  CHECK(terms == 12);
  const auto z = cross_weight_distribution(params);
  const auto exact = oracle::exact_sum_distribution(z.atoms(), terms);
  CHECK(exact.tail_at_least(b.input("threshold")) >= b.value);
  CHECK(b.value > 0.0);
}

TEST_CASE("heavy neighbor bound is a valid lower bound") {
  const auto params = make_params(1000, {9}, {1});
  const auto b = heavy_neighbor_lower_bound(params);
  CHECK(b.formula_id == "heavy_neighbor_lower");
  CHECK(b.direction == BoundDirection::kLower);
  CHECK(b.value >= 0.0);
  CHECK(b.input("max_weight") == doctest::Approx(std::log(9.0)));
}

TEST_CASE("bound reports serialize as flat rows") {
  const auto j = to_json(ml_failure_union_bound(make_params(1000, {3, 1}, {1, 3})));
  CHECK(j.at("formula_id") == "ml_union");
  CHECK(j.at("vacuous") == true);
  CHECK(j.contains("n"));
  CHECK(j.contains("value"));
}

}  // namespace
}  // namespace csbm
