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

#include <algorithm>
#include <string>

#include "csbm/error.h"
#include "csbm/oracle.h"

namespace csbm::oracle {
namespace {

std::vector<Atom> SortAndMerge(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return x.value < y.value; });
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (const auto& atom : atoms) {
    if (atom.prob <= 0.0) continue;
    if (!out.empty() && atom.value - out.back().value <= kAtomMergeTolerance) {
      out.back().prob += atom.prob;
    } else {
      out.push_back(atom);
    }
  }
  return out;
}

}  // namespace

double ExactLaw::total_mass() const {
  double mass = 0.0;
  for (const auto& atom : atoms_) mass += atom.prob;
  return mass;
}

double ExactLaw::tail_at_least(double t) const {
  double mass = 0.0;
  for (const auto& atom : atoms_) {
    if (atom.value >= t - kValueResolution) mass += atom.prob;
  }
  return mass;
}

double ExactLaw::probability_in_open(double lo, double hi) const {
  double mass = 0.0;
  for (const auto& atom : atoms_) {
    if (atom.value > lo + kValueResolution &&
        atom.value < hi - kValueResolution) {
      mass += atom.prob;
    }
  }
  return mass;
}

ExactLaw exact_sum_distribution(std::span<const Atom> law, int terms) {
  if (terms < 1) ThrowValidation("terms_range", "need at least one term");
  const std::vector<Atom> base =
      SortAndMerge(std::vector<Atom>(law.begin(), law.end()));
  std::vector<Atom> current = base;
  std::vector<Atom> next;
  for (int step = 1; step < terms; ++step) {
    next.clear();
    next.reserve(current.size() * base.size());
    for (const auto& x : current) {
      for (const auto& y : base) {
        next.push_back({x.value + y.value, x.prob * y.prob});
      }
    }
    current = SortAndMerge(std::move(next));
    next = {};
    if (static_cast<int64_t>(current.size()) > kExactLawAtomCap) {
      ThrowRuntime("oracle_blowup",
                   "exact sum law exceeded " +
                       std::to_string(kExactLawAtomCap) +
                       " atoms; use Monte Carlo instead");
    }
  }
  return ExactLaw(std::move(current));
}

}  // namespace csbm::oracle
