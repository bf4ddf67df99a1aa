// Copyright 2026 the sgq developers
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

#pragma once

#include <vector>

#include "sgq/rational.hpp"

namespace sgq {

//! Finite poset as a dense boolean order relation.  Reflexivity,
//! antisymmetry and transitivity are checked on construction.
struct FinitePoset {
  int size = 0;
  std::vector<bool> leq;  // row-major: leq[x*size+y] means x <= y

  bool le(int x, int y) const { return leq[static_cast<size_t>(x) * size + y]; }
  bool lt(int x, int y) const { return x != y && le(x, y); }
};

FinitePoset make_poset(int size, std::vector<bool> leq);

//! Covering pairs (x, y) with x < y and nothing strictly between.
std::vector<std::pair<int, int>> covers(const FinitePoset& p);

//! Mobius function, defined where leq holds: mu(x,x) = 1 and
//! sum_{x <= z <= y} mu(x,z) = 0 for x < y.
struct MobiusTable {
  int size = 0;
  std::vector<Rational> mu;  // row-major, meaningful where leq holds

  const Rational& operator()(int x, int y) const {
    return mu[static_cast<size_t>(x) * size + y];
  }
};

MobiusTable mobius(const FinitePoset& p);

//! All maximal chains, each as an increasing list of indices from a minimal
//! to a maximal element.  Depth-first with index-ordered branching.
std::vector<std::vector<int>> maximal_chains(const FinitePoset& p);

}  // namespace sgq
