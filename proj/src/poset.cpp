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

#include "sgq/poset.hpp"

#include <functional>

#include "sgq/errors.hpp"

namespace sgq {

FinitePoset make_poset(int size, std::vector<bool> leq) {
  if (size < 0 || leq.size() != static_cast<size_t>(size) * size)
    throw InputError("poset relation has wrong size");
  FinitePoset p;
  p.size = size;
  p.leq = std::move(leq);
  for (int x = 0; x < size; ++x)
    if (!p.le(x, x)) throw InputError("poset relation is not reflexive");
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      if (x != y && p.le(x, y) && p.le(y, x))
        throw InputError("poset relation is not antisymmetric");
      if (!p.le(x, y)) continue;
      for (int z = 0; z < size; ++z)
        if (p.le(y, z) && !p.le(x, z))
          throw InputError("poset relation is not transitive");
    }
  return p;
}

std::vector<std::pair<int, int>> covers(const FinitePoset& p) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < p.size; ++x)
    for (int y = 0; y < p.size; ++y) {
      if (!p.lt(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < p.size && cover; ++z)
        cover = !(p.lt(x, z) && p.lt(z, y));
      if (cover) out.emplace_back(x, y);
    }
  return out;
}

MobiusTable mobius(const FinitePoset& p) {
  MobiusTable t;
  t.size = p.size;
  t.mu.assign(static_cast<size_t>(p.size) * p.size, Rational(0));
  // mu(x,y) by increasing number of elements in the interval; the recursion
  // mu(x,y) = -sum_{x <= z < y} mu(x,z) only needs values at shorter
  // intervals, so iterate y in a linear extension from below.
  std::vector<int> order(p.size);
  std::vector<bool> placed(p.size, false);
  for (int k = 0; k < p.size; ++k) {
    int pick = -1;
    for (int y = 0; y < p.size && pick < 0; ++y) {
      if (placed[y]) continue;
      bool ready = true;
      for (int z = 0; z < p.size && ready; ++z)
        ready = placed[z] || !p.lt(z, y);
      if (ready) pick = y;
    }
    if (pick < 0) throw InternalError("poset has no linear extension");
    placed[pick] = true;
    order[k] = pick;
  }
  for (int x = 0; x < p.size; ++x) {
    for (int yi = 0; yi < p.size; ++yi) {
      int y = order[yi];
      if (!p.le(x, y)) continue;
      if (x == y) {
        t.mu[static_cast<size_t>(x) * p.size + y] = Rational(1);
        continue;
      }
      Rational sum(0);
      for (int z = 0; z < p.size; ++z)
        if (p.le(x, z) && p.lt(z, y))
          sum += t.mu[static_cast<size_t>(x) * p.size + z];
      t.mu[static_cast<size_t>(x) * p.size + y] = -sum;
    }
  }
  return t;
}

std::vector<std::vector<int>> maximal_chains(const FinitePoset& p) {
  auto cov = covers(p);
  std::vector<std::vector<int>> up(p.size);
  for (auto [x, y] : cov) up[x].push_back(y);  // y ascending per x already
  std::vector<std::vector<int>> chains;
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int x) {
    chain.push_back(x);
    if (up[x].empty())
      chains.push_back(chain);
    else
      for (int y : up[x]) extend(y);
    chain.pop_back();
  };
  for (int x = 0; x < p.size; ++x) {
    bool minimal = true;
    for (int z = 0; z < p.size && minimal; ++z) minimal = !p.lt(z, x);
    if (minimal) extend(x);
  }
  return chains;
}

}  // namespace sgq
