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

#include "sgq/green.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace sgq {

namespace {

using Bits = std::vector<uint64_t>;

Bits make_bits(int n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, int i) { b[i >> 6] |= uint64_t(1) << (i & 63); }

bool subset(const Bits& a, const Bits& b) {
  for (size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

// Assign class ids by first occurrence of each distinct key.
std::pair<std::vector<int>, std::vector<std::vector<int>>> classify(
    const std::vector<Bits>& keys) {
  int n = static_cast<int>(keys.size());
  std::map<Bits, int> seen;
  std::vector<int> classOf(n);
  std::vector<std::vector<int>> classes;
  for (int s = 0; s < n; ++s) {
    auto it = seen.find(keys[s]);
    if (it == seen.end()) {
      int id = static_cast<int>(classes.size());
      seen.emplace(keys[s], id);
      classes.push_back({s});
      classOf[s] = id;
    } else {
      classOf[s] = it->second;
      classes[it->second].push_back(s);
    }
  }
  return {std::move(classOf), std::move(classes)};
}

}  // namespace

GreenData green_relations(const FiniteSemigroup& S) {
  int n = S.order;
  std::vector<Bits> rIdeal(n), lIdeal(n), jIdeal(n);
  for (int s = 0; s < n; ++s) {
    rIdeal[s] = make_bits(n);
    lIdeal[s] = make_bits(n);
    set_bit(rIdeal[s], s);
    set_bit(lIdeal[s], s);
    for (int t = 0; t < n; ++t) {
      set_bit(rIdeal[s], S.mul(s, t));
      set_bit(lIdeal[s], S.mul(t, s));
    }
  }
  for (int s = 0; s < n; ++s) {
    Bits b = make_bits(n);
    set_bit(b, s);
    for (int a = 0; a < n; ++a) {
      int as = S.mul(a, s);
      set_bit(b, as);
      set_bit(b, S.mul(s, a));
      for (int c = 0; c < n; ++c) set_bit(b, S.mul(as, c));
    }
    jIdeal[s] = std::move(b);
  }

  GreenData g;
  std::tie(g.rClassOf, g.rClasses) = classify(rIdeal);
  std::tie(g.lClassOf, g.lClasses) = classify(lIdeal);
  std::tie(g.jClassOf, g.jClasses) = classify(jIdeal);

  // H = R meet L, ids again by first occurrence.
  {
    std::map<std::pair<int, int>, int> seen;
    g.hClassOf.resize(n);
    for (int s = 0; s < n; ++s) {
      std::pair<int, int> key{g.rClassOf[s], g.lClassOf[s]};
      auto it = seen.find(key);
      if (it == seen.end()) {
        int id = static_cast<int>(g.hClasses.size());
        seen.emplace(key, id);
        g.hClasses.push_back({s});
        g.hClassOf[s] = id;
      } else {
        g.hClassOf[s] = it->second;
        g.hClasses[it->second].push_back(s);
      }
    }
  }

  int nj = g.nJ();
  g.jOrder.assign(static_cast<size_t>(nj) * nj, false);
  for (int i = 0; i < nj; ++i)
    for (int l = 0; l < nj; ++l)
      g.jOrder[static_cast<size_t>(i) * nj + l] =
          subset(jIdeal[g.jClasses[i][0]], jIdeal[g.jClasses[l][0]]);

  // Lexicographically smallest linear extension placing lower classes first.
  {
    std::vector<int> pending(nj);
    for (int i = 0; i < nj; ++i) {
      int below = 0;
      for (int l = 0; l < nj; ++l)
        if (g.jLt(l, i)) ++below;
      pending[i] = below;
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int i = 0; i < nj; ++i)
      if (pending[i] == 0) ready.push(i);
    g.principalPos.assign(nj, -1);
    while (!ready.empty()) {
      int i = ready.top();
      ready.pop();
      g.principalPos[i] = static_cast<int>(g.principalOrder.size());
      g.principalOrder.push_back(i);
      for (int l = 0; l < nj; ++l)
        if (g.jLt(i, l) && --pending[l] == 0) ready.push(l);
    }
    if (static_cast<int>(g.principalOrder.size()) != nj)
      throw InternalError("J-order is not a partial order");
  }
  return g;
}

FinitePoset jclass_poset(const GreenData& g) {
  return make_poset(g.nJ(), g.jOrder);
}

namespace {

JClassRecord build_jclass_record(const FiniteSemigroup& S, const GreenData& g,
                                 int j) {
  JClassRecord rec;
  rec.index = j;
  rec.elements = g.jClasses[j];
  for (int s : rec.elements)
    if (S.mul(s, s) == s) rec.idempotents.push_back(s);
  if (rec.idempotents.empty()) return rec;  // non-regular J-class

  rec.regular = true;
  rec.e = rec.idempotents.front();
  rec.maxSubgroup = maximal_subgroup(S, rec.e);

  // L-class and R-class ids occurring in J, ordered by smallest member.
  std::vector<int> lIds, rIds;
  {
    std::vector<bool> seenL(g.lClasses.size(), false),
        seenR(g.rClasses.size(), false);
    for (int s : rec.elements) {
      if (!seenL[g.lClassOf[s]]) {
        seenL[g.lClassOf[s]] = true;
        lIds.push_back(g.lClassOf[s]);
      }
      if (!seenR[g.rClassOf[s]]) {
        seenR[g.rClassOf[s]] = true;
        rIds.push_back(g.rClassOf[s]);
      }
    }
  }
  auto pick = [&](const std::vector<int>& candidates) {
    // Prefer the smallest idempotent, then the smallest element.
    int best = -1;
    for (int x : candidates)
      if (S.mul(x, x) == x && (best < 0 || x < best)) best = x;
    if (best < 0)
      for (int x : candidates)
        if (best < 0 || x < best) best = x;
    return best;
  };
  int re = g.rClassOf[rec.e], le = g.lClassOf[rec.e];
  for (int lid : lIds) {
    std::vector<int> cand;
    for (int s : rec.elements)
      if (g.rClassOf[s] == re && g.lClassOf[s] == lid) cand.push_back(s);
    if (cand.empty())
      throw InternalError("regular J-class with empty eggbox cell");
    rec.lTransversal.push_back(pick(cand));
  }
  for (int rid : rIds) {
    std::vector<int> cand;
    for (int s : rec.elements)
      if (g.lClassOf[s] == le && g.rClassOf[s] == rid) cand.push_back(s);
    if (cand.empty())
      throw InternalError("regular J-class with empty eggbox cell");
    rec.rTransversal.push_back(pick(cand));
  }
  // Green-Rees coordinates: |J| = |T| * |T'| * |G_e|.
  if (rec.elements.size() != rec.lTransversal.size() * rec.rTransversal.size() *
                                 rec.maxSubgroup.sg.order)
    throw InternalError("Green-Rees size identity fails on J-class " +
                        std::to_string(j));
  return rec;
}

}  // namespace

Analysis analyze(FiniteSemigroup S) {
  Analysis a;
  a.S = std::move(S);
  a.green = green_relations(a.S);
  int nj = a.green.nJ();
  for (int j = 0; j < nj; ++j)
    a.jrec.push_back(build_jclass_record(a.S, a.green, j));
  a.poset = jclass_poset(a.green);
  a.mobius = mobius(a.poset);
  a.regular = is_regular(a.S, &a.nonRegularWitness);
  a.rrbg = a.regular && is_rrbg(a.S);
  return a;
}

IdealSlice ideal_slices(const Analysis& A, int jclass) {
  IdealSlice sl;
  for (int s = 0; s < A.S.order; ++s) {
    int c = A.green.jClassOf[s];
    if (A.green.jLt(c, jclass)) sl.jBelow.push_back(s);
    if (!A.green.jLe(jclass, c)) sl.jNotUp.push_back(s);
  }
  auto check_ideal = [&](const std::vector<int>& I, const char* name) {
    std::vector<bool> in(A.S.order, false);
    for (int s : I) in[s] = true;
    for (int s : I)
      for (int t = 0; t < A.S.order; ++t)
        if (!in[A.S.mul(s, t)] || !in[A.S.mul(t, s)])
          throw InternalError(std::string(name) + " is not a two-sided ideal");
  };
  check_ideal(sl.jBelow, "jBelow");
  check_ideal(sl.jNotUp, "jNotUp");
  return sl;
}

Subsemigroup remove_jnotup(const Analysis& A, int jclass) {
  if (!A.S.is_monoid())
    throw PreconditionError("remove_jnotup requires a monoid");
  if (!A.rrbg)
    throw PreconditionError("remove_jnotup requires a right regular band of groups");
  std::vector<int> keep;
  for (int s = 0; s < A.S.order; ++s)
    if (A.green.jLe(jclass, A.green.jClassOf[s])) keep.push_back(s);
  return induced_subsemigroup(A.S, keep, A.S.identity);
}

}  // namespace sgq
