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

#include "sgq/semigroup.hpp"

#include <algorithm>
#include <map>

namespace sgq {

std::string FiniteSemigroup::label_of(int s) const {
  if (!labels.empty()) return labels[s];
  return "#" + std::to_string(s);
}

FiniteSemigroup make_semigroup(int order, std::vector<int> table,
                               std::optional<int> identity,
                               std::vector<std::string> labels) {
  if (order <= 0) throw InputError("semigroup order must be positive");
  if (table.size() != static_cast<size_t>(order) * order)
    throw InputError("multiplication table has wrong size");
  for (size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0 || table[i] >= order)
      throw InputError("table entry out of range at row " +
                       std::to_string(i / order) + ", column " +
                       std::to_string(i % order));
  }
  FiniteSemigroup S;
  S.order = order;
  S.table = std::move(table);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (S.mul(S.mul(a, b), c) != S.mul(a, S.mul(b, c)))
          throw InputError("table is not associative: (a,b,c) = (" +
                           std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")");
  if (identity) {
    int e = *identity;
    if (e < 0 || e >= order) throw InputError("identity index out of range");
    for (int x = 0; x < order; ++x)
      if (S.mul(e, x) != x || S.mul(x, e) != x)
        throw InputError("declared identity " + std::to_string(e) +
                         " fails at element " + std::to_string(x));
    S.identity = e;
  }
  if (!labels.empty()) {
    if (labels.size() != static_cast<size_t>(order))
      throw InputError("labels list has wrong size");
    S.labels = std::move(labels);
  }
  return S;
}

FiniteSemigroup enumerate_from_generators(int degree,
                                          const std::vector<std::vector<int>>& generators,
                                          bool adjoin_identity,
                                          size_t element_cap) {
  if (degree <= 0) throw InputError("degree must be positive");
  for (const auto& g : generators) {
    if (g.size() != static_cast<size_t>(degree))
      throw InputError("generator map has wrong length");
    for (int v : g)
      if (v < 0 || v >= degree)
        throw InputError("generator map value out of range");
  }
  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;

  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  auto intern = [&](const std::vector<int>& f) -> int {
    auto it = index.find(f);
    if (it != index.end()) return it->second;
    if (elems.size() >= element_cap)
      throw InputError("enumeration exceeded the element cap of " +
                       std::to_string(element_cap));
    int id_new = static_cast<int>(elems.size());
    elems.push_back(f);
    index.emplace(f, id_new);
    return id_new;
  };

  std::vector<std::vector<int>> gens;
  for (const auto& g : generators)
    if (index.find(g) == index.end()) {
      intern(g);
      gens.push_back(g);
    }

  // Breadth-first closure under right composition by the generators.
  for (size_t head = 0; head < elems.size(); ++head) {
    std::vector<int> cur = elems[head];  // copy: elems may reallocate
    for (const auto& g : gens) {
      std::vector<int> prod(degree);
      for (int p = 0; p < degree; ++p) prod[p] = g[cur[p]];
      intern(prod);
    }
  }

  std::optional<int> identity;
  auto idit = index.find(id);
  if (idit != index.end()) {
    identity = idit->second;
  } else if (adjoin_identity) {
    // The identity map becomes element 0; shift everything else up.
    elems.insert(elems.begin(), id);
    identity = 0;
  }
  if (elems.empty()) throw InputError("no generators and no identity to adjoin");

  int n = static_cast<int>(elems.size());
  FiniteSemigroup S;
  S.order = n;
  S.degree = degree;
  S.maps = elems;
  S.identity = identity;
  S.table.resize(static_cast<size_t>(n) * n);
  std::map<std::vector<int>, int> full_index;
  for (int i = 0; i < n; ++i) full_index.emplace(elems[i], i);
  std::vector<int> prod(degree);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int p = 0; p < degree; ++p) prod[p] = elems[b][elems[a][p]];
      auto it = full_index.find(prod);
      if (it == full_index.end())
        throw InternalError("closure is not closed under composition");
      S.table[static_cast<size_t>(a) * n + b] = it->second;
    }
  return S;
}

int omega_power(const FiniteSemigroup& S, int s) {
  int p = s;
  for (int k = 0; k <= 2 * S.order + 1; ++k) {
    if (S.mul(p, p) == p) return p;
    p = S.mul(p, s);
  }
  throw InternalError("no idempotent power found");
}

FiniteSemigroup opposite(const FiniteSemigroup& S) {
  FiniteSemigroup T;
  T.order = S.order;
  T.identity = S.identity;
  T.labels = S.labels;
  T.table.resize(S.table.size());
  for (int a = 0; a < S.order; ++a)
    for (int b = 0; b < S.order; ++b)
      T.table[static_cast<size_t>(a) * S.order + b] = S.mul(b, a);
  return T;
}

bool is_regular(const FiniteSemigroup& S, int* witness) {
  for (int s = 0; s < S.order; ++s) {
    bool ok = false;
    for (int t = 0; t < S.order && !ok; ++t)
      ok = S.mul(S.mul(s, t), s) == s;
    if (!ok) {
      if (witness) *witness = s;
      return false;
    }
  }
  return true;
}

bool is_rrbg(const FiniteSemigroup& S) {
  std::vector<int> omega(S.order);
  for (int s = 0; s < S.order; ++s) {
    omega[s] = omega_power(S, s);
    if (S.mul(omega[s], s) != s) return false;
  }
  for (int s = 0; s < S.order; ++s)
    for (int t = 0; t < S.order; ++t) {
      int tso = S.mul(t, omega[s]);
      if (S.mul(omega[s], tso) != tso) return false;
    }
  return true;
}

bool passes_group_axioms(const FiniteSemigroup& S) {
  if (!S.identity) return false;
  int e = *S.identity;
  for (int g = 0; g < S.order; ++g) {
    bool has_inverse = false;
    for (int h = 0; h < S.order && !has_inverse; ++h)
      has_inverse = S.mul(g, h) == e && S.mul(h, g) == e;
    if (!has_inverse) return false;
  }
  return true;
}

int inverse_in_group(const FiniteSemigroup& G, int g) {
  if (!G.identity) throw PreconditionError("group has no identity");
  for (int h = 0; h < G.order; ++h)
    if (G.mul(g, h) == *G.identity && G.mul(h, g) == *G.identity) return h;
  throw PreconditionError("element " + std::to_string(g) + " has no inverse");
}

Subsemigroup induced_subsemigroup(const FiniteSemigroup& S,
                                  const std::vector<int>& elements,
                                  std::optional<int> identity_parent) {
  Subsemigroup sub;
  sub.ambient = elements;
  std::sort(sub.ambient.begin(), sub.ambient.end());
  sub.local.assign(S.order, -1);
  for (size_t i = 0; i < sub.ambient.size(); ++i)
    sub.local[sub.ambient[i]] = static_cast<int>(i);
  int n = static_cast<int>(sub.ambient.size());
  sub.sg.order = n;
  sub.sg.table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = S.mul(sub.ambient[a], sub.ambient[b]);
      if (sub.local[p] < 0)
        throw InternalError("element subset is not closed under multiplication");
      sub.sg.table[static_cast<size_t>(a) * n + b] = sub.local[p];
    }
  if (identity_parent) {
    int e = sub.local[*identity_parent];
    if (e < 0) throw InternalError("identity is not in the subset");
    sub.sg.identity = e;
  }
  if (!S.labels.empty()) {
    sub.sg.labels.resize(n);
    for (int i = 0; i < n; ++i) sub.sg.labels[i] = S.labels[sub.ambient[i]];
  }
  if (!S.maps.empty()) {
    sub.sg.degree = S.degree;
    sub.sg.maps.resize(n);
    for (int i = 0; i < n; ++i) sub.sg.maps[i] = S.maps[sub.ambient[i]];
  }
  return sub;
}

Subsemigroup maximal_subgroup(const FiniteSemigroup& S, int e) {
  if (S.mul(e, e) != e)
    throw PreconditionError("element " + std::to_string(e) +
                            " is not idempotent");
  // H-class of e: elements with the same principal right and left ideals.
  auto right_ideal = [&](int s) {
    std::vector<bool> in(S.order, false);
    in[s] = true;
    for (int t = 0; t < S.order; ++t) in[S.mul(s, t)] = true;
    return in;
  };
  auto left_ideal = [&](int s) {
    std::vector<bool> in(S.order, false);
    in[s] = true;
    for (int t = 0; t < S.order; ++t) in[S.mul(t, s)] = true;
    return in;
  };
  auto re = right_ideal(e), le = left_ideal(e);
  std::vector<int> h;
  for (int s = 0; s < S.order; ++s)
    if (right_ideal(s) == re && left_ideal(s) == le) h.push_back(s);
  Subsemigroup sub = induced_subsemigroup(S, h, e);
  if (!passes_group_axioms(sub.sg))
    throw InternalError("H-class of idempotent fails the group axioms");
  return sub;
}

Subsemigroup local_monoid(const FiniteSemigroup& S, int e) {
  if (S.mul(e, e) != e)
    throw PreconditionError("element " + std::to_string(e) +
                            " is not idempotent");
  std::vector<bool> seen(S.order, false);
  std::vector<int> elems;
  for (int s = 0; s < S.order; ++s) {
    int x = S.mul(S.mul(e, s), e);
    if (!seen[x]) {
      seen[x] = true;
      elems.push_back(x);
    }
  }
  return induced_subsemigroup(S, elems, e);
}

FiniteSemigroup with_adjoined_identity(const FiniteSemigroup& S) {
  FiniteSemigroup T;
  T.order = S.order + 1;
  T.identity = 0;
  T.table.resize(static_cast<size_t>(T.order) * T.order);
  for (int a = 0; a < T.order; ++a)
    for (int b = 0; b < T.order; ++b) {
      int v;
      if (a == 0)
        v = b;
      else if (b == 0)
        v = a;
      else
        v = S.mul(a - 1, b - 1) + 1;
      T.table[static_cast<size_t>(a) * T.order + b] = v;
    }
  if (!S.labels.empty()) {
    T.labels.resize(T.order);
    T.labels[0] = "1";
    for (int i = 0; i < S.order; ++i) T.labels[i + 1] = S.labels[i];
  }
  return T;
}

}  // namespace sgq
