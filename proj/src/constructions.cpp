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

#include "sgq/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace sgq {

namespace {

std::string block_string(uint32_t mask) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int p = 0; p < 32; ++p)
    if (mask & (uint32_t(1) << p)) {
      if (!first) os << ",";
      os << (p + 1);
      first = false;
    }
  os << "}";
  return os.str();
}

std::vector<int64_t> encode(const OrderedGPartition& t) {
  std::vector<int64_t> key;
  for (auto [mask, g] : t.blocks) {
    key.push_back(mask);
    key.push_back(g);
  }
  return key;
}

// All ordered set partitions of {0..n-1} as block-mask sequences, sorted by
// (block count, lexicographic on the sequence).
std::vector<std::vector<uint32_t>> ordered_set_partitions(int n) {
  // Set partitions via restricted growth strings, then all orderings.
  std::vector<std::vector<uint32_t>> out;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int maxUsed) {
    if (i == n) {
      int r = maxUsed + 1;
      std::vector<uint32_t> blocks(r, 0);
      for (int p = 0; p < n; ++p) blocks[rgs[p]] |= uint32_t(1) << p;
      std::sort(blocks.begin(), blocks.end());
      do {
        out.push_back(blocks);
      } while (std::next_permutation(blocks.begin(), blocks.end()));
      return;
    }
    for (int b = 0; b <= maxUsed + 1; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(maxUsed, b));
    }
  };
  rec(1, 0);  // point 0 always starts block 0
  std::sort(out.begin(), out.end(),
            [](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

}  // namespace

HsiaoSemigroup hsiao_semigroup(int n, const FiniteSemigroup& G,
                               size_t element_cap) {
  if (n < 1 || n > 20) throw InputError("ordered G-partitions need 1 <= n <= 20");
  if (!passes_group_axioms(G))
    throw InputError("the label semigroup must be a group");
  HsiaoSemigroup H;
  H.n = n;
  H.base = G;

  auto shapes = ordered_set_partitions(n);
  size_t total = 0;
  for (const auto& s : shapes) {
    size_t labellings = 1;
    for (size_t j = 0; j < s.size(); ++j) labellings *= G.order;
    total += labellings;
    if (total > element_cap)
      throw InputError("ordered G-partition count exceeds the element cap of " +
                       std::to_string(element_cap));
  }

  for (const auto& s : shapes) {
    int r = static_cast<int>(s.size());
    std::vector<int> labels(r, 0);
    while (true) {
      OrderedGPartition t;
      for (int j = 0; j < r; ++j) t.blocks.emplace_back(s[j], labels[j]);
      H.elems.push_back(std::move(t));
      int j = r - 1;
      while (j >= 0 && labels[j] == G.order - 1) labels[j--] = 0;
      if (j < 0) break;
      ++labels[j];
    }
  }

  std::map<std::vector<int64_t>, int> index;
  for (size_t i = 0; i < H.elems.size(); ++i)
    index.emplace(encode(H.elems[i]), static_cast<int>(i));

  int N = static_cast<int>(H.elems.size());
  H.sg.order = N;
  H.sg.table.resize(static_cast<size_t>(N) * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      OrderedGPartition prod;
      for (auto [pm, pg] : H.elems[a].blocks)
        for (auto [qm, qg] : H.elems[b].blocks) {
          uint32_t mask = pm & qm;
          if (mask) prod.blocks.emplace_back(mask, G.mul(pg, qg));
        }
      auto it = index.find(encode(prod));
      if (it == index.end())
        throw InternalError("ordered G-partition product missing from enumeration");
      H.sg.table[static_cast<size_t>(a) * N + b] = it->second;
    }
  OrderedGPartition one;
  one.blocks.emplace_back((uint32_t(1) << n) - 1, *G.identity);
  H.sg.identity = index.at(encode(one));

  H.sg.labels.resize(N);
  for (int i = 0; i < N; ++i) {
    std::ostringstream os;
    for (size_t j = 0; j < H.elems[i].blocks.size(); ++j) {
      if (j) os << "|";
      os << block_string(H.elems[i].blocks[j].first) << ":"
         << H.elems[i].blocks[j].second;
    }
    H.sg.labels[i] = os.str();
  }

  if (!is_rrbg(opposite(H.sg)))
    throw InternalError("ordered G-partition monoid is not a left regular band of groups");
  return H;
}

namespace {

// Blocks of a J-class member sorted by smallest point, with the positions
// they occupy in the element's own sequence.
std::vector<std::pair<uint32_t, int>> sorted_block_positions(
    const OrderedGPartition& t) {
  std::vector<std::pair<uint32_t, int>> v;
  for (size_t j = 0; j < t.blocks.size(); ++j)
    v.emplace_back(t.blocks[j].first, static_cast<int>(j));
  std::sort(v.begin(), v.end());
  return v;
}

std::string labelled_partition_name(
    const std::vector<std::pair<uint32_t, int>>& sortedBlocks,
    const std::vector<int>& irrPerPosition,
    const std::vector<std::string>& baseLabels) {
  std::ostringstream os;
  for (size_t k = 0; k < sortedBlocks.size(); ++k) {
    if (k) os << "|";
    os << block_string(sortedBlocks[k].first) << ":"
       << baseLabels[irrPerPosition[sortedBlocks[k].second]];
  }
  return os.str();
}

}  // namespace

TableMap hsiao_tables(const HsiaoSemigroup& H, const Analysis& Aop,
                      const CharacterTable& baseTable) {
  TableMap out;
  int C = baseTable.nclasses();
  int nIrr = baseTable.nirr();
  for (int j = 0; j < Aop.green.nJ(); ++j) {
    const JClassRecord& rec = Aop.jrec[j];
    if (!rec.regular) throw InternalError("non-regular J-class in an RRBG");
    const OrderedGPartition& eTau = H.elems[rec.e];
    int r = static_cast<int>(eTau.blocks.size());
    for (auto [mask, g] : eTau.blocks)
      if (g != *H.base.identity)
        throw InternalError("chosen idempotent carries non-identity labels");

    const Subsemigroup& sub = rec.maxSubgroup;
    int order = sub.sg.order;
    // Coordinates of each subgroup member: label tuple in e's block order.
    std::vector<std::vector<int>> coord(order);
    for (int i = 0; i < order; ++i) {
      const OrderedGPartition& t = H.elems[sub.to_parent(i)];
      if (t.blocks.size() != eTau.blocks.size())
        throw InternalError("maximal subgroup member has a different shape");
      coord[i].resize(r);
      for (int k = 0; k < r; ++k) {
        if (t.blocks[k].first != eTau.blocks[k].first)
          throw InternalError("maximal subgroup member permutes the blocks");
        coord[i][k] = t.blocks[k].second;
      }
    }

    CharacterTable T;
    T.group = sub;
    T.conductor = baseTable.conductor;
    long nclasses = 1;
    for (int k = 0; k < r; ++k) nclasses *= C;
    T.classes.classes.resize(nclasses);
    T.classes.classOf.resize(order);
    for (int i = 0; i < order; ++i) {
      long c = 0;
      for (int k = 0; k < r; ++k)
        c = c * C + baseTable.classes.classOf[coord[i][k]];
      T.classes.classOf[i] = static_cast<int>(c);
      T.classes.classes[c].push_back(i);
    }
    T.classes.representatives.resize(nclasses);
    T.classes.inverseClass.resize(nclasses);
    for (long c = 0; c < nclasses; ++c) {
      if (T.classes.classes[c].empty())
        throw InternalError("empty class in a block power table");
      T.classes.representatives[c] = T.classes.classes[c].front();
      long ct = c, icls = 0;
      std::vector<int> digits(r);
      for (int k = r - 1; k >= 0; --k) {
        digits[k] = static_cast<int>(ct % C);
        ct /= C;
      }
      for (int k = 0; k < r; ++k)
        icls = icls * C + baseTable.classes.inverseClass[digits[k]];
      T.classes.inverseClass[c] = static_cast<int>(icls);
    }

    auto sortedBlocks = sorted_block_positions(eTau);
    long total = 1;
    for (int k = 0; k < r; ++k) total *= nIrr;
    for (long idx = 0; idx < total; ++idx) {
      std::vector<int> irrPerPosition(r);
      long it = idx;
      for (int k = r - 1; k >= 0; --k) {
        irrPerPosition[k] = static_cast<int>(it % nIrr);
        it /= nIrr;
      }
      T.labels.push_back(
          labelled_partition_name(sortedBlocks, irrPerPosition, baseTable.labels));
      std::vector<Cyclotomic> row(nclasses);
      for (long c = 0; c < nclasses; ++c) {
        long ct = c;
        std::vector<int> digits(r);
        for (int k = r - 1; k >= 0; --k) {
          digits[k] = static_cast<int>(ct % C);
          ct /= C;
        }
        Cyclotomic v(1);
        for (int k = 0; k < r; ++k)
          v *= baseTable.values[irrPerPosition[k]][digits[k]];
        row[c] = v;
      }
      T.values.push_back(std::move(row));
    }
    validate_table(T);
    out.emplace(j, std::move(T));
  }
  return out;
}

QuiverGraph hsiao_quiver_closed_form(int n, const CharacterTable& baseTable) {
  if (n < 1 || n > 20) throw InputError("labelled set partitions need 1 <= n <= 20");
  int nIrr = baseTable.nirr();

  // Unordered set partitions: block masks sorted ascending (= by minimum).
  std::vector<std::vector<uint32_t>> partitions;
  {
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int i, int maxUsed) {
      if (i == n) {
        std::vector<uint32_t> blocks(maxUsed + 1, 0);
        for (int p = 0; p < n; ++p) blocks[rgs[p]] |= uint32_t(1) << p;
        std::sort(blocks.begin(), blocks.end());
        partitions.push_back(std::move(blocks));
        return;
      }
      for (int b = 0; b <= maxUsed + 1; ++b) {
        rgs[i] = b;
        rec(i + 1, std::max(maxUsed, b));
      }
    };
    rec(1, 0);
    std::sort(partitions.begin(), partitions.end(),
              [](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
                if (a.size() != b.size()) return a.size() > b.size();
                return a < b;
              });
  }

  auto vertex_name = [&](const std::vector<uint32_t>& blocks,
                         const std::vector<int>& irr) {
    std::ostringstream os;
    for (size_t k = 0; k < blocks.size(); ++k) {
      if (k) os << "|";
      os << block_string(blocks[k]) << ":" << baseTable.labels[irr[k]];
    }
    return os.str();
  };

  QuiverGraph q;
  std::map<std::string, int> id;
  for (const auto& blocks : partitions) {
    int r = static_cast<int>(blocks.size());
    std::vector<int> irr(r, 0);
    while (true) {
      QuiverVertex v;
      v.id = static_cast<int>(q.vertices.size());
      v.jclass = static_cast<int>(blocks.size());  // informational only
      v.irr = vertex_name(blocks, irr);
      v.display = v.irr;
      id[v.display] = v.id;
      q.vertices.push_back(std::move(v));
      int k = r - 1;
      while (k >= 0 && irr[k] == nIrr - 1) irr[k--] = 0;
      if (k < 0) break;
      ++irr[k];
    }
  }

  // Tensor-product multiplicities of the base group, computed once.
  std::vector<std::vector<std::vector<long>>> tensorMult(
      nIrr, std::vector<std::vector<long>>(nIrr, std::vector<long>(nIrr, 0)));
  for (int i = 0; i < nIrr; ++i)
    for (int jj = 0; jj < nIrr; ++jj) {
      auto prod = tensor(baseTable.values[i], baseTable.values[jj]);
      for (int u = 0; u < nIrr; ++u)
        tensorMult[i][jj][u] =
            multiplicity_count(baseTable, prod, baseTable.values[u]);
    }

  for (const auto& blocks : partitions) {
    int r = static_cast<int>(blocks.size());
    if (r < 2) continue;
    std::vector<int> irr(r, 0);
    while (true) {
      int from = id.at(vertex_name(blocks, irr));
      for (int i = 0; i < r; ++i)
        for (int jj = i + 1; jj < r; ++jj) {
          // Merge blocks i and j, re-sort, keep the other labels.
          std::vector<std::pair<uint32_t, int>> rest;
          for (int k = 0; k < r; ++k)
            if (k != i && k != jj) rest.emplace_back(blocks[k], irr[k]);
          uint32_t merged = blocks[i] | blocks[jj];
          for (int u = 0; u < nIrr; ++u) {
            long mult = tensorMult[irr[i]][irr[jj]][u];
            if (mult == 0) continue;
            auto target = rest;
            target.emplace_back(merged, u);
            std::sort(target.begin(), target.end());
            std::vector<uint32_t> tBlocks;
            std::vector<int> tIrr;
            for (auto [m, lab] : target) {
              tBlocks.push_back(m);
              tIrr.push_back(lab);
            }
            int to = id.at(vertex_name(tBlocks, tIrr));
            q.arrows.push_back({from, to, mult});
          }
        }
      int k = r - 1;
      while (k >= 0 && irr[k] == nIrr - 1) irr[k--] = 0;
      if (k < 0) break;
      ++irr[k];
    }
  }
  return q;
}

FiniteSemigroup perm_group_with_constants(int degree,
                                          const std::vector<std::vector<int>>& generators,
                                          size_t element_cap) {
  for (const auto& g : generators) {
    if (g.size() != static_cast<size_t>(degree))
      throw InputError("generator map has wrong length");
    std::vector<bool> hit(degree, false);
    for (int v : g) {
      if (v < 0 || v >= degree) throw InputError("generator map value out of range");
      hit[v] = true;
    }
    for (bool h : hit)
      if (!h) throw InputError("generator is not a permutation");
  }
  FiniteSemigroup G = enumerate_from_generators(degree, generators, true, element_cap);

  std::vector<std::vector<int>> maps = G.maps;
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < maps.size(); ++i) index.emplace(maps[i], static_cast<int>(i));
  for (int p = 0; p < degree; ++p) {
    std::vector<int> c(degree, p);
    if (index.find(c) == index.end()) {
      index.emplace(c, static_cast<int>(maps.size()));
      maps.push_back(std::move(c));
    }
  }

  int N = static_cast<int>(maps.size());
  FiniteSemigroup S;
  S.order = N;
  S.degree = degree;
  S.maps = maps;
  S.identity = G.identity;
  S.table.resize(static_cast<size_t>(N) * N);
  std::vector<int> prod(degree);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      for (int p = 0; p < degree; ++p) prod[p] = maps[b][maps[a][p]];
      S.table[static_cast<size_t>(a) * N + b] = index.at(prod);
    }
  return S;
}

int permutation_rank(int degree, const std::vector<std::vector<int>>& generators,
                     size_t element_cap) {
  FiniteSemigroup G = enumerate_from_generators(degree, generators, true, element_cap);
  for (const auto& f : G.maps) {
    std::vector<bool> hit(degree, false);
    for (int v : f) hit[v] = true;
    for (bool h : hit)
      if (!h) throw InputError("generators do not generate a permutation group");
  }
  // Transitivity: the orbit of point 0 must cover everything.
  {
    std::vector<bool> seen(degree, false);
    seen[0] = true;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      for (const auto& f : G.maps)
        if (!seen[f[p]]) {
          seen[f[p]] = true;
          stack.push_back(f[p]);
        }
    }
    for (int p = 0; p < degree; ++p)
      if (!seen[p])
        throw PreconditionError("action is not transitive: point " +
                                std::to_string(p + 1) + " is not reached from 1");
  }
  // Orbits of the diagonal action on ordered pairs.
  std::vector<int> uf(static_cast<size_t>(degree) * degree);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };
  for (const auto& f : G.maps)
    for (int p = 0; p < degree; ++p)
      for (int r = 0; r < degree; ++r) {
        int a = find(p * degree + r);
        int b = find(f[p] * degree + f[r]);
        if (a != b) uf[a] = b;
      }
  int orbits = 0;
  for (int i = 0; i < degree * degree; ++i)
    if (find(i) == i) ++orbits;
  return orbits;
}

RepType representation_type(int degree,
                            const std::vector<std::vector<int>>& generators,
                            size_t element_cap) {
  int rk = permutation_rank(degree, generators, element_cap);
  if (rk <= 4) return RepType::Finite;
  if (rk == 5) return RepType::Tame;
  return RepType::Wild;
}

const char* rep_type_name(RepType t) {
  switch (t) {
    case RepType::Finite: return "Finite";
    case RepType::Tame: return "Tame";
    default: return "Wild";
  }
}

QuiverGraph gbar_quiver(const Analysis& A, const TableMap& tables) {
  if (!A.S.is_monoid() || !A.rrbg)
    throw PreconditionError("the constants construction must yield an RRBG monoid");
  if (A.green.nJ() != 2)
    throw PreconditionError("expected exactly two J-classes (units and constants)");
  int top = A.green.jClassOf[*A.S.identity];
  int bottom = 1 - top;
  const CharacterTable& TG = tables.at(top);
  const CharacterTable& TB = tables.at(bottom);
  if (TB.nirr() != 1)
    throw PreconditionError("the minimal ideal must have a trivial maximal subgroup");

  QuiverGraph q;
  std::map<std::pair<int, int>, int> vid;
  for (int pos = 0; pos < A.green.nJ(); ++pos) {
    int j = A.green.principalOrder[pos];
    const CharacterTable& T = tables.at(j);
    for (int i = 0; i < T.nirr(); ++i) {
      QuiverVertex v;
      v.id = static_cast<int>(q.vertices.size());
      v.jclass = j;
      v.irr = T.labels[i];
      v.display = "J" + std::to_string(j) + ":" + T.labels[i];
      vid[{j, i}] = v.id;
      q.vertices.push_back(std::move(v));
    }
  }

  const Subsemigroup& G = A.jrec[top].maxSubgroup;
  if (G.sg.maps.empty())
    throw PreconditionError("unit group carries no permutation realization");
  auto permChar = permutation_character(TG, G.sg.maps);
  int trivial = TG.trivial_irr();
  for (int i = 0; i < TG.nirr(); ++i) {
    long m = multiplicity_count(TG, permChar, TG.values[i]);
    if (i == trivial) m -= 1;
    if (m > 0) q.arrows.push_back({vid.at({bottom, 0}), vid.at({top, i}), m});
  }
  return q;
}

FiniteSemigroup rees_with_identity(const ReesSpec& spec) {
  if (!passes_group_axioms(spec.group))
    throw InputError("Rees spec needs a group");
  if (spec.l < 1 || spec.r < 1) throw InputError("Rees spec needs l, r >= 1");
  if (spec.P.size() != static_cast<size_t>(spec.r))
    throw InputError("sandwich array must have r rows");
  for (const auto& row : spec.P) {
    if (row.size() != static_cast<size_t>(spec.l))
      throw InputError("sandwich array must have l columns");
    for (int g : row)
      if (g < 0 || g >= spec.group.order)
        throw InputError("sandwich array entry out of range");
  }
  int nG = spec.group.order;
  int N = 1 + spec.l * nG * spec.r;
  auto enc = [&](int a, int g, int b) { return 1 + (a * nG + g) * spec.r + b; };

  std::vector<int> table(static_cast<size_t>(N) * N);
  for (int x = 0; x < N; ++x) table[x] = x;                           // 1 * x
  for (int x = 0; x < N; ++x) table[static_cast<size_t>(x) * N] = x;  // x * 1
  for (int a = 0; a < spec.l; ++a)
    for (int g = 0; g < nG; ++g)
      for (int b = 0; b < spec.r; ++b)
        for (int a2 = 0; a2 < spec.l; ++a2)
          for (int g2 = 0; g2 < nG; ++g2)
            for (int b2 = 0; b2 < spec.r; ++b2) {
              int prod = spec.group.mul(spec.group.mul(g, spec.P[b][a2]), g2);
              table[static_cast<size_t>(enc(a, g, b)) * N + enc(a2, g2, b2)] =
                  enc(a, prod, b2);
            }

  std::vector<std::string> labels(N);
  labels[0] = "1";
  for (int a = 0; a < spec.l; ++a)
    for (int g = 0; g < nG; ++g)
      for (int b = 0; b < spec.r; ++b)
        labels[enc(a, g, b)] = "(" + std::to_string(a) + "," +
                               std::to_string(g) + "," + std::to_string(b) + ")";
  return make_semigroup(N, std::move(table), 0, std::move(labels));
}

}  // namespace sgq
