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

#include "sgq/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace sgq {

ConjugacyClasses conjugacy_classes(const FiniteSemigroup& G) {
  if (!passes_group_axioms(G))
    throw PreconditionError("conjugacy classes require a group");
  int n = G.order;
  std::vector<int> inv(n);
  for (int g = 0; g < n; ++g) inv[g] = inverse_in_group(G, g);

  ConjugacyClasses cc;
  cc.classOf.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (cc.classOf[s] >= 0) continue;
    int id = static_cast<int>(cc.classes.size());
    std::vector<int> orbit;
    for (int h = 0; h < n; ++h) {
      int c = G.mul(G.mul(h, s), inv[h]);
      if (cc.classOf[c] < 0) {
        cc.classOf[c] = id;
        orbit.push_back(c);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cc.classes.push_back(std::move(orbit));
    cc.representatives.push_back(cc.classes.back().front());
  }
  cc.inverseClass.resize(cc.classes.size());
  for (size_t c = 0; c < cc.classes.size(); ++c)
    cc.inverseClass[c] = cc.classOf[inv[cc.representatives[c]]];
  return cc;
}

const Cyclotomic& CharacterTable::value_ambient(int irr, int parentElem) const {
  int local = group.to_local(parentElem);
  if (local < 0)
    throw InternalError("element is not in the table's group");
  return value_local(irr, local);
}

long CharacterTable::degree(int irr) const {
  return to_long(value_local(irr, *group.sg.identity).rational_value());
}

int CharacterTable::trivial_irr() const {
  for (int i = 0; i < nirr(); ++i) {
    bool ones = true;
    for (int c = 0; c < nclasses() && ones; ++c)
      ones = values[i][c] == Cyclotomic(1);
    if (ones) return i;
  }
  throw InternalError("table has no trivial character");
}

bool CharacterTable::all_linear() const {
  for (int i = 0; i < nirr(); ++i)
    if (degree(i) != 1) return false;
  return true;
}

Cyclotomic inner_product(const CharacterTable& T,
                         const std::vector<Cyclotomic>& chi,
                         const std::vector<Cyclotomic>& psi) {
  if (chi.size() != static_cast<size_t>(T.nclasses()) ||
      psi.size() != static_cast<size_t>(T.nclasses()))
    throw InternalError("class function length mismatch");
  Cyclotomic sum(0);
  for (int c = 0; c < T.nclasses(); ++c) {
    long sz = static_cast<long>(T.classes.classes[c].size());
    sum += chi[c] * psi[T.classes.inverseClass[c]] * Cyclotomic(sz);
  }
  return sum * Cyclotomic(Rational(1, T.order()));
}

long multiplicity_count(const CharacterTable& T,
                        const std::vector<Cyclotomic>& chi,
                        const std::vector<Cyclotomic>& psi) {
  Cyclotomic ip = inner_product(T, chi, psi);
  if (!ip.is_integer())
    throw InternalError("character multiplicity " + ip.str() +
                        " is not an integer");
  long v = to_long(ip.rational_value());
  if (v < 0)
    throw InternalError("character multiplicity is negative: " +
                        std::to_string(v));
  return v;
}

std::vector<Cyclotomic> tensor(const std::vector<Cyclotomic>& chi,
                               const std::vector<Cyclotomic>& psi) {
  if (chi.size() != psi.size())
    throw InternalError("class function length mismatch");
  std::vector<Cyclotomic> out(chi.size());
  for (size_t i = 0; i < chi.size(); ++i) out[i] = chi[i] * psi[i];
  return out;
}

std::vector<Cyclotomic> permutation_character(
    const CharacterTable& T, const std::vector<std::vector<int>>& action) {
  if (action.size() != static_cast<size_t>(T.order()))
    throw InputError("action must give one map per group element");
  std::vector<Cyclotomic> out(T.nclasses());
  for (int c = 0; c < T.nclasses(); ++c) {
    const auto& f = action[T.classes.representatives[c]];
    long fixed = 0;
    for (size_t p = 0; p < f.size(); ++p)
      if (f[p] == static_cast<int>(p)) ++fixed;
    out[c] = Cyclotomic(fixed);
  }
  return out;
}

std::vector<Cyclotomic> restrict_along(const CharacterTable& T_source,
                                       const CharacterTable& T_target,
                                       const std::vector<int>& hom,
                                       const std::vector<Cyclotomic>& chi) {
  int n = T_source.order();
  if (hom.size() != static_cast<size_t>(n))
    throw InputError("homomorphism must be defined on every element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (hom[T_source.group.sg.mul(a, b)] !=
          T_target.group.sg.mul(hom[a], hom[b]))
        throw PreconditionError("map is not a homomorphism");
  std::vector<Cyclotomic> out(T_source.nclasses());
  for (int c = 0; c < T_source.nclasses(); ++c)
    out[c] = chi[T_target.classes.classOf[hom[T_source.classes.representatives[c]]]];
  return out;
}

void validate_table(const CharacterTable& T) {
  Rational degsum(0);
  for (int i = 0; i < T.nirr(); ++i) {
    Cyclotomic d = T.value_local(i, *T.group.sg.identity);
    if (!d.is_integer() || d.rational_value() <= 0)
      throw InternalError("character degree of row " + std::to_string(i) +
                          " is not a positive integer");
    degsum += d.rational_value() * d.rational_value();
  }
  if (degsum != Rational(T.order()))
    throw InternalError("degree-sum identity fails: got " + degsum.get_str() +
                        ", expected " + std::to_string(T.order()));
  for (int i = 0; i < T.nirr(); ++i)
    for (int j = 0; j < T.nirr(); ++j) {
      Cyclotomic ip = inner_product(T, T.values[i], T.values[j]);
      if (ip != Cyclotomic(i == j ? 1 : 0))
        throw InternalError("row orthogonality fails for rows " +
                            std::to_string(i) + ", " + std::to_string(j) +
                            ": got " + ip.str());
    }
}

CharacterTable abelian_character_table(const Subsemigroup& G) {
  const FiniteSemigroup& g = G.sg;
  if (!passes_group_axioms(g))
    throw PreconditionError("character table requires a group");
  int n = g.order;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) != g.mul(b, a))
        throw PreconditionError("abelian character table on a non-abelian group");
  int e = *g.identity;

  std::vector<long> ord(n, 1);
  long N = 1;
  for (int x = 0; x < n; ++x) {
    int p = x;
    long o = 1;
    while (p != e) {
      p = g.mul(p, x);
      ++o;
    }
    ord[x] = o;
    N = std::lcm(N, o);
  }

  // Grow a subgroup by elements of maximal order in the quotient, extending
  // each existing character in all (= quotient-order) ways.
  std::vector<bool> inH(n, false);
  inH[e] = true;
  std::vector<int> members{e};
  // Character = exponent vector v with value zeta_N^{v(x)}; -1 marks
  // elements where the character is not yet defined.
  std::vector<std::vector<long>> chars{std::vector<long>(n, -1)};
  chars[0][e] = 0;

  while (static_cast<int>(members.size()) < n) {
    int best = -1;
    long bestd = 0;
    for (int x = 0; x < n; ++x) {
      if (inH[x]) continue;
      int p = x;
      long d = 1;
      while (!inH[p]) {
        p = g.mul(p, x);
        ++d;
      }
      if (d > bestd) {
        bestd = d;
        best = x;
      }
    }
    int gen = best;
    long d = bestd;
    int gd = gen;
    for (long k = 1; k < d; ++k) gd = g.mul(gd, gen);  // gen^d, lands in H

    std::vector<std::vector<long>> next;
    for (const auto& v : chars) {
      long c = v[gd];
      std::vector<long> ws;
      for (long w = 0; w < N; ++w)
        if ((d * w) % N == c % N) ws.push_back(w);
      if (static_cast<long>(ws.size()) != d)
        throw InternalError("character extension count mismatch");
      for (long w : ws) {
        std::vector<long> v2 = v;
        long power_val = 0;  // w * a for gen^a
        int pa = e;          // gen^a
        for (long a = 0; a < d; ++a) {
          for (int h : members) {
            int x = g.mul(h, pa);
            v2[x] = (v[h] + power_val) % N;
          }
          pa = g.mul(pa, gen);
          power_val = (power_val + w) % N;
        }
        next.push_back(std::move(v2));
      }
    }
    chars = std::move(next);

    std::vector<int> grown;
    int pa = e;
    for (long a = 0; a < d; ++a) {
      for (int h : members) {
        int x = g.mul(h, pa);
        if (!inH[x]) {
          inH[x] = true;
        }
        grown.push_back(x);
      }
      pa = g.mul(pa, gen);
    }
    std::sort(grown.begin(), grown.end());
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    if (grown.size() != members.size() * d)
      throw InternalError("subgroup extension size mismatch");
    members = std::move(grown);
  }
  if (static_cast<int>(chars.size()) != n)
    throw InternalError("abelian table has wrong row count");
  std::sort(chars.begin(), chars.end());

  CharacterTable T;
  T.group = G;
  T.classes = conjugacy_classes(g);
  T.conductor = static_cast<unsigned>(N);
  for (int i = 0; i < n; ++i) {
    T.labels.push_back("chi" + std::to_string(i));
    std::vector<Cyclotomic> row(T.nclasses());
    for (int c = 0; c < T.nclasses(); ++c)
      row[c] = Cyclotomic::zeta(T.conductor, chars[i][T.classes.representatives[c]]);
    T.values.push_back(std::move(row));
  }
  validate_table(T);
  return T;
}

CharacterTable power_table(const CharacterTable& T, int r) {
  if (r < 1) throw InputError("power table needs r >= 1");
  if (r == 1) return T;
  int n = T.order();
  long order = 1;
  for (int i = 0; i < r; ++i) {
    order *= n;
    if (order > 1000000) throw InputError("direct power is too large");
  }

  auto decode = [&](long x) {
    std::vector<int> t(r);
    for (int j = r - 1; j >= 0; --j) {
      t[j] = static_cast<int>(x % n);
      x /= n;
    }
    return t;
  };

  FiniteSemigroup P;
  P.order = static_cast<int>(order);
  P.table.resize(static_cast<size_t>(order) * order);
  for (long a = 0; a < order; ++a) {
    auto ta = decode(a);
    for (long b = 0; b < order; ++b) {
      auto tb = decode(b);
      long prod = 0;
      for (int j = 0; j < r; ++j) prod = prod * n + T.group.sg.mul(ta[j], tb[j]);
      P.table[static_cast<size_t>(a) * order + b] = static_cast<int>(prod);
    }
  }
  long id = 0;
  for (int j = 0; j < r; ++j) id = id * n + *T.group.sg.identity;
  P.identity = static_cast<int>(id);

  CharacterTable R;
  R.group.sg = std::move(P);
  R.group.ambient.resize(order);
  std::iota(R.group.ambient.begin(), R.group.ambient.end(), 0);
  R.group.local = R.group.ambient;
  R.conductor = T.conductor;

  int C = T.nclasses();
  long nclasses = 1;
  for (int j = 0; j < r; ++j) nclasses *= C;
  R.classes.classes.resize(nclasses);
  R.classes.classOf.resize(order);
  for (long x = 0; x < order; ++x) {
    auto t = decode(x);
    long c = 0;
    for (int j = 0; j < r; ++j) c = c * C + T.classes.classOf[t[j]];
    R.classes.classOf[x] = static_cast<int>(c);
    R.classes.classes[c].push_back(static_cast<int>(x));
  }
  R.classes.representatives.resize(nclasses);
  R.classes.inverseClass.resize(nclasses);
  for (long c = 0; c < nclasses; ++c) {
    if (R.classes.classes[c].empty())
      throw InternalError("empty product conjugacy class");
    R.classes.representatives[c] = R.classes.classes[c].front();
    long ct = c, icls = 0;
    std::vector<int> digits(r);
    for (int j = r - 1; j >= 0; --j) {
      digits[j] = static_cast<int>(ct % C);
      ct /= C;
    }
    for (int j = 0; j < r; ++j)
      icls = icls * C + T.classes.inverseClass[digits[j]];
    R.classes.inverseClass[c] = static_cast<int>(icls);
  }

  long nirr = 1;
  for (int j = 0; j < r; ++j) nirr *= T.nirr();
  for (long i = 0; i < nirr; ++i) {
    std::vector<int> idx(r);
    long it = i;
    for (int j = r - 1; j >= 0; --j) {
      idx[j] = static_cast<int>(it % T.nirr());
      it /= T.nirr();
    }
    std::ostringstream lab;
    for (int j = 0; j < r; ++j) {
      if (j) lab << "*";
      lab << T.labels[idx[j]];
    }
    R.labels.push_back(lab.str());
    std::vector<Cyclotomic> row(nclasses);
    for (long c = 0; c < nclasses; ++c) {
      long ct = c;
      std::vector<int> digits(r);
      for (int j = r - 1; j >= 0; --j) {
        digits[j] = static_cast<int>(ct % C);
        ct /= C;
      }
      Cyclotomic v(1);
      for (int j = 0; j < r; ++j) v *= T.values[idx[j]][digits[j]];
      row[c] = v;
    }
    R.values.push_back(std::move(row));
  }
  validate_table(R);
  return R;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxPart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxPart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Rational symmetric_character(const std::vector<int>& lambda,
                             const std::vector<int>& mu) {
  long sl = std::accumulate(lambda.begin(), lambda.end(), 0L);
  long sm = std::accumulate(mu.begin(), mu.end(), 0L);
  if (sl != sm) throw InputError("partitions of different sizes");

  // Memo is per call: cheap at this scale and safe for concurrent callers.
  std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> memo;
  std::function<Rational(std::vector<int>, std::vector<int>)> mn =
      [&](std::vector<int> lam, std::vector<int> m) -> Rational {
    if (lam.empty()) return Rational(1);
    auto key = std::make_pair(lam, m);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int t = m[0];
    std::vector<int> mrest(m.begin() + 1, m.end());
    // Beta-set: strictly decreasing first-column hook lengths.
    int k = static_cast<int>(lam.size());
    std::vector<long> beta(k);
    for (int j = 0; j < k; ++j) beta[j] = lam[j] + (k - 1 - j);
    Rational total(0);
    for (int j = 0; j < k; ++j) {
      long target = beta[j] - t;
      if (target < 0) continue;
      bool clash = false;
      int between = 0;
      for (int i = 0; i < k; ++i) {
        if (i == j) continue;
        if (beta[i] == target) clash = true;
        if (beta[i] > target && beta[i] < beta[j]) ++between;
      }
      if (clash) continue;
      std::vector<long> nb = beta;
      nb[j] = target;
      std::sort(nb.begin(), nb.end(), std::greater<long>());
      std::vector<int> nl;
      for (int i = 0; i < k; ++i) {
        long part = nb[i] - (k - 1 - i);
        if (part < 0) throw InternalError("negative part in strip removal");
        if (part > 0) nl.push_back(static_cast<int>(part));
      }
      Rational term = mn(nl, mrest);
      total += (between % 2 == 0) ? term : -term;
    }
    memo.emplace(key, total);
    return total;
  };
  return mn(lambda, mu);
}

namespace {

std::string partition_label(const std::vector<int>& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ",";
    os << p[i];
  }
  os << ")";
  return os.str();
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  int d = static_cast<int>(perm.size());
  std::vector<bool> seen(d, false);
  std::vector<int> type;
  for (int p = 0; p < d; ++p) {
    if (seen[p]) continue;
    int len = 0, q = p;
    while (!seen[q]) {
      seen[q] = true;
      q = perm[q];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

CharacterTable symmetric_character_table(const Subsemigroup& G) {
  const FiniteSemigroup& g = G.sg;
  if (g.maps.empty())
    throw PreconditionError("symmetric table needs a permutation realization");
  int d = g.degree;
  if (d > 12 || g.order != factorial(d))
    throw PreconditionError("group is not a full symmetric group");
  for (const auto& f : g.maps) {
    std::vector<bool> hit(d, false);
    for (int v : f) hit[v] = true;
    for (bool h : hit)
      if (!h) throw PreconditionError("non-permutation element");
  }

  auto parts = partitions_of(d);
  std::map<std::vector<int>, int> classIndex;
  for (size_t c = 0; c < parts.size(); ++c) classIndex[parts[c]] = static_cast<int>(c);

  CharacterTable T;
  T.group = G;
  T.conductor = 1;
  T.classes.classes.resize(parts.size());
  T.classes.classOf.resize(g.order);
  for (int s = 0; s < g.order; ++s) {
    int c = classIndex.at(cycle_type(g.maps[s]));
    T.classes.classOf[s] = c;
    T.classes.classes[c].push_back(s);
  }
  for (size_t c = 0; c < parts.size(); ++c) {
    if (T.classes.classes[c].empty())
      throw InternalError("cycle type with no representative");
    T.classes.representatives.push_back(T.classes.classes[c].front());
    T.classes.inverseClass.push_back(static_cast<int>(c));
    // |class| = d! / z_mu with z_mu = prod i^{m_i} m_i!.
    long z = 1;
    int run = 1;
    for (size_t i = 0; i < parts[c].size(); ++i) {
      z *= parts[c][i];
      if (i + 1 < parts[c].size() && parts[c][i + 1] == parts[c][i]) {
        ++run;
        z *= run;
      } else {
        run = 1;
      }
    }
    if (static_cast<long>(T.classes.classes[c].size()) != factorial(d) / z)
      throw InternalError("conjugacy class size mismatch for cycle type " +
                          partition_label(parts[c]));
  }
  for (const auto& lam : parts) {
    T.labels.push_back(partition_label(lam));
    std::vector<Cyclotomic> row(parts.size());
    for (size_t c = 0; c < parts.size(); ++c)
      row[c] = Cyclotomic(symmetric_character(lam, parts[c]));
    T.values.push_back(std::move(row));
  }
  validate_table(T);
  return T;
}

CharacterTable builtin_table_for(const Subsemigroup& G) {
  const FiniteSemigroup& g = G.sg;
  if (!passes_group_axioms(g))
    throw PreconditionError("character tables are defined for groups only");
  bool abelian = true;
  for (int a = 0; a < g.order && abelian; ++a)
    for (int b = a + 1; b < g.order && abelian; ++b)
      abelian = g.mul(a, b) == g.mul(b, a);
  if (abelian) return abelian_character_table(G);
  if (!g.maps.empty() && g.degree <= 12 && g.order == factorial(g.degree)) {
    bool all_perms = true;
    for (const auto& f : g.maps) {
      std::vector<bool> hit(g.degree, false);
      for (int v : f) hit[v] = true;
      for (bool h : hit) all_perms = all_perms && h;
    }
    if (all_perms) return symmetric_character_table(G);
  }
  throw InputError(
      "no built-in character table for this group; import one from a file");
}

}  // namespace sgq
