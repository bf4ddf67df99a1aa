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

#include "sgq/rep_theory.hpp"

#include <algorithm>
#include <map>

namespace sgq {

SandwichMatrix sandwich_matrix(const Analysis& A, int jclass) {
  const JClassRecord& rec = A.jrec[jclass];
  if (!rec.regular)
    throw PreconditionError("sandwich matrix of a non-regular J-class " +
                            std::to_string(jclass));
  SandwichMatrix C;
  C.jclass = jclass;
  C.rowReps = rec.lTransversal;
  C.colReps = rec.rTransversal;
  C.nrows = static_cast<int>(C.rowReps.size());
  C.ncols = static_cast<int>(C.colReps.size());
  C.entries.assign(static_cast<size_t>(C.nrows) * C.ncols, -1);
  std::vector<bool> rowHit(C.nrows, false), colHit(C.ncols, false);
  for (int b = 0; b < C.nrows; ++b)
    for (int a = 0; a < C.ncols; ++a) {
      int p = A.S.mul(C.rowReps[b], C.colReps[a]);
      if (A.green.jClassOf[p] != jclass) continue;
      if (rec.maxSubgroup.to_local(p) < 0)
        throw InternalError("sandwich entry escapes the maximal subgroup");
      C.entries[static_cast<size_t>(b) * C.ncols + a] = p;
      rowHit[b] = colHit[a] = true;
    }
  for (bool h : rowHit)
    if (!h) throw InternalError("sandwich matrix has a zero row");
  for (bool h : colHit)
    if (!h) throw InternalError("sandwich matrix has a zero column");
  return C;
}

InvertibilityReport left_invertible_over_group_algebra(const Analysis& A,
                                                       const SandwichMatrix& C) {
  const Subsemigroup& G = A.jrec[C.jclass].maxSubgroup;
  int n = G.sg.order;
  ExactMatrix M(static_cast<size_t>(C.nrows) * n, static_cast<size_t>(C.ncols) * n);
  for (int b = 0; b < C.nrows; ++b)
    for (int a = 0; a < C.ncols; ++a) {
      int p = C.entry(b, a);
      if (p < 0) continue;
      int g = G.to_local(p);
      // Regular representation block: (x, y) = 1 iff x g = y.
      for (int x = 0; x < n; ++x)
        M.at(static_cast<size_t>(b) * n + x,
             static_cast<size_t>(a) * n + G.sg.mul(x, g)) = Cyclotomic(1);
    }
  InvertibilityReport rep;
  rep.rank = M.rank();
  rep.needed = static_cast<size_t>(C.ncols) * n;
  rep.invertible = rep.rank == rep.needed;
  return rep;
}

DirectednessReport directedness(const Analysis& A) {
  if (!A.regular)
    throw PreconditionError("directedness defined for regular semigroups; element " +
                            A.S.label_of(A.nonRegularWitness) +
                            " has no weak inverse");
  DirectednessReport out;
  out.directed = true;
  for (int j = 0; j < A.green.nJ(); ++j) {
    auto C = sandwich_matrix(A, j);
    auto rep = left_invertible_over_group_algebra(A, C);
    out.perClass.emplace_back(j, rep);
    out.directed = out.directed && rep.invertible;
  }
  return out;
}

SchutzRep schutzenberger_rep(const Analysis& A, int jclass) {
  const JClassRecord& rec = A.jrec[jclass];
  if (!rec.regular)
    throw PreconditionError("Schutzenberger representation needs a regular J-class");
  const GreenData& g = A.green;
  SchutzRep rep;
  rep.jclass = jclass;
  rep.basis = rec.lTransversal;
  int l = static_cast<int>(rep.basis.size());
  std::map<int, int> colOfLClass;
  for (int b = 0; b < l; ++b) colOfLClass[g.lClassOf[rep.basis[b]]] = b;
  const Subsemigroup& G = rec.maxSubgroup;

  rep.rm.assign(A.S.order, std::vector<std::pair<int, int>>(
                               l, std::make_pair(-1, -1)));
  for (int s = 0; s < A.S.order; ++s)
    for (int b = 0; b < l; ++b) {
      int x = A.S.mul(rep.basis[b], s);
      if (g.jClassOf[x] != jclass) continue;
      auto it = colOfLClass.find(g.lClassOf[x]);
      if (it == colOfLClass.end())
        throw InternalError("image left a transversal L-class");
      int col = it->second;
      // x = h * basis[col] for a unique h in the maximal subgroup.
      int h = -1;
      for (int cand = 0; cand < G.sg.order && h < 0; ++cand)
        if (A.S.mul(G.to_parent(cand), rep.basis[col]) == x) h = cand;
      if (h < 0)
        throw InternalError("row-monomial coordinate has no group part");
      rep.rm[s][b] = {col, G.to_parent(h)};
    }
  return rep;
}

std::vector<Cyclotomic> theta_of_induced(const Analysis& A, int jclass,
                                         const CharacterTable& T, int irr) {
  if (!A.rrbg)
    throw PreconditionError("induced-module characters are computed for RRBG monoids");
  const JClassRecord& rec = A.jrec[jclass];
  int eJ = rec.e;
  std::vector<Cyclotomic> theta(A.S.order, Cyclotomic(0));
  for (int s = 0; s < A.S.order; ++s) {
    if (!A.green.jLe(jclass, A.green.jClassOf[s])) continue;  // theta(s) = 0
    Cyclotomic sum(0);
    for (int e : rec.idempotents) {
      int es = A.S.mul(e, s);
      if (omega_power(A.S, es) != e) continue;
      sum += T.value_ambient(irr, A.S.mul(es, eJ));
    }
    theta[s] = sum;
  }
  return theta;
}

std::optional<long> simple_dimension(const Analysis& A, int jclass,
                                     const CharacterTable& T, int irr,
                                     const std::map<int, ExactMatrix>* matrices) {
  auto C = sandwich_matrix(A, jclass);
  const Subsemigroup& G = A.jrec[jclass].maxSubgroup;
  long deg = T.degree(irr);
  if (deg == 1) {
    ExactMatrix M(C.nrows, C.ncols);
    for (int b = 0; b < C.nrows; ++b)
      for (int a = 0; a < C.ncols; ++a) {
        int p = C.entry(b, a);
        if (p >= 0) M.at(b, a) = T.value_ambient(irr, p);
      }
    return static_cast<long>(M.rank());
  }
  if (!matrices) return std::nullopt;  // unavailable without explicit matrices
  size_t D = static_cast<size_t>(deg);
  ExactMatrix M(C.nrows * D, C.ncols * D);
  for (int b = 0; b < C.nrows; ++b)
    for (int a = 0; a < C.ncols; ++a) {
      int p = C.entry(b, a);
      if (p < 0) continue;
      auto it = matrices->find(G.to_local(p));
      if (it == matrices->end() || it->second.rows() != D ||
          it->second.cols() != D)
        throw InputError("missing or misshapen representation matrix");
      for (size_t r = 0; r < D; ++r)
        for (size_t c = 0; c < D; ++c)
          M.at(b * D + r, a * D + c) = it->second.at(r, c);
    }
  return static_cast<long>(M.rank());
}

SimpleModuleRecord simple_module(const Analysis& A, int jclass,
                                 const CharacterTable& T, int irr) {
  SimpleModuleRecord rec;
  rec.apex = jclass;
  rec.irrLabel = T.labels[irr];
  rec.character = T.values[irr];
  rec.dim = simple_dimension(A, jclass, T, irr);
  if (rec.dim && *rec.dim < T.degree(irr))
    throw InternalError("simple module smaller than its inducing representation");
  return rec;
}

SemisimpleQuotientData semisimple_quotient(const Analysis& A) {
  if (!A.S.is_monoid() || !A.rrbg)
    throw PreconditionError("semisimple quotient is computed for RRBG monoids");
  int n = A.S.order;
  int nj = A.green.nJ();
  SemisimpleQuotientData out;
  out.componentMaps.assign(nj, std::vector<int>(n, -1));
  for (int i = 0; i < nj; ++i) {
    int ei = A.jrec[i].e;
    const Subsemigroup& Gi = A.jrec[i].maxSubgroup;
    out.totalDim += Gi.sg.order;
    for (int s = 0; s < n; ++s) {
      if (!A.green.jLe(i, A.green.jClassOf[s])) continue;
      int v = A.S.mul(s, ei);
      if (Gi.to_local(v) < 0)
        throw InternalError("component map left the maximal subgroup");
      out.componentMaps[i][s] = v;
    }
  }
  // Componentwise multiplicativity of psi.
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      int st = A.S.mul(s, t);
      for (int i = 0; i < nj; ++i) {
        int cs = out.componentMaps[i][s], ct = out.componentMaps[i][t];
        int cst = out.componentMaps[i][st];
        if (cs < 0 || ct < 0) {
          if (cst >= 0)
            throw InternalError("semisimple quotient: support mismatch");
        } else if (cst < 0 || A.S.mul(cs, ct) != cst) {
          throw InternalError("semisimple quotient map is not multiplicative");
        }
      }
    }

  // Kernel of psi as the nullspace of the (sum |G_i|) x |S| incidence map.
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < nj; ++i)
    for (int gl = 0; gl < A.jrec[i].maxSubgroup.sg.order; ++gl) {
      int target = A.jrec[i].maxSubgroup.to_parent(gl);
      std::vector<Rational> row(n, Rational(0));
      bool nonzero = false;
      for (int s = 0; s < n; ++s)
        if (out.componentMaps[i][s] == target) {
          row[s] = Rational(1);
          nonzero = true;
        }
      if (nonzero) rows.push_back(std::move(row));
    }
  // Rational echelon of the row space; kernel = orthogonal complement in the
  // coordinate sense (free columns of the RREF).
  {
    ExactMatrix M(rows.size(), n);
    for (size_t r = 0; r < rows.size(); ++r)
      for (int c = 0; c < n; ++c)
        if (rows[r][c] != 0) M.at(r, c) = Cyclotomic(rows[r][c]);
    auto basis = M.nullspace();
    for (auto& v : basis) {
      std::vector<Rational> rv(n);
      for (int c = 0; c < n; ++c) rv[c] = v[c].rational_value();
      out.kernelBasis.push_back(std::move(rv));
    }
  }
  out.kernelDim = static_cast<long>(out.kernelBasis.size());
  if (out.kernelDim != n - out.totalDim)
    throw InternalError("semisimple quotient kernel dimension mismatch");

  // Nilpotency of the kernel, with products taken in the semigroup algebra.
  auto convolve = [&A, n](const std::vector<Rational>& u,
                          const std::vector<Rational>& v) {
    std::vector<Rational> w(n, Rational(0));
    for (int s = 0; s < n; ++s) {
      if (u[s] == 0) continue;
      for (int t = 0; t < n; ++t) {
        if (v[t] == 0) continue;
        w[A.S.mul(s, t)] += u[s] * v[t];
      }
    }
    return w;
  };
  auto idx = nilpotency_index_span(out.kernelBasis, n, convolve);
  if (!idx)
    throw InternalError("semisimple quotient kernel is not nilpotent");
  out.nilpotencyIndex = *idx;
  return out;
}

long multiplicity(const Analysis& A, const std::vector<Cyclotomic>& theta,
                  int jTarget, const CharacterTable& T, int irr) {
  if (!A.rrbg)
    throw PreconditionError("multiplicity formula applies to RRBG monoids");
  const Subsemigroup& G = A.jrec[jTarget].maxSubgroup;
  Cyclotomic total(0);
  for (int gl = 0; gl < G.sg.order; ++gl) {
    int ginv = inverse_in_group(G.sg, gl);
    Cyclotomic inner(0);
    for (int m = 0; m < A.green.nJ(); ++m) {
      if (!A.green.jLe(m, jTarget)) continue;
      int gem = A.S.mul(G.to_parent(gl), A.jrec[m].e);
      inner += theta[gem] * Cyclotomic(A.mobius(m, jTarget));
    }
    total += T.value_local(irr, ginv) * inner;
  }
  total = total * Cyclotomic(Rational(1, G.sg.order));
  if (!total.is_integer())
    throw InternalError("multiplicity " + total.str() + " is not an integer");
  long v = to_long(total.rational_value());
  if (v < 0) throw InternalError("negative multiplicity " + std::to_string(v));
  return v;
}

TableMap resolve_tables(const Analysis& A, const TableMap& user) {
  TableMap out;
  for (int j = 0; j < A.green.nJ(); ++j) {
    if (!A.jrec[j].regular) continue;
    auto it = user.find(j);
    if (it != user.end()) {
      out.emplace(j, it->second);
    } else {
      out.emplace(j, builtin_table_for(A.jrec[j].maxSubgroup));
    }
  }
  return out;
}

CartanResult cartan_matrix(const Analysis& A, const TableMap& tables,
                           bool with_oracle) {
  if (!A.S.is_monoid())
    throw PreconditionError("Cartan matrix requires a monoid");
  if (!A.rrbg)
    throw PreconditionError("Cartan matrix is computed for RRBG monoids");
  CartanResult R;
  for (int pos = 0; pos < A.green.nJ(); ++pos) {
    int j = A.green.principalOrder[pos];
    const CharacterTable& T = tables.at(j);
    for (int v = 0; v < T.nirr(); ++v) {
      R.vertices.emplace_back(j, v);
      R.vertexLabels.push_back("J" + std::to_string(j) + ":" + T.labels[v]);
    }
  }
  size_t N = R.vertices.size();
  R.matrix.assign(N, std::vector<long>(N, 0));

  for (size_t p = 0; p < N; ++p) {
    auto [ji, vi] = R.vertices[p];
    const CharacterTable& TV = tables.at(ji);
    const Subsemigroup& Gi = A.jrec[ji].maxSubgroup;
    for (size_t q = 0; q < N; ++q) {
      auto [jl, wl] = R.vertices[q];
      if (ji == jl) {
        R.matrix[p][q] = (vi == wl) ? 1 : 0;
        continue;
      }
      if (!A.green.jLt(jl, ji)) continue;  // zero unless row apex above column apex
      const CharacterTable& TW = tables.at(jl);
      int el = A.jrec[jl].e;
      Cyclotomic sum(0);
      for (int gl = 0; gl < Gi.sg.order; ++gl) {
        int g = Gi.to_parent(gl);
        Cyclotomic inner(0);
        for (int m = 0; m < A.green.nJ(); ++m) {
          if (!(A.green.jLe(jl, m) && A.green.jLe(m, ji))) continue;
          int gem = A.S.mul(g, A.jrec[m].e);
          Cyclotomic strip(0);
          for (int e : A.jrec[jl].idempotents) {
            if (omega_power(A.S, A.S.mul(e, gem)) != e) continue;
            strip += TW.value_ambient(wl, A.S.mul(A.S.mul(e, g), el));
          }
          inner += strip * Cyclotomic(A.mobius(m, ji));
        }
        sum += TV.value_local(vi, inverse_in_group(Gi.sg, gl)) * inner;
      }
      sum = sum * Cyclotomic(Rational(1, Gi.sg.order));
      if (!sum.is_integer())
        throw InternalError("Cartan entry " + sum.str() + " is not an integer");
      long val = to_long(sum.rational_value());
      if (val < 0) throw InternalError("negative Cartan entry");
      R.matrix[p][q] = val;
    }
  }

  if (with_oracle) {
    for (size_t q = 0; q < N; ++q) {
      auto [jl, wl] = R.vertices[q];
      auto theta = theta_of_induced(A, jl, tables.at(jl), wl);
      for (size_t p = 0; p < N; ++p) {
        auto [ji, vi] = R.vertices[p];
        long m = multiplicity(A, theta, ji, tables.at(ji), vi);
        if (m != R.matrix[p][q])
          throw InternalError(
              "Cartan routes disagree at (" + R.vertexLabels[p] + ", " +
              R.vertexLabels[q] + "): closed form " +
              std::to_string(R.matrix[p][q]) + ", multiplicity formula " +
              std::to_string(m));
      }
    }
    R.oracleChecked = true;
  }

  // Unipotence under the principal order.
  for (size_t p = 0; p < N; ++p) {
    if (R.matrix[p][p] != 1) throw InternalError("Cartan diagonal is not 1");
    for (size_t q = 0; q < N; ++q) {
      auto [ji, vi] = R.vertices[p];
      auto [jl, wl] = R.vertices[q];
      if (p != q && R.matrix[p][q] != 0 && !A.green.jLt(jl, ji))
        throw InternalError("Cartan matrix is not unitriangular");
    }
  }
  return R;
}

int nico_sigma(const Analysis& A, int jclass) {
  const auto& J = A.jrec[jclass].elements;
  int b = static_cast<int>(J.size());
  std::vector<int> posOf(A.S.order, -1);
  for (int i = 0; i < b; ++i) posOf[J[i]] = i;
  // Contracted product: x * y = xy when xy stays in J, zero otherwise.
  auto cmul = [&](int x, int y) { return posOf[A.S.mul(J[x], J[y])]; };

  // A left identity u = sum c_x x needs sum_{x: x*y = z} c_x = [z == y];
  // rows are deduplicated before solving.
  auto solvable = [&](bool left) {
    std::map<std::vector<char>, Rational> rowset;
    for (int y = 0; y < b; ++y) {
      std::vector<std::vector<char>> rows(b, std::vector<char>(b, 0));
      for (int x = 0; x < b; ++x) {
        int z = left ? cmul(x, y) : cmul(y, x);
        if (z >= 0) rows[z][x] = 1;
      }
      for (int z = 0; z < b; ++z) {
        Rational rhs(z == y ? 1 : 0);
        auto it = rowset.find(rows[z]);
        if (it == rowset.end()) {
          bool nonzero = rhs != 0;
          for (char c : rows[z]) nonzero = nonzero || c;
          if (nonzero) rowset.emplace(std::move(rows[z]), rhs);
        } else if (it->second != rhs) {
          return false;  // identical coefficients, conflicting right sides
        }
      }
    }
    std::vector<std::vector<Rational>> M;
    std::vector<Rational> rhs;
    for (const auto& [row, r] : rowset) {
      std::vector<Rational> rr(b);
      for (int x = 0; x < b; ++x) rr[x] = Rational(row[x]);
      M.push_back(std::move(rr));
      rhs.push_back(r);
    }
    return solve_rational(std::move(M), std::move(rhs)).has_value();
  };
  bool leftId = solvable(true);
  bool rightId = solvable(false);
  if (leftId && rightId) return 0;
  if (leftId || rightId) return 1;
  return 2;
}

NicoData nico_bound(const Analysis& A) {
  NicoData out;
  out.sigma.resize(A.green.nJ());
  for (int j = 0; j < A.green.nJ(); ++j) out.sigma[j] = nico_sigma(A, j);
  out.bound = 0;
  for (const auto& chain : maximal_chains(A.poset)) {
    long tau = 0;
    for (int j : chain) tau += out.sigma[j];
    out.bound = std::max(out.bound, tau);
  }
  return out;
}

}  // namespace sgq
