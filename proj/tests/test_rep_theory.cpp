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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sgq/constructions.hpp"
#include "sgq/rep_theory.hpp"

using namespace sgq;

namespace {

FiniteSemigroup trivial_group() { return make_semigroup(1, {0}, 0); }

FiniteSemigroup cyclic(int k) {
  std::vector<int> gen(k);
  for (int i = 0; i < k; ++i) gen[i] = (i + 1) % k;
  return enumerate_from_generators(k, {gen}, false);
}

Analysis sigma_op(int n, const FiniteSemigroup& G) {
  return analyze(opposite(hsiao_semigroup(n, G).sg));
}

ReesSpec rees_c2_spec() {
  ReesSpec spec;
  spec.group = cyclic(2);
  spec.l = spec.r = 2;
  int e = *spec.group.identity;
  int g = 1 - e;
  spec.P = {{e, e}, {e, g}};
  return spec;
}

}  // namespace

TEST_CASE("sandwich matrices") {
  // a group: single 1x1 matrix containing the identity
  auto A = analyze(cyclic(3));
  auto C = sandwich_matrix(A, 0);
  CHECK(C.nrows == 1);
  CHECK(C.ncols == 1);
  CHECK(C.entry(0, 0) == *A.S.identity);

  // the Rees example: 2x2 with entries {e, e; e, g} up to transversal order
  auto Ar = analyze(rees_with_identity(rees_c2_spec()));
  int big = Ar.jrec[0].elements.size() == 8 ? 0 : 1;
  auto Cr = sandwich_matrix(Ar, big);
  CHECK(Cr.nrows == 2);
  CHECK(Cr.ncols == 2);
  int e = Ar.jrec[big].e;
  int nonIdentity = 0;
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a) {
      int p = Cr.entry(b, a);
      REQUIRE(p >= 0);
      if (p != e) ++nonIdentity;
    }
  CHECK(nonIdentity == 1);

  // every J-class of an RRBG has a single-column sandwich matrix
  auto Ah = sigma_op(3, cyclic(2));
  for (int j = 0; j < Ah.green.nJ(); ++j) {
    auto Cj = sandwich_matrix(Ah, j);
    CHECK(Cj.ncols == 1);
    for (int b = 0; b < Cj.nrows; ++b) CHECK(Cj.entry(b, 0) >= 0);
  }
}

TEST_CASE("left invertibility and directedness") {
  // RRBG: every class is left invertible, the whole algebra is directed
  auto Ah = sigma_op(2, cyclic(2));
  auto rep = directedness(Ah);
  CHECK(rep.directed);

  // the Rees C2 example: expansion rank 3 of 4
  auto Ar = analyze(rees_with_identity(rees_c2_spec()));
  auto repRees = directedness(Ar);
  CHECK(!repRees.directed);
  bool sawRank3 = false;
  for (const auto& [j, inv] : repRees.perClass)
    if (!inv.invertible) {
      CHECK(inv.rank == 3);
      CHECK(inv.needed == 4);
      sawRank3 = true;
    }
  CHECK(sawRank3);

  // groups are directed
  CHECK(directedness(analyze(cyclic(5))).directed);

  // non-regular input is a precondition violation
  auto null2 = make_semigroup(2, {1, 1, 1, 1}, std::nullopt);
  CHECK_THROWS_AS(directedness(analyze(null2)), PreconditionError);
}

TEST_CASE("schutzenberger representation is row monomial and multiplicative") {
  auto A = sigma_op(2, cyclic(2));
  for (int j = 0; j < A.green.nJ(); ++j) {
    auto rep = schutzenberger_rep(A, j);
    int l = static_cast<int>(rep.basis.size());
    // multiplicativity over the G-or-zero semiring
    for (int s = 0; s < A.S.order; ++s)
      for (int t = 0; t < A.S.order; ++t) {
        int st = A.S.mul(s, t);
        for (int b = 0; b < l; ++b) {
          auto [c1, g1] = rep.rm[s][b];
          std::pair<int, int> expect{-1, -1};
          if (c1 >= 0) {
            auto [c2, g2] = rep.rm[t][c1];
            if (c2 >= 0) expect = {c2, A.S.mul(g1, g2)};
          }
          CHECK(rep.rm[st][b] == expect);
        }
      }
    // zero off the up-set
    for (int s = 0; s < A.S.order; ++s) {
      if (A.green.jLe(j, A.green.jClassOf[s])) continue;
      for (int b = 0; b < l; ++b) CHECK(rep.rm[s][b].first == -1);
    }
  }
}

TEST_CASE("theta of an induced module") {
  // Sigma_2^trivial opposite: theta(1) = 2, theta at the right-zero
  // elements is 1
  auto A = sigma_op(2, trivial_group());
  int minClass = A.green.principalOrder.front();
  auto T = builtin_table_for(A.jrec[minClass].maxSubgroup);
  auto theta = theta_of_induced(A, minClass, T, 0);
  CHECK(theta[*A.S.identity] == Cyclotomic(2));
  for (int s : A.jrec[minClass].elements) CHECK(theta[s] == Cyclotomic(1));

  // theta(1) = |E(J)| for a trivial character over any RRBG class
  auto A2 = sigma_op(2, cyclic(2));
  for (int j = 0; j < A2.green.nJ(); ++j) {
    auto Tj = builtin_table_for(A2.jrec[j].maxSubgroup);
    auto th = theta_of_induced(A2, j, Tj, Tj.trivial_irr());
    CHECK(th[*A2.S.identity] ==
          Cyclotomic(static_cast<long>(A2.jrec[j].idempotents.size())));
    // zero off the up-set
    for (int s = 0; s < A2.S.order; ++s)
      if (!A2.green.jLe(j, A2.green.jClassOf[s]))
        CHECK(th[s] == Cyclotomic(0));
  }

  // agreement with the trace of the Schutzenberger matrices under the
  // one-dimensional representation
  auto A3 = sigma_op(2, cyclic(3));
  for (int j = 0; j < A3.green.nJ(); ++j) {
    auto Tj = builtin_table_for(A3.jrec[j].maxSubgroup);
    auto rep = schutzenberger_rep(A3, j);
    for (int irr = 0; irr < Tj.nirr(); ++irr) {
      auto th = theta_of_induced(A3, j, Tj, irr);
      for (int s = 0; s < A3.S.order; ++s) {
        Cyclotomic trace(0);
        for (size_t b = 0; b < rep.basis.size(); ++b) {
          auto [col, g] = rep.rm[s][b];
          if (col == static_cast<int>(b)) trace += Tj.value_ambient(irr, g);
        }
        CHECK(trace == th[s]);
      }
    }
  }
}

TEST_CASE("simple dimensions via the sandwich matrix") {
  // group case: dim V
  auto Ag = analyze(cyclic(4));
  auto Tg = builtin_table_for(Ag.jrec[0].maxSubgroup);
  for (int i = 0; i < Tg.nirr(); ++i)
    CHECK(simple_dimension(Ag, 0, Tg, i) == 1);

  // min ideal of Sigma_2^trivial opposite, trivial module: dim 1
  auto A = sigma_op(2, trivial_group());
  int minClass = A.green.principalOrder.front();
  auto T = builtin_table_for(A.jrec[minClass].maxSubgroup);
  CHECK(simple_dimension(A, minClass, T, 0) == 1);

  // Rees C2 example: sign character gives rank 2
  auto Ar = analyze(rees_with_identity(rees_c2_spec()));
  int big = Ar.jrec[0].elements.size() == 8 ? 0 : 1;
  auto Tr = builtin_table_for(Ar.jrec[big].maxSubgroup);
  int sgn = 1 - Tr.trivial_irr();
  CHECK(simple_dimension(Ar, big, Tr, sgn) == 2);
  CHECK(simple_dimension(Ar, big, Tr, Tr.trivial_irr()) == 1);
}

TEST_CASE("simple module records") {
  auto A = sigma_op(2, cyclic(2));
  auto tables = resolve_tables(A, {});
  for (int j = 0; j < A.green.nJ(); ++j) {
    const auto& T = tables.at(j);
    for (int i = 0; i < T.nirr(); ++i) {
      auto rec = simple_module(A, j, T, i);
      CHECK(rec.apex == j);
      CHECK(rec.irrLabel == T.labels[i]);
      REQUIRE(rec.dim.has_value());
      // single-column sandwich matrices: the simple is the coinduced module
      // and its dimension is exactly chi(1)
      CHECK(*rec.dim == T.degree(i));
      CHECK(rec.character == T.values[i]);
    }
  }
}

TEST_CASE("semisimple quotient") {
  // a group: kernel 0
  auto Ag = analyze(cyclic(3));
  auto qg = semisimple_quotient(Ag);
  CHECK(qg.totalDim == 3);
  CHECK(qg.kernelDim == 0);
  CHECK(qg.nilpotencyIndex == 1);

  // Sigma_2^trivial opposite: total 2, kernel 1-dimensional, (a-b)^2 = 0
  auto A = sigma_op(2, trivial_group());
  auto q = semisimple_quotient(A);
  CHECK(q.totalDim == 2);
  CHECK(q.kernelDim == 1);
  CHECK(q.nilpotencyIndex == 2);

  // Sigma_2^{C2} opposite: total 2 + 4 = 6, kernel 4
  auto A2 = sigma_op(2, cyclic(2));
  auto q2 = semisimple_quotient(A2);
  CHECK(q2.totalDim == 6);
  CHECK(q2.kernelDim == 4);

  // non-RRBG monoids are rejected
  auto Ar = analyze(rees_with_identity(rees_c2_spec()));
  CHECK_THROWS_AS(semisimple_quotient(Ar), PreconditionError);
}

TEST_CASE("multiplicity formula on Sigma_2^trivial opposite") {
  auto A = sigma_op(2, trivial_group());
  int minClass = A.green.principalOrder.front();
  int topClass = A.green.principalOrder.back();
  auto Tmin = builtin_table_for(A.jrec[minClass].maxSubgroup);
  auto Ttop = builtin_table_for(A.jrec[topClass].maxSubgroup);
  auto theta = theta_of_induced(A, minClass, Tmin, 0);
  // theta(1) * mu(top,top) + theta(e_min) * mu(min,top) = 2 - 1 = 1
  CHECK(multiplicity(A, theta, topClass, Ttop, 0) == 1);
  CHECK(multiplicity(A, theta, minClass, Tmin, 0) == 1);
}

TEST_CASE("multiplicity of the inducing simple is one") {
  auto A = sigma_op(2, cyclic(2));
  auto tables = resolve_tables(A, {});
  for (int j = 0; j < A.green.nJ(); ++j) {
    const auto& T = tables.at(j);
    for (int i = 0; i < T.nirr(); ++i) {
      auto theta = theta_of_induced(A, j, T, i);
      CHECK(multiplicity(A, theta, j, T, i) == 1);
    }
  }
}

TEST_CASE("composition mass of an induced module") {
  // summed over simples weighted by their dimensions, the multiplicity
  // formula accounts for dim Ind = chi_W(1) |E(J)|
  auto A = sigma_op(2, cyclic(2));
  auto tables = resolve_tables(A, {});
  for (int j = 0; j < A.green.nJ(); ++j) {
    const auto& TW = tables.at(j);
    for (int w = 0; w < TW.nirr(); ++w) {
      auto theta = theta_of_induced(A, j, TW, w);
      long mass = 0;
      for (int i = 0; i < A.green.nJ(); ++i) {
        const auto& TV = tables.at(i);
        for (int v = 0; v < TV.nirr(); ++v) {
          long mult = multiplicity(A, theta, i, TV, v);
          auto dim = simple_dimension(A, i, TV, v);
          REQUIRE(dim.has_value());
          mass += mult * *dim;
        }
      }
      CHECK(mass == TW.degree(w) *
                        static_cast<long>(A.jrec[j].idempotents.size()));
    }
  }
}

TEST_CASE("cartan matrix of Sigma_2^trivial opposite") {
  auto A = sigma_op(2, trivial_group());
  auto tables = resolve_tables(A, {});
  auto cr = cartan_matrix(A, tables, true);
  REQUIRE(cr.vertices.size() == 2);
  CHECK(cr.oracleChecked);
  // principal order puts the minimal class first; in (top, min) order the
  // matrix reads [[1,1],[0,1]]
  CHECK(cr.matrix[0][0] == 1);
  CHECK(cr.matrix[0][1] == 0);
  CHECK(cr.matrix[1][0] == 1);
  CHECK(cr.matrix[1][1] == 1);
}

TEST_CASE("cartan routes agree and the matrix is unipotent") {
  for (int n : {2, 3}) {
    auto A = sigma_op(n, trivial_group());
    auto tables = resolve_tables(A, {});
    auto cr = cartan_matrix(A, tables, true);  // throws on route disagreement
    CHECK(cr.oracleChecked);
    for (size_t p = 0; p < cr.matrix.size(); ++p)
      CHECK(cr.matrix[p][p] == 1);
  }
  auto A = sigma_op(2, cyclic(2));
  auto cr = cartan_matrix(A, resolve_tables(A, {}), true);
  CHECK(cr.oracleChecked);
  // single J-class of a group: identity Cartan matrix
  auto Ag = analyze(cyclic(4));
  auto crg = cartan_matrix(Ag, resolve_tables(Ag, {}), true);
  for (size_t p = 0; p < crg.matrix.size(); ++p)
    for (size_t q = 0; q < crg.matrix.size(); ++q)
      CHECK(crg.matrix[p][q] == (p == q ? 1 : 0));
}

TEST_CASE("cartan routes agree on the 74-element case") {
  auto c2 = cyclic(2);
  auto H = hsiao_semigroup(3, c2);
  auto A = analyze(opposite(H.sg));
  Subsemigroup base;
  base.sg = c2;
  base.ambient = {0, 1};
  base.local = {0, 1};
  auto tables = hsiao_tables(H, A, builtin_table_for(base));
  auto cr = cartan_matrix(A, tables, true);  // throws on route disagreement
  CHECK(cr.matrix.size() == 22);
  CHECK(cr.oracleChecked);
}

TEST_CASE("nico sigma and the global dimension bound") {
  // a group J-class has sigma 0
  auto Ag = analyze(cyclic(3));
  CHECK(nico_sigma(Ag, 0) == 0);
  CHECK(nico_bound(Ag).bound == 0);

  // right zero class of size >= 2: left identity only
  auto A = sigma_op(2, trivial_group());
  int minClass = A.green.principalOrder.front();
  int topClass = A.green.principalOrder.back();
  CHECK(nico_sigma(A, minClass) == 1);
  CHECK(nico_sigma(A, topClass) == 0);
  auto nd = nico_bound(A);
  CHECK(nd.bound == 1);

  // bound <= 2(m-1) with m the longest chain length
  for (int n : {2, 3}) {
    auto An = sigma_op(n, trivial_group());
    auto ndn = nico_bound(An);
    size_t m = 0;
    for (const auto& c : maximal_chains(An.poset)) m = std::max(m, c.size());
    CHECK(ndn.bound <= 2 * (static_cast<long>(m) - 1));
  }
}
