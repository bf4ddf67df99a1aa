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

#include <algorithm>
#include <random>
#include <set>

#include "sgq/constructions.hpp"
#include "sgq/green.hpp"
#include "sgq/semigroup.hpp"

using namespace sgq;

namespace {

// (1 2 3) and (1 2) acting on three points, images 0-based.
const std::vector<std::vector<int>> kS3Gens = {{1, 2, 0}, {1, 0, 2}};

FiniteSemigroup right_zero(int k) {
  std::vector<int> table(static_cast<size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) table[static_cast<size_t>(a) * k + b] = b;
  return make_semigroup(k, std::move(table), std::nullopt);
}

}  // namespace

TEST_CASE("enumerate_from_generators basics") {
  // identity map alone: trivial monoid
  auto triv = enumerate_from_generators(1, {{0}}, false);
  CHECK(triv.order == 1);
  CHECK(triv.identity.has_value());

  // S3 from a 3-cycle and a transposition
  auto s3 = enumerate_from_generators(3, kS3Gens, false);
  CHECK(s3.order == 6);
  CHECK(s3.identity.has_value());
  CHECK(passes_group_axioms(s3));

  // S3 plus the three constant maps
  auto gens = kS3Gens;
  gens.push_back({0, 0, 0});
  gens.push_back({1, 1, 1});
  gens.push_back({2, 2, 2});
  auto gbar = enumerate_from_generators(3, gens, false);
  CHECK(gbar.order == 9);

  // deterministic numbering
  auto again = enumerate_from_generators(3, gens, false);
  CHECK(gbar.table == again.table);
  CHECK(gbar.maps == again.maps);

  // element cap
  CHECK_THROWS_AS(enumerate_from_generators(3, kS3Gens, false, 4), InputError);
}

TEST_CASE("composition convention is apply-left-then-right") {
  auto s3 = enumerate_from_generators(3, kS3Gens, false);
  int c = 0, t = 1;  // generators in input order
  REQUIRE(s3.maps[c] == std::vector<int>{1, 2, 0});
  REQUIRE(s3.maps[t] == std::vector<int>{1, 0, 2});
  int ct = s3.mul(c, t);
  for (int p = 0; p < 3; ++p) CHECK(s3.maps[ct][p] == s3.maps[t][s3.maps[c][p]]);
}

TEST_CASE("make_semigroup validation") {
  CHECK_THROWS_AS(make_semigroup(2, {0, 1, 5, 0}, std::nullopt), InputError);
  // left zero table is associative, and x*y = x has no identity
  auto lz = make_semigroup(2, {0, 0, 1, 1}, std::nullopt);
  CHECK(!lz.is_monoid());
  CHECK_THROWS_AS(make_semigroup(2, {0, 0, 1, 1}, 0), InputError);
  // a genuinely non-associative table is rejected with a triple
  CHECK_THROWS_WITH_AS(make_semigroup(2, {1, 1, 1, 0}, std::nullopt),
                       doctest::Contains("not associative"), InputError);
}

TEST_CASE("omega_power") {
  auto c6 = enumerate_from_generators(6, {{1, 2, 3, 4, 5, 0}}, false);
  REQUIRE(c6.order == 6);
  int e = *c6.identity;
  CHECK(omega_power(c6, e) == e);
  // g^2 generates a subgroup of order 3, whose idempotent power is 1
  int g = 0;
  REQUIRE(c6.maps[g] == std::vector<int>{1, 2, 3, 4, 5, 0});
  CHECK(omega_power(c6, c6.mul(g, g)) == e);

  auto gbar = perm_group_with_constants(3, kS3Gens);
  for (int s = 0; s < gbar.order; ++s) {
    int w = omega_power(gbar, s);
    CHECK(gbar.mul(w, w) == w);
    // w is a positive power of s
    int p = s;
    bool found = false;
    for (int k = 0; k < 2 * gbar.order && !found; ++k) {
      found = p == w;
      p = gbar.mul(p, s);
    }
    CHECK(found);
  }
}

TEST_CASE("is_regular and is_rrbg") {
  auto s3 = enumerate_from_generators(3, kS3Gens, false);
  CHECK(is_regular(s3));
  CHECK(is_rrbg(s3));  // groups are RRBGs

  CHECK(is_regular(right_zero(3)));
  CHECK(is_rrbg(right_zero(3)));

  // 2-element null semigroup {a, 0}: a*a = 0, everything else 0
  auto null2 = make_semigroup(2, {1, 1, 1, 1}, std::nullopt);
  int witness = -1;
  CHECK(!is_regular(null2, &witness));
  CHECK(witness == 0);

  // bands are regular
  auto lz = make_semigroup(2, {0, 0, 1, 1}, std::nullopt);
  CHECK(is_regular(lz));
  CHECK(!is_rrbg(lz));  // left zero semigroup: J = L, not R

  // Rees matrix semigroup with identity: regular but not an RRBG
  ReesSpec spec;
  spec.group = enumerate_from_generators(2, {{1, 0}}, false);
  spec.l = spec.r = 2;
  spec.P = {{0, 0}, {0, 1}};
  auto rees = rees_with_identity(spec);
  CHECK(rees.order == 9);
  CHECK(is_regular(rees));
  CHECK(!is_rrbg(rees));

  // the opposite of an ordered G-partition monoid is an RRBG
  auto triv = make_semigroup(1, {0}, 0);
  auto sig3 = hsiao_semigroup(3, triv);
  CHECK(sig3.sg.order == 13);
  CHECK(!is_rrbg(sig3.sg));
  CHECK(is_rrbg(opposite(sig3.sg)));
}

TEST_CASE("opposite is an involution and swaps L and R") {
  auto gbar = perm_group_with_constants(3, kS3Gens);
  auto op = opposite(gbar);
  auto opop = opposite(op);
  CHECK(opop.table == gbar.table);
  CHECK(op.identity == gbar.identity);

  auto lz = make_semigroup(2, {0, 0, 1, 1}, std::nullopt);
  auto rz = opposite(lz);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(rz.mul(a, b) == b);

  GreenData g1 = green_relations(gbar);
  GreenData g2 = green_relations(op);
  CHECK(g1.rClasses == g2.lClasses);
  CHECK(g1.lClasses == g2.rClasses);
  CHECK(g1.jClasses == g2.jClasses);

  // commutative: table equals input
  auto c4 = enumerate_from_generators(4, {{1, 2, 3, 0}}, false);
  CHECK(opposite(c4).table == c4.table);
}

TEST_CASE("green relations on standard examples") {
  auto s3 = enumerate_from_generators(3, kS3Gens, false);
  GreenData g = green_relations(s3);
  CHECK(g.rClasses.size() == 1);
  CHECK(g.lClasses.size() == 1);
  CHECK(g.jClasses.size() == 1);
  CHECK(g.hClasses.size() == 1);

  // Sigma_2^trivial: 3 elements, two J-classes
  auto triv = make_semigroup(1, {0}, 0);
  auto sig2 = hsiao_semigroup(2, triv);
  REQUIRE(sig2.sg.order == 3);
  GreenData g2 = green_relations(sig2.sg);
  CHECK(g2.jClasses.size() == 2);
  std::vector<size_t> sizes{g2.jClasses[0].size(), g2.jClasses[1].size()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 2});

  // Rees example with identity: {1} and the 8-element completely simple class
  ReesSpec spec;
  spec.group = enumerate_from_generators(2, {{1, 0}}, false);
  spec.l = spec.r = 2;
  spec.P = {{0, 0}, {0, 1}};
  auto rees = rees_with_identity(spec);
  GreenData g3 = green_relations(rees);
  REQUIRE(g3.jClasses.size() == 2);
  CHECK(g3.jClasses[0].size() == 1);
  CHECK(g3.jClasses[1].size() == 8);
}

TEST_CASE("stability inside a regular J-class") {
  auto c2 = enumerate_from_generators(2, {{1, 0}}, false);
  auto A = analyze(opposite(hsiao_semigroup(2, c2).sg));
  for (int x = 0; x < A.S.order; ++x)
    for (int y = 0; y < A.S.order; ++y) {
      if (A.green.jClassOf[x] != A.green.jClassOf[y]) continue;
      int xy = A.S.mul(x, y);
      bool sameJ = A.green.jClassOf[xy] == A.green.jClassOf[x];
      bool sameR = A.green.rClassOf[xy] == A.green.rClassOf[x];
      CHECK(sameJ == sameR);
    }
}

TEST_CASE("principal order is a linear extension, lower classes first") {
  auto triv = make_semigroup(1, {0}, 0);
  auto A = analyze(opposite(hsiao_semigroup(3, triv).sg));
  const GreenData& g = A.green;
  for (int i = 0; i < g.nJ(); ++i)
    for (int l = 0; l < g.nJ(); ++l)
      if (g.jLe(i, l)) CHECK(g.principalPos[i] <= g.principalPos[l]);
  // identity class is on top, so it comes last
  CHECK(g.principalOrder.back() == g.jClassOf[*A.S.identity]);
}

TEST_CASE("maximal subgroups") {
  auto s3 = enumerate_from_generators(3, kS3Gens, false);
  auto whole = maximal_subgroup(s3, *s3.identity);
  CHECK(whole.sg.order == 6);

  // H-class of a constant map is trivial
  auto gbar = perm_group_with_constants(3, kS3Gens);
  int constant = -1;
  for (int s = 0; s < gbar.order; ++s)
    if (gbar.maps[s] == std::vector<int>{0, 0, 0}) constant = s;
  REQUIRE(constant >= 0);
  auto h = maximal_subgroup(gbar, constant);
  CHECK(h.sg.order == 1);

  // min J-class of Sigma_2^{C2}: maximal subgroup of order 4
  auto c2 = enumerate_from_generators(2, {{1, 0}}, false);
  auto sig = hsiao_semigroup(2, c2);
  REQUIRE(sig.sg.order == 10);
  auto A = analyze(opposite(sig.sg));
  int minClass = A.green.principalOrder.front();
  REQUIRE(A.jrec[minClass].elements.size() == 8);
  CHECK(A.jrec[minClass].maxSubgroup.sg.order == 4);
  // C2 x C2: every element squares to the identity
  const auto& G = A.jrec[minClass].maxSubgroup.sg;
  for (int x = 0; x < G.order; ++x) CHECK(G.mul(x, x) == *G.identity);

  CHECK_THROWS_AS(maximal_subgroup(s3, 0 == *s3.identity ? 1 : 0),
                  PreconditionError);
}

TEST_CASE("local monoid") {
  auto s3 = enumerate_from_generators(3, kS3Gens, false);
  auto loc = local_monoid(s3, *s3.identity);
  CHECK(loc.sg.order == 6);

  // RRBG: eSe = Se as sets, and eSe at the minimal ideal is the subgroup
  auto c2 = enumerate_from_generators(2, {{1, 0}}, false);
  auto Sop = opposite(hsiao_semigroup(2, c2).sg);
  auto A = analyze(Sop);
  for (int j = 0; j < A.green.nJ(); ++j) {
    int e = A.jrec[j].e;
    auto loc2 = local_monoid(Sop, e);
    std::vector<int> se;
    std::vector<bool> seen(Sop.order, false);
    for (int s = 0; s < Sop.order; ++s) {
      int x = Sop.mul(s, e);
      if (!seen[x]) {
        seen[x] = true;
        se.push_back(x);
      }
    }
    std::sort(se.begin(), se.end());
    CHECK(se == loc2.ambient);
  }
  int minClass = A.green.principalOrder.front();
  auto locMin = local_monoid(Sop, A.jrec[minClass].e);
  CHECK(locMin.sg.order == A.jrec[minClass].maxSubgroup.sg.order);
}

TEST_CASE("ideal slices") {
  auto triv = make_semigroup(1, {0}, 0);
  auto A = analyze(opposite(hsiao_semigroup(3, triv).sg));
  int minClass = A.green.principalOrder.front();
  int topClass = A.green.principalOrder.back();

  auto slMin = ideal_slices(A, minClass);
  CHECK(slMin.jBelow.empty());

  auto slTop = ideal_slices(A, topClass);
  CHECK(slTop.jBelow.size() == static_cast<size_t>(A.S.order) - 1);
  CHECK(slTop.jNotUp == slTop.jBelow);

  // a middle class: jNotUp contains the two other middle classes and the
  // bottom class
  int mid = -1;
  for (int j = 0; j < A.green.nJ(); ++j)
    if (A.jrec[j].elements.size() == 2) mid = j;
  REQUIRE(mid >= 0);
  auto slMid = ideal_slices(A, mid);
  CHECK(slMid.jNotUp.size() == 4 + 6);  // two middle classes + bottom class
  CHECK(slMid.jBelow.size() == 6);
}

TEST_CASE("remove_jnotup") {
  auto triv = make_semigroup(1, {0}, 0);
  auto A = analyze(opposite(hsiao_semigroup(3, triv).sg));
  int minClass = A.green.principalOrder.front();
  int topClass = A.green.principalOrder.back();

  CHECK(remove_jnotup(A, minClass).sg.order == A.S.order);
  CHECK(remove_jnotup(A, topClass).sg.order == 1);

  int mid = -1;
  for (int j = 0; j < A.green.nJ(); ++j)
    if (A.jrec[j].elements.size() == 2) mid = j;
  auto cut = remove_jnotup(A, mid);
  // identity plus the two orderings of the 2-block partition
  CHECK(cut.sg.order == 3);
  CHECK(cut.sg.is_monoid());
  auto A2 = analyze(cut.sg);
  int newMin = A2.green.principalOrder.front();
  // the image of J is the minimal J-class of the result
  for (int s : A2.jrec[newMin].elements)
    CHECK(A.green.jClassOf[cut.to_parent(s)] == mid);
}

TEST_CASE("with_adjoined_identity") {
  auto rz = right_zero(2);
  auto m = with_adjoined_identity(rz);
  CHECK(m.order == 3);
  CHECK(m.identity == 0);
  for (int x = 0; x < 3; ++x) {
    CHECK(m.mul(0, x) == x);
    CHECK(m.mul(x, 0) == x);
  }
}

TEST_CASE("green-rees coordinates hold on every regular class") {
  auto c2 = enumerate_from_generators(2, {{1, 0}}, false);
  FiniteSemigroup cases[] = {opposite(hsiao_semigroup(3, c2).sg),
                             perm_group_with_constants(3, kS3Gens)};
  for (const auto& S : cases) {
    auto A = analyze(S);
    for (const auto& rec : A.jrec) {
      REQUIRE(rec.regular);
      CHECK(rec.elements.size() == rec.lTransversal.size() *
                                       rec.rTransversal.size() *
                                       static_cast<size_t>(rec.maxSubgroup.sg.order));
      // chosen idempotent is the smallest one
      CHECK(rec.e == rec.idempotents.front());
      // every R-class and L-class of a regular J-class has an idempotent
      std::set<int> lWith, rWith;
      for (int x : rec.idempotents) {
        lWith.insert(A.green.lClassOf[x]);
        rWith.insert(A.green.rClassOf[x]);
      }
      std::set<int> lAll, rAll;
      for (int x : rec.elements) {
        lAll.insert(A.green.lClassOf[x]);
        rAll.insert(A.green.rClassOf[x]);
      }
      CHECK(lWith == lAll);
      CHECK(rWith == rAll);
    }
  }
}

TEST_CASE("RRBG: J-partition equals R-partition") {
  auto c2 = enumerate_from_generators(2, {{1, 0}}, false);
  auto A = analyze(opposite(hsiao_semigroup(2, c2).sg));
  REQUIRE(A.rrbg);
  CHECK(A.green.jClasses == A.green.rClasses);
}

TEST_CASE("green relations match mutual-reachability closures on random monoids") {
  // Independent route: breadth-first closures of {s} under one- and
  // two-sided multiplication give the principal ideals directly.
  std::mt19937 rng(20260808);
  auto reach = [](const FiniteSemigroup& S, int s, bool left, bool right) {
    std::vector<bool> in(S.order, false);
    std::vector<int> stack{s};
    in[s] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int t = 0; t < S.order; ++t) {
        int candidates[2] = {right ? S.mul(x, t) : x, left ? S.mul(t, x) : x};
        for (int y : candidates)
          if (!in[y]) {
            in[y] = true;
            stack.push_back(y);
          }
      }
    }
    return in;
  };
  for (int trial = 0; trial < 12; ++trial) {
    int degree = 3 + static_cast<int>(rng() % 2);
    std::vector<std::vector<int>> gens(2, std::vector<int>(degree));
    for (auto& g : gens)
      for (int& v : g) v = static_cast<int>(rng() % degree);
    auto S = enumerate_from_generators(degree, gens, true, 200);
    if (S.order > 120) continue;
    GreenData g = green_relations(S);
    for (int s = 0; s < S.order; ++s) {
      auto rs = reach(S, s, false, true);
      auto ls = reach(S, s, true, false);
      auto js = reach(S, s, true, true);
      for (int t = 0; t < S.order; ++t) {
        auto rt = reach(S, t, false, true);
        bool sameR = rs == rt;
        CHECK(sameR == (g.rClassOf[s] == g.rClassOf[t]));
        bool sameL = ls == reach(S, t, true, false);
        CHECK(sameL == (g.lClassOf[s] == g.lClassOf[t]));
        auto jt = reach(S, t, true, true);
        bool sameJ = js == jt;
        CHECK(sameJ == (g.jClassOf[s] == g.jClassOf[t]));
        bool sameH = sameR && sameL;
        CHECK(sameH == (g.hClassOf[s] == g.hClassOf[t]));
        // the J-order agrees with ideal containment
        bool below = true;
        for (int x = 0; x < S.order; ++x) below = below && (!js[x] || jt[x]);
        CHECK(below == g.jLe(g.jClassOf[s], g.jClassOf[t]));
      }
    }
  }
}
