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

#include <set>

#include "sgq/characters.hpp"
#include "sgq/green.hpp"

using namespace sgq;

namespace {

Subsemigroup whole(const FiniteSemigroup& G) {
  Subsemigroup sub;
  sub.sg = G;
  sub.ambient.resize(G.order);
  sub.local.resize(G.order);
  for (int i = 0; i < G.order; ++i) sub.ambient[i] = sub.local[i] = i;
  return sub;
}

FiniteSemigroup cyclic(int k) {
  std::vector<int> gen(k);
  for (int i = 0; i < k; ++i) gen[i] = (i + 1) % k;
  return enumerate_from_generators(k, {gen}, false);
}

FiniteSemigroup direct_product(const FiniteSemigroup& a, const FiniteSemigroup& b) {
  int n = a.order * b.order;
  std::vector<int> table(static_cast<size_t>(n) * n);
  auto enc = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          table[static_cast<size_t>(enc(x1, y1)) * n + enc(x2, y2)] =
              enc(a.mul(x1, x2), b.mul(y1, y2));
  return make_semigroup(n, std::move(table), enc(*a.identity, *b.identity));
}

const std::vector<std::vector<int>> kS3Gens = {{1, 2, 0}, {1, 0, 2}};

}  // namespace

TEST_CASE("conjugacy classes") {
  auto c4 = cyclic(4);
  auto cc = conjugacy_classes(c4);
  CHECK(cc.classes.size() == 4);  // abelian: singletons

  auto s3 = enumerate_from_generators(3, kS3Gens, false);
  auto cc3 = conjugacy_classes(s3);
  REQUIRE(cc3.classes.size() == 3);
  std::multiset<size_t> sizes;
  for (const auto& c : cc3.classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<size_t>{1, 2, 3});
  // representatives are fixed points of classOf
  for (size_t c = 0; c < cc3.classes.size(); ++c) {
    CHECK(cc3.classOf[cc3.representatives[c]] == static_cast<int>(c));
    CHECK(cc3.representatives[c] == cc3.classes[c].front());
  }
  // non-groups are rejected
  auto rz = make_semigroup(2, {0, 1, 0, 1}, std::nullopt);
  CHECK_THROWS_AS(conjugacy_classes(rz), PreconditionError);
}

TEST_CASE("abelian character tables") {
  auto t1 = abelian_character_table(whole(cyclic(1)));
  CHECK(t1.nirr() == 1);
  CHECK(t1.values[0][0] == Cyclotomic(1));

  auto c2 = cyclic(2);
  auto t2 = abelian_character_table(whole(c2));
  REQUIRE(t2.nirr() == 2);
  CHECK(t2.labels[0] == "chi0");
  CHECK(t2.trivial_irr() == 0);
  // the sign row: 1 at the identity class, -1 at the other
  int idCls = t2.classes.classOf[*c2.identity];
  bool found = false;
  for (int i = 0; i < 2; ++i)
    found = found || (t2.values[i][idCls] == Cyclotomic(1) &&
                      t2.values[i][1 - idCls] == Cyclotomic(-1));
  CHECK(found);

  auto v4 = direct_product(cyclic(2), cyclic(2));
  auto t4 = abelian_character_table(whole(v4));
  CHECK(t4.nirr() == 4);
  for (const auto& row : t4.values)
    for (const auto& v : row) CHECK((v == Cyclotomic(1) || v == Cyclotomic(-1)));

  // every abelian group up to order 16 gets a valid table (validate_table
  // runs inside the builder; spot-check a few structures here)
  for (int k = 2; k <= 16; ++k) abelian_character_table(whole(cyclic(k)));
  abelian_character_table(whole(direct_product(cyclic(4), cyclic(2))));
  abelian_character_table(whole(direct_product(cyclic(8), cyclic(2))));
  abelian_character_table(whole(direct_product(cyclic(4), cyclic(4))));
  abelian_character_table(
      whole(direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2)))));
  abelian_character_table(whole(direct_product(cyclic(3), cyclic(3))));

  auto s3 = enumerate_from_generators(3, kS3Gens, false);
  CHECK_THROWS_AS(abelian_character_table(whole(s3)), PreconditionError);
}

TEST_CASE("power tables") {
  auto t2 = abelian_character_table(whole(cyclic(2)));
  CHECK(power_table(t2, 1).nirr() == 2);

  auto p = power_table(t2, 2);
  CHECK(p.nirr() == 4);
  // matches the V4 table as a set of value vectors
  auto v4 = abelian_character_table(whole(direct_product(cyclic(2), cyclic(2))));
  std::set<std::vector<std::string>> a, b;
  auto key = [](const std::vector<Cyclotomic>& row) {
    std::vector<std::string> k;
    for (const auto& v : row) k.push_back(v.str());
    return k;
  };
  for (const auto& row : p.values) a.insert(key(row));
  for (const auto& row : v4.values) b.insert(key(row));
  CHECK(a == b);

  // |Irr(G^r)| = |Irr(G)|^r, and rows stay orthogonal up to C2^4
  auto p4 = power_table(t2, 4);
  CHECK(p4.nirr() == 16);
  auto t3 = abelian_character_table(whole(cyclic(3)));
  CHECK(power_table(t3, 2).nirr() == 9);
}

TEST_CASE("murnaghan-nakayama values") {
  CHECK(symmetric_character({3}, {3}) == Rational(1));
  CHECK(symmetric_character({3}, {2, 1}) == Rational(1));
  CHECK(symmetric_character({2, 1}, {2, 1}) == Rational(0));
  CHECK(symmetric_character({2, 1}, {1, 1, 1}) == Rational(2));
  CHECK(symmetric_character({1, 1, 1}, {2, 1}) == Rational(-1));
  // hook dimension of the staircase in S4: dim chi_{(2,1,1)} = 3
  CHECK(symmetric_character({2, 1, 1}, {1, 1, 1, 1}) == Rational(3));
  CHECK_THROWS_AS(symmetric_character({2, 1}, {2, 2}), InputError);
}

TEST_CASE("symmetric group tables up to n = 5, with column orthogonality") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::vector<int>> gens;
    std::vector<int> cycle(n), swap(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n, swap[i] = i;
    std::swap(swap[0], swap[1]);
    gens = {cycle, swap};
    auto sn = enumerate_from_generators(n, gens, false);
    auto T = symmetric_character_table(whole(sn));
    CHECK(T.nirr() == static_cast<int>(partitions_of(n).size()));
    // column orthogonality: sum_chi chi(c) conj(chi(d)) = |C_G(c)| delta_cd
    for (int c = 0; c < T.nclasses(); ++c)
      for (int d = 0; d < T.nclasses(); ++d) {
        Cyclotomic sum(0);
        for (int i = 0; i < T.nirr(); ++i)
          sum += T.values[i][c] * T.values[i][d].conjugate();
        long expect =
            c == d ? T.order() / static_cast<long>(T.classes.classes[c].size())
                   : 0;
        CHECK(sum == Cyclotomic(expect));
      }
  }
}

TEST_CASE("chi_(2,1) vanishes on transpositions in S3") {
  auto s3 = enumerate_from_generators(3, kS3Gens, false);
  auto T = symmetric_character_table(whole(s3));
  int row = -1, col = -1;
  for (int i = 0; i < T.nirr(); ++i)
    if (T.labels[i] == "(2,1)") row = i;
  // the transposition class is the one of size 3
  for (int c = 0; c < T.nclasses(); ++c)
    if (T.classes.classes[c].size() == 3) col = c;
  REQUIRE(row >= 0);
  REQUIRE(col >= 0);
  CHECK(T.values[row][col] == Cyclotomic(0));
}

TEST_CASE("inner products and multiplicities") {
  auto s3 = enumerate_from_generators(3, kS3Gens, false);
  auto T = symmetric_character_table(whole(s3));
  // rows are orthonormal
  for (int i = 0; i < T.nirr(); ++i)
    for (int j = 0; j < T.nirr(); ++j)
      CHECK(inner_product(T, T.values[i], T.values[j]) ==
            Cyclotomic(i == j ? 1 : 0));
  // <regular character, chi> = chi(1)
  std::vector<Cyclotomic> reg(T.nclasses(), Cyclotomic(0));
  for (int c = 0; c < T.nclasses(); ++c)
    if (T.classes.classes[c].size() == 1 &&
        T.classes.classes[c][0] == *T.group.sg.identity)
      reg[c] = Cyclotomic(T.order());
  for (int i = 0; i < T.nirr(); ++i)
    CHECK(inner_product(T, reg, T.values[i]).rational_value() ==
          Rational(T.degree(i)));

  // natural permutation character of S3 = trivial + standard
  auto pc = permutation_character(T, T.group.sg.maps);
  int triv = T.trivial_irr();
  int std_row = -1, sgn = -1;
  for (int i = 0; i < T.nirr(); ++i) {
    if (T.degree(i) == 2) std_row = i;
    if (T.degree(i) == 1 && i != triv) sgn = i;
  }
  CHECK(multiplicity_count(T, pc, T.values[triv]) == 1);
  CHECK(multiplicity_count(T, pc, T.values[std_row]) == 1);
  CHECK(multiplicity_count(T, pc, T.values[sgn]) == 0);
}

TEST_CASE("tensor and restriction") {
  auto s3 = enumerate_from_generators(3, kS3Gens, false);
  auto T = symmetric_character_table(whole(s3));
  int triv = T.trivial_irr(), sgn = -1;
  for (int i = 0; i < T.nirr(); ++i)
    if (T.degree(i) == 1 && i != triv) sgn = i;
  CHECK(tensor(T.values[sgn], T.values[sgn]) == T.values[triv]);

  // restrict the trivial character along any homomorphism: trivial
  auto c2 = cyclic(2);
  auto T2 = abelian_character_table(whole(c2));
  std::vector<int> hom(s3.order, *c2.identity);  // the collapsing map
  auto res = restrict_along(T, T2, hom, T2.values[T2.trivial_irr()]);
  for (const auto& v : res) CHECK(v == Cyclotomic(1));

  // sign map S3 -> C2 is a homomorphism; pulling back the sign character of
  // C2 gives the sign character of S3
  int flip = 1 - *c2.identity;
  std::vector<int> signHom(s3.order);
  for (int s = 0; s < s3.order; ++s) {
    // parity of the permutation
    int inversions = 0;
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 3; ++q)
        if (s3.maps[s][p] > s3.maps[s][q]) ++inversions;
    signHom[s] = inversions % 2 ? flip : *c2.identity;
  }
  int sgn2 = -1;
  for (int i = 0; i < T2.nirr(); ++i)
    if (i != T2.trivial_irr()) sgn2 = i;
  auto pulled = restrict_along(T, T2, signHom, T2.values[sgn2]);
  CHECK(pulled == T.values[sgn]);

  std::vector<int> notHom(s3.order, flip);
  CHECK_THROWS_AS(restrict_along(T, T2, notHom, T2.values[sgn2]),
                  PreconditionError);
}

TEST_CASE("permutation character of the regular action of C3") {
  auto c3 = cyclic(3);
  auto T = abelian_character_table(whole(c3));
  auto pc = permutation_character(T, c3.maps);
  // (3, 0, 0) in some class order: 3 at the identity class
  for (int c = 0; c < T.nclasses(); ++c) {
    long expect = T.classes.classes[c][0] == *c3.identity ? 3 : 0;
    CHECK(pc[c] == Cyclotomic(expect));
  }
  for (int i = 0; i < T.nirr(); ++i)
    CHECK(multiplicity_count(T, pc, T.values[i]) == 1);
}
