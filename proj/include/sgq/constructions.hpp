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

#include "sgq/quiver.hpp"

namespace sgq {

//! One ordered G-partition: disjoint nonempty blocks covering {0..n-1}
//! (bitmasks), each carrying a group element (local index into the base
//! group).
struct OrderedGPartition {
  std::vector<std::pair<uint32_t, int>> blocks;
};

//! The monoid of ordered G-partitions of n.  Element enumeration is frozen:
//! by block count, then lexicographically on the block-mask sequence, then
//! on the label tuple.  The underlying set is a left regular band of groups;
//! the opposite is the RRBG the quiver machinery runs on.
struct HsiaoSemigroup {
  int n = 0;
  FiniteSemigroup base;  // the group G
  FiniteSemigroup sg;    // Sigma_n^G
  std::vector<OrderedGPartition> elems;
};

HsiaoSemigroup hsiao_semigroup(int n, const FiniteSemigroup& G,
                               size_t element_cap = kDefaultElementCap);

//! Character tables for every J-class of opposite(Sigma_n^G), built as
//! block-indexed powers of the base table.  Labels are the labelled-set-
//! partition names shared with the closed form, so the two quiver routes
//! are comparable as labelled multidigraphs.
TableMap hsiao_tables(const HsiaoSemigroup& H, const Analysis& Aop,
                      const CharacterTable& baseTable);

//! Closed-form quiver on Irr(G)-labelled set partitions: each unordered
//! block pair {i, j} contributes dim Hom(U, V_i (x) V_j) arrows to the
//! merged-and-relabelled partition.
QuiverGraph hsiao_quiver_closed_form(int n, const CharacterTable& baseTable);

//! A permutation group together with the adjoined constant maps; the unit
//! group is G and the minimal ideal is the constants.
FiniteSemigroup perm_group_with_constants(int degree,
                                          const std::vector<std::vector<int>>& generators,
                                          size_t element_cap = kDefaultElementCap);

//! Number of orbits of the diagonal action on ordered pairs; requires a
//! transitive action.
int permutation_rank(int degree, const std::vector<std::vector<int>>& generators,
                     size_t element_cap = kDefaultElementCap);

enum class RepType { Finite, Tame, Wild };

//! Representation-type trichotomy by rank: <= 4 finite, 5 tame, >= 6 wild.
RepType representation_type(int degree,
                            const std::vector<std::vector<int>>& generators,
                            size_t element_cap = kDefaultElementCap);

const char* rep_type_name(RepType t);

//! Closed-form quiver of a permutation group with adjoined constants: the
//! only arrows run from the bottom trivial simple into Irr(G), with the
//! multiplicities of the permutation module (one copy removed from the
//! trivial one).
QuiverGraph gbar_quiver(const Analysis& A, const TableMap& tables);

struct ReesSpec {
  FiniteSemigroup group;
  int l = 0, r = 0;
  std::vector<std::vector<int>> P;  // r x l over group elements
};

//! Rees matrix semigroup M(G, l, r, P) with an adjoined identity (element 0).
FiniteSemigroup rees_with_identity(const ReesSpec& spec);

}  // namespace sgq
