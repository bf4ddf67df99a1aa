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

#include "sgq/rep_theory.hpp"

namespace sgq {

//! A comparable pair of J-classes reduced to the (minimal ideal, unit
//! group) situation: S2 = e_l S e_l with everything not above the image of
//! J_i removed.  H is the maximal subgroup at f = e_i e_l; hToOrig is the
//! verified transport isomorphism back to G_{e_i} of the original
//! semigroup.
struct ReducedPair {
  FiniteSemigroup S2;
  std::vector<int> toParent;  // S2 element -> original element
  int jLower = -1, jUpper = -1;

  int identity2 = -1;           // unit of S2 (= e_l)
  std::vector<int> unitElems;   // S2 indices of the unit group G
  std::vector<int> minIdeal;    // S2 indices of the minimal J-class J
  int f = -1;                   // chosen idempotent of the minimal ideal
  std::vector<int> hElems;      // H-class of f inside S2
  std::vector<int> hToOrig;     // hElems[k] -> element of G_{e_i} upstairs

  int hIndexOf(int s2elem) const;  // position in hElems or -1
};

ReducedPair reduce_pair(const Analysis& A, int jLower, int jUpper);

//! The relation x ~ x' (equal products with the chosen idempotent plus a
//! common idempotent stabilizer outside the minimal ideal), its transitive
//! closure, the class set X with its commuting H- and G-actions, and the
//! class-level product with the chosen idempotent.
struct ApproxStructure {
  std::vector<std::pair<int, int>> smilePairs;  // S2 element pairs
  std::vector<std::vector<int>> classes;        // X, members ascending
  std::vector<int> classOf;                     // minIdeal position -> class
  std::vector<std::vector<int>> hAction;        // [hIdx][class] -> class
  std::vector<std::vector<int>> gAction;        // [class][gIdx] -> class
  std::vector<int> epsilonTarget;               // class -> hIdx of x*f
};

ApproxStructure smile_and_approx(const ReducedPair& rp);

//! Joint trace of the complement bimodule M = ker(kX -> kH) at (h, g):
//! fixed classes of [x] -> [h x g] minus fixed points of y -> h y (g f).
std::vector<std::vector<long>> m_character(const ReducedPair& rp,
                                           const ApproxStructure& ap);

//! Ext^1 dimensions for one reduced pair as an Irr(G_i) x Irr(G_l)
//! multiplicity matrix.  The contraction inverts the H argument; the
//! alternative convention is only reachable from tests.
std::vector<std::vector<long>> arrows_between(const ReducedPair& rp,
                                              const ApproxStructure& ap,
                                              const CharacterTable& tableLower,
                                              const CharacterTable& tableUpper,
                                              bool alt_convention = false);

//! Independent linear-algebra route for one entry: build U (x)_{kH} M as an
//! explicit quotient and project onto the V-isotypic component.  Requires
//! one-dimensional U and V (abelian maximal subgroups).
long ext_oracle_explicit(const ReducedPair& rp, const ApproxStructure& ap,
                         const CharacterTable& tableLower, int u,
                         const CharacterTable& tableUpper, int v);

struct QuiverVertex {
  int id = -1;
  int jclass = -1;
  std::string irr;
  std::string display;
};

struct QuiverArrow {
  int from = -1, to = -1;
  long mult = 0;
};

//! Vertices are (J-class, irreducible) pairs; every arrow points strictly
//! upward in the J-order of apexes and multiplicities are positive.
struct QuiverGraph {
  std::vector<QuiverVertex> vertices;
  std::vector<QuiverArrow> arrows;

  long total_arrows() const;
};

struct QuiverOptions {
  bool run_oracle = false;       // cross-check abelian pairs entrywise
  bool bare_display = false;     // display = irr label (self-describing labels)
};

//! The full quiver of an RRBG monoid algebra in characteristic zero.
QuiverGraph full_quiver(const Analysis& A, const TableMap& tables,
                        const QuiverOptions& opt = {});

//! Equality as labelled multidigraphs keyed by vertex display names.
bool quiver_equal(const QuiverGraph& a, const QuiverGraph& b);

}  // namespace sgq
