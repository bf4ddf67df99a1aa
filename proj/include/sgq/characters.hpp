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

#include "sgq/cyclotomic.hpp"
#include "sgq/semigroup.hpp"

namespace sgq {

struct ConjugacyClasses {
  std::vector<std::vector<int>> classes;  // local indices, ascending
  std::vector<int> classOf;
  std::vector<int> representatives;  // smallest member per class
  std::vector<int> inverseClass;     // class of the inverses
};

//! Orbits of the conjugation action; requires the group axioms.
ConjugacyClasses conjugacy_classes(const FiniteSemigroup& G);

//! Exact character table of a finite group.  The group is carried as a
//! Subsemigroup so characters can be evaluated at ambient (parent
//! semigroup) element indices.  All values of one table share one
//! conductor.
struct CharacterTable {
  Subsemigroup group;
  ConjugacyClasses classes;
  unsigned conductor = 1;
  std::vector<std::string> labels;
  std::vector<std::vector<Cyclotomic>> values;  // irreducible x class

  int order() const { return group.sg.order; }
  int nirr() const { return static_cast<int>(labels.size()); }
  int nclasses() const { return static_cast<int>(classes.classes.size()); }
  const Cyclotomic& value(int irr, int cls) const { return values[irr][cls]; }
  const Cyclotomic& value_local(int irr, int localElem) const {
    return values[irr][classes.classOf[localElem]];
  }
  const Cyclotomic& value_ambient(int irr, int parentElem) const;
  long degree(int irr) const;
  //! Index of the all-ones row.
  int trivial_irr() const;
  bool all_linear() const;
};

//! Exact row orthogonality, degree-sum identity and integral positive
//! degrees; throws InternalError naming the offending rows.
void validate_table(const CharacterTable& T);

//! All |G| linear characters of an abelian group, built from a greedy
//! generating sequence; rows are sorted canonically with the trivial
//! character first and labelled chi0, chi1, ...
CharacterTable abelian_character_table(const Subsemigroup& G);

//! Character table of the r-th direct power: classes and rows are r-fold
//! products, labels are tuples joined with '*'.
CharacterTable power_table(const CharacterTable& T, int r);

//! Symmetric group character value chi_lambda(mu) by the Murnaghan-Nakayama
//! recursion; lambda and mu are partitions of the same n.
Rational symmetric_character(const std::vector<int>& lambda,
                             const std::vector<int>& mu);

//! Partitions of n, (n) first, parts descending, lexicographically
//! decreasing overall.
std::vector<std::vector<int>> partitions_of(int n);

//! Table of a full symmetric group realized by permutation maps; classes
//! are indexed by cycle type in partitions_of order.
CharacterTable symmetric_character_table(const Subsemigroup& G);

//! Abelian or full-symmetric dispatch; throws InputError when no built-in
//! construction applies (tables are then file imports).
CharacterTable builtin_table_for(const Subsemigroup& G);

//! (1/|G|) sum_g chi(g) psi(g^{-1}) over class-function value vectors.
Cyclotomic inner_product(const CharacterTable& T,
                         const std::vector<Cyclotomic>& chi,
                         const std::vector<Cyclotomic>& psi);

//! inner_product constrained to a nonnegative rational integer (a genuine
//! multiplicity); anything else is an internal consistency failure.
long multiplicity_count(const CharacterTable& T,
                        const std::vector<Cyclotomic>& chi,
                        const std::vector<Cyclotomic>& psi);

//! Pointwise product of class-function values.
std::vector<Cyclotomic> tensor(const std::vector<Cyclotomic>& chi,
                               const std::vector<Cyclotomic>& psi);

//! Fixed-point character of an action given by total maps per local group
//! element.
std::vector<Cyclotomic> permutation_character(
    const CharacterTable& T, const std::vector<std::vector<int>>& action);

//! Pull a class function on T_target back along a homomorphism
//! hom: source -> target (local indices); multiplicativity is verified.
std::vector<Cyclotomic> restrict_along(const CharacterTable& T_source,
                                       const CharacterTable& T_target,
                                       const std::vector<int>& hom,
                                       const std::vector<Cyclotomic>& chi);

}  // namespace sgq
