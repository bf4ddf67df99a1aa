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

#include <map>

#include "sgq/characters.hpp"
#include "sgq/green.hpp"
#include "sgq/matrix.hpp"

namespace sgq {

//! Structure matrix of a regular J-class over its maximal subgroup: entry
//! (b, a) is lambda_b * rho_a when that product stays in the class, zero
//! otherwise.  Rows follow the lTransversal, columns the rTransversal.
struct SandwichMatrix {
  int jclass = -1;
  int nrows = 0, ncols = 0;
  std::vector<int> entries;  // parent element index, -1 for zero
  std::vector<int> rowReps, colReps;

  int entry(int b, int a) const { return entries[static_cast<size_t>(b) * ncols + a]; }
};

SandwichMatrix sandwich_matrix(const Analysis& A, int jclass);

struct InvertibilityReport {
  bool invertible = false;
  size_t rank = 0;    // of the regular-representation expansion
  size_t needed = 0;  // full column rank target: ncols * |G|
};

//! Left invertibility over the group algebra, decided by the rank of the
//! rational expansion that replaces each entry by the regular-representation
//! permutation matrix of the maximal subgroup.
InvertibilityReport left_invertible_over_group_algebra(const Analysis& A,
                                                       const SandwichMatrix& C);

struct DirectednessReport {
  bool directed = false;
  std::vector<std::pair<int, InvertibilityReport>> perClass;  // regular classes
};

//! Requires a regular semigroup (the witness element is named otherwise).
DirectednessReport directedness(const Analysis& A);

inline bool is_directed(const Analysis& A) { return directedness(A).directed; }

//! Right Schutzenberger representation by row monomial matrices over the
//! maximal subgroup, on the lTransversal basis of the R-class of e.
struct SchutzRep {
  int jclass = -1;
  std::vector<int> basis;  // lTransversal
  //! rm[s][b] = (column, group element in parent indexing), or (-1, -1)
  //! when the row is zero.
  std::vector<std::vector<std::pair<int, int>>> rm;
};

SchutzRep schutzenberger_rep(const Analysis& A, int jclass);

//! Pointwise character of Ind_j(W) on all of S (RRBG monoids):
//! theta(s) = sum over e in E(J) with (e s)^w = e of chi_W(e s e_J), and 0
//! off the up-set of J.
std::vector<Cyclotomic> theta_of_induced(const Analysis& A, int jclass,
                                         const CharacterTable& T, int irr);

//! dim of the simple module with apex jclass and irreducible irr, as the
//! rank of the sandwich matrix under the representation.  For degree > 1 the
//! caller must supply explicit matrices per local group element; otherwise
//! the dimension is unavailable (nullopt).
std::optional<long> simple_dimension(
    const Analysis& A, int jclass, const CharacterTable& T, int irr,
    const std::map<int, ExactMatrix>* matrices = nullptr);

//! A simple module named by its apex and irreducible, with the character of
//! the underlying group representation and the dimension when computable.
struct SimpleModuleRecord {
  int apex = -1;
  std::string irrLabel;
  std::optional<long> dim;
  std::vector<Cyclotomic> character;  // on the classes of G_apex
};

SimpleModuleRecord simple_module(const Analysis& A, int jclass,
                                 const CharacterTable& T, int irr);

struct SemisimpleQuotientData {
  //! componentMaps[i][s] = s*e_i (parent index) when s >=_J J_i, else -1.
  std::vector<std::vector<int>> componentMaps;
  long totalDim = 0;   // sum |G_i|
  long kernelDim = 0;  // |S| - totalDim
  std::vector<std::vector<Rational>> kernelBasis;  // vectors in k^S
  int nilpotencyIndex = 0;
};

//! The semisimple quotient of an RRBG monoid algebra onto the product of
//! its maximal-subgroup algebras; component multiplicativity and kernel
//! nilpotency are verified.
SemisimpleQuotientData semisimple_quotient(const Analysis& A);

//! Multiplicity of the simple module (jTarget, irr) as a composition factor
//! of a module with pointwise character theta, by Mobius inversion over the
//! J-class lattice.  Asserted to be a nonnegative integer.
long multiplicity(const Analysis& A, const std::vector<Cyclotomic>& theta,
                  int jTarget, const CharacterTable& T, int irr);

using TableMap = std::map<int, CharacterTable>;  // per J-class

//! Resolves a character table for every regular J-class: user-supplied
//! tables first, then the built-in constructions.
TableMap resolve_tables(const Analysis& A, const TableMap& user);

struct CartanResult {
  std::vector<std::pair<int, int>> vertices;  // (jclass, irr) in principal order
  std::vector<std::string> vertexLabels;
  std::vector<std::vector<long>> matrix;      // closed form
  bool oracleChecked = false;
};

//! Cartan matrix of a directed RRBG monoid algebra; rows and columns are
//! the simple modules in principal order.  With with_oracle the closed form
//! is checked entrywise against the multiplicity-formula route.
CartanResult cartan_matrix(const Analysis& A, const TableMap& tables,
                           bool with_oracle);

//! sigma(J): 0/1/2 according to the contracted algebra kJ^0 having a
//! two-sided, only a one-sided, or no identity.
int nico_sigma(const Analysis& A, int jclass);

struct NicoData {
  std::vector<int> sigma;  // per J-class
  long bound = 0;          // max over maximal chains of the sigma sum
};

NicoData nico_bound(const Analysis& A);

}  // namespace sgq
