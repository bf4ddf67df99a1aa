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

#include "sgq/poset.hpp"
#include "sgq/semigroup.hpp"

namespace sgq {

//! Green's equivalences and the ordering of J-classes.  Class ids are
//! assigned by first occurrence (smallest member), so they are deterministic
//! for a fixed element numbering.
struct GreenData {
  std::vector<int> rClassOf, lClassOf, jClassOf, hClassOf;
  std::vector<std::vector<int>> rClasses, lClasses, jClasses, hClasses;
  // jOrder[i*n+l]: J_i <=_J J_l.
  std::vector<bool> jOrder;
  //! The lexicographically smallest linear extension of <=_J (sequence of
  //! class ids, lower classes first) and its inverse position map.
  std::vector<int> principalOrder;
  std::vector<int> principalPos;

  int nJ() const { return static_cast<int>(jClasses.size()); }
  bool jLe(int i, int l) const {
    return jOrder[static_cast<size_t>(i) * jClasses.size() + l];
  }
  bool jLt(int i, int l) const { return i != l && jLe(i, l); }
};

GreenData green_relations(const FiniteSemigroup& S);

//! The J-classes under <=_J as a finite poset.
FinitePoset jclass_poset(const GreenData& g);

//! One J-class with its chosen idempotent, maximal subgroup and the
//! transversals that pin the sandwich matrix.  The chosen idempotent is the
//! smallest element index among the class's idempotents; transversal
//! representatives prefer idempotents (smallest first) and otherwise the
//! smallest element index.
struct JClassRecord {
  int index = -1;
  std::vector<int> elements;
  std::vector<int> idempotents;
  bool regular = false;
  int e = -1;
  Subsemigroup maxSubgroup;        // valid when regular
  std::vector<int> lTransversal;   // in the R-class of e, one per L-class
  std::vector<int> rTransversal;   // in the L-class of e, one per R-class
};

struct IdealSlice {
  std::vector<int> jBelow;   // { s : s <_J e_i }
  std::vector<int> jNotUp;   // { s : s not >=_J e_i }
};

//! Everything downstream code needs about one semigroup, computed once.
struct Analysis {
  FiniteSemigroup S;
  GreenData green;
  std::vector<JClassRecord> jrec;
  FinitePoset poset;    // J-classes under <=_J
  MobiusTable mobius;
  bool regular = false;
  int nonRegularWitness = -1;
  bool rrbg = false;
};

Analysis analyze(FiniteSemigroup S);

//! Both slices are verified two-sided ideals.
IdealSlice ideal_slices(const Analysis& A, int jclass);

//! Induced submonoid on S minus jNotUp(J); requires an RRBG monoid.  The
//! image of J is the minimal J-class of the result.
Subsemigroup remove_jnotup(const Analysis& A, int jclass);

}  // namespace sgq
