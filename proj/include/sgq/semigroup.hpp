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

#include <optional>
#include <string>
#include <vector>

#include "sgq/errors.hpp"

namespace sgq {

inline constexpr size_t kDefaultElementCap = 200000;

//! A finite semigroup given by its full multiplication table (row = left
//! factor).  Immutable after construction; all operations may be called
//! concurrently on shared instances.
struct FiniteSemigroup {
  int order = 0;
  std::vector<int> table;  // row-major, order*order entries
  std::optional<int> identity;
  std::vector<std::string> labels;  // empty or one per element

  // Optional transformation realization: maps[s] is the total map on
  // {0..degree-1} the element came from.  Preserved by substructure
  // extraction, dropped by opposite().
  std::vector<std::vector<int>> maps;
  int degree = 0;

  int mul(int a, int b) const { return table[a * order + b]; }
  bool is_monoid() const { return identity.has_value(); }
  std::string label_of(int s) const;
};

//! Builds and validates a semigroup from an explicit table.  Associativity
//! and identity are checked; the first failing triple is reported.
FiniteSemigroup make_semigroup(int order, std::vector<int> table,
                               std::optional<int> identity,
                               std::vector<std::string> labels = {});

//! Closure of total maps on {0..degree-1} under composition, with
//! (f*g)(p) = g(f(p)) and breadth-first numbering from the generators in
//! input order.  With adjoin_identity, the identity map becomes element 0
//! when it is not generated.
FiniteSemigroup enumerate_from_generators(int degree,
                                          const std::vector<std::vector<int>>& generators,
                                          bool adjoin_identity,
                                          size_t element_cap = kDefaultElementCap);

//! The unique idempotent positive power of s.
int omega_power(const FiniteSemigroup& S, int s);

FiniteSemigroup opposite(const FiniteSemigroup& S);

//! Every s has some t with s*t*s = s.  On failure *witness (when non-null)
//! receives an element with no weak inverse.
bool is_regular(const FiniteSemigroup& S, int* witness = nullptr);

//! Checks the two defining identities of a right regular band of groups:
//! s^w s = s and s^w t s^w = t s^w.
bool is_rrbg(const FiniteSemigroup& S);

//! Identity plus two-sided inverses (associativity is a table invariant).
bool passes_group_axioms(const FiniteSemigroup& S);

int inverse_in_group(const FiniteSemigroup& G, int g);

//! A subsemigroup re-indexed to its own table; ambient[i] is the parent
//! element of local element i.
struct Subsemigroup {
  FiniteSemigroup sg;
  std::vector<int> ambient;
  std::vector<int> local;  // parent index -> local index or -1

  int to_parent(int i) const { return ambient[i]; }
  int to_local(int parent) const { return local[parent]; }
};

//! The maximal subgroup at an idempotent e (its H-class, which is a group
//! with identity e).  Throws PreconditionError for non-idempotent e.
Subsemigroup maximal_subgroup(const FiniteSemigroup& S, int e);

//! The local monoid eSe with identity e.
Subsemigroup local_monoid(const FiniteSemigroup& S, int e);

//! Induced table on an element subset; throws InternalError when the subset
//! is not closed under multiplication.
Subsemigroup induced_subsemigroup(const FiniteSemigroup& S,
                                  const std::vector<int>& elements,
                                  std::optional<int> identity_parent);

//! Adjoins a new identity as element 0.  Never applied implicitly.
FiniteSemigroup with_adjoined_identity(const FiniteSemigroup& S);

}  // namespace sgq
