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

#include <gmpxx.h>

#include <string>

#include "sgq/errors.hpp"

namespace sgq {

// Exact rational scalar.  mpq_class keeps the canonical-form invariants
// (positive denominator, coprime numerator/denominator) for us.
using Rational = mpq_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    throw InternalError("rational value " + q.get_str() +
                        " is not a machine integer");
  }
  return q.get_num().get_si();
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace sgq
