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

#include <functional>
#include <optional>
#include <vector>

#include "sgq/cyclotomic.hpp"

namespace sgq {

//! Dense matrix over cyclotomic scalars (rationals are the conductor-1
//! case).  Elimination is exact with deterministic pivoting: columns are
//! scanned left to right and the first row with a nonzero entry is the
//! pivot.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  static ExactMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Cyclotomic& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const Cyclotomic& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix scaled(const Cyclotomic& f) const;
  bool is_zero() const;
  bool operator==(const ExactMatrix& o) const;

  size_t rank() const;
  //! Basis of the right nullspace: vectors v with M v = 0.
  std::vector<std::vector<Cyclotomic>> nullspace() const;
  //! A solution of M x = b, or nullopt when the system is inconsistent.
  std::optional<std::vector<Cyclotomic>> solve(
      const std::vector<Cyclotomic>& b) const;

 private:
  size_t rows_, cols_;
  std::vector<Cyclotomic> e_;
};

//! Incrementally maintained row space over the rationals (semi-echelon
//! basis with distinct pivot columns).
class RationalSpan {
 public:
  explicit RationalSpan(size_t dim) : dim_(dim) {}
  //! Reduce v against the basis; returns true when v enlarged the span.
  bool add(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;
  size_t size() const { return rows_.size(); }
  const std::vector<std::vector<Rational>>& basis() const { return rows_; }

 private:
  size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<size_t> pivots_;
};

//! Least N such that every product of N generators vanishes, detected by
//! iterating spans of k-fold products; nullopt when the generated
//! (non-unital) subalgebra is not nilpotent.  Elements live in k^D with the
//! supplied bilinear product.
std::optional<int> nilpotency_index_span(
    const std::vector<std::vector<Rational>>& generators, size_t D,
    const std::function<std::vector<Rational>(const std::vector<Rational>&,
                                              const std::vector<Rational>&)>&
        product);

//! Matrix form of the nilpotency test; entries must be rational.
std::optional<int> nilpotency_index(const std::vector<ExactMatrix>& generators,
                                    size_t dim);

//! Dense rational solve of A x = b (rows of A as vectors); nullopt when
//! inconsistent.  Same deterministic pivoting as ExactMatrix.
std::optional<std::vector<Rational>> solve_rational(
    std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs);

}  // namespace sgq
