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

#include <string>
#include <vector>

#include "sgq/rational.hpp"

namespace sgq {

//! An exact element of the m-th cyclotomic field, stored as a rational
//! coefficient vector over the power basis 1, z, ..., z^{phi(m)-1} where
//! z = e^{2 pi i / m}.  Values are always kept reduced modulo the m-th
//! cyclotomic polynomial, so equality of coefficient vectors (after lifting
//! both operands to the lcm conductor) is equality of field elements.
//! Conductor 1 is the rationals.
class Cyclotomic {
 public:
  Cyclotomic() : m_(1), c_(1, Rational(0)) {}
  Cyclotomic(const Rational& r) : m_(1), c_(1, r) {}  // NOLINT implicit
  Cyclotomic(long v) : m_(1), c_(1, Rational(v)) {}   // NOLINT implicit

  //! Primitive root of unity power: zeta_m^e (e may be negative).
  static Cyclotomic zeta(unsigned m, long e);

  unsigned conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  //! Throws InternalError when the value is irrational.
  Rational rational_value() const;
  bool is_integer() const;

  //! Re-express in the M-th cyclotomic field; M must be a multiple of the
  //! conductor.
  Cyclotomic lifted(unsigned M) const;

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  //! Complex conjugation (zeta -> zeta^{-1}).
  Cyclotomic conjugate() const;
  //! Field inverse; throws InternalError on zero.
  Cyclotomic inverse() const;

  std::string str() const;

 private:
  Cyclotomic(unsigned m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}
  static Cyclotomic from_poly(unsigned m, std::vector<Rational> poly);

  unsigned m_;
  std::vector<Rational> c_;
};

unsigned totient(unsigned m);

//! Monic minimal polynomial of zeta_m over Q, as coefficients by ascending
//! power (size phi(m)+1).
const std::vector<Rational>& cyclotomic_polynomial(unsigned m);

}  // namespace sgq
