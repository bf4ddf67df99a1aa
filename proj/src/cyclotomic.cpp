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

#include "sgq/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sgq {

namespace {

using Poly = std::vector<Rational>;  // coefficients by ascending power

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Exact division: q = a / b, remainder must vanish.
Poly poly_divmod(Poly a, const Poly& b, Poly* remainder) {
  trim(a);
  Poly q;
  if (a.size() >= b.size()) {
    q.assign(a.size() - b.size() + 1, Rational(0));
    for (size_t d = a.size(); d-- >= b.size();) {
      if (a[d] == 0) continue;
      Rational f = a[d] / b.back();
      q[d - (b.size() - 1)] = f;
      for (size_t k = 0; k < b.size(); ++k) a[d - (b.size() - 1) + k] -= f * b[k];
      if (d == 0) break;
    }
  }
  trim(a);
  if (remainder) *remainder = a;
  trim(q);
  return q;
}

}  // namespace

unsigned totient(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Rational>& cyclotomic_polynomial(unsigned m) {
  static std::map<unsigned, Poly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed bottom up.
  std::function<const Poly&(unsigned)> get = [&](unsigned k) -> const Poly& {
    auto found = cache.find(k);
    if (found != cache.end()) return found->second;
    Poly num(k + 1, Rational(0));
    num[0] = Rational(-1);
    num[k] = Rational(1);
    for (unsigned d = 1; d < k; ++d) {
      if (k % d == 0) {
        Poly rem;
        num = poly_divmod(num, get(d), &rem);
        if (!rem.empty()) throw InternalError("cyclotomic polynomial division left a remainder");
      }
    }
    return cache.emplace(k, std::move(num)).first->second;
  };
  return get(m);
}

Cyclotomic Cyclotomic::from_poly(unsigned m, Poly poly) {
  unsigned phi = totient(m);
  const Poly& mod = cyclotomic_polynomial(m);
  // mod is monic of degree phi; fold powers >= phi back down.
  if (poly.size() > phi) {
    for (size_t d = poly.size(); d-- > phi;) {
      if (poly[d] == 0) continue;
      Rational f = poly[d];
      poly[d] = 0;
      for (unsigned k = 0; k < phi; ++k) poly[d - phi + k] -= f * mod[k];
    }
  }
  poly.resize(phi, Rational(0));
  return Cyclotomic(m, std::move(poly));
}

Cyclotomic Cyclotomic::zeta(unsigned m, long e) {
  if (m == 0) throw InputError("conductor must be positive");
  long r = e % static_cast<long>(m);
  if (r < 0) r += m;
  Poly p(static_cast<size_t>(r) + 1, Rational(0));
  p[static_cast<size_t>(r)] = Rational(1);
  return from_poly(m, std::move(p));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw InternalError("cyclotomic value " + str() + " is not rational");
  return c_[0];
}

bool Cyclotomic::is_integer() const {
  return is_rational() && sgq::is_integer(c_[0]);
}

Cyclotomic Cyclotomic::lifted(unsigned M) const {
  if (M == m_) return *this;
  if (M % m_ != 0) throw InternalError("conductor lift target is not a multiple");
  unsigned step = M / m_;
  Poly p;
  p.resize((c_.size() - 1) * step + 1, Rational(0));
  for (size_t j = 0; j < c_.size(); ++j) p[j * step] = c_[j];
  return from_poly(M, std::move(p));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  unsigned M = std::lcm(m_, o.m_);
  Cyclotomic a = lifted(M), b = o.lifted(M);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  unsigned M = std::lcm(m_, o.m_);
  Cyclotomic a = lifted(M), b = o.lifted(M);
  return from_poly(M, poly_mul(a.c_, b.c_));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw InternalError("division by zero cyclotomic");
  if (is_rational()) return Cyclotomic(Rational(1) / c_[0]);
  // Extended Euclid in Q[x] against the (irreducible) minimal polynomial.
  Poly r0 = cyclotomic_polynomial(m_);
  Poly r1 = c_;
  trim(r1);
  Poly s0 = {}, s1 = {Rational(1)};  // Bezout coefficients for *this
  while (true) {
    Poly rem;
    Poly q = poly_divmod(r0, r1, &rem);
    if (rem.empty()) break;
    Poly qs = poly_mul(q, s1);
    Poly snew = s0;
    snew.resize(std::max(snew.size(), qs.size()), Rational(0));
    for (size_t i = 0; i < qs.size(); ++i) snew[i] -= qs[i];
    trim(snew);
    s0 = s1;
    s1 = snew;
    r0 = r1;
    r1 = rem;
  }
  // r1 is a nonzero constant gcd; s1 * this == r1 (mod Phi).
  if (r1.size() != 1) throw InternalError("cyclotomic inverse: unexpected gcd degree");
  for (auto& c : s1) c /= r1[0];
  return from_poly(m_, std::move(s1));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (m_ == o.m_) return c_ == o.c_;
  unsigned M = std::lcm(m_, o.m_);
  return lifted(M).c_ == o.lifted(M).c_;
}

Cyclotomic Cyclotomic::conjugate() const {
  if (m_ == 1) return *this;
  Poly p(m_, Rational(0));
  p[0] = c_[0];
  for (size_t j = 1; j < c_.size(); ++j) p[m_ - j] = c_[j];
  return from_poly(m_, std::move(p));
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << c_[j].get_str();
    } else {
      os << c_[j].get_str() << "*z" << m_ << "^" << j;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace sgq
