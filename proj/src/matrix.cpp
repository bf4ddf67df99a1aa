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

#include "sgq/matrix.hpp"

namespace sgq {

ExactMatrix ExactMatrix::identity(size_t n) {
  ExactMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw InternalError("matrix product shape mismatch");
  ExactMatrix p(rows_, o.cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (size_t c = 0; c < o.cols_; ++c) {
        if (o.at(k, c).is_zero()) continue;
        p.at(r, c) += at(r, k) * o.at(k, c);
      }
    }
  return p;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InternalError("matrix sum shape mismatch");
  ExactMatrix s(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + o.e_[i];
  return s;
}

ExactMatrix ExactMatrix::scaled(const Cyclotomic& f) const {
  ExactMatrix s(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] * f;
  return s;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (!(e_[i] == o.e_[i])) return false;
  return true;
}

namespace {

// Row echelon pass over an explicit working copy.  Returns pivot columns.
std::vector<size_t> echelonize(std::vector<std::vector<Cyclotomic>>& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t pr = 0;
  for (size_t c = 0; c < cols && pr < rows; ++c) {
    size_t sel = pr;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[pr], m[sel]);
    Cyclotomic inv = m[pr][c].inverse();
    for (size_t k = c; k < cols; ++k) m[pr][k] = m[pr][k] * inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == pr || m[r][c].is_zero()) continue;
      Cyclotomic f = m[r][c];
      for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[pr][k];
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

std::vector<std::vector<Cyclotomic>> to_rows(const ExactMatrix& m) {
  std::vector<std::vector<Cyclotomic>> rows(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) {
    rows[r].resize(m.cols());
    for (size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
  }
  return rows;
}

}  // namespace

size_t ExactMatrix::rank() const {
  auto m = to_rows(*this);
  return echelonize(m).size();
}

std::vector<std::vector<Cyclotomic>> ExactMatrix::nullspace() const {
  auto m = to_rows(*this);
  auto pivots = echelonize(m);
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Cyclotomic>> basis;
  for (size_t fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Cyclotomic> v(cols_);
    v[fc] = Cyclotomic(1);
    for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -m[pi][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Cyclotomic>> ExactMatrix::solve(
    const std::vector<Cyclotomic>& b) const {
  if (b.size() != rows_) throw InternalError("solve: rhs size mismatch");
  std::vector<std::vector<Cyclotomic>> m(rows_);
  for (size_t r = 0; r < rows_; ++r) {
    m[r].resize(cols_ + 1);
    for (size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    m[r][cols_] = b[r];
  }
  auto pivots = echelonize(m);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Cyclotomic> x(cols_);
  for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = m[pi][cols_];
  return x;
}

bool RationalSpan::add(std::vector<Rational> v) {
  while (true) {
    size_t lead = dim_;
    for (size_t i = 0; i < dim_; ++i) {
      if (v[i] != 0) {
        lead = i;
        break;
      }
    }
    if (lead == dim_) return false;  // reduced to zero
    bool hit = false;
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (pivots_[r] == lead) {
        Rational f = v[lead];  // basis rows are normalized to pivot 1
        for (size_t i = lead; i < dim_; ++i) v[i] -= f * rows_[r][i];
        hit = true;
        break;
      }
    }
    if (!hit) {
      Rational inv = Rational(1) / v[lead];
      for (size_t i = lead; i < dim_; ++i) v[i] *= inv;
      rows_.push_back(std::move(v));
      pivots_.push_back(lead);
      return true;
    }
  }
}

bool RationalSpan::contains(std::vector<Rational> v) const {
  while (true) {
    size_t lead = dim_;
    for (size_t i = 0; i < dim_; ++i) {
      if (v[i] != 0) {
        lead = i;
        break;
      }
    }
    if (lead == dim_) return true;
    bool hit = false;
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (pivots_[r] == lead) {
        Rational f = v[lead];
        for (size_t i = lead; i < dim_; ++i) v[i] -= f * rows_[r][i];
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
}

std::optional<int> nilpotency_index_span(
    const std::vector<std::vector<Rational>>& generators, size_t D,
    const std::function<std::vector<Rational>(const std::vector<Rational>&,
                                              const std::vector<Rational>&)>&
        product) {
  RationalSpan gens(D);
  for (const auto& g : generators) gens.add(g);
  if (gens.size() == 0) return 1;
  auto gbasis = gens.basis();

  // Dimension of the generated subalgebra bounds the nilpotency index.
  RationalSpan algebra(D);
  for (const auto& g : gbasis) algebra.add(g);
  std::vector<std::vector<Rational>> frontier = gbasis;
  while (!frontier.empty()) {
    std::vector<std::vector<Rational>> next;
    for (const auto& v : frontier)
      for (const auto& g : gbasis) {
        auto p = product(v, g);
        if (algebra.add(p)) next.push_back(algebra.basis().back());
      }
    frontier = std::move(next);
  }
  size_t bound = algebra.size() + 1;

  std::vector<std::vector<Rational>> level = gbasis;
  for (size_t k = 2; k <= bound; ++k) {
    RationalSpan next(D);
    for (const auto& v : level)
      for (const auto& g : gbasis) next.add(product(v, g));
    if (next.size() == 0) return static_cast<int>(k);
    level = next.basis();
  }
  return std::nullopt;
}

std::optional<std::vector<Rational>> solve_rational(
    std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs) {
  size_t nrows = rows.size();
  if (rhs.size() != nrows) throw InternalError("solve_rational: rhs mismatch");
  size_t ncols = nrows ? rows[0].size() : 0;
  for (size_t r = 0; r < nrows; ++r) rows[r].push_back(rhs[r]);
  size_t pr = 0;
  std::vector<size_t> pivots;
  for (size_t c = 0; c <= ncols && pr < nrows; ++c) {
    size_t sel = pr;
    while (sel < nrows && rows[sel][c] == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(rows[pr], rows[sel]);
    Rational inv = Rational(1) / rows[pr][c];
    for (size_t k = c; k <= ncols; ++k) rows[pr][k] *= inv;
    for (size_t r = 0; r < nrows; ++r) {
      if (r == pr || rows[r][c] == 0) continue;
      Rational f = rows[r][c];
      for (size_t k = c; k <= ncols; ++k) rows[r][k] -= f * rows[pr][k];
    }
    pivots.push_back(c);
    ++pr;
  }
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  std::vector<Rational> x(ncols, Rational(0));
  for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = rows[pi][ncols];
  return x;
}

std::optional<int> nilpotency_index(const std::vector<ExactMatrix>& generators,
                                    size_t dim) {
  std::vector<std::vector<Rational>> flat;
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim)
      throw InputError("nilpotency test expects square matrices of equal size");
    std::vector<Rational> v(dim * dim);
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < dim; ++c) {
        if (!g.at(r, c).is_rational())
          throw InputError("nilpotency test expects rational entries");
        v[r * dim + c] = g.at(r, c).rational_value();
      }
    flat.push_back(std::move(v));
  }
  auto product = [dim](const std::vector<Rational>& a,
                       const std::vector<Rational>& b) {
    std::vector<Rational> p(dim * dim, Rational(0));
    for (size_t r = 0; r < dim; ++r)
      for (size_t k = 0; k < dim; ++k) {
        if (a[r * dim + k] == 0) continue;
        for (size_t c = 0; c < dim; ++c)
          p[r * dim + c] += a[r * dim + k] * b[k * dim + c];
      }
    return p;
  };
  return nilpotency_index_span(flat, dim * dim, product);
}

}  // namespace sgq
