// Copyright 2026 The qwqca Authors
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

#include "qwqca/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qwqca {

CMatrix::CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()), data_() {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("CMatrix: rows must form a square matrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("CMatrix: dimension mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("CMatrix: dimension mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex scale) {
  for (auto& x : data_) x *= scale;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("CMatrix: dimension mismatch in *");
  const std::size_t n = a.dim();
  CMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

double norm(std::span<const Complex> v) {
  double sum = 0.0;
  for (const auto& x : v) sum += std::norm(x);
  return std::sqrt(sum);
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("max_abs_diff: sizes differ (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double max_abs(const CMatrix& m) {
  double worst = 0.0;
  for (const auto& x : m.data()) worst = std::max(worst, std::abs(x));
  return worst;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: matrix dimensions differ");
  return max_abs_diff(a.data(), b.data());
}

bool all_finite(std::span<const Complex> v) {
  return std::all_of(v.begin(), v.end(), [](const Complex& x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  });
}

CVector mat_apply(const CMatrix& m, std::span<const Complex> v) {
  if (m.dim() != v.size()) {
    throw std::invalid_argument("mat_apply: matrix dimension " + std::to_string(m.dim()) +
                                " does not match vector dimension " + std::to_string(v.size()));
  }
  CVector out(v.size());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < m.dim(); ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

bool is_unitary(const CMatrix& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_unitary: tol must be positive");
  if (m.dim() == 0 || !all_finite(m.data())) return false;
  return max_abs_diff(m.adjoint() * m, CMatrix::identity(m.dim())) <= tol;
}

double hermitian_deviation(const CMatrix& m) { return max_abs_diff(m, m.adjoint()); }

double involution_deviation(const CMatrix& m) {
  return max_abs_diff(m * m, CMatrix::identity(m.dim()));
}

CMatrix exp_reflection(const CMatrix& h, double theta) {
  const double dev = involution_deviation(h);
  if (!(dev <= 1e-10)) {
    throw std::invalid_argument("exp_reflection: operator is not an involution (max |h^2 - I| = " +
                                std::to_string(dev) + ")");
  }
  return std::cos(theta) * CMatrix::identity(h.dim()) + (kI * std::sin(theta)) * h;
}

CMatrix exp_series(const CMatrix& h, double theta) {
  if (!all_finite(h.data())) throw std::invalid_argument("exp_series: non-finite entries");
  const std::size_t n = h.dim();
  CMatrix a = (kI * theta) * h;

  // Scale so the 1-norm is at most 1/2.
  double one_norm = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < n; ++r) col += std::abs(a(r, c));
    one_norm = std::max(one_norm, col);
  }
  int squarings = 0;
  if (one_norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(one_norm / 0.5)));
  a *= std::ldexp(1.0, -squarings);

  CMatrix sum = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  constexpr int kMaxTerms = 200;
  bool converged = false;
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = term * a;
    term *= 1.0 / static_cast<double>(k);
    sum += term;
    if (max_abs(term) < 1e-16) {
      converged = true;
      break;
    }
  }
  if (!converged) throw std::runtime_error("exp_series: Taylor series did not converge in 200 terms");

  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace qwqca
