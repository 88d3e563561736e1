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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qwqca {

using Complex = std::complex<double>;

/** Dense amplitude vector. Indexing semantics belong to the owning state type. */
using CVector = std::vector<Complex>;

inline constexpr Complex kI{0.0, 1.0};

/** Default tolerance for walk/automaton equivalence checks. */
inline constexpr double kEquivalenceTol = 1e-10;
/** Default tolerance for algebraic identities (unitarity, H^2 = I, ...). */
inline constexpr double kIdentityTol = 1e-12;

/**
 * Small dense square complex matrix, row-major.
 *
 * Used for coin blocks, tile unitaries and tessellation operators. Nothing
 * here is tuned for large dimensions; the walk engines never build global
 * operators except as test oracles.
 */
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim);
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t dim);
  static CMatrix zero(std::size_t dim) { return CMatrix(dim); }

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> data() const { return data_; }

  CMatrix adjoint() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex scale);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  bool operator==(const CMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

double norm(std::span<const Complex> v);

/** max_i |a_i - b_i|; throws on size mismatch. */
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

/** Largest entry modulus. */
double max_abs(const CMatrix& m);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

bool all_finite(std::span<const Complex> v);

CVector mat_apply(const CMatrix& m, std::span<const Complex> v);

/** True iff max |(m^dagger m - I)_{ij}| <= tol. */
bool is_unitary(const CMatrix& m, double tol = kIdentityTol);

/** max |m - m^dagger|. */
double hermitian_deviation(const CMatrix& m);

/** max |m^2 - I|. */
double involution_deviation(const CMatrix& m);

/**
 * exp(i theta h) for an involution h (h^2 = I), evaluated as
 * cos(theta) I + i sin(theta) h.
 *
 * Throws std::invalid_argument when max |h^2 - I| exceeds 1e-10.
 */
CMatrix exp_reflection(const CMatrix& h, double theta);

/**
 * exp(i theta h) by scaling-and-squaring around a truncated Taylor series.
 *
 * Independent of any structure in h; this is the oracle for exp_reflection
 * and the per-polygon propagators. Terms are summed until the max-norm of
 * the latest term drops below 1e-16, with a hard cap of 200 terms (throws
 * std::runtime_error if reached).
 */
CMatrix exp_series(const CMatrix& h, double theta);

}  // namespace qwqca
