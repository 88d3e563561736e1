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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "oracles.hpp"

using namespace qwqca;

namespace {

constexpr double kPi = std::numbers::pi;

CMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix h(n);
  for (std::size_t r = 0; r < n; ++r) {
    h(r, r) = g(rng);
    for (std::size_t c = r + 1; c < n; ++c) {
      h(r, c) = {g(rng), g(rng)};
      h(c, r) = std::conj(h(r, c));
    }
  }
  return h;
}

/** U diag(+-1) U^dagger for a random unitary U built by Gram-Schmidt. */
CMatrix random_reflection(std::size_t n, std::mt19937_64& rng) {
  std::vector<CVector> basis;
  while (basis.size() < n) {
    CVector v = oracle::gaussian_state(n, rng);
    for (const auto& b : basis) {
      Complex dot{};
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(b[i]) * v[i];
      for (std::size_t i = 0; i < n; ++i) v[i] -= dot * b[i];
    }
    const double nv = norm(v);
    for (auto& x : v) x /= nv;
    basis.push_back(v);
  }
  CMatrix h(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double sign = (rng() & 1U) ? 1.0 : -1.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) h(r, c) += sign * basis[k][r] * std::conj(basis[k][c]);
  }
  return h;
}

}  // namespace

TEST(MatApply, IdentityZeroAndSwap) {
  EXPECT_EQ(mat_apply(CMatrix::identity(2), CVector{1.0, 0.0}), (CVector{1.0, 0.0}));
  EXPECT_EQ(mat_apply(CMatrix::zero(2), CVector{1.0, kI}), (CVector{0.0, 0.0}));
  const Complex a{0.3, -1.2}, b{2.0, 0.5};
  EXPECT_EQ(mat_apply(CMatrix{{0, 1}, {1, 0}}, CVector{a, b}), (CVector{b, a}));
}

TEST(MatApply, DimensionMismatchThrows) {
  EXPECT_THROW(mat_apply(CMatrix::identity(3), CVector{1.0, 0.0}), std::invalid_argument);
}

TEST(IsUnitary, KnownCases) {
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_TRUE(is_unitary(CMatrix::identity(4), 1e-12));
  EXPECT_TRUE(is_unitary(CMatrix{{h, h}, {h, -h}}, 1e-12));
  EXPECT_FALSE(is_unitary(CMatrix{{1, 1}, {0, 1}}, 1e-12));
  EXPECT_THROW(is_unitary(CMatrix::identity(2), 0.0), std::invalid_argument);
}

TEST(ExpReflection, ClosedFormExamples) {
  EXPECT_LE(max_abs_diff(exp_reflection(CMatrix::identity(3), kPi), CMatrix::identity(3) * Complex{-1.0}), 1e-15);
  const CMatrix z{{1, 0}, {0, -1}};
  EXPECT_LE(max_abs_diff(exp_reflection(z, kPi / 2), CMatrix{{kI, 0}, {0, -kI}}), 1e-15);
}

TEST(ExpReflection, RejectsNonInvolution) {
  EXPECT_THROW(exp_reflection(CMatrix{{1, 1}, {0, 1}}, 0.3), std::invalid_argument);
}

TEST(ExpReflection, BalancedPairMatchesSeries) {
  // 2|a><a| - I with a = (1, 1)/sqrt(2) is the exchange matrix.
  const CMatrix h{{0, 1}, {1, 0}};
  EXPECT_LE(max_abs_diff(exp_reflection(h, kPi / 3), exp_series(h, kPi / 3)), 1e-12);
}

TEST(ExpSeries, ZeroAndScalarCases) {
  EXPECT_LE(max_abs_diff(exp_series(CMatrix::zero(3), 1.7), CMatrix::identity(3)), 1e-16);
  const CMatrix expected = CMatrix::identity(2) * std::exp(kI * (kPi / 4));
  EXPECT_LE(max_abs_diff(exp_series(CMatrix::identity(2), kPi / 4), expected), 1e-15);
}

TEST(ExpSeries, RandomHermitianGivesUnitary) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix u = exp_series(random_hermitian(4, rng), 0.7);
    EXPECT_TRUE(is_unitary(u, 1e-10));
  }
}

TEST(ExpSeries, RejectsNonFinite) {
  CMatrix h = CMatrix::identity(2);
  h(0, 1) = std::nan("");
  EXPECT_THROW(exp_series(h, 1.0), std::invalid_argument);
}

TEST(AlgebraProperties, ReflectionAgreesWithSeriesOnAngleGrid) {
  std::mt19937_64 rng(5);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u}) {
    for (int trial = 0; trial < 4; ++trial) {
      const CMatrix h = random_reflection(n, rng);
      ASSERT_LE(involution_deviation(h), 1e-10);
      for (int k = 0; k <= 24; ++k) {
        const double theta = 2.0 * kPi * k / 24.0;
        EXPECT_LE(max_abs_diff(exp_reflection(h, theta), exp_series(h, theta)), 1e-10) << "n=" << n << " theta=" << theta;
      }
    }
  }
}

TEST(AlgebraProperties, ReflectionGroupLaw) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix h = random_reflection(4, rng);
    const double a = angle(rng), b = angle(rng);
    EXPECT_LE(max_abs_diff(exp_reflection(h, a) * exp_reflection(h, b), exp_reflection(h, a + b)), 1e-10);
  }
}

TEST(AlgebraProperties, UnitaryApplicationPreservesNorm) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix u = exp_series(random_hermitian(6, rng), 1.3);
    ASSERT_TRUE(is_unitary(u, 1e-12));
    const CVector v = oracle::gaussian_state(6, rng);
    EXPECT_LE(std::abs(norm(mat_apply(u, v)) - 1.0), 1e-10);
  }
}
