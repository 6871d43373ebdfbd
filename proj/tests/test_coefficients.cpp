// Copyright 2026 The oddzeta Authors.
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

#include <gtest/gtest.h>

#include "oddzeta/coefficients.hpp"

namespace oddzeta {
namespace {

// Closed form D_n(k) = c_n / (2^(2n-1) * prod_{j=0}^{k-1} (2n+j)); independent
// of the ladder recurrence used by the library.
Rational d_closed(std::size_t n, std::size_t k) {
  Integer prod = 1;
  for (std::size_t j = 0; j < k; ++j) prod *= static_cast<unsigned long>(2 * n + j);
  return tangent_coeff(n) / Rational(pow2(2 * n - 1) * prod);
}

Rational inv_fact(unsigned long m) { return Rational(Integer(1), factorial(m)); }

// The five hand-derived steps, written out one by one.
struct Stepwise {
  Rational e1, e2, e3, e4, e5;
};

Stepwise stepwise(std::size_t n) {
  Stepwise s;
  s.e1 = d_closed(n, 1);
  s.e2 = s.e1 - d_closed(n, 2) / Rational(2);
  s.e3 = (-d_closed(n, 3) / Rational(2) + s.e1 * inv_fact(2)) / (Rational(1) - Rational(1, 8));
  s.e4 = d_closed(n, 4) / Rational(2) + s.e3 * inv_fact(1) - s.e1 * inv_fact(3);
  s.e5 = (d_closed(n, 5) / Rational(2) + s.e3 * inv_fact(2) - s.e1 * inv_fact(4)) / (Rational(1) - Rational(1, 32));
  return s;
}

TEST(DCoeff, SpecExamples) {
  EXPECT_EQ(d_coeff(1, 1), Rational(1, 4));
  EXPECT_EQ(d_coeff(1, 2), Rational(1, 12));
  EXPECT_EQ(d_coeff(2, 1), Rational(1, 96));
  EXPECT_THROW(d_coeff(0, 1), UsageError);
  EXPECT_THROW(d_coeff(1, 0), UsageError);
}

TEST(DCoeff, LadderStepAndClosedForm) {
  for (std::size_t n = 1; n <= 50; ++n)
    for (std::size_t k = 1; k <= 12; ++k) {
      EXPECT_EQ(d_coeff(n, k + 1) * Rational(static_cast<long>(2 * n + k)), d_coeff(n, k)) << n << "," << k;
      EXPECT_EQ(d_coeff(n, k), d_closed(n, k)) << n << "," << k;
    }
}

TEST(ECoeff, SpecExamples) {
  EXPECT_EQ(e_coeff(1, 1), Rational(1, 4));
  EXPECT_EQ(e_coeff(1, 2), Rational(5, 24));
  EXPECT_EQ(e_coeff(1, 3), Rational(11, 84));
  EXPECT_EQ(e_coeff(1, 1), d_coeff(1, 1));
}

TEST(ECoeff, GeneralRecurrenceEqualsStepwiseFormulas) {
  const auto table = build_table(5, 50);
  for (std::size_t n = 1; n <= 50; ++n) {
    const auto s = stepwise(n);
    EXPECT_EQ(table.e(n, 1), s.e1) << n;
    EXPECT_EQ(table.e(n, 2), s.e2) << n;
    EXPECT_EQ(table.e(n, 3), s.e3) << n;
    EXPECT_EQ(table.e(n, 4), s.e4) << n;
    EXPECT_EQ(table.e(n, 5), s.e5) << n;
  }
}

TEST(ECoeff, PointQueriesAgreeWithTable) {
  const auto table = build_table(7, 12);
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t k = 1; k <= 7; ++k) EXPECT_EQ(table.e(n, k), e_coeff(n, k));
}

TEST(FRatio, SpecExamples) {
  EXPECT_EQ(f_ratio(1, 1), Rational(1));
  EXPECT_EQ(f_ratio(1, 2), Rational(5, 6));
  EXPECT_EQ(f_ratio(2, 2), Rational(9, 10));
}

TEST(FRatio, ClosedFormsForLowColumns) {
  for (std::size_t n = 1; n <= 50; ++n) {
    const Rational two_n1(static_cast<long>(2 * n + 1));
    const Rational two_n2(static_cast<long>(2 * n + 2));
    EXPECT_EQ(f_ratio(n, 2), Rational(1) - Rational(1) / (Rational(2) * two_n1)) << n;
    // F_n(3) = (1/2! - 1/(2 (2n+1)(2n+2))) / (1 - 1/8).
    const Rational f3 = (Rational(1, 2) - Rational(1) / (Rational(2) * two_n1 * two_n2)) / Rational(7, 8);
    EXPECT_EQ(f_ratio(n, 3), f3) << n;
  }
}

TEST(CoefficientTable, BuildSmallest) {
  const auto t = build_table(1, 1);
  EXPECT_EQ(t.k_max(), 1u);
  EXPECT_EQ(t.n_max(), 1u);
  EXPECT_EQ(t.e(1, 1), Rational(1, 4));
  EXPECT_THROW(t.e(2, 1), InsufficientTableError);
  EXPECT_THROW(t.e(1, 2), InsufficientTableError);
}

TEST(CoefficientTable, ConsistentWithPointQuery) {
  const auto t = build_table(3, 2);
  EXPECT_EQ(t.e(2, 3), e_coeff(2, 3));
}

TEST(CoefficientTable, FirstColumnIsLadderBase) {
  const auto t = build_table(4, 60);
  for (std::size_t n = 1; n <= 60; ++n) EXPECT_EQ(t.e(n, 1), t.d_base(n));
}

TEST(CoefficientTable, Deterministic) { EXPECT_EQ(build_table(6, 30), build_table(6, 30)); }

TEST(CoefficientTable, CellCeiling) {
  const auto saved = limits();
  limits().max_table_cells = 100;
  EXPECT_THROW(build_table(11, 10), ResourceLimitError);
  EXPECT_NO_THROW(build_table(10, 10));
  limits() = saved;
  EXPECT_THROW(build_table(0, 3), UsageError);
}

TEST(CoefficientTable, AllEntriesPositive) {
  const auto t = build_table(12, 40);
  for (std::size_t k = 1; k <= 12; ++k)
    for (std::size_t n = 1; n <= 40; ++n) EXPECT_GT(t.e(n, k).sign(), 0) << n << "," << k;
}

}  // namespace
}  // namespace oddzeta
