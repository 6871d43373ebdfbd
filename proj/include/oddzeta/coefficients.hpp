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

#ifndef ODDZETA_COEFFICIENTS_HPP
#define ODDZETA_COEFFICIENTS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "oddzeta/bernoulli.hpp"
#include "oddzeta/error.hpp"
#include "oddzeta/rational.hpp"

namespace oddzeta {

namespace detail {

inline void require_positive(std::size_t v, const char* what) {
  if (v == 0) throw UsageError(std::string(what) + " must be >= 1");
}

/// D_n(1..k_max), index 0 unused.
inline std::vector<Rational> ladder(std::size_t n, std::size_t k_max) {
  std::vector<Rational> d(k_max + 1);
  d[1] = tangent_coeff(n) / Rational(pow2(2 * n - 1) * static_cast<unsigned long>(2 * n));
  for (std::size_t k = 2; k <= k_max; ++k)
    d[k] = d[k - 1] / Rational(static_cast<long>(2 * n + k - 1));
  return d;
}

/// E_n(1..k_max) for one n, index 0 unused.
///
/// Odd columns first: E_n(2j+1) depends on E_n(1), E_n(3), ..., E_n(2j-1).
/// Even columns then read the finished odd ones:
///   E_n(2j)   = (-1)^j D_n(2j)/2 + (-1)^(j+1) sum_{r<j} (-1)^r E_n(2r+1)/(2(j-r)-1)!
///   E_n(2j+1) = [(-1)^j D_n(2j+1)/2 + (-1)^(j+1) sum_{r<j} (-1)^r E_n(2r+1)/(2(j-r))!]
///               / (1 - 2^-(2j+1))
inline std::vector<Rational> e_row_from(const std::vector<Rational>& d) {
  const std::size_t k_max = d.size() - 1;
  std::vector<Rational> e(k_max + 1);
  const Rational half(1, 2);
  auto alt = [](std::size_t p) { return p % 2 == 0 ? 1L : -1L; };

  for (std::size_t k = 1; k <= k_max; k += 2) {
    const std::size_t j = (k - 1) / 2;
    Rational acc;
    for (std::size_t r = 0; r < j; ++r)
      acc += Rational(alt(r)) * e[2 * r + 1] / Rational(factorial(2 * (j - r)));
    Rational num = Rational(alt(j)) * d[k] * half + Rational(alt(j + 1)) * acc;
    const Integer two_k = pow2(k);
    e[k] = num * Rational(two_k, two_k - 1);
  }
  for (std::size_t k = 2; k <= k_max; k += 2) {
    const std::size_t j = k / 2;
    Rational acc;
    for (std::size_t r = 0; r < j; ++r)
      acc += Rational(alt(r)) * e[2 * r + 1] / Rational(factorial(2 * (j - r) - 1));
    e[k] = Rational(alt(j)) * d[k] * half + Rational(alt(j + 1)) * acc;
  }
  return e;
}

inline std::vector<Rational> e_row(std::size_t n, std::size_t k_max) {
  return e_row_from(ladder(n, k_max));
}

}  // namespace detail

/// D_n(k) = D_n(k-1) / (2n+k-1), with D_n(1) = c_n / (2^(2n-1) * 2n).
inline Rational d_coeff(std::size_t n, std::size_t k) {
  detail::require_positive(n, "d_coeff: n");
  detail::require_positive(k, "d_coeff: k");
  return detail::ladder(n, k)[k];
}

/// Coefficient of (pi/2)^(2n+k-1) in the series for A_k.
inline Rational e_coeff(std::size_t n, std::size_t k) {
  detail::require_positive(n, "e_coeff: n");
  detail::require_positive(k, "e_coeff: k");
  return detail::e_row(n, k)[k];
}

/// F_n(k) = E_n(k) / D_n(1).
inline Rational f_ratio(std::size_t n, std::size_t k) {
  detail::require_positive(n, "f_ratio: n");
  detail::require_positive(k, "f_ratio: k");
  const auto d = detail::ladder(n, k);
  return detail::e_row_from(d)[k] / d[1];
}

/// Dense, immutable grid of E_n(k) for 1 <= k <= k_max, 1 <= n <= n_max.
class CoefficientTable {
 public:
  std::size_t k_max() const noexcept { return k_max_; }
  std::size_t n_max() const noexcept { return n_max_; }

  const Rational& e(std::size_t n, std::size_t k) const {
    check(n, k);
    return entries_[(k - 1) * n_max_ + (n - 1)];
  }
  const Rational& d_base(std::size_t n) const {
    check(n, 1);
    return d_base_[n - 1];
  }

  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

 private:
  friend CoefficientTable build_table(std::size_t k_max, std::size_t n_max);

  void check(std::size_t n, std::size_t k) const {
    if (n == 0 || k == 0 || n > n_max_ || k > k_max_)
      throw InsufficientTableError("CoefficientTable: (n=" + std::to_string(n) + ", k=" +
                                       std::to_string(k) + ") outside " + std::to_string(n_max_) +
                                       "x" + std::to_string(k_max_),
                                   n);
  }

  std::size_t k_max_ = 0;
  std::size_t n_max_ = 0;
  std::vector<Rational> entries_;  // column-major by k
  std::vector<Rational> d_base_;
};

inline CoefficientTable build_table(std::size_t k_max, std::size_t n_max) {
  detail::require_positive(k_max, "build_table: k_max");
  detail::require_positive(n_max, "build_table: n_max");
  if (k_max * n_max > limits().max_table_cells)
    throw ResourceLimitError("build_table: " + std::to_string(k_max) + "x" +
                             std::to_string(n_max) + " exceeds the table cell ceiling");
  CoefficientTable t;
  t.k_max_ = k_max;
  t.n_max_ = n_max;
  t.entries_.resize(k_max * n_max);
  t.d_base_.resize(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto d = detail::ladder(n, k_max);
    const auto row = detail::e_row_from(d);
    for (std::size_t k = 1; k <= k_max; ++k) t.entries_[(k - 1) * n_max + (n - 1)] = row[k];
    t.d_base_[n - 1] = d[1];
  }
  return t;
}

}  // namespace oddzeta

#endif  // ODDZETA_COEFFICIENTS_HPP
