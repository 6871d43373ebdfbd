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

#ifndef ODDZETA_HIGHPREC_HPP
#define ODDZETA_HIGHPREC_HPP

#include <cmath>
#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "oddzeta/coefficients.hpp"
#include "oddzeta/error.hpp"
#include "oddzeta/fixed.hpp"

namespace oddzeta {

namespace detail {

/// atan(1/x) * 10^scale for integer x >= 2, with its error in ulps.
/// Each term carries at most 2 ulps of truncation; the alternating tail is
/// below the first skipped term, which is below one ulp.
inline HighPrecisionNumber atan_recip(unsigned long x, std::size_t scale) {
  const Integer x2 = Integer(x) * x;
  Integer power = pow10(scale) / x;  // floor, error < 1
  Integer sum = 0;
  Integer err = 1;
  for (unsigned long j = 0; power != 0; ++j) {
    const Integer term = power / (2 * j + 1);
    sum += (j % 2 == 0) ? term : Integer(-term);
    err += 2;
    power /= x2;
  }
  return {sum, scale, err};
}

inline void check_working_digits(std::size_t digits, const char* what) {
  if (digits > limits().max_working_digits)
    throw ResourceLimitError(std::string(what) + ": " + std::to_string(digits) +
                             " digits exceeds configured maximum " +
                             std::to_string(limits().max_working_digits));
}

}  // namespace detail

/// pi to `digits` fractional digits with err_ulp <= 1, from
/// pi = 16 atan(1/5) - 4 atan(1/239). Results are memoized at the finest
/// precision seen and rounded down for coarser requests.
inline HighPrecisionNumber compute_pi(std::size_t digits) {
  if (digits == 0) throw UsageError("compute_pi: digits must be >= 1");
  detail::check_working_digits(digits, "compute_pi");

  static std::mutex mu;
  static std::optional<HighPrecisionNumber> memo;
  std::lock_guard lock(mu);
  if (!memo || memo->scale() < digits) {
    const std::size_t work = digits + 4 + std::to_string(digits).size();
    const auto pi = detail::atan_recip(5, work).mul_int(16) - detail::atan_recip(239, work).mul_int(4);
    memo = pi.rescale(digits);
    if (memo->err_ulp() > 1) throw std::logic_error("compute_pi: guard digits too small");
  }
  return memo->rescale(digits);
}

/// Truncated sum of A_k = sum_n E_n(k) (pi/2)^(2n+k-1).
struct SeriesResult {
  /// Carried at digits + kGuardDigits; err_ulp includes tail_bound.
  HighPrecisionNumber value;
  std::size_t terms_used = 0;
  /// Geometric bound on the omitted tail, same scale as value.
  HighPrecisionNumber tail_bound;
  std::size_t k = 0;
};

/// Upper bound on the ratio of consecutive terms, enforced at runtime.
inline const Rational& term_ratio_bound() {
  static const Rational r(1, 3);
  return r;
}

/// Terms needed for a tail below 10^-(digits + guard). Every term of every
/// A_k is below 1 and successive terms shrink by at least 1/3, so
/// n > (digits + guard) / log10(3) suffices, independent of k.
inline std::size_t estimate_terms(std::size_t digits, std::size_t /*k*/) {
  if (digits == 0) throw UsageError("estimate_terms: digits must be >= 1");
  const double n = static_cast<double>(digits + kGuardDigits) / std::log10(3.0);
  return static_cast<std::size_t>(std::ceil(n)) + 2;
}

/// Throws ConvergenceError unless |e_next / e_prev| * h2_upper <= 1/3.
inline void check_term_ratio(const Rational& e_prev, const Rational& e_next, const Rational& h2_upper,
                             std::size_t n, std::size_t k) {
  if (e_next.abs() * h2_upper > e_prev.abs() * term_ratio_bound())
    throw ConvergenceError("sum_series: term ratio at n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                           " exceeds " + term_ratio_bound().str());
}

namespace detail {

/// Extra digits so that x^p at fixed scale still has `base` significant
/// digits below the point when x > 1.
inline std::size_t power_headroom(double x, std::size_t p) {
  if (x <= 1.0) return 4;
  return static_cast<std::size_t>(std::ceil(static_cast<double>(p) * std::log10(x))) + 4;
}

}  // namespace detail

inline SeriesResult sum_series(const CoefficientTable& table, std::size_t k, std::size_t digits) {
  if (k == 0 || digits == 0) throw UsageError("sum_series: k and digits must be >= 1");
  if (k > table.k_max())
    throw InsufficientTableError("sum_series: table has k_max " + std::to_string(table.k_max()) +
                                     ", need " + std::to_string(k),
                                 table.n_max());
  const std::size_t work = digits + kGuardDigits;
  const std::size_t n_max = table.n_max();
  const std::size_t pwork = work + detail::power_headroom(1.5707963267948966, 2 * n_max + k);
  detail::check_working_digits(pwork, "sum_series");

  const auto half_pi = compute_pi(pwork + 2).div_int(2);
  const auto h2 = mul(half_pi, half_pi, pwork);
  const Rational h2_upper = h2.upper();

  // (pi/2)^(k+1), the power attached to n = 1.
  HighPrecisionNumber power = half_pi.rescale(pwork);
  for (std::size_t i = 1; i <= k; ++i) power = mul(power, half_pi, pwork);

  HighPrecisionNumber sum(0, work);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rational& e = table.e(n, k);
    if (n >= 5) check_term_ratio(table.e(n - 1, k), e, h2_upper, n, k);
    const auto term = power.mul_rational(e, work);
    sum += term;
    // Remaining terms are bounded by |term| * r/(1-r) = |term|/2.
    const Integer upper = abs(term.mantissa()) + term.err_ulp();
    if (upper <= 2) {
      const Integer tail = detail::ceil_div(upper, 2);
      return {sum.with_extra_error(tail), n, HighPrecisionNumber(tail, work), k};
    }
    power = mul(power, h2, pwork);
  }
  const std::size_t needed = std::max(estimate_terms(digits, k), 2 * n_max);
  throw InsufficientTableError("sum_series: table with n_max " + std::to_string(n_max) +
                                   " is too short for " + std::to_string(digits) + " digits",
                               needed);
}

/// |E_{n+1}(k) / E_n(k)| * (pi/2)^2 for n = 1..n_max-1.
inline std::vector<HighPrecisionNumber> term_ratios(const CoefficientTable& table, std::size_t k,
                                                    std::size_t digits = 20) {
  const auto half_pi = compute_pi(digits + 6).div_int(2);
  const auto h2 = mul(half_pi, half_pi, digits + 4);
  std::vector<HighPrecisionNumber> out;
  for (std::size_t n = 1; n < table.n_max(); ++n) {
    const Rational q = (table.e(n + 1, k) / table.e(n, k)).abs();
    out.push_back(h2.mul_rational(q, digits + 2).rescale(digits));
  }
  return out;
}

}  // namespace oddzeta

#endif  // ODDZETA_HIGHPREC_HPP
