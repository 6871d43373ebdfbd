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

#ifndef ODDZETA_ORACLE_HPP
#define ODDZETA_ORACLE_HPP

// Reference values computed without the pi/2-power series machinery.
// Only the fixed-point and rational primitives are shared with the rest of
// the library; this header must not include coefficients, highprec,
// constants or bernoulli.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "oddzeta/error.hpp"
#include "oddzeta/fixed.hpp"
#include "oddzeta/rational.hpp"

namespace oddzeta::oracle {

namespace detail {

inline void check_digits(std::size_t digits, const char* what) {
  if (digits == 0) throw UsageError(std::string(what) + ": digits must be >= 1");
  if (digits > limits().max_working_digits)
    throw ResourceLimitError(std::string(what) + ": digits exceeds configured maximum");
}

/// sum_j (-1)^j / ((2j+1) x^(2j+1)) at `scale`, term-by-term rounding.
inline HighPrecisionNumber arctan_inverse(long x, std::size_t scale) {
  HighPrecisionNumber sum(0, scale);
  HighPrecisionNumber power = HighPrecisionNumber::from_integer(1, scale).div_int(x);
  const Integer x2 = Integer(x) * x;
  const Integer one_ulp_scaled = 1;
  for (long j = 0; abs(power.mantissa()) > one_ulp_scaled; ++j) {
    const auto term = power.div_int(2 * j + 1);
    sum = (j % 2 == 0) ? sum + term : sum - term;
    power = power.div_int(x2);
  }
  // Alternating, decreasing: the tail is below the next power.
  return sum.with_extra_error(abs(power.mantissa()) + power.err_ulp());
}

}  // namespace detail

/// pi = 48 atan(1/18) + 32 atan(1/57) - 20 atan(1/239).
inline HighPrecisionNumber pi(std::size_t digits) {
  detail::check_digits(digits, "oracle::pi");
  const std::size_t work = digits + 8 + std::to_string(digits).size();
  const auto v = detail::arctan_inverse(18, work).mul_int(48) + detail::arctan_inverse(57, work).mul_int(32) -
                 detail::arctan_inverse(239, work).mul_int(20);
  return v.rescale(digits);
}

/// ln 2 = 2 atanh(1/3) = sum_j 2 / ((2j+1) 3^(2j+1)).
inline HighPrecisionNumber ln2(std::size_t digits) {
  detail::check_digits(digits, "oracle::ln2");
  const std::size_t work = digits + 8 + std::to_string(digits).size();
  HighPrecisionNumber sum(0, work);
  HighPrecisionNumber power = HighPrecisionNumber::from_integer(2, work).div_int(3);
  for (long j = 0; abs(power.mantissa()) > 0; ++j) {
    sum += power.div_int(2 * j + 1);
    power = power.div_int(9);
  }
  // Positive tail below power * (1 + 1/9 + ...) < 2 * power.
  sum = sum.with_extra_error(2 * (abs(power.mantissa()) + power.err_ulp()) + 1);
  return sum.rescale(digits);
}

/// Depth of the Chebyshev acceleration for a truncation error below
/// 10^-(digits+2): 3 / (3 + sqrt 8)^n.
inline std::size_t acceleration_depth(std::size_t digits) {
  const double per_term = std::log10(3.0 + std::sqrt(8.0));
  return static_cast<std::size_t>(std::ceil((static_cast<double>(digits) + 3.0) / per_term)) + 1;
}

/// sum_{m>=0} (-1)^m / (step*m + 1)^s with the Chebyshev-polynomial
/// weights of Cohen, Rodriguez Villegas and Zagier in Borwein's integer form:
///   t_0 = 1, t_{i+1} = t_i * 2(n+i)(n-i) / ((i+1)(2i+1)), d_k = sum_{i<=k} t_i,
///   S ~ (1/d_n) sum_{m<n} (-1)^m (d_n - d_m) a_m.
/// For a_m = 1/(step*m+1)^s the sequence is a moment sequence of a positive
/// measure of mass 1, so |error| <= 3 / (3 + sqrt 8)^n.
inline HighPrecisionNumber alternating_power_sum(unsigned step, unsigned s, std::size_t digits,
                                                 std::size_t depth_multiplier = 1) {
  detail::check_digits(digits, "oracle::alternating_power_sum");
  if (s == 0) throw UsageError("oracle: exponent must be >= 1");
  const std::size_t n = acceleration_depth(digits) * depth_multiplier;
  std::vector<Integer> d(n + 1);
  Integer t = 1;
  d[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    t *= 2 * Integer(static_cast<unsigned long>(n + i)) * static_cast<unsigned long>(n - i);
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(),
                 Integer(static_cast<unsigned long>((i + 1) * (2 * i + 1))).get_mpz_t());
    d[i + 1] = d[i] + t;
  }
  const std::size_t work = digits + 2;
  const Integer unit = pow10(work);
  Integer acc = 0;
  for (std::size_t m = 0; m < n; ++m) {
    Integer base;
    mpz_ui_pow_ui(base.get_mpz_t(), static_cast<unsigned long>(step) * m + 1, s);
    const Integer w = (d[n] - d[m]) * unit;
    const Integer term = oddzeta::detail::round_div(w, base);
    acc += (m % 2 == 0) ? term : Integer(-term);
  }
  // Rounding: n/2 units of 1/d_n each, then one final rounding; truncation
  // below 10^-(digits+2) by choice of n.
  const HighPrecisionNumber v(oddzeta::detail::round_div(acc, d[n]), work, 2);
  return v.rescale(digits);
}

/// Dirichlet eta(s) = sum_{m>=1} (-1)^(m+1) / m^s.
inline HighPrecisionNumber reference_eta(unsigned s, std::size_t digits, std::size_t depth_multiplier = 1) {
  if (s < 1) throw UsageError("reference_eta: s must be >= 1");
  return alternating_power_sum(1, s, digits, depth_multiplier);
}

/// Dirichlet beta(s) = sum_{m>=0} (-1)^m / (2m+1)^s.
inline HighPrecisionNumber reference_beta(unsigned s, std::size_t digits, std::size_t depth_multiplier = 1) {
  if (s < 2) throw UsageError("reference_beta: s must be >= 2");
  return alternating_power_sum(2, s, digits, depth_multiplier);
}

/// B_0..B_m by the Akiyama-Tanigawa transform (B_1 = +1/2 here; only even
/// indices are used below).
inline std::vector<Rational> akiyama_tanigawa(std::size_t m) {
  std::vector<Rational> a(m + 1), b(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    a[i] = Rational(1, static_cast<long>(i + 1));
    for (std::size_t j = i; j >= 1; --j) a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
    b[i] = a[0];
  }
  return b;
}

/// zeta(s), integer s >= 2, by direct summation of the first N-1 terms plus
/// an Euler-Maclaurin tail, all in exact rationals:
///   sum_{m<N} m^-s + N^(1-s)/(s-1) + N^-s/2
///   + sum_{j=1}^{p} B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^(-s-2j+1).
/// For real s the remainder is bounded by the first omitted correction.
inline HighPrecisionNumber zeta_direct(unsigned s, std::size_t digits) {
  detail::check_digits(digits, "oracle::zeta_direct");
  if (s < 2) throw UsageError("zeta_direct: s must be >= 2");
  const std::size_t work = digits + 4;
  const unsigned long big_n = work + 2;
  const Rational eps(Integer(1), pow10(work + 1));

  Rational sum;
  for (unsigned long m = 1; m < big_n; ++m) sum += Rational(Integer(1), pow_ui(static_cast<long>(m), s));
  const Integer n_pow_s = pow_ui(static_cast<long>(big_n), s);
  sum += Rational(Integer(static_cast<unsigned long>(big_n)), n_pow_s * (s - 1));
  sum += Rational(Integer(1), 2 * n_pow_s);

  std::size_t bern_len = 64;
  auto b = akiyama_tanigawa(bern_len);
  Rational rising(static_cast<long>(s));  // s(s+1)...(s+2j-2)
  Integer fact2j = 2;                      // (2j)!
  Integer n_power = n_pow_s * big_n;       // N^(s+2j-1)
  Rational remainder;
  for (std::size_t j = 1;; ++j) {
    if (2 * j > bern_len) {
      bern_len *= 2;
      b = akiyama_tanigawa(bern_len);
    }
    const Rational term = b[2 * j] * rising / Rational(fact2j * n_power);
    if (term.abs() < eps) {
      remainder = term.abs();
      break;
    }
    sum += term;
    rising *= Rational(static_cast<long>((s + 2 * j - 1) * (s + 2 * j)));
    fact2j *= static_cast<unsigned long>((2 * j + 1) * (2 * j + 2));
    n_power *= big_n * big_n;
  }
  auto v = HighPrecisionNumber::from_rational(sum, work);
  v = v.with_extra_error(oddzeta::detail::ceil_div(remainder.numerator() * pow10(work), remainder.denominator()));
  return v.rescale(digits);
}

}  // namespace oddzeta::oracle

#endif  // ODDZETA_ORACLE_HPP
