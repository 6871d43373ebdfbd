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

#ifndef ODDZETA_FIXED_HPP
#define ODDZETA_FIXED_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>

#include "oddzeta/error.hpp"
#include "oddzeta/rational.hpp"

namespace oddzeta {

/// Extra decimal digits carried beyond every user request.
inline constexpr std::size_t kGuardDigits = 10;

namespace detail {

/// n / d rounded half away from zero; d > 0.
inline Integer round_div(const Integer& n, const Integer& d) {
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  Integer twice = 2 * abs(r);
  if (twice >= d) q += sgn(n) < 0 ? -1 : 1;
  return q;
}

inline Integer ceil_div(const Integer& n, const Integer& d) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

/// Error in output ulps after dividing an exactly known error `err` by `d`
/// and rounding once: ceil(err/d + 1/2) when rounding happened.
inline Integer rounded_err(const Integer& err, const Integer& d, bool inexact) {
  if (!inexact) return ceil_div(err, d);
  return ceil_div(2 * err + d, 2 * d);
}

}  // namespace detail

/// Decimal fixed-point number: value = mantissa * 10^-scale, known to within
/// err_ulp * 10^-scale of the exact quantity it stands for.
///
/// Every operation widens err_ulp by the worst case of its inputs plus its
/// own rounding; nothing ever shrinks it.
class HighPrecisionNumber {
 public:
  HighPrecisionNumber() = default;
  HighPrecisionNumber(Integer mantissa, std::size_t scale, Integer err_ulp = 0)
      : mantissa_(std::move(mantissa)), scale_(scale), err_(std::move(err_ulp)) {
    if (err_ < 0) throw UsageError("HighPrecisionNumber: negative error bound");
  }

  static HighPrecisionNumber from_integer(const Integer& v, std::size_t scale) {
    return {v * pow10(scale), scale, 0};
  }

  static HighPrecisionNumber from_rational(const Rational& q, std::size_t scale) {
    const Integer num = q.numerator() * pow10(scale);
    const Integer den = q.denominator();
    const bool exact = mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0;
    return {detail::round_div(num, den), scale, exact ? 0 : 1};
  }

  /// Exact parse of "[-]digits[.digits]".
  static HighPrecisionNumber parse(std::string_view text) {
    std::string s(text);
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
      neg = s[0] == '-';
      s.erase(0, 1);
    }
    const auto dot = s.find('.');
    std::string digits = s;
    std::size_t scale = 0;
    if (dot != std::string::npos) {
      scale = s.size() - dot - 1;
      digits = s.substr(0, dot) + s.substr(dot + 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("cannot parse decimal '" + std::string(text) + "'");
    Integer m(digits, 10);
    return {neg ? Integer(-m) : m, scale, 0};
  }

  const Integer& mantissa() const noexcept { return mantissa_; }
  std::size_t scale() const noexcept { return scale_; }
  const Integer& err_ulp() const noexcept { return err_; }

  int sign() const { return sgn(mantissa_); }
  HighPrecisionNumber abs() const { return {::abs(mantissa_), scale_, err_}; }
  HighPrecisionNumber operator-() const { return {-mantissa_, scale_, err_}; }

  HighPrecisionNumber with_extra_error(const Integer& ulps) const {
    return {mantissa_, scale_, err_ + ulps};
  }

  Rational to_rational() const { return Rational(mantissa_, pow10(scale_)); }
  Rational lower() const { return Rational(mantissa_ - err_, pow10(scale_)); }
  Rational upper() const { return Rational(mantissa_ + err_, pow10(scale_)); }
  /// Upper bound on |exact value|.
  Rational magnitude_bound() const { return Rational(::abs(mantissa_) + err_, pow10(scale_)); }
  double to_double() const { return to_rational().raw().get_d(); }

  /// Re-expresses at another scale; coarsening rounds and widens the bound.
  HighPrecisionNumber rescale(std::size_t new_scale) const {
    if (new_scale >= scale_) {
      const Integer f = pow10(new_scale - scale_);
      return {mantissa_ * f, new_scale, err_ * f};
    }
    const Integer d = pow10(scale_ - new_scale);
    const bool inexact = mpz_divisible_p(mantissa_.get_mpz_t(), d.get_mpz_t()) == 0;
    return {detail::round_div(mantissa_, d), new_scale, detail::rounded_err(err_, d, inexact)};
  }

  friend HighPrecisionNumber operator+(const HighPrecisionNumber& a, const HighPrecisionNumber& b) {
    const std::size_t s = std::max(a.scale_, b.scale_);
    const auto x = a.rescale(s);
    const auto y = b.rescale(s);
    return {x.mantissa_ + y.mantissa_, s, x.err_ + y.err_};
  }
  friend HighPrecisionNumber operator-(const HighPrecisionNumber& a, const HighPrecisionNumber& b) {
    return a + (-b);
  }
  HighPrecisionNumber& operator+=(const HighPrecisionNumber& o) { return *this = *this + o; }
  HighPrecisionNumber& operator-=(const HighPrecisionNumber& o) { return *this = *this - o; }

  /// Product rounded to `out_scale` (defaults to the finer input scale).
  friend HighPrecisionNumber mul(const HighPrecisionNumber& a, const HighPrecisionNumber& b,
                                 std::size_t out_scale) {
    const std::size_t s = a.scale_ + b.scale_;
    const Integer p = a.mantissa_ * b.mantissa_;
    const Integer e = ::abs(a.mantissa_) * b.err_ + ::abs(b.mantissa_) * a.err_ + a.err_ * b.err_;
    return HighPrecisionNumber(p, s, e).rescale(out_scale);
  }
  friend HighPrecisionNumber operator*(const HighPrecisionNumber& a, const HighPrecisionNumber& b) {
    return mul(a, b, std::max(a.scale_, b.scale_));
  }

  /// Quotient rounded to `out_scale`. Throws if b's interval contains zero.
  friend HighPrecisionNumber div(const HighPrecisionNumber& a, const HighPrecisionNumber& b,
                                 std::size_t out_scale) {
    const Integer bm = ::abs(b.mantissa_);
    if (bm <= b.err_) throw UsageError("HighPrecisionNumber: division by a value that may be zero");
    // value = a.m * 10^(b.s) / (b.m * 10^(a.s)); scaled by 10^out.
    const Integer num = a.mantissa_ * pow10(b.scale_ + out_scale);
    const Integer den = b.mantissa_ * pow10(a.scale_);
    Integer q = detail::round_div(num, Integer(::abs(den)));
    if (sgn(den) < 0) q = -q;
    // |a/b - A/B| <= (ea*B + |A|*eb) / (B*(B-eb)) in mixed units.
    const Integer enum_ = (a.err_ * bm + ::abs(a.mantissa_) * b.err_) * pow10(b.scale_ + out_scale);
    const Integer eden = bm * (bm - b.err_) * pow10(a.scale_);
    const Integer e = detail::ceil_div(enum_, eden) + 1;
    return {q, out_scale, e};
  }

  HighPrecisionNumber mul_int(const Integer& f) const {
    return {mantissa_ * f, scale_, err_ * ::abs(f)};
  }

  HighPrecisionNumber div_int(const Integer& d) const {
    if (d == 0) throw UsageError("HighPrecisionNumber: division by zero");
    const Integer ad = ::abs(d);
    const bool inexact = mpz_divisible_p(mantissa_.get_mpz_t(), ad.get_mpz_t()) == 0;
    Integer q = detail::round_div(mantissa_, ad);
    if (sgn(d) < 0) q = -q;
    return {q, scale_, detail::rounded_err(err_, ad, inexact)};
  }

  /// q * this, rounded once to `out_scale`.
  HighPrecisionNumber mul_rational(const Rational& q, std::size_t out_scale) const {
    const Integer num = q.numerator() * mantissa_ * pow10(out_scale);
    const Integer den = q.denominator() * pow10(scale_);
    const bool inexact = mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0;
    const Integer e_exact = ::abs(q.numerator()) * err_ * pow10(out_scale);
    return {detail::round_div(num, den), out_scale, detail::rounded_err(e_exact, den, inexact)};
  }

  /// Rounded to `digits` fractional digits, e.g. "0.9159655942".
  std::string to_string(std::size_t digits) const { return rescale(digits).to_exact_string(); }

  /// The stored mantissa rendered at its own scale.
  std::string to_exact_string() const {
    std::string d = Integer(::abs(mantissa_)).get_str();
    if (d.size() <= scale_) d.insert(0, scale_ - d.size() + 1, '0');
    std::string out = sgn(mantissa_) < 0 ? "-" : "";
    out += d.substr(0, d.size() - scale_);
    if (scale_ > 0) out += "." + d.substr(d.size() - scale_);
    return out;
  }

  /// True when the exact values both stand for could coincide.
  friend bool intervals_overlap(const HighPrecisionNumber& a, const HighPrecisionNumber& b) {
    const auto diff = a - b;
    return ::abs(diff.mantissa_) <= diff.err_;
  }

 private:
  Integer mantissa_ = 0;
  std::size_t scale_ = 0;
  Integer err_ = 0;
};

/// Lower bound on the number of leading fractional digits on which two
/// values agree, measured as floor(-log10 |a - b|) using the stored values.
inline std::size_t agreeing_digits(const HighPrecisionNumber& a, const HighPrecisionNumber& b) {
  const auto d = (a - b).abs();
  if (d.sign() == 0) return d.scale();
  const std::size_t len = d.mantissa().get_str().size();
  return len >= d.scale() ? 0 : d.scale() - len;
}

}  // namespace oddzeta

#endif  // ODDZETA_FIXED_HPP
