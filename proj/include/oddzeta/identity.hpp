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

#ifndef ODDZETA_IDENTITY_HPP
#define ODDZETA_IDENTITY_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddzeta/coefficients.hpp"
#include "oddzeta/constants.hpp"
#include "oddzeta/error.hpp"
#include "oddzeta/fixed.hpp"
#include "oddzeta/highprec.hpp"

namespace oddzeta {

/// S1: sum (-1)^(m+1) sin(m t) / m^(2k).  S2: sum (-1)^(m+1) cos(m t) / m^(2k+1).
/// TanHalf: sum (-1)^(m+1) sin(m t) against tan(t/2)/2 (Cesaro-summed).
enum class Identity { S1, S2, TanHalf };

inline std::string to_string(Identity id) {
  switch (id) {
    case Identity::S1: return "S1";
    case Identity::S2: return "S2";
    case Identity::TanHalf: return "tan_half";
  }
  return "?";
}

inline Identity parse_identity(std::string_view s) {
  if (s == "S1" || s == "s1") return Identity::S1;
  if (s == "S2" || s == "s2") return Identity::S2;
  if (s == "tan_half") return Identity::TanHalf;
  throw UsageError("unknown identity '" + std::string(s) + "'; valid: S1, S2, tan_half");
}

/// An angle in (0, pi), either a rational or a rational multiple of pi.
class Angle {
 public:
  static Angle radians(Rational value, std::string label = "") {
    Angle a(std::move(value), false, std::move(label));
    a.validate();
    return a;
  }
  static Angle pi_times(Rational multiple, std::string label = "") {
    Angle a(std::move(multiple), true, std::move(label));
    a.validate();
    return a;
  }

  /// "1.0", "0.5", "pi/2", "2*pi/3", "pi".
  static Angle parse(std::string_view text) {
    const std::string s(text);
    const auto at = s.find("pi");
    if (at == std::string::npos) {
      const auto v = HighPrecisionNumber::parse(s);
      return radians(v.to_rational(), s);
    }
    Rational mult(1);
    if (at > 0) {
      std::string lead = s.substr(0, at);
      if (lead.back() == '*') lead.pop_back();
      mult = HighPrecisionNumber::parse(lead).to_rational();
    }
    const std::string rest = s.substr(at + 2);
    if (!rest.empty()) {
      if (rest[0] != '/') throw UsageError("cannot parse angle '" + s + "'");
      mult /= HighPrecisionNumber::parse(rest.substr(1)).to_rational();
    }
    return pi_times(mult, s);
  }

  bool is_pi_multiple() const noexcept { return pi_multiple_; }
  const Rational& coefficient() const noexcept { return value_; }
  const std::string& label() const noexcept { return label_; }

  HighPrecisionNumber at(std::size_t scale) const {
    if (!pi_multiple_) return HighPrecisionNumber::from_rational(value_, scale);
    return compute_pi(scale + 4).mul_rational(value_, scale);
  }

  double approx() const {
    const double v = value_.raw().get_d();
    return pi_multiple_ ? v * 3.14159265358979323846 : v;
  }

 private:
  Angle(Rational v, bool pi, std::string label)
      : value_(std::move(v)), pi_multiple_(pi), label_(std::move(label)) {
    if (label_.empty()) label_ = pi_multiple_ ? value_.str() + "*pi" : at(20).to_string(20);
  }

  void validate() const {
    bool ok = value_.sign() > 0;
    if (pi_multiple_) ok = ok && value_ < Rational(1);
    else ok = ok && value_ < compute_pi(30).lower();
    if (!ok) throw UsageError("angle must lie strictly between 0 and pi");
  }

  Rational value_;
  bool pi_multiple_ = false;
  std::string label_;
};

namespace detail {

/// (cos x, sin x) for |x| <= 4 by Taylor series at `scale`.
inline std::pair<HighPrecisionNumber, HighPrecisionNumber> sin_cos_small(const HighPrecisionNumber& x,
                                                                        std::size_t scale) {
  if (x.magnitude_bound() > Rational(4)) throw UsageError("sin_cos_small: |x| > 4");
  const std::size_t work = scale + 6;
  const auto xw = x.rescale(work);
  HighPrecisionNumber c = HighPrecisionNumber::from_integer(1, work);
  HighPrecisionNumber s = xw;
  HighPrecisionNumber term = xw;  // x^j / j!
  for (long j = 2;; ++j) {
    term = mul(term, xw, work).div_int(j);
    const long phase = j % 4;  // x^j/j! enters cos for even j, sin for odd j
    if (phase == 0) c += term;
    else if (phase == 1) s += term;
    else if (phase == 2) c -= term;
    else s -= term;
    if (j > 6 && abs(term.mantissa()) <= 1) {
      // Both tails are alternating and decreasing beyond j > |x|.
      const Integer tail = abs(term.mantissa()) + term.err_ulp() + 1;
      return {c.with_extra_error(tail).rescale(scale), s.with_extra_error(tail).rescale(scale)};
    }
  }
}

/// (cos m t, sin m t), freshly evaluated with range reduction.
inline std::pair<HighPrecisionNumber, HighPrecisionNumber> sin_cos_multiple(const Angle& t, unsigned long m,
                                                                           std::size_t scale) {
  if (t.is_pi_multiple()) {
    // Reduce m*q modulo 2 exactly, into (-1, 1].
    Rational r = t.coefficient() * Rational(static_cast<long>(m));
    const Integer two_floor = 2 * ((r.numerator() + r.denominator()) / (2 * r.denominator()));
    r -= Rational(two_floor);
    const auto x = compute_pi(scale + 8).mul_rational(r, scale + 6);
    return sin_cos_small(x, scale);
  }
  const std::size_t extra = std::to_string(m).size() + 2;
  const auto x = t.at(scale + extra + 6).mul_int(Integer(m));
  const double turns = std::nearbyint(t.approx() * static_cast<double>(m) / (2 * 3.14159265358979323846));
  const Integer j(static_cast<long>(turns));
  const auto two_pi = compute_pi(scale + extra + 8).mul_int(2);
  const auto reduced = (x - two_pi.mul_int(j).rescale(x.scale())).rescale(scale + 6);
  return sin_cos_small(reduced, scale);
}

inline constexpr unsigned long kRenormalizeEvery = 10000;

/// Raw running partial sums of sum_{m=1}^{M} (-1)^(m+1) f(m t) / m^p with
/// f = sin or cos, evaluated by rotation with periodic fresh re-evaluation.
/// Calls visit(m, partial_sum) after each m; returns the total error bound
/// (ulps) valid for every partial sum.
template <typename Visit>
Integer rotate_and_sum(const Angle& t, bool use_sin, unsigned p, unsigned long terms, std::size_t work,
                       Visit&& visit) {
  const auto [c1h, s1h] = sin_cos_multiple(t, 1, work);
  const Integer c1 = c1h.mantissa(), s1 = s1h.mantissa();
  const Integer e1 = std::max(c1h.err_ulp(), s1h.err_ulp());
  const Integer unit = pow10(work);
  Integer acc = 0, err = 0;
  for (unsigned long m0 = 1; m0 <= terms; m0 += kRenormalizeEvery) {
    const unsigned long m1 = std::min(terms, m0 + kRenormalizeEvery - 1);
    const auto [ch, sh] = sin_cos_multiple(t, m0, work);
    Integer c = ch.mantissa(), s = sh.mantissa();
    // Rotation by a near-unitary matrix: the 2-norm error grows additively.
    const Integer e0 = std::max(ch.err_ulp(), sh.err_ulp());
    const Integer block_err = 2 * e0 + 2 * Integer(m1 - m0 + 1) * (2 * e1 + 2);
    Integer den_first;
    mpz_ui_pow_ui(den_first.get_mpz_t(), m0, p);
    // sum over the block of (block_err / m^p + 1/2) <= block_err*L/m0^p + L.
    err += ceil_div(block_err * Integer(m1 - m0 + 1), den_first) + Integer(m1 - m0 + 1);
    Integer den, term, nc;
    for (unsigned long m = m0; m <= m1; ++m) {
      mpz_ui_pow_ui(den.get_mpz_t(), m, p);
      term = round_div(use_sin ? s : c, den);
      if (m % 2 == 1) acc += term;
      else acc -= term;
      visit(m, acc);
      nc = c * c1 - s * s1;
      s = s * c1 + c * s1;
      c = round_div(nc, unit);
      s = round_div(s, unit);
    }
  }
  return err;
}

inline void require_index(Identity id, std::size_t k) {
  if (id != Identity::TanHalf && k == 0) throw UsageError("identity check: k must be >= 1");
}

/// Series terms for a D-series tail below 10^-work at angle t (|t| < pi).
inline std::size_t auto_series_terms(const Angle& t, std::size_t work) {
  const double q = t.approx() / 3.14159265358979323846;
  const double per = -2.0 * std::log10(q);
  return static_cast<std::size_t>(std::ceil(static_cast<double>(work + 2) / per)) + 10;
}

struct RhsParts {
  HighPrecisionNumber series;  // signed (-1)^.. (1/2) sum D_n(.) t^(.)
  HighPrecisionNumber poly;    // A_{2r+1} polynomial, excluding the constant A_{2k+1} of S2
  HighPrecisionNumber top;     // A_{2k+1} for S2, zero for S1
};

/// sum_{n=1}^{N} coeff_n * t^(2n + offset), with a geometric tail estimate.
template <typename Coeff>
HighPrecisionNumber power_series(Coeff&& coeff, const Angle& t, std::size_t offset, std::size_t terms,
                                 std::size_t work) {
  const std::size_t pwork = work + power_headroom(t.approx(), 2 * terms + offset);
  check_working_digits(pwork, "identity series");
  const auto x = t.at(pwork + 2);
  const auto x2 = mul(x, x, pwork);
  HighPrecisionNumber power = HighPrecisionNumber::from_integer(1, pwork);
  for (std::size_t i = 0; i < offset + 2; ++i) power = mul(power, x, pwork);
  HighPrecisionNumber sum(0, work);
  HighPrecisionNumber last, before_last;
  for (std::size_t n = 1; n <= terms; ++n) {
    const auto term = power.mul_rational(coeff(n), work);
    sum += term;
    before_last = last;
    last = term;
    power = mul(power, x2, pwork);
  }
  // Tail ~ geometric with ratio approaching (t/pi)^2.
  const double q = t.approx() / 3.14159265358979323846;
  double r = q * q;
  if (terms >= 2 && before_last.sign() != 0)
    r = std::max(r, std::abs(last.to_double() / before_last.to_double()));
  r = std::min(0.99, 1.1 * r);
  const Integer mag = abs(last.mantissa()) + last.err_ulp();
  const double tail = mag.get_d() * r / (1.0 - r);
  return sum.with_extra_error(Integer(std::ceil(tail)) + 1);
}

inline RhsParts rhs_parts(Identity id, std::size_t k, const Angle& t, std::size_t terms, std::size_t work) {
  // A_1 .. A_{2k+1}, from the series path.
  std::vector<HighPrecisionNumber> a_odd;
  for (std::size_t r = 0; r <= k; ++r)
    a_odd.push_back(r == 0 ? alt_harmonic(work).value : eta_odd(r, work).value);

  const std::size_t ladder_k = id == Identity::S1 ? 2 * k : 2 * k + 1;
  const std::size_t offset = id == Identity::S1 ? 2 * k - 1 : 2 * k;
  auto d = [ladder_k](std::size_t n) { return d_coeff(n, ladder_k); };
  auto series = power_series(d, t, offset, terms, work).div_int(2);
  const bool negate = id == Identity::S1 ? (k % 2 == 1) : (k % 2 == 0);
  if (negate) series = -series;

  const auto x = t.at(work + 4);
  HighPrecisionNumber poly(0, work);
  const std::size_t r_end = k;  // S1: r < k; S2: r < k plus the separate top term
  for (std::size_t r = 0; r < r_end; ++r) {
    const std::size_t e = id == Identity::S1 ? 2 * k - 2 * r - 1 : 2 * k - 2 * r;
    HighPrecisionNumber p = HighPrecisionNumber::from_integer(1, work + 4);
    for (std::size_t i = 0; i < e; ++i) p = mul(p, x, work + 4);
    auto contrib = mul(a_odd[r], p, work + 4).rescale(work);
    Integer f = 1;
    for (std::size_t i = 2; i <= e; ++i) f *= static_cast<unsigned long>(i);
    contrib = contrib.div_int(f);
    const std::size_t sign_exp = id == Identity::S1 ? k - r - 1 : k - r;
    poly = sign_exp % 2 == 0 ? poly + contrib : poly - contrib;
  }
  HighPrecisionNumber top(0, work);
  if (id == Identity::S2) top = a_odd[k].rescale(work);
  return {series, poly, top};
}

}  // namespace detail

/// Partial Fourier sum with two-term averaging (S_M + S_{M-1})/2; for
/// TanHalf, the Cesaro mean of S_1..S_M.
inline HighPrecisionNumber fourier_lhs(Identity id, std::size_t k, const Angle& theta, unsigned long fourier_terms,
                                       std::size_t digits = 30) {
  detail::require_index(id, k);
  if (fourier_terms == 0) throw UsageError("fourier_lhs: fourier_terms must be >= 1");
  const std::size_t work = digits + kGuardDigits + 2 * std::to_string(fourier_terms).size();

  if (id == Identity::TanHalf) {
    Integer means = 0;
    const Integer err = detail::rotate_and_sum(theta, true, 0, fourier_terms, work,
                                               [&](unsigned long, const Integer& s) { means += s; });
    const HighPrecisionNumber total(means, work, err * Integer(fourier_terms));
    return total.div_int(Integer(fourier_terms)).rescale(digits + kGuardDigits);
  }

  const bool use_sin = id == Identity::S1;
  const unsigned p = static_cast<unsigned>(use_sin ? 2 * k : 2 * k + 1);
  Integer prev = 0, last = 0;
  const Integer err = detail::rotate_and_sum(theta, use_sin, p, fourier_terms, work,
                                             [&](unsigned long, const Integer& s) {
                                               prev = last;
                                               last = s;
                                             });
  const HighPrecisionNumber both(prev + last, work, 2 * err);
  return both.div_int(2).rescale(digits + kGuardDigits);
}

/// Right-hand side of the S1/S2 identity: the D-series in t plus the
/// polynomial in t with A_{2r+1} coefficients; for TanHalf,
/// (1/2) sum c_n (t/2)^(2n-1). series_terms = 0 picks a count from t.
inline HighPrecisionNumber rhs_eval(Identity id, std::size_t k, const Angle& theta, std::size_t series_terms,
                                    std::size_t digits = 30) {
  detail::require_index(id, k);
  const std::size_t work = digits + kGuardDigits;
  if (series_terms == 0) series_terms = detail::auto_series_terms(theta, work);
  if (id == Identity::TanHalf) {
    const Angle half = theta.is_pi_multiple() ? Angle::pi_times(theta.coefficient() / Rational(2))
                                              : Angle::radians(theta.coefficient() / Rational(2));
    auto c = [](std::size_t n) { return tangent_coeff(n); };
    // sum c_n x^(2n), then divide by x.
    const auto shifted = detail::power_series(c, half, 0, series_terms, work + 4);
    const auto h = half.at(work + 4);
    return div(shifted, h, work + 2).div_int(2).rescale(work);
  }
  const auto parts = detail::rhs_parts(id, k, theta, series_terms, work);
  return parts.series + parts.poly + parts.top;
}

struct IdentityResidual {
  Identity identity = Identity::S1;
  std::size_t k = 0;
  Angle theta = Angle::pi_times(Rational(1, 2));
  unsigned long fourier_terms = 0;
  std::size_t series_terms = 0;
  HighPrecisionNumber residual;
};

inline IdentityResidual check_identity(Identity id, std::size_t k, const Angle& theta, unsigned long fourier_terms,
                                       std::size_t series_terms, std::size_t digits = 30) {
  const std::size_t work = digits + kGuardDigits;
  if (series_terms == 0) series_terms = detail::auto_series_terms(theta, work);
  const auto lhs = fourier_lhs(id, k, theta, fourier_terms, digits);
  const auto rhs = rhs_eval(id, k, theta, series_terms, digits);
  return {id, k, theta, fourier_terms, series_terms, (lhs - rhs).abs()};
}

/// A_{2k+1} recovered from the S2 identity at t = pi/2, where the cosine
/// series equals A_{2k+1} / 2^(2k+1):
///   A_{2k+1} = -P / (1 - 2^-(2k+1)),
/// P being the D-series plus the r < k polynomial terms.
inline HighPrecisionNumber eta_from_cosine_identity(std::size_t k, std::size_t digits, std::size_t series_terms = 0) {
  if (k == 0) throw UsageError("eta_from_cosine_identity: k must be >= 1");
  const std::size_t work = digits + kGuardDigits;
  const auto half_pi = Angle::pi_times(Rational(1, 2));
  if (series_terms == 0) series_terms = detail::auto_series_terms(half_pi, work);
  const auto parts = detail::rhs_parts(Identity::S2, k, half_pi, series_terms, work);
  const auto p = parts.series + parts.poly;
  const Integer two = pow2(2 * k + 1);
  return p.mul_rational(Rational(-two, two - 1), work);
}

/// The angles of the standard residual sweep.
inline std::vector<Angle> standard_thetas() {
  return {Angle::parse("0.5"), Angle::parse("1.0"), Angle::parse("pi/2"), Angle::parse("2.0"),
          Angle::parse("3.0")};
}

}  // namespace oddzeta

#endif  // ODDZETA_IDENTITY_HPP
