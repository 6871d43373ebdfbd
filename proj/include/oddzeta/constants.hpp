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

#ifndef ODDZETA_CONSTANTS_HPP
#define ODDZETA_CONSTANTS_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "oddzeta/bernoulli.hpp"
#include "oddzeta/coefficients.hpp"
#include "oddzeta/error.hpp"
#include "oddzeta/fixed.hpp"
#include "oddzeta/highprec.hpp"

namespace oddzeta {

enum class ConstantKind { alt_harmonic, apery, beta_even, catalan, eta_odd, zeta_even, zeta_odd };

/// Member of the closed set of constant identifiers.
struct ConstantId {
  ConstantKind kind = ConstantKind::catalan;
  /// k for the indexed families, n for zeta_even; 0 for named constants.
  std::size_t index = 0;

  static constexpr std::array<std::string_view, 7> kNames = {
      "alt_harmonic", "apery", "beta_even", "catalan", "eta_odd", "zeta_even", "zeta_odd"};

  static bool is_indexed(ConstantKind k) {
    return k == ConstantKind::beta_even || k == ConstantKind::eta_odd ||
           k == ConstantKind::zeta_even || k == ConstantKind::zeta_odd;
  }

  static std::string valid_names() {
    return "alt_harmonic, apery, catalan, beta_even(k), eta_odd(k), zeta_odd(k), zeta_even(n)";
  }

  /// Accepts "catalan", "zeta_odd(2)"; an indexed name without "(k)" takes
  /// `default_index` (0 means the index is required).
  static ConstantId parse(std::string_view text, std::size_t default_index = 0) {
    std::string_view base = text;
    std::size_t index = default_index;
    if (const auto open = text.find('('); open != std::string_view::npos) {
      if (text.back() != ')') throw UsageError("malformed constant name '" + std::string(text) + "'");
      base = text.substr(0, open);
      const auto digits = text.substr(open + 1, text.size() - open - 2);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || index == 0)
        throw UsageError("bad index in constant name '" + std::string(text) + "'");
    }
    for (std::size_t i = 0; i < kNames.size(); ++i) {
      if (kNames[i] != base) continue;
      const auto kind = static_cast<ConstantKind>(i);
      if (!is_indexed(kind)) {
        if (base.size() != text.size())
          throw UsageError("constant '" + std::string(base) + "' takes no index");
        return {kind, 0};
      }
      if (index == 0)
        throw UsageError("constant '" + std::string(base) + "' needs an index, e.g. " +
                         std::string(base) + "(1)");
      return {kind, index};
    }
    throw UsageError("unknown constant '" + std::string(text) + "'; valid names: " + valid_names());
  }

  std::string name() const {
    std::string n(kNames[static_cast<std::size_t>(kind)]);
    if (is_indexed(kind)) n += "(" + std::to_string(index) + ")";
    return n;
  }

  friend bool operator==(const ConstantId&, const ConstantId&) = default;
};

struct Provenance {
  bool closed_form = false;
  /// Series index k of A_k (0 for closed forms).
  std::size_t series_k = 0;
  std::size_t terms_used = 0;
};

struct ConstantValue {
  ConstantId id;
  /// Rounded to the requested digits.
  HighPrecisionNumber value;
  Provenance provenance;
};

namespace detail {

/// A_k at digits + guard, from a freshly built table.
inline SeriesResult series_value(std::size_t k, std::size_t digits) {
  if (digits == 0) throw UsageError("digits must be >= 1");
  const auto table = build_table(k, estimate_terms(digits, k));
  return sum_series(table, k, digits);
}

inline ConstantValue from_series(ConstantId id, const SeriesResult& s, std::size_t digits) {
  return {id, s.value.rescale(digits), {false, s.k, s.terms_used}};
}

inline void require_index(std::size_t k, const char* what) {
  if (k == 0) throw UsageError(std::string(what) + ": index must be >= 1");
}

}  // namespace detail

/// beta(2k) = sum_m (-1)^m / (2m+1)^(2k), as the series A_{2k}.
inline ConstantValue beta_even(std::size_t k, std::size_t digits) {
  detail::require_index(k, "beta_even");
  return detail::from_series({ConstantKind::beta_even, k}, detail::series_value(2 * k, digits), digits);
}

/// eta(2k+1) = sum_m (-1)^(m+1) / m^(2k+1), as the series A_{2k+1}.
inline ConstantValue eta_odd(std::size_t k, std::size_t digits) {
  detail::require_index(k, "eta_odd");
  return detail::from_series({ConstantKind::eta_odd, k}, detail::series_value(2 * k + 1, digits), digits);
}

/// zeta(2k+1) = A_{2k+1} * 4^k / (4^k - 1), the factor applied exactly.
inline ConstantValue zeta_odd(std::size_t k, std::size_t digits) {
  detail::require_index(k, "zeta_odd");
  const auto s = detail::series_value(2 * k + 1, digits);
  const Integer four_k = pow2(2 * k);
  const auto z = s.value.mul_rational(Rational(four_k, four_k - 1), s.value.scale());
  return {{ConstantKind::zeta_odd, k}, z.rescale(digits), {false, s.k, s.terms_used}};
}

inline ConstantValue catalan(std::size_t digits) {
  auto v = beta_even(1, digits);
  v.id = {ConstantKind::catalan, 0};
  return v;
}

inline ConstantValue apery(std::size_t digits) {
  auto v = zeta_odd(1, digits);
  v.id = {ConstantKind::apery, 0};
  return v;
}

/// A_1, the alternating harmonic series (ln 2).
inline ConstantValue alt_harmonic(std::size_t digits) {
  return detail::from_series({ConstantKind::alt_harmonic, 0}, detail::series_value(1, digits), digits);
}

/// zeta(2n) = (-1)^(n+1) B_{2n} (2 pi)^(2n) / (2 (2n)!).
inline ConstantValue zeta_even_closed(std::size_t n, std::size_t digits) {
  detail::require_index(n, "zeta_even_closed");
  if (digits == 0) throw UsageError("digits must be >= 1");
  Rational q = bernoulli(2 * n) * Rational(pow2(2 * n)) / Rational(factorial(2 * n) * 2);
  if (n % 2 == 0) q = -q;
  const std::size_t work = digits + kGuardDigits;
  const std::size_t pwork = work + detail::power_headroom(3.1415926535897932, 2 * n);
  const auto pi = compute_pi(pwork);
  HighPrecisionNumber p = pi;
  for (std::size_t i = 1; i < 2 * n; ++i) p = mul(p, pi, pwork);
  const auto z = p.mul_rational(q, work);
  return {{ConstantKind::zeta_even, n}, z.rescale(digits), {true, 0, 0}};
}

inline ConstantValue evaluate(const ConstantId& id, std::size_t digits) {
  switch (id.kind) {
    case ConstantKind::alt_harmonic: return alt_harmonic(digits);
    case ConstantKind::apery: return apery(digits);
    case ConstantKind::beta_even: return beta_even(id.index, digits);
    case ConstantKind::catalan: return catalan(digits);
    case ConstantKind::eta_odd: return eta_odd(id.index, digits);
    case ConstantKind::zeta_even: return zeta_even_closed(id.index, digits);
    case ConstantKind::zeta_odd: return zeta_odd(id.index, digits);
  }
  throw UsageError("unknown constant kind");
}

/// The set `verify` runs when no name is given, sorted by name.
inline std::vector<ConstantId> default_verification_set() {
  std::vector<ConstantId> ids = {
      {ConstantKind::alt_harmonic, 0}, {ConstantKind::apery, 0},     {ConstantKind::beta_even, 1},
      {ConstantKind::beta_even, 2},    {ConstantKind::beta_even, 3}, {ConstantKind::catalan, 0},
      {ConstantKind::eta_odd, 1},      {ConstantKind::eta_odd, 2},   {ConstantKind::eta_odd, 3},
      {ConstantKind::zeta_even, 1},    {ConstantKind::zeta_even, 2}, {ConstantKind::zeta_even, 3},
      {ConstantKind::zeta_even, 4},    {ConstantKind::zeta_even, 5}, {ConstantKind::zeta_odd, 1},
      {ConstantKind::zeta_odd, 2},     {ConstantKind::zeta_odd, 3},
  };
  std::sort(ids.begin(), ids.end(), [](const ConstantId& a, const ConstantId& b) { return a.name() < b.name(); });
  return ids;
}

}  // namespace oddzeta

#endif  // ODDZETA_CONSTANTS_HPP
