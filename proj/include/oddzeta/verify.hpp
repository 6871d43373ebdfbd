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

#ifndef ODDZETA_VERIFY_HPP
#define ODDZETA_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <string>
#include <string_view>

#include "oddzeta/constants.hpp"
#include "oddzeta/oracle.hpp"

namespace oddzeta {

struct VerificationReport {
  std::string name;
  std::string computed;
  std::string reference;
  std::size_t matched_digits = 0;
  std::size_t terms_used = 0;
  double elapsed_ms = 0.0;
};

/// Independent value for `id`, rounded to `digits`.
inline HighPrecisionNumber reference_value(const ConstantId& id, std::size_t digits) {
  auto odd_zeta = [digits](std::size_t k) {
    const std::size_t work = digits + 4;
    const Integer four_k = pow2(2 * k);
    const auto eta = oracle::reference_eta(static_cast<unsigned>(2 * k + 1), work);
    return eta.mul_rational(Rational(four_k, four_k - 1), work).rescale(digits);
  };
  switch (id.kind) {
    case ConstantKind::alt_harmonic: return oracle::reference_eta(1, digits);
    case ConstantKind::apery: return odd_zeta(1);
    case ConstantKind::beta_even: return oracle::reference_beta(static_cast<unsigned>(2 * id.index), digits);
    case ConstantKind::catalan: return oracle::reference_beta(2, digits);
    case ConstantKind::eta_odd: return oracle::reference_eta(static_cast<unsigned>(2 * id.index + 1), digits);
    case ConstantKind::zeta_even: return oracle::zeta_direct(static_cast<unsigned>(2 * id.index), digits);
    case ConstantKind::zeta_odd: return odd_zeta(id.index);
  }
  throw UsageError("unknown constant kind");
}

/// Length of the common fractional-digit prefix of two rendered values.
/// The last reference digit is never counted; it may sit on a rounding
/// boundary. Returns 0 when the integer parts differ.
inline std::size_t matched_digits(std::string_view computed, std::string_view reference) {
  const auto cd = computed.find('.');
  const auto rd = reference.find('.');
  if (cd == std::string_view::npos || rd == std::string_view::npos) return 0;
  if (computed.substr(0, cd) != reference.substr(0, rd)) return 0;
  const auto cf = computed.substr(cd + 1);
  const auto rf = reference.substr(rd + 1);
  if (rf.empty()) return 0;
  const std::size_t window = std::min(cf.size(), rf.size() - 1);
  std::size_t i = 0;
  while (i < window && cf[i] == rf[i]) ++i;
  return i;
}

/// Digits compared beyond the request, so a match of `digits` is not
/// decided by the final rounding.
inline constexpr std::size_t kVerifyExtraDigits = 3;

/// Runs the series computation and the oracle at `digits`; reports, never
/// throws on a mismatch.
inline VerificationReport verify(const ConstantId& id, std::size_t digits) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t window = digits + kVerifyExtraDigits;
  const auto computed = evaluate(id, window);
  const auto reference = reference_value(id, window);
  const auto stop = std::chrono::steady_clock::now();

  VerificationReport r;
  r.name = id.name();
  r.computed = computed.value.to_string(digits);
  r.reference = reference.to_string(digits);
  r.matched_digits = matched_digits(computed.value.to_string(window), reference.to_string(window));
  r.terms_used = computed.provenance.terms_used;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

}  // namespace oddzeta

#endif  // ODDZETA_VERIFY_HPP
