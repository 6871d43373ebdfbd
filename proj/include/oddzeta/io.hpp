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

#ifndef ODDZETA_IO_HPP
#define ODDZETA_IO_HPP

// Text formats: coefficient dumps, verification reports, residual sweeps.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddzeta/coefficients.hpp"
#include "oddzeta/identity.hpp"
#include "oddzeta/verify.hpp"

namespace oddzeta::io {

inline constexpr int kSchemaVersion = 1;

inline void write_coefficients_csv(std::ostream& os, const CoefficientTable& t) {
  os << "k,n,numerator,denominator\n";
  for (std::size_t k = 1; k <= t.k_max(); ++k)
    for (std::size_t n = 1; n <= t.n_max(); ++n) {
      const Rational& e = t.e(n, k);
      os << k << ',' << n << ',' << e.numerator().get_str() << ',' << e.denominator().get_str() << '\n';
    }
}

inline nlohmann::json coefficients_json(const CoefficientTable& t) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t k = 1; k <= t.k_max(); ++k)
    for (std::size_t n = 1; n <= t.n_max(); ++n) arr.push_back({{"k", k}, {"n", n}, {"value", t.e(n, k).str()}});
  return {{"schema", kSchemaVersion}, {"coefficients", std::move(arr)}};
}

inline nlohmann::json to_json(const VerificationReport& r) {
  return {{"name", r.name},
          {"computed", r.computed},
          {"reference", r.reference},
          {"matched_digits", r.matched_digits},
          {"terms_used", r.terms_used},
          {"elapsed_ms", std::round(r.elapsed_ms * 1000.0) / 1000.0}};
}

inline nlohmann::json reports_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return {{"schema", kSchemaVersion}, {"reports", std::move(arr)}};
}

/// Residuals are rendered in scientific notation with 6 significant digits.
inline std::string residual_string(const HighPrecisionNumber& r) {
  if (r.sign() == 0) return "0";
  const double v = r.to_double();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

inline constexpr const char* kResidualCsvHeader = "identity,k,theta,fourier_terms,residual";

inline void write_residual_csv_row(std::ostream& os, const IdentityResidual& r) {
  os << to_string(r.identity) << ',' << r.k << ',' << r.theta.label() << ',' << r.fourier_terms << ','
     << residual_string(r.residual) << '\n';
}

inline nlohmann::json to_json(const IdentityResidual& r) {
  return {{"identity", to_string(r.identity)},
          {"k", r.k},
          {"theta", r.theta.label()},
          {"fourier_terms", r.fourier_terms},
          {"series_terms", r.series_terms},
          {"residual", residual_string(r.residual)},
          {"residual_error_bound", residual_string(HighPrecisionNumber(r.residual.err_ulp(), r.residual.scale()))}};
}

}  // namespace oddzeta::io

#endif  // ODDZETA_IO_HPP
