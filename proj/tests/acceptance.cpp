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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <cstdio>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "oddzeta/oddzeta.hpp"

namespace {

using namespace oddzeta;

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s %d %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <typename F>
void guarded(int id, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

std::string describe(const VerificationReport& r) {
  std::ostringstream os;
  os << r.name << " matched_digits=" << r.matched_digits << " terms_used=" << r.terms_used
     << " elapsed_ms=" << static_cast<long>(r.elapsed_ms);
  return os.str();
}

void series_target(int id, const char* name, std::size_t digits, std::size_t min_match, std::size_t max_terms,
                   double max_ms) {
  guarded(id, [&] {
    const auto r = verify(ConstantId::parse(name), digits);
    report(id, r.matched_digits >= min_match && r.terms_used <= max_terms && r.elapsed_ms < max_ms, describe(r));
  });
}

// Column-by-column hand forms for E_n(2..5), from the closed-form D.
Rational d_closed(std::size_t n, std::size_t k) {
  Integer prod = 1;
  for (std::size_t j = 0; j < k; ++j) prod *= static_cast<unsigned long>(2 * n + j);
  return tangent_coeff(n) / Rational(pow2(2 * n - 1) * prod);
}

Rational inv_fact(unsigned long m) { return Rational(Integer(1), factorial(m)); }

std::vector<Rational> stepwise(std::size_t n) {
  const Rational e1 = d_closed(n, 1);
  const Rational e2 = e1 - d_closed(n, 2) / Rational(2);
  const Rational e3 = (-d_closed(n, 3) / Rational(2) + e1 * inv_fact(2)) / Rational(7, 8);
  const Rational e4 = d_closed(n, 4) / Rational(2) + e3 - e1 * inv_fact(3);
  const Rational e5 = (d_closed(n, 5) / Rational(2) + e3 * inv_fact(2) - e1 * inv_fact(4)) / Rational(31, 32);
  return {e1, e2, e3, e4, e5};
}

void criterion_5() {
  guarded(5, [] {
    bool ok = true;
    std::ostringstream os;
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto r = verify({ConstantKind::zeta_even, n}, 30);
      ok = ok && r.matched_digits >= 30;
      os << (n > 1 ? " " : "") << "n=" << n << ":" << r.matched_digits;
    }
    report(5, ok, "zeta_even matched_digits " + os.str());
  });
}

void criterion_6() {
  guarded(6, [] {
    const std::size_t n_max = 50;
    const auto table = build_table(5, n_max);
    std::size_t mismatches = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      const auto s = stepwise(n);
      for (std::size_t k = 1; k <= 5; ++k)
        if (table.e(n, k) != s[k - 1]) ++mismatches;
    }
    report(6, mismatches == 0,
           "exact E_n(1..5), n<=50: " + std::to_string(mismatches) + " mismatches of " + std::to_string(5 * n_max));
  });
}

void criterion_7() {
  guarded(7, [] {
    const std::vector<std::string> thetas = {"0.5", "1.0", "pi/2", "2.0"};
    std::vector<std::future<IdentityResidual>> jobs;
    for (auto id : {Identity::S1, Identity::S2})
      for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& t : thetas) {
          const unsigned long m = k == 1 ? 1000000UL : 10000UL;
          jobs.push_back(std::async(std::launch::async,
                                    [=] { return check_identity(id, k, Angle::parse(t), m, 0); }));
        }
    bool ok = true;
    double worst = 0;
    std::string worst_case;
    for (auto& j : jobs) {
      const auto r = j.get();
      const double v = r.residual.to_double();
      ok = ok && v < 1e-8;
      if (v >= worst) {
        worst = v;
        worst_case = to_string(r.identity) + " k=" + std::to_string(r.k) + " theta=" + r.theta.label();
      }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", worst);
    report(7, ok, "24 residuals, max " + std::string(buf) + " at " + worst_case);
  });
}

void criterion_8() {
  guarded(8, [] {
    bool ok = true;
    double lo = 1, hi = 0, max_all = 0;
    for (std::size_t k = 1; k <= 6; ++k) {
      const auto ratios = term_ratios(build_table(k, 61), k, 20);
      for (std::size_t n = 10; n <= 60; ++n) {
        const double r = ratios[n - 1].to_double();
        max_all = std::max(max_all, r);
        ok = ok && r < 0.9;
        if (n >= 40) {
          lo = std::min(lo, r);
          hi = std::max(hi, r);
          ok = ok && r >= 0.2 && r <= 0.3;
        }
      }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "max ratio (10<=n<=60) %.6f; range for n>=40 [%.6f, %.6f]", max_all, lo, hi);
    report(8, ok, buf);
  });
}

void criterion_9() {
  guarded(9, [] {
    auto ids = default_verification_set();
    for (std::size_t k = 4; k <= 6; ++k) {
      ids.push_back({ConstantKind::beta_even, k});
      ids.push_back({ConstantKind::eta_odd, k});
      ids.push_back({ConstantKind::zeta_odd, k});
    }
    bool ok = true;
    std::size_t fewest = 40;
    std::string weakest;
    for (const auto& id : ids) {
      const auto a = evaluate(id, 15).value.to_string(15);
      const auto b = evaluate(id, 40).value.to_string(40);
      const std::size_t m = matched_digits(a, b);
      ok = ok && m >= 13;
      if (m < fewest) {
        fewest = m;
        weakest = id.name();
      }
    }
    report(9, ok, std::to_string(ids.size()) + " constants, fewest shared digits " + std::to_string(fewest) + " (" +
                      weakest + ")");
  });
}

}  // namespace

int main() {
  series_target(1, "catalan", 30, 30, 150, 5000);
  series_target(2, "apery", 30, 30, 150, 5000);
  guarded(3, [] {
    const auto z5 = verify(ConstantId::parse("zeta_odd(2)"), 25);
    const auto z7 = verify(ConstantId::parse("zeta_odd(3)"), 25);
    const bool ok = z5.matched_digits >= 25 && z5.elapsed_ms < 10000 && z7.matched_digits >= 25 &&
                    z7.elapsed_ms < 10000;
    report(3, ok, describe(z5) + "; " + describe(z7));
  });
  series_target(4, "alt_harmonic", 30, 30, 1000000, 1e12);
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
