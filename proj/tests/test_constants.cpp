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

#include "oddzeta/constants.hpp"
#include "oddzeta/oracle.hpp"

namespace oddzeta {
namespace {

std::string s15(const ConstantValue& v) { return v.value.to_string(15); }

TEST(Constants, BetaEven) {
  EXPECT_EQ(s15(beta_even(1, 15)), "0.915965594177219");
  EXPECT_EQ(s15(beta_even(2, 15)), "0.988944551741105");
  EXPECT_EQ(s15(beta_even(2, 15)), oracle::reference_beta(4, 15).to_string(15));
  EXPECT_THROW(beta_even(0, 15), UsageError);
}

TEST(Constants, BetaEvenDelegatesToSeries) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto t = build_table(2 * k, estimate_terms(20, 2 * k));
    const auto direct = sum_series(t, 2 * k, 20);
    const auto v = beta_even(k, 20);
    EXPECT_EQ(v.value.to_exact_string(), direct.value.rescale(20).to_exact_string());
    EXPECT_EQ(v.provenance.series_k, 2 * k);
    EXPECT_EQ(v.provenance.terms_used, direct.terms_used);
  }
}

TEST(Constants, EtaOdd) {
  EXPECT_EQ(s15(eta_odd(1, 15)), "0.901542677369696");
  EXPECT_EQ(s15(eta_odd(2, 15)), "0.972119770446909");
  EXPECT_EQ(s15(eta_odd(2, 15)), oracle::reference_eta(5, 15).to_string(15));
}

TEST(Constants, ZetaOdd) {
  EXPECT_EQ(s15(zeta_odd(1, 15)), "1.202056903159594");
  EXPECT_EQ(s15(zeta_odd(2, 15)), "1.036927755143370");
  EXPECT_EQ(zeta_odd(3, 12).value.to_string(12), "1.008349277382");
  EXPECT_EQ(zeta_odd(3, 14).value.to_string(14), "1.00834927738192");
}

TEST(Constants, NamedAliases) {
  EXPECT_EQ(s15(catalan(15)), "0.915965594177219");
  EXPECT_EQ(s15(apery(15)), "1.202056903159594");
  EXPECT_EQ(catalan(25).value.to_exact_string(), beta_even(1, 25).value.to_exact_string());
  EXPECT_EQ(apery(25).value.to_exact_string(), zeta_odd(1, 25).value.to_exact_string());
  EXPECT_EQ(catalan(10).id.name(), "catalan");
}

TEST(Constants, AperyFromEta3) {
  for (std::size_t d : {15u, 30u}) {
    const auto eta = eta_odd(1, d).value;
    const auto via_eta = eta.mul_rational(Rational(4, 3), d);
    const auto z = apery(d).value;
    const auto diff = (via_eta - z).abs();
    EXPECT_LE(diff.mantissa(), diff.err_ulp()) << d;
    EXPECT_LE(diff.mantissa(), 2) << d;
  }
}

TEST(Constants, AltHarmonic) {
  EXPECT_EQ(s15(alt_harmonic(15)), "0.693147180559945");
  EXPECT_EQ(alt_harmonic(30).value.to_string(30), oracle::ln2(30).to_string(30));
  const auto t = build_table(1, estimate_terms(18, 1));
  EXPECT_EQ(alt_harmonic(18).value.to_exact_string(), sum_series(t, 1, 18).value.rescale(18).to_exact_string());
}

TEST(Constants, ZetaEvenClosedForm) {
  const auto pi = oracle::pi(40);
  const auto pi2 = mul(pi, pi, 40);
  const auto pi4 = mul(pi2, pi2, 40);
  EXPECT_EQ(s15(zeta_even_closed(1, 15)), "1.644934066848226");
  EXPECT_EQ(s15(zeta_even_closed(1, 15)), pi2.div_int(6).to_string(15));
  EXPECT_EQ(s15(zeta_even_closed(2, 15)), pi4.div_int(90).to_string(15));
  EXPECT_EQ(s15(zeta_even_closed(3, 15)), oracle::zeta_direct(6, 15).to_string(15));
  EXPECT_TRUE(zeta_even_closed(4, 10).provenance.closed_form);
}

TEST(Constants, EtaZetaBridge) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::size_t d = 25;
    const Integer four_k = pow2(2 * k);
    const auto back = zeta_odd(k, d).value.mul_rational(Rational(four_k - 1, four_k), d);
    const auto eta = eta_odd(k, d).value;
    EXPECT_TRUE(intervals_overlap(back, eta)) << k;
  }
}

TEST(Constants, Brackets) {
  const auto c = catalan(20).value.to_rational();
  EXPECT_GT(c, Rational(91, 100));
  EXPECT_LT(c, Rational(92, 100));
  const auto a = apery(20).value.to_rational();
  EXPECT_GT(a, Rational(120, 100));
  EXPECT_LT(a, Rational(121, 100));
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto z = zeta_odd(k, 15).value.to_rational();
    EXPECT_GT(z, Rational(1));
    EXPECT_LT(z, Rational(125, 100));
  }
}

TEST(Constants, ZetaOddDecreasing) {
  for (std::size_t k = 1; k <= 5; ++k)
    EXPECT_LT(zeta_odd(k + 1, 15).value.to_rational(), zeta_odd(k, 15).value.to_rational()) << k;
}

TEST(ConstantId, ParseAndName) {
  EXPECT_EQ(ConstantId::parse("catalan").kind, ConstantKind::catalan);
  EXPECT_EQ(ConstantId::parse("zeta_odd(2)"), (ConstantId{ConstantKind::zeta_odd, 2}));
  EXPECT_EQ(ConstantId::parse("beta_even", 3), (ConstantId{ConstantKind::beta_even, 3}));
  EXPECT_EQ(ConstantId::parse("zeta_even(4)").name(), "zeta_even(4)");
  EXPECT_THROW(ConstantId::parse("zeta_odd"), UsageError);
  EXPECT_THROW(ConstantId::parse("zeta_odd(0)"), UsageError);
  EXPECT_THROW(ConstantId::parse("zeta_odd(x)"), UsageError);
  EXPECT_THROW(ConstantId::parse("catalan(2)"), UsageError);
}

TEST(ConstantId, UnknownNameListsValidSet) {
  try {
    (void)ConstantId::parse("gamma");
    FAIL();
  } catch (const UsageError& e) {
    const std::string msg = e.what();
    for (auto name : ConstantId::kNames) EXPECT_NE(msg.find(name), std::string::npos) << name;
  }
}

TEST(Constants, DefaultVerificationSetIsSorted) {
  const auto ids = default_verification_set();
  for (std::size_t i = 1; i < ids.size(); ++i) EXPECT_LT(ids[i - 1].name(), ids[i].name());
}

}  // namespace
}  // namespace oddzeta
