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

// Command-line front end: constant, coeffs, verify, ratio, identity.

#include <cstdlib>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddzeta/io.hpp"
#include "oddzeta/oddzeta.hpp"

namespace {

using namespace oddzeta;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3 };

void check_digits(std::size_t digits) {
  if (digits == 0) throw UsageError("--digits must be >= 1");
  if (digits > limits().max_user_digits)
    throw ResourceLimitError("--digits " + std::to_string(digits) + " exceeds the ceiling of " +
                             std::to_string(limits().max_user_digits));
}

int run_constant(const std::string& name, std::size_t k, std::size_t digits, const std::string& format) {
  check_digits(digits);
  const auto id = ConstantId::parse(name, k);
  const auto v = evaluate(id, digits);
  if (format == "json") {
    nlohmann::json j = {{"schema", io::kSchemaVersion},
                        {"name", id.name()},
                        {"digits", digits},
                        {"value", v.value.to_string(digits)},
                        {"closed_form", v.provenance.closed_form},
                        {"series_k", v.provenance.series_k},
                        {"terms_used", v.provenance.terms_used}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << v.value.to_string(digits) << '\n';
  }
  return kOk;
}

int run_coeffs(std::size_t k, std::size_t n, const std::string& format) {
  const auto table = build_table(k, n);
  if (format == "json") {
    std::cout << io::coefficients_json(table).dump(2) << '\n';
  } else if (format == "csv") {
    io::write_coefficients_csv(std::cout, table);
  } else {
    for (std::size_t kk = 1; kk <= k; ++kk)
      for (std::size_t nn = 1; nn <= n; ++nn) std::cout << "E_" << nn << "(" << kk << ") = " << table.e(nn, kk) << '\n';
  }
  return kOk;
}

int run_verify(const std::vector<std::string>& names, std::size_t digits, const std::string& format) {
  check_digits(digits);
  std::vector<ConstantId> ids;
  if (names.empty()) {
    ids = default_verification_set();
  } else {
    for (const auto& n : names) ids.push_back(ConstantId::parse(n));
    std::sort(ids.begin(), ids.end(), [](const auto& a, const auto& b) { return a.name() < b.name(); });
  }
  std::vector<std::future<VerificationReport>> jobs;
  for (const auto& id : ids) jobs.push_back(std::async(std::launch::async, [id, digits] { return verify(id, digits); }));
  std::vector<VerificationReport> reports;
  for (auto& j : jobs) reports.push_back(j.get());

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.matched_digits >= digits;
  if (format == "json") {
    std::cout << io::reports_json(reports).dump(2) << '\n';
  } else {
    for (const auto& r : reports)
      std::cout << (r.matched_digits >= digits ? "PASS " : "FAIL ") << r.name << " matched_digits=" << r.matched_digits
                << " terms_used=" << r.terms_used << " computed=" << r.computed << " reference=" << r.reference
                << '\n';
  }
  return ok ? kOk : kVerifyFailed;
}

int run_ratio(std::size_t k, std::size_t n, std::size_t digits, const std::string& format) {
  check_digits(digits);
  if (n < 2) throw UsageError("ratio: --n must be >= 2");
  const auto ratios = term_ratios(build_table(k, n), k, digits);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < ratios.size(); ++i) arr.push_back({{"n", i + 1}, {"ratio", ratios[i].to_string(digits)}});
    std::cout << nlohmann::json{{"schema", io::kSchemaVersion}, {"k", k}, {"ratios", arr}}.dump(2) << '\n';
  } else {
    if (format == "csv") std::cout << "n,ratio\n";
    for (std::size_t i = 0; i < ratios.size(); ++i)
      std::cout << i + 1 << (format == "csv" ? "," : " ") << ratios[i].to_string(digits) << '\n';
  }
  return kOk;
}

int run_identity(const std::string& tag, std::size_t k, const std::string& theta, unsigned long terms,
                 std::size_t series_terms, std::size_t digits, bool sweep, const std::string& format) {
  check_digits(digits);
  const Identity id = parse_identity(tag);
  if (id == Identity::TanHalf) k = 0;
  else if (k == 0) k = 1;
  std::vector<Angle> angles;
  if (sweep) angles = standard_thetas();
  else angles.push_back(Angle::parse(theta));

  std::vector<IdentityResidual> results;
  for (const auto& a : angles) results.push_back(check_identity(id, k, a, terms, series_terms, digits));

  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) arr.push_back(io::to_json(r));
    std::cout << nlohmann::json{{"schema", io::kSchemaVersion}, {"residuals", arr}}.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << io::kResidualCsvHeader << '\n';
    for (const auto& r : results) io::write_residual_csv_row(std::cout, r);
  } else {
    for (const auto& r : results)
      std::cout << to_string(r.identity) << " k=" << r.k << " theta=" << r.theta.label()
                << " fourier_terms=" << r.fourier_terms << " series_terms=" << r.series_terms
                << " residual=" << io::residual_string(r.residual) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oddzeta: odd zeta and Dirichlet beta values from pi/2-power series"};
  app.require_subcommand(1);

  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir, "Directory for the on-disk Bernoulli cache");

  std::size_t digits = 30;
  std::string format = "plain";
  auto add_digits = [&](CLI::App* sub) { sub->add_option("--digits", digits, "Fractional digits")->capture_default_str(); };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed))->capture_default_str();
  };

  auto* constant = app.add_subcommand("constant", "Print a constant");
  std::string name;
  std::size_t k = 0;
  constant->add_option("name", name, "Constant: " + ConstantId::valid_names())->required();
  constant->add_option("--k", k, "Index for beta_even/eta_odd/zeta_odd/zeta_even");
  add_digits(constant);
  add_format(constant, {"plain", "json"});

  auto* coeffs = app.add_subcommand("coeffs", "Dump the exact coefficients E_n(k)");
  std::size_t n = 0;
  coeffs->add_option("--k", k, "Largest k")->required()->check(CLI::PositiveNumber);
  coeffs->add_option("--n", n, "Largest n")->required()->check(CLI::PositiveNumber);
  add_format(coeffs, {"plain", "csv", "json"});

  auto* verify_cmd = app.add_subcommand("verify", "Compare series values against independent references");
  std::vector<std::string> names;
  verify_cmd->add_option("--name,name", names, "Constants to verify (default: all)");
  add_digits(verify_cmd);
  add_format(verify_cmd, {"plain", "json"});

  auto* ratio = app.add_subcommand("ratio", "Term-ratio diagnostic |E_{n+1}(k)/E_n(k)| (pi/2)^2");
  ratio->add_option("--k", k, "Series index")->required()->check(CLI::PositiveNumber);
  ratio->add_option("--n", n, "Largest n")->required()->check(CLI::PositiveNumber);
  std::size_t ratio_digits = 20;
  ratio->add_option("--digits", ratio_digits, "Fractional digits")->capture_default_str();
  add_format(ratio, {"plain", "csv", "json"});

  auto* identity = app.add_subcommand("identity", "Residual of a Fourier identity at one angle");
  std::string tag = "S1", theta = "1.0";
  unsigned long terms = 10000;
  std::size_t series_terms = 0;
  bool sweep = false;
  identity->add_option("--id", tag, "S1, S2 or tan_half")->capture_default_str();
  identity->add_option("--k", k, "Identity index")->capture_default_str();
  identity->add_option("--theta", theta, "Angle in (0, pi): decimal or pi/N form")->capture_default_str();
  identity->add_option("--terms", terms, "Fourier terms")->capture_default_str();
  identity->add_option("--series-terms", series_terms, "D-series terms (0 = automatic)")->capture_default_str();
  identity->add_flag("--sweep", sweep, "Run the standard angle sweep instead of --theta");
  add_digits(identity);
  add_format(identity, {"plain", "csv", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (!cache_dir.empty()) ::setenv(kCacheDirEnv, cache_dir.c_str(), 1);

  try {
    if (*constant) return run_constant(name, k, digits, format);
    if (*coeffs) return run_coeffs(k, n, format);
    if (*verify_cmd) return run_verify(names, digits, format);
    if (*ratio) return run_ratio(k, n, ratio_digits, format);
    if (*identity) return run_identity(tag, k, theta, terms, series_terms, digits, sweep, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}
