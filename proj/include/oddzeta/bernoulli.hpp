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

#ifndef ODDZETA_BERNOULLI_HPP
#define ODDZETA_BERNOULLI_HPP

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oddzeta/error.hpp"
#include "oddzeta/rational.hpp"

namespace oddzeta {

/// Name of the environment variable holding the cache directory.
inline constexpr const char* kCacheDirEnv = "ODDZETA_CACHE_DIR";
inline constexpr const char* kBernoulliCacheFile = "bernoulli.tsv";

/// Memoized exact Bernoulli numbers B_0..B_M (B_1 = -1/2) and factorials.
///
/// Even-index values come from the integer tangent-number recurrence
///   T_1 = 1, T_j <- (j-k) T_{j-1} + (j-k+2) T_j,
///   B_{2n} = (-1)^(n-1) 2n T_n / (4^n (4^n - 1)),
/// which needs only small-integer multiplies. The table grows by doubling
/// and never rewrites an entry it has already handed out.
///
/// All public members are safe to call concurrently.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::optional<std::filesystem::path> cache_file = std::nullopt)
      : cache_file_(std::move(cache_file)) {
    if (cache_file_) load_cache();
  }

  BernoulliTable(const BernoulliTable&) = delete;
  BernoulliTable& operator=(const BernoulliTable&) = delete;

  Rational bernoulli(std::size_t m) {
    std::lock_guard lock(mu_);
    ensure(m);
    return values_[m];
  }

  /// c_n with tan(x) = sum_{n>=1} c_n x^(2n-1).
  Rational tangent_coeff(std::size_t n) {
    if (n == 0) throw UsageError("tangent_coeff: n must be >= 1");
    const Rational b = bernoulli(2 * n);
    const Integer four_n = pow2(2 * n);
    Rational c = b * Rational((four_n - 1) * four_n) / Rational(factorial(2 * n));
    return (n % 2 == 1) ? c : -c;
  }

  Integer factorial(std::size_t n) {
    std::lock_guard lock(mu_);
    if (n > limits().max_bernoulli_index + 2)
      throw ResourceLimitError("factorial: index " + std::to_string(n) + " exceeds limit");
    if (factorials_.empty()) factorials_.emplace_back(1);
    while (factorials_.size() <= n) {
      const Integer next = factorials_.back() * static_cast<unsigned long>(factorials_.size());
      factorials_.push_back(next);
    }
    return factorials_[n];
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return values_.size();
  }

 private:
  void ensure(std::size_t m) {
    if (m < values_.size()) return;
    const std::size_t max_index = limits().max_bernoulli_index;
    if (m > max_index)
      throw ResourceLimitError("bernoulli: index " + std::to_string(m) +
                               " exceeds configured maximum " + std::to_string(max_index));
    std::size_t target = std::max({m + 1, 2 * values_.size(), std::size_t{16}});
    target = std::min(target, max_index + 1);
    extend(target);
    if (cache_file_) save_cache();
  }

  void extend(std::size_t target) {
    // Tangent numbers T_1..T_half, recomputed from scratch.
    const std::size_t half = (target - 1) / 2;
    std::vector<Integer> t(half + 1);
    if (half >= 1) t[1] = 1;
    for (std::size_t k = 2; k <= half; ++k) t[k] = t[k - 1] * static_cast<unsigned long>(k - 1);
    for (std::size_t k = 2; k <= half; ++k)
      for (std::size_t j = k; j <= half; ++j)
        t[j] = t[j - 1] * static_cast<unsigned long>(j - k) + t[j] * static_cast<unsigned long>(j - k + 2);

    for (std::size_t m = values_.size(); m < target; ++m) {
      if (m == 0) {
        values_.emplace_back(1);
      } else if (m == 1) {
        values_.emplace_back(-1, 2);
      } else if (m % 2 == 1) {
        values_.emplace_back(0);
      } else {
        const std::size_t n = m / 2;
        const Integer four_n = pow2(2 * n);
        Rational b(t[n] * static_cast<unsigned long>(2 * n), four_n * (four_n - 1));
        values_.push_back(n % 2 == 1 ? b : -b);
      }
    }
  }

  void load_cache() {
    std::ifstream in(*cache_file_);
    if (!in) return;
    std::vector<Rational> loaded;
    std::string line;
    while (std::getline(in, line)) {
      const auto tab = line.find('\t');
      if (tab == std::string::npos) break;
      std::size_t index = 0;
      try {
        index = std::stoul(line.substr(0, tab));
        if (index != loaded.size()) break;
        loaded.push_back(Rational::parse(line.substr(tab + 1)));
      } catch (const std::exception&) {
        break;
      }
    }
    // Accept only a prefix that passes the cheap structural checks.
    std::size_t good = 0;
    for (; good < loaded.size(); ++good) {
      const Rational& b = loaded[good];
      if (good == 0 && b != Rational(1)) break;
      if (good == 1 && b != Rational(-1, 2)) break;
      if (good >= 3 && good % 2 == 1 && !b.is_zero()) break;
      if (good >= 2 && good % 2 == 0 && b.sign() != ((good / 2) % 2 == 1 ? 1 : -1)) break;
    }
    loaded.resize(good);
    values_ = std::move(loaded);
  }

  void save_cache() const {
    std::error_code ec;
    std::filesystem::create_directories(cache_file_->parent_path(), ec);
    const auto tmp = std::filesystem::path(cache_file_->string() + ".tmp");
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) return;
      for (std::size_t m = 0; m < values_.size(); ++m) out << m << '\t' << values_[m].str() << '\n';
      if (!out) return;
    }
    std::filesystem::rename(tmp, *cache_file_, ec);
  }

  std::optional<std::filesystem::path> cache_file_;
  std::vector<Rational> values_;
  std::vector<Integer> factorials_;
  mutable std::mutex mu_;
};

/// Cache file derived from the environment, if the variable is set.
inline std::optional<std::filesystem::path> cache_file_from_env() {
  const char* dir = std::getenv(kCacheDirEnv);
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir) / kBernoulliCacheFile;
}

/// Process-wide table; reads the cache location once on first use.
inline BernoulliTable& default_bernoulli_table() {
  static BernoulliTable table(cache_file_from_env());
  return table;
}

inline Rational bernoulli(std::size_t m) { return default_bernoulli_table().bernoulli(m); }
inline Rational tangent_coeff(std::size_t n) { return default_bernoulli_table().tangent_coeff(n); }
inline Integer factorial(std::size_t n) { return default_bernoulli_table().factorial(n); }

}  // namespace oddzeta

#endif  // ODDZETA_BERNOULLI_HPP
