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

#ifndef ODDZETA_ERROR_HPP
#define ODDZETA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oddzeta {

/// Bad caller input: unknown constant names, out-of-domain arguments.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured ceiling (table index, digit count, memory) would be exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coefficient table is too short for the requested precision.
class InsufficientTableError : public std::runtime_error {
 public:
  InsufficientTableError(const std::string& what, std::size_t needed)
      : std::runtime_error(what), needed_(needed) {}
  std::size_t needed() const noexcept { return needed_; }

 private:
  std::size_t needed_;
};

/// The runtime term-ratio check on a series failed.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Process-wide ceilings. Plain values; tests may tweak them.
struct Limits {
  std::size_t max_bernoulli_index = 12000;
  /// Working precision ceiling for internal fixed-point arithmetic.
  std::size_t max_working_digits = 20000;
  /// Coefficient table cell ceiling (k_max * n_max).
  std::size_t max_table_cells = 400000;
  /// User-facing digit ceiling (CLI).
  std::size_t max_user_digits = 1000;
};

inline Limits& limits() {
  static Limits l;
  return l;
}

}  // namespace oddzeta

#endif  // ODDZETA_ERROR_HPP
