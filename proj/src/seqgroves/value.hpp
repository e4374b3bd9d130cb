/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace seqgroves {

/// Exact rational amount. Types, bids, taxes and utilities are all fractions
/// kept in lowest terms with a positive denominator, so every comparison in
/// the engine is exact. Negative values are legal (taxes, utilities); the
/// non-negativity of types and bids is enforced by the vector types, not here.
class Value {
 public:
  Value() = default;
  Value(long long n) : v_(n) {}

  /// num/den in lowest terms. Throws std::domain_error if den == 0.
  static Value ratio(long long num, long long den);

  /// Accepts "4", "-3", "2.5" and "p/q" ("10/3"). Surrounding whitespace is
  /// ignored. Throws ParseError on anything else (including "1/0").
  static Value parse(std::string_view text);

  /// Canonical rendering: "p/q" in lowest terms, "/1" elided ("4", "10/3").
  std::string str() const;

  bool negative() const { return v_ < 0; }

  Value operator-() const;
  Value& operator+=(const Value& rhs);
  Value& operator-=(const Value& rhs);
  Value& operator*=(const Value& rhs);
  Value& operator/=(const Value& rhs);  // throws std::domain_error on /0

  friend Value operator+(Value lhs, const Value& rhs) { return lhs += rhs; }
  friend Value operator-(Value lhs, const Value& rhs) { return lhs -= rhs; }
  friend Value operator*(Value lhs, const Value& rhs) { return lhs *= rhs; }
  friend Value operator/(Value lhs, const Value& rhs) { return lhs /= rhs; }

  friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Value& a, const Value& b) { return a.v_ != b.v_; }
  friend bool operator<(const Value& a, const Value& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Value& a, const Value& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Value& a, const Value& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Value& a, const Value& b) { return a.v_ >= b.v_; }

 private:
  boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Value& v);

/// Raised when a rational, grid or scenario string does not parse.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal cross-check fails (should never happen; the CLI
/// maps it to exit code 3).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace seqgroves
