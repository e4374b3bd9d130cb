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
#include "seqgroves/value.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace seqgroves {

namespace mp = boost::multiprecision;

Value Value::ratio(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Value v;
  v.v_ = mp::cpp_rational(num);
  v.v_ /= den;  // cpp_rational division renormalizes
  return v;
}

Value Value::operator-() const {
  Value v;
  v.v_ = -v_;
  return v;
}

Value& Value::operator+=(const Value& rhs) {
  v_ += rhs.v_;
  return *this;
}

Value& Value::operator-=(const Value& rhs) {
  v_ -= rhs.v_;
  return *this;
}

Value& Value::operator*=(const Value& rhs) {
  v_ *= rhs.v_;
  return *this;
}

Value& Value::operator/=(const Value& rhs) {
  if (rhs.v_ == 0) throw std::domain_error("division by zero");
  v_ /= rhs.v_;
  return *this;
}

std::string Value::str() const {
  const mp::cpp_int num = mp::numerator(v_);
  const mp::cpp_int den = mp::denominator(v_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// cpp_int's string constructor reads a leading 0 as an octal prefix; these
// digits are always decimal.
mp::cpp_int from_decimal_digits(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return mp::cpp_int(std::string(digits));
}

}  // namespace

Value Value::parse(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  auto fail = [&]() -> ParseError {
    return ParseError("not a rational: \"" + std::string(original) + "\"");
  };

  bool negate = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negate = text.front() == '-';
    text.remove_prefix(1);
  }

  std::string_view head = text;
  std::string_view tail;
  char sep = '\0';
  if (auto pos = text.find_first_of("./"); pos != std::string_view::npos) {
    sep = text[pos];
    head = text.substr(0, pos);
    tail = text.substr(pos + 1);
  }
  if (!all_digits(head)) throw fail();

  Value out;
  if (sep == '\0') {
    out.v_ = mp::cpp_rational(from_decimal_digits(head));
  } else if (sep == '/') {
    if (!all_digits(tail)) throw fail();
    const mp::cpp_int den = from_decimal_digits(tail);
    if (den == 0) throw fail();
    out.v_ = mp::cpp_rational(from_decimal_digits(head));
    out.v_ /= mp::cpp_rational(den);
  } else {  // decimal point
    if (!all_digits(tail)) throw fail();
    mp::cpp_int scale = 1;
    for (std::size_t k = 0; k < tail.size(); ++k) scale *= 10;
    out.v_ = mp::cpp_rational(from_decimal_digits(std::string(head) + std::string(tail)));
    out.v_ /= mp::cpp_rational(scale);
  }
  if (negate) out.v_ = -out.v_;
  return out;
}

}  // namespace seqgroves
