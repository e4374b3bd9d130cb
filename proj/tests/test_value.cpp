#include <doctest.h>

#include <vector>

#include "seqgroves/value.hpp"
#include "test_util.hpp"

using seqgroves::ParseError;
using seqgroves::Value;
using test_util::q;

TEST_CASE("parsing accepts integers, decimals and fractions") {
  CHECK(q("4").str() == "4");
  CHECK(q("-3").str() == "-3");
  CHECK(q("+7").str() == "7");
  CHECK(q("2.5").str() == "5/2");
  CHECK(q("-2.5").str() == "-5/2");
  CHECK(q("0.250").str() == "1/4");
  CHECK(q("10/3").str() == "10/3");
  CHECK(q("-10/4").str() == "-5/2");
  CHECK(q("0/5").str() == "0");
  CHECK(q("  42 ").str() == "42");
}

TEST_CASE("parsing rejects malformed text") {
  for (const char* bad : {"", "abc", "1/0", "1//2", "2.5.1", "/3", "4/", "1.", ".5", "3/-2",
                          "1 2", "0x10"}) {
    CHECK_THROWS_AS(Value::parse(bad), ParseError);
  }
}

TEST_CASE("ratio keeps the canonical form") {
  CHECK(Value::ratio(10, 4).str() == "5/2");
  CHECK(Value::ratio(1, -2).str() == "-1/2");
  CHECK(Value::ratio(-6, -3).str() == "2");
  CHECK_THROWS_AS(Value::ratio(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact on a small rational lattice") {
  const std::vector<Value> lattice = {q("-3"), q("-1"), q("0"),  q("1/3"),
                                      q("2/3"), q("5/2"), q("7"), q("-7/5")};
  for (const Value& a : lattice) {
    for (const Value& b : lattice) {
      CHECK((a + b) - b == a);
      CHECK((a - b) + b == a);
      if (b != Value{0}) CHECK((a * b) / b == a);
    }
  }
  CHECK_THROWS_AS(q("1") / q("0"), std::domain_error);
}

TEST_CASE("ordering is total and consistent with arithmetic") {
  const std::vector<Value> lattice = {q("-3"), q("0"), q("1/3"), q("1/2"), q("2"), q("7/3")};
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = 0; j < lattice.size(); ++j) {
      const bool lt = lattice[i] < lattice[j];
      const bool gt = lattice[i] > lattice[j];
      const bool eq = lattice[i] == lattice[j];
      CHECK((lt ? 1 : 0) + (gt ? 1 : 0) + (eq ? 1 : 0) == 1);
      if (lt) CHECK(lattice[j] - lattice[i] > Value{0});
    }
  }
  CHECK(q("1/3") + q("1/3") + q("1/3") == Value{1});
}

TEST_CASE("string round trip is lossless") {
  for (const char* text : {"0", "4", "-4", "5/2", "-5/2", "10/3", "98765432123456789/4"}) {
    const Value v = q(text);
    CHECK(Value::parse(v.str()) == v);
    CHECK(v.str() == text);
  }
}
