#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tvec/dyadic.hpp"

using namespace tvec;

namespace {

BinaryWord random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> bit(0, 1);
  BinaryWord w(static_cast<size_t>(len(rng)));
  for (auto& b : w) b = bit(rng);
  return w;
}

// Minimal exact rational, independent of the dyadic implementation.
struct Rat {
  Int num;
  Int den;  // > 0
  Rat(Int n, Int d) : num(std::move(n)), den(std::move(d)) {}
  bool operator==(const Rat& o) const { return num * o.den == o.num * den; }
  bool operator<(const Rat& o) const { return num * o.den < o.num * den; }
  Rat operator+(const Rat& o) const {
    return {num * o.den + o.num * den, den * o.den};
  }
  Rat operator-(const Rat& o) const {
    return {num * o.den - o.num * den, den * o.den};
  }
  Rat operator*(int k) const { return {num * k, den}; }
};

// Independent digit oracle: repeated doubling.
BinaryWord expansion_by_doubling(Rat v) {
  BinaryWord w;
  const Rat zero(0, 1), one(1, 1);
  while (!(v == zero)) {
    v = v * 2;
    if (!(v < one)) {
      w.push_back(1);
      v = v - one;
    } else {
      w.push_back(0);
    }
  }
  return w;
}

}  // namespace

TEST_CASE("word to dyadic on fixed examples") {
  CHECK(word_to_dyadic({}) == Dyadic());
  CHECK(word_to_dyadic({0, 1}) == Dyadic::from_parts(1, 2));
  CHECK(word_to_dyadic({1, 0, 1}) == Dyadic::from_parts(5, 3));
}

TEST_CASE("dyadic to word on fixed examples") {
  CHECK(dyadic_to_word(Dyadic::from_parts(1, 1)) == BinaryWord{1});
  CHECK(dyadic_to_word(Dyadic::from_parts(1, 1), 3) == BinaryWord{1, 0, 0});
  CHECK(dyadic_to_word(Dyadic::from_parts(5, 3)) == BinaryWord{1, 0, 1});
  CHECK(dyadic_to_word(Dyadic()) == BinaryWord{});
  CHECK(dyadic_to_word(Dyadic(), 2) == BinaryWord{0, 0});
  CHECK_THROWS_AS(dyadic_to_word(Dyadic::from_parts(5, 3), 2),
                  std::invalid_argument);
}

TEST_CASE("parity on fixed examples") {
  CHECK(parity(Dyadic()) == 0);
  CHECK(parity(Dyadic::from_parts(5, 3)) == 0);   // 0.101
  CHECK(parity(Dyadic::from_parts(13, 4)) == 1);  // 0.1101
}

TEST_CASE("parity agrees with the doubling-expansion oracle") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 300; ++i) {
    BinaryWord w = random_word(rng, 24);
    Dyadic d = word_to_dyadic(w);
    BinaryWord digits = expansion_by_doubling(Rat(d.num(), Int(1) << d.exp()));
    int oracle = 0;
    for (int b : digits) oracle ^= b;
    CHECK(parity(d) == oracle);
  }
}

TEST_CASE("value one is the circle point zero") {
  CHECK(Dyadic::from_parts(1, 0) == Dyadic());
  CHECK(Dyadic::from_parts(4, 2) == Dyadic());
  CHECK(Dyadic::from_parts(9, 3).num() == 1);  // 9/8 wraps to 1/8
}

TEST_CASE("word round trips and trailing zeros") {
  std::mt19937 rng(7);
  for (int i = 0; i < 1000; ++i) {
    BinaryWord w = random_word(rng, 20);
    Dyadic d = word_to_dyadic(w);
    // Appending zeros never changes the value.
    BinaryWord padded = w;
    padded.insert(padded.end(), static_cast<size_t>(i % 4), 0);
    CHECK(word_to_dyadic(padded) == d);
    // Canonical expansion is a left inverse.
    CHECK(word_to_dyadic(dyadic_to_word(d)) == d);
    // Bit-sum parity survives non-canonical words.
    int bitsum = 0;
    for (int b : padded) bitsum ^= b;
    CHECK(parity(d) == bitsum);
  }
}

TEST_CASE("ordering agrees with exact rational arithmetic") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> num(0, 4095);
  std::uniform_int_distribution<int> exp(0, 12);
  for (int i = 0; i < 1000; ++i) {
    Int n1(num(rng)), n2(num(rng));
    int e1 = exp(rng), e2 = exp(rng);
    Dyadic a = Dyadic::from_parts(n1, e1);
    Dyadic b = Dyadic::from_parts(n2, e2);
    Rat ra(a.num(), Int(1) << a.exp());
    Rat rb(b.num(), Int(1) << b.exp());
    CHECK((a < b) == (ra < rb));
    CHECK((a == b) == (ra == rb));
    // Addition wraps mod 1.
    Rat sum = ra + rb;
    if (!(sum < Rat(1, 1))) sum = sum - Rat(1, 1);
    Dyadic s = a.plus(b);
    CHECK(Rat(s.num(), Int(1) << s.exp()) == sum);
  }
}

TEST_CASE("both textual forms parse and print") {
  Dyadic d = Dyadic::from_parts(5, 3);
  CHECK(d.str() == "5/8");
  CHECK(d.binary_str() == "0.101");
  CHECK(Dyadic::parse("5/8") == d);
  CHECK(Dyadic::parse("0.101") == d);
  CHECK(Dyadic::parse(".101") == d);
  CHECK(Dyadic::parse("10/16") == d);
  CHECK(Dyadic::parse("0") == Dyadic());
  CHECK(Dyadic::parse("1") == Dyadic());  // wraps around the circle
  CHECK(Dyadic::parse("3/4").has_value());
  CHECK_FALSE(Dyadic::parse("1/3").has_value());
  CHECK_FALSE(Dyadic::parse("").has_value());
  CHECK_FALSE(Dyadic::parse("abc").has_value());
  CHECK_FALSE(Dyadic::parse("0.12").has_value());
}

TEST_CASE("exponent overflow is reported, not wrapped") {
  Dyadic half = Dyadic::from_parts(1, 1);
  CHECK_THROWS_AS(half.scaled(-(1 << 21)), std::overflow_error);
  CHECK_THROWS_AS(DyadicFraction(1, -1), std::invalid_argument);
}

TEST_CASE("signed fraction arithmetic for map offsets") {
  DyadicFraction a(-3, 1);
  CHECK(a.str() == "-3/2");
  CHECK(DyadicFraction::parse("-3/2") == a);
  CHECK((a + DyadicFraction(3, 1)).is_zero());
  CHECK(a.shifted(1) == DyadicFraction(-3, 0));
  CHECK(a.floor() == -2);
  CHECK(a.mod1() == DyadicFraction(1, 1));
  CHECK(DyadicFraction(7, 2) < DyadicFraction(2, 0));
}
