#include <random>
#include <sstream>

#include "doctest.h"
#include "honeycomb/rational.hpp"

using honeycomb::Rat;

TEST_CASE("rational parsing and printing") {
  CHECK(Rat::parse("3").str() == "3");
  CHECK(Rat::parse("-6/4").str() == "-3/2");
  CHECK(Rat::parse("4/-6").str() == "-2/3");
  CHECK(Rat::parse("0.125") == Rat(1, 8));
  CHECK(Rat::parse("-1.5") == Rat(-3, 2));
  CHECK(Rat::parse(" 7 ") == Rat(7));
  CHECK_THROWS(Rat::parse(""));
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat::parse("abc"));
  CHECK_THROWS(Rat::parse("1.2.3"));
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> d(-1000000, 1000000);
  for (int t = 0; t < 2000; ++t) {
    Rat a(d(rng), d(rng) % 997 == 0 ? 1 : (d(rng) | 1));
    Rat b(d(rng), (d(rng) | 1));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}

TEST_CASE("rational overflow promotes to big integers") {
  Rat big(std::numeric_limits<long long>::max());
  Rat sq = big * big;
  CHECK_FALSE(sq.is_small());
  CHECK(sq / big == big);
  CHECK((sq / big).is_small());
  Rat tiny(1, std::numeric_limits<long long>::max());
  Rat t2 = tiny * tiny;
  CHECK(t2 * big * big == Rat(1));
  CHECK((big + big - big) == big);
  CHECK(Rat::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
}

TEST_CASE("rational ordering, floor and ceil") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(-1, 3));
  CHECK(Rat(-3, 2).floor() == Rat(-2));
  CHECK(Rat(-3, 2).ceil() == Rat(-1));
  CHECK(Rat(7, 2).floor() == Rat(3));
  CHECK(Rat(4).ceil() == Rat(4));
  CHECK(Rat::from_double(0.3333333, 1000000) == Rat(333333, 1000000));
  std::ostringstream os;
  os << Rat(5, 10);
  CHECK(os.str() == "1/2");
}
