#include <doctest.h>

#include <random>

#include "penney/dyadic.hpp"

using penney::BigInt;
using penney::BigRational;
using penney::DyadicRational;

TEST_CASE("dyadic values are stored canonically") {
  const DyadicRational a(BigInt(12), 5);  // 12/32 = 3/8
  CHECK(a.numerator() == 3);
  CHECK(a.exponent() == 3);

  const DyadicRational zero(BigInt(0), 9);
  CHECK(zero.exponent() == 0);
  CHECK(zero.is_zero());

  const DyadicRational whole(BigInt(42), 0);
  CHECK(whole.numerator() == 42);
  CHECK(whole.exponent() == 0);

  const DyadicRational negative(BigInt(-20), 3);  // -5/2
  CHECK(negative.numerator() == -5);
  CHECK(negative.exponent() == 1);
}

TEST_CASE("dyadic arithmetic and ordering") {
  const DyadicRational three_sixteenths(BigInt(3), 4);
  const DyadicRational one_eighth(BigInt(1), 3);
  CHECK(three_sixteenths + one_eighth == DyadicRational(BigInt(5), 4));
  CHECK(three_sixteenths - one_eighth == DyadicRational(BigInt(1), 4));
  CHECK(one_eighth - three_sixteenths == DyadicRational(BigInt(-1), 4));
  CHECK(DyadicRational(BigInt(1), 1) + DyadicRational(BigInt(1), 1) == DyadicRational(1));
  CHECK(three_sixteenths * one_eighth == DyadicRational(BigInt(3), 7));
  CHECK(one_eighth < three_sixteenths);
  CHECK(DyadicRational(1) > three_sixteenths);
  CHECK(-one_eighth < DyadicRational(0));
}

TEST_CASE("dyadic rendering is exact") {
  CHECK(DyadicRational(BigInt(3), 4).to_fraction_string() == "3/16");
  CHECK(DyadicRational(BigInt(3), 4).to_decimal_string() == "0.1875");
  CHECK(DyadicRational(BigInt(1), 3).to_decimal_string() == "0.125");
  CHECK(DyadicRational(BigInt(-5), 1).to_decimal_string() == "-2.5");
  CHECK(DyadicRational(BigInt(42), 0).to_decimal_string() == "42");
  CHECK(DyadicRational(BigInt(42), 0).to_fraction_string() == "42");
  CHECK(DyadicRational(BigInt(1), 10).to_decimal_string() == "0.0009765625");
  CHECK(DyadicRational(BigInt(3), 4).to_double() == doctest::Approx(0.1875));

  // 1/2^64 needs all 64 decimal places
  const auto tiny = DyadicRational(BigInt(1), 64).to_decimal_string();
  CHECK(tiny.size() == 66);
  CHECK(tiny.substr(0, 2) == "0.");
  CHECK(tiny.back() == '5');
}

TEST_CASE("dyadic arithmetic agrees with exact rationals") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const DyadicRational a(BigInt(static_cast<long long>(rng() % 2001) - 1000),
                           static_cast<unsigned>(rng() % 70));
    const DyadicRational b(BigInt(static_cast<long long>(rng() % 2001) - 1000),
                           static_cast<unsigned>(rng() % 70));
    const BigRational ra = a.to_rational();
    const BigRational rb = b.to_rational();
    CHECK((a + b).to_rational() == ra + rb);
    CHECK((a - b).to_rational() == ra - rb);
    CHECK((a * b).to_rational() == ra * rb);
    CHECK((a < b) == (ra < rb));
    CHECK((a == b) == (ra == rb));
    CHECK(a + b - b == a);
    const auto sum = a + b;
    CHECK((sum.exponent() == 0 || sum.numerator() % 2 != 0));
  }
}
