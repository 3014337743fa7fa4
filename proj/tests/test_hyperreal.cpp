#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace neutro;
using namespace neutro::testing;

TEST_SUITE("hyperreal") {

TEST_CASE("addition is componentwise") {
  CHECK(kOnePlus + kOnePlus == hr_eps(2, 2));
  CHECK(kMinusZero + kZero == kMinusZero);

  // Sup-sum of the tautological triple (1+, 0-, 0-).
  oracle::Pair expected =
      oracle::sum(oracle::sum(oracle::of(kOnePlus), oracle::of(kMinusZero)),
                  oracle::of(kMinusZero));
  Hyperreal got = kOnePlus + kMinusZero + kMinusZero;
  CHECK(oracle::same(oracle::of(got), expected));
  CHECK(got == hr_eps(1, -1));
}

TEST_CASE("lexicographic order") {
  CHECK(kMinusZero < kZero);
  CHECK(hr_eps(1, -1) < kOne);
  CHECK((hr(1, 2) <=> hr(1, 2)) == std::strong_ordering::equal);
  CHECK(kMinusZero < kZero);
  CHECK(kZero < kZeroPlus);
  CHECK(kZeroPlus < kOne);
  CHECK(kOne < kOnePlus);
  // Any positive standard part dominates any infinitesimal coefficient.
  CHECK(Hyperreal(0, 1000000) < hr(1, 1000000));
}

TEST_CASE("standard part") {
  CHECK(kOnePlus.standard_part() == 1);
  CHECK(kMinusZero.standard_part() == 0);
  CHECK(Hyperreal(Rational(2, 5), 3).standard_part() == Rational(2, 5));
}

TEST_CASE("unit range is closed at 0- and 1+") {
  CHECK(in_unit_range(kMinusZero));
  CHECK(in_unit_range(kOnePlus));
  CHECK_FALSE(in_unit_range(hr_eps(1, 2)));
  CHECK_FALSE(in_unit_range(hr_eps(0, -2)));
  CHECK_FALSE(in_unit_range(hr(-1, 2)));
  CHECK(in_unit_range(Hyperreal(Rational(1, 2), -100)));
}

TEST_CASE("order is compatible with addition") {
  Generator gen(7);
  for (int n = 0; n < 2000; ++n) {
    Hyperreal a = gen.endpoint(), b = gen.endpoint(), c = gen.endpoint();
    if (a < b) CHECK(a + c < b + c);
    // Cross-check the ordering against the tuple oracle.
    CHECK((a < b) == oracle::less(oracle::of(a), oracle::of(b)));
  }
}

TEST_CASE("canonical literal text") {
  CHECK(kOnePlus.to_string() == "1+");
  CHECK(kMinusZero.to_string() == "0-");
  CHECK(Hyperreal(Rational(2, 5)).to_string() == "2/5");
  CHECK(kThreePlus.to_string() == "3+3");
  CHECK(kThreeMinusZero.to_string() == "0-3");
  CHECK(Hyperreal(Rational(1, 2), Rational(1, 3)).to_string() == "1/2+1/3");
}

TEST_CASE("decimal literals sum without drift") {
  Hyperreal v = parse_endpoint("0.3");
  CHECK(v.standard_part() == Rational(3, 10));
  Hyperreal total;
  constexpr int kCopies = 1000000;
  for (int i = 0; i < kCopies; ++i) total += v;
  CHECK(total == Hyperreal(Rational(3, 10) * kCopies));
  CHECK(total.standard_part() == 300000);
}

}
