#include "doctest.h"
#include "neutro/error.hpp"
#include "support.hpp"

using namespace neutro;
using namespace neutro::testing;

namespace {

NSInterval iv(Hyperreal a, Hyperreal b) { return NSInterval(a, b); }
NSInterval ivd(long a, long b, long den = 10) {
  return NSInterval(hr(a, den), hr(b, den));
}

bool raw_contains(const std::vector<NSInterval>& raw, const Hyperreal& p) {
  for (const auto& i : raw)
    if (i.lo() <= p && p <= i.hi()) return true;
  return false;
}

}  // namespace

TEST_SUITE("interval_set") {

TEST_CASE("normalize sorts and merges") {
  auto sorted = NSSubset::normalize({ivd(5, 7), ivd(2, 4)});
  REQUIRE(sorted.intervals().size() == 2);
  CHECK(sorted.intervals()[0] == ivd(2, 4));
  CHECK(sorted.intervals()[1] == ivd(5, 7));

  auto merged = NSSubset::normalize({ivd(2, 5), ivd(4, 9)});
  REQUIRE(merged.intervals().size() == 1);
  CHECK(merged.intervals()[0] == ivd(2, 9));
}

TEST_CASE("intervals touching at 0+ merge") {
  std::vector<NSInterval> raw = {iv(kZero, kZeroPlus), iv(kZeroPlus, hr(3, 10))};
  auto s = NSSubset::normalize(raw);
  REQUIRE(s.intervals().size() == 1);
  CHECK(s.intervals()[0] == iv(kZero, hr(3, 10)));
  // Point-membership oracle on sampled points.
  for (const Hyperreal& p :
       {kMinusZero, kZero, kZeroPlus, hr(1, 10), hr(3, 10), hr(3, 10, 1),
        Hyperreal(0, 2), kOne})
    CHECK(s.contains(p) == raw_contains(raw, p));
}

TEST_CASE("touching standard endpoints merge but separated ones do not") {
  auto touching = NSSubset::normalize({ivd(1, 3), ivd(3, 5)});
  CHECK(touching.intervals().size() == 1);
  auto gap = NSSubset::normalize({iv(hr(1, 10), hr(3, 10)),
                                  iv(hr(3, 10, 1), hr(5, 10))});
  CHECK(gap.intervals().size() == 2);
  CHECK_FALSE(gap.contains(Hyperreal(Rational(3, 10), Rational(1, 2))));
}

TEST_CASE("empty input is rejected") {
  std::vector<NSInterval> none;
  CHECK_THROWS_AS(NSSubset::normalize(none), Error);
  try {
    NSSubset::normalize(none);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyInput);
  }
}

TEST_CASE("interval invariants") {
  CHECK_THROWS_AS(NSInterval(hr(1, 2), hr(1, 4)), Error);
  CHECK_THROWS_AS(NSInterval(kZero, hr_eps(1, 2)), Error);
  CHECK_NOTHROW(NSInterval(kMinusZero, kOnePlus));
}

TEST_CASE("inf and sup") {
  auto s = NSSubset::normalize({ivd(2, 4), NSInterval::point(hr(7, 10))});
  CHECK(s.inf() == hr(2, 10));
  CHECK(s.sup() == hr(7, 10));
  CHECK(single(kOnePlus).inf() == kOnePlus);
  CHECK(single(kMinusZero).sup() == kMinusZero);
  CHECK(NSSubset::normalize({iv(kMinusZero, kZero)}).inf() == kMinusZero);
  CHECK(NSSubset::normalize({ivd(1, 3), iv(hr(1, 2), kOnePlus)}).sup() ==
        kOnePlus);
}

TEST_CASE("contains") {
  auto s = NSSubset::normalize({ivd(2, 4)});
  CHECK(s.contains(hr(3, 10)));
  CHECK_FALSE(s.contains(hr(4, 10, 1)));
  CHECK(single(kOne).contains(kOne));
  CHECK_FALSE(single(kOne).contains(kOnePlus));
}

TEST_CASE("singleton") {
  CHECK(single(kOne).is_singleton());
  CHECK(single(kOnePlus).equals_point(kOnePlus));
  try {
    single(hr(2));
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
}

TEST_CASE("structural equality") {
  CHECK(NSSubset::normalize({ivd(2, 5), ivd(4, 9)}) ==
        NSSubset::normalize({ivd(2, 9)}));
  CHECK_FALSE(single(kOne) == single(kOnePlus));
  CHECK_FALSE(single(kZero) == single(kMinusZero));
}

TEST_CASE("properties over random raw lists") {
  Generator gen(11);
  for (int n = 0; n < 1000; ++n) {
    auto raw = gen.raw_intervals(5);
    auto s = NSSubset::normalize(raw);

    // Idempotence.
    CHECK(NSSubset::normalize(s.intervals()) == s);

    // Sorted, separated.
    const auto& ivs = s.intervals();
    for (std::size_t i = 1; i < ivs.size(); ++i)
      CHECK(ivs[i - 1].hi() < ivs[i].lo());

    // Union soundness on raw endpoints, midpoints and near neighbours.
    std::vector<Hyperreal> probes;
    for (const auto& r : raw) {
      probes.push_back(r.lo());
      probes.push_back(r.hi());
      probes.push_back(r.lo() + Hyperreal(0, -1));
      probes.push_back(r.hi() + Hyperreal(0, 1));
      probes.push_back(Hyperreal((r.lo().standard_part() + r.hi().standard_part()) / 2,
                                 (r.lo().eps() + r.hi().eps()) / 2));
    }
    for (const auto& p : probes) CHECK(s.contains(p) == raw_contains(raw, p));
  }
}

}
