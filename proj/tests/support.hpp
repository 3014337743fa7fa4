#pragma once

#include <random>
#include <string>
#include <vector>

#include "neutro/interval_set.hpp"
#include "neutro/textio.hpp"
#include "neutro/triple.hpp"

namespace neutro::testing {

inline Hyperreal hr(long num, long den = 1, long eps = 0) {
  return Hyperreal(Rational(num, den), Rational(eps));
}
inline Hyperreal hr_eps(long std_part, long eps) { return hr(std_part, 1, eps); }
inline NeutroTriple lit(const std::string& s) { return parse_triple(s); }
inline NSSubset single(const Hyperreal& p) { return NSSubset::singleton(p); }

/// Random endpoints k/d with d in [1,12] and eps in {-1, 0, +1}; every such
/// value with k/d in [0,1] lies in the unit range.
class Generator {
 public:
  explicit Generator(unsigned seed) : rng_(seed) {}

  Hyperreal endpoint() {
    long den = pick(1, 12);
    long num = pick(0, den);
    long eps = pick(-1, 1);
    return Hyperreal(Rational(num, den), Rational(eps));
  }

  NSInterval interval() {
    Hyperreal a = endpoint();
    Hyperreal b = pick(0, 3) == 0 ? a : endpoint();
    return a <= b ? NSInterval(a, b) : NSInterval(b, a);
  }

  std::vector<NSInterval> raw_intervals(long max_count = 3) {
    std::vector<NSInterval> out;
    long n = pick(1, max_count);
    for (long i = 0; i < n; ++i) out.push_back(interval());
    return out;
  }

  NSSubset subset() { return NSSubset::normalize(raw_intervals()); }

  NeutroTriple triple() { return {subset(), subset(), subset()}; }

  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

 private:
  std::mt19937 rng_;
};

}  // namespace neutro::testing
