#include "neutro/interval_set.hpp"

#include <algorithm>

#include "neutro/error.hpp"

namespace neutro {

NSInterval::NSInterval(Hyperreal lo, Hyperreal hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!in_unit_range(lo_))
    throw Error(ErrorCode::OutOfRange,
                "endpoint " + lo_.to_string() + " outside [0-,1+]");
  if (!in_unit_range(hi_))
    throw Error(ErrorCode::OutOfRange,
                "endpoint " + hi_.to_string() + " outside [0-,1+]");
  if (hi_ < lo_)
    throw Error(ErrorCode::InvalidInterval,
                "interval [" + lo_.to_string() + "," + hi_.to_string() +
                    "] has lo > hi");
}

NSSubset NSSubset::normalize(std::span<const NSInterval> raw) {
  if (raw.empty()) throw Error(ErrorCode::EmptyInput, "no intervals given");

  std::vector<NSInterval> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const NSInterval& a, const NSInterval& b) {
              return a.lo() < b.lo();
            });

  std::vector<NSInterval> merged;
  merged.reserve(sorted.size());
  for (const auto& iv : sorted) {
    if (!merged.empty() && iv.lo() <= merged.back().hi()) {
      if (merged.back().hi() < iv.hi())
        merged.back() = NSInterval(merged.back().lo(), iv.hi());
    } else {
      merged.push_back(iv);
    }
  }
  return NSSubset(std::move(merged));
}

NSSubset NSSubset::singleton(const Hyperreal& p) {
  return NSSubset({NSInterval::point(p)});
}

bool NSSubset::contains(const Hyperreal& p) const {
  // First interval whose hi is >= p is the only candidate.
  auto it = std::lower_bound(
      intervals_.begin(), intervals_.end(), p,
      [](const NSInterval& iv, const Hyperreal& v) { return iv.hi() < v; });
  return it != intervals_.end() && it->lo() <= p;
}

}  // namespace neutro
