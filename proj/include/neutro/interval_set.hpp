#pragma once

#include <span>
#include <string>
#include <vector>

#include "neutro/hyperreal.hpp"

namespace neutro {

/// Closed interval [lo, hi] inside [0-, 1+]. A singleton has lo == hi.
class NSInterval {
 public:
  /// Throws OutOfRange if an endpoint leaves the unit range and
  /// InvalidInterval if lo > hi.
  NSInterval(Hyperreal lo, Hyperreal hi);
  static NSInterval point(const Hyperreal& p) { return NSInterval(p, p); }

  const Hyperreal& lo() const noexcept { return lo_; }
  const Hyperreal& hi() const noexcept { return hi_; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Hyperreal& p) const { return lo_ <= p && p <= hi_; }

  friend bool operator==(const NSInterval&, const NSInterval&) = default;

 private:
  Hyperreal lo_;
  Hyperreal hi_;
};

/// Nonempty finite union of closed intervals, kept sorted with every pair of
/// neighbours strictly separated (no overlap, no shared endpoint).
class NSSubset {
 public:
  /// Normalizes `raw`: sort by lo, then merge overlapping or touching
  /// intervals. Throws EmptyInput when `raw` is empty.
  static NSSubset normalize(std::span<const NSInterval> raw);
  static NSSubset normalize(std::initializer_list<NSInterval> raw) {
    return normalize(std::span<const NSInterval>(raw.begin(), raw.size()));
  }
  /// Throws OutOfRange outside [0-, 1+].
  static NSSubset singleton(const Hyperreal& p);

  const std::vector<NSInterval>& intervals() const noexcept {
    return intervals_;
  }
  const Hyperreal& inf() const { return intervals_.front().lo(); }
  const Hyperreal& sup() const { return intervals_.back().hi(); }
  bool contains(const Hyperreal& p) const;
  bool is_singleton() const {
    return intervals_.size() == 1 && intervals_.front().is_point();
  }
  /// True iff this is exactly the one-point set {p}.
  bool equals_point(const Hyperreal& p) const {
    return is_singleton() && inf() == p;
  }

  friend bool operator==(const NSSubset&, const NSSubset&) = default;

 private:
  explicit NSSubset(std::vector<NSInterval> intervals)
      : intervals_(std::move(intervals)) {}

  std::vector<NSInterval> intervals_;
};

}  // namespace neutro
