#pragma once

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace neutro {

using Rational = boost::multiprecision::cpp_rational;

/// Exact value `standard + coefficient * eps` for a single positive
/// infinitesimal eps. Ordered lexicographically on (standard, coefficient),
/// which is the order induced by eps being smaller than every positive
/// rational.
class Hyperreal {
 public:
  Hyperreal() = default;
  Hyperreal(Rational standard, Rational eps = 0)
      : std_(std::move(standard)), eps_(std::move(eps)) {}

  const Rational& standard_part() const noexcept { return std_; }
  const Rational& eps() const noexcept { return eps_; }

  friend Hyperreal operator+(const Hyperreal& a, const Hyperreal& b) {
    return Hyperreal(a.std_ + b.std_, a.eps_ + b.eps_);
  }
  Hyperreal& operator+=(const Hyperreal& other) {
    std_ += other.std_;
    eps_ += other.eps_;
    return *this;
  }

  friend std::strong_ordering operator<=>(const Hyperreal& a,
                                          const Hyperreal& b);
  friend bool operator==(const Hyperreal& a, const Hyperreal& b) {
    return a.std_ == b.std_ && a.eps_ == b.eps_;
  }

  /// Canonical literal: "1+" for 1 + eps, "0-" for 0 - eps, "3+3" for
  /// 3 + 3 eps, "2/5" for a standard value.
  std::string to_string() const;

 private:
  Rational std_{0};
  Rational eps_{0};
};

inline const Hyperreal kMinusZero{0, -1};
inline const Hyperreal kZero{0, 0};
inline const Hyperreal kZeroPlus{0, 1};
inline const Hyperreal kOne{1, 0};
inline const Hyperreal kOnePlus{1, 1};
/// Sum of three copies of 1+; the ceiling of any n_sup.
inline const Hyperreal kThreePlus{3, 3};
/// Sum of three copies of 0-; the floor of any n_inf.
inline const Hyperreal kThreeMinusZero{0, -3};

/// Inside the closed non-standard unit range [0-, 1+].
bool in_unit_range(const Hyperreal& value);

/// Canonical text for an exact rational: "0", "3", "-1/2", "7/10".
std::string rational_to_string(const Rational& value);

}  // namespace neutro
