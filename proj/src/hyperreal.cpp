#include "neutro/hyperreal.hpp"

namespace neutro {

std::strong_ordering operator<=>(const Hyperreal& a, const Hyperreal& b) {
  if (a.std_ < b.std_) return std::strong_ordering::less;
  if (a.std_ > b.std_) return std::strong_ordering::greater;
  if (a.eps_ < b.eps_) return std::strong_ordering::less;
  if (a.eps_ > b.eps_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool in_unit_range(const Hyperreal& value) {
  return kMinusZero <= value && value <= kOnePlus;
}

std::string rational_to_string(const Rational& value) {
  return value.str();
}

std::string Hyperreal::to_string() const {
  std::string out = rational_to_string(std_);
  if (eps_ == 0) return out;
  if (eps_ > 0) {
    out += '+';
    if (eps_ != 1) out += rational_to_string(eps_);
  } else {
    out += '-';
    if (eps_ != -1) out += rational_to_string(-eps_);
  }
  return out;
}

}  // namespace neutro
