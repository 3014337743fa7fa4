#include "neutro/triple.hpp"

#include <algorithm>
#include <bit>

namespace neutro {

namespace {

constexpr std::array<std::string_view, kLabelCount> kNames = {
    "Neutrosophic",   "Classical",    "Fuzzy",
    "Intuitionistic", "Paraconsistent", "Faillibilist",
    "Paradoxist",     "PseudoParadoxist", "Tautological",
    "Nihilist",
};

constexpr std::array<std::string_view, kLabelCount> kDisplayStems = {
    "neutrosophic",   "classical",      "fuzzy",
    "intuitionistic", "paraconsistent", "faillibilist",
    "paradoxist",     "pseudo-paradoxist", "tautological",
    "nihilist",
};

// Singleton at standard part 0 with a non-positive infinitesimal: {0} or {0-}.
bool is_absolute_zero(const NSSubset& s) {
  return s.is_singleton() && s.inf().standard_part() == 0 &&
         s.inf().eps() <= 0;
}

bool strictly_inside_unit(const NSSubset& s) {
  return kZero < s.inf() && s.sup() < kOne;
}

bool is_standard_singleton(const NSSubset& s) {
  return s.is_singleton() && s.inf().eps() == 0;
}

}  // namespace

std::string_view label_name(Label label) {
  return kNames[static_cast<std::size_t>(label)];
}

std::optional<Label> label_from_name(std::string_view name) {
  for (Label label : kAllLabels)
    if (label_name(label) == name) return label;
  return std::nullopt;
}

std::string label_display_name(Label label, Kind kind) {
  std::string out(kDisplayStems[static_cast<std::size_t>(label)]);
  switch (kind) {
    case Kind::Element: out += " set"; break;
    case Kind::Event: out += " probability"; break;
    case Kind::Proposition: out += " logic"; break;
  }
  return out;
}

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::Element: return "element";
    case Kind::Event: return "event";
    case Kind::Proposition: return "proposition";
  }
  return "element";
}

std::optional<Kind> kind_from_name(std::string_view name) {
  if (name == "element") return Kind::Element;
  if (name == "event") return Kind::Event;
  if (name == "proposition") return Kind::Proposition;
  return std::nullopt;
}

std::size_t LabelSet::size() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<Label> LabelSet::sorted_by_name() const {
  std::vector<Label> out;
  for (Label label : kAllLabels)
    if (contains(label)) out.push_back(label);
  std::sort(out.begin(), out.end(), [](Label a, Label b) {
    return label_name(a) < label_name(b);
  });
  return out;
}

Hyperreal n_inf(const NeutroTriple& t) {
  return t.truth.inf() + t.indeterminacy.inf() + t.falsity.inf();
}

Hyperreal n_sup(const NeutroTriple& t) {
  return t.truth.sup() + t.indeterminacy.sup() + t.falsity.sup();
}

bool is_intuitionistic(const NeutroTriple& t) { return n_sup(t) < kOne; }

bool is_paraconsistent(const NeutroTriple& t) { return n_sup(t) > kOne; }

bool is_faillibilist(const NeutroTriple& t) {
  return t.indeterminacy.inf() > kZero;
}

bool is_paradoxist(const NeutroTriple& t) {
  return t.truth.equals_point(kOne) && t.falsity.equals_point(kOne);
}

bool is_pseudo_paradoxist(const NeutroTriple& t) {
  return (t.truth.equals_point(kOne) && strictly_inside_unit(t.falsity)) ||
         (t.falsity.equals_point(kOne) && strictly_inside_unit(t.truth));
}

bool is_tautological(const NeutroTriple& t) {
  return t.truth.equals_point(kOnePlus) && is_absolute_zero(t.indeterminacy) &&
         is_absolute_zero(t.falsity);
}

bool is_nihilist(const NeutroTriple& t) {
  return t.falsity.equals_point(kOnePlus) && is_absolute_zero(t.truth) &&
         is_absolute_zero(t.indeterminacy);
}

bool is_classical(const NeutroTriple& t) {
  if (!t.indeterminacy.equals_point(kZero)) return false;
  return (t.truth.equals_point(kOne) && t.falsity.equals_point(kZero)) ||
         (t.truth.equals_point(kZero) && t.falsity.equals_point(kOne));
}

bool is_fuzzy(const NeutroTriple& t) {
  return is_standard_singleton(t.truth) && is_standard_singleton(t.falsity) &&
         t.indeterminacy.equals_point(kZero) &&
         t.truth.inf().standard_part() + t.falsity.inf().standard_part() == 1;
}

bool has_label(const NeutroTriple& t, Label label) {
  switch (label) {
    case Label::Neutrosophic: return true;
    case Label::Classical: return is_classical(t);
    case Label::Fuzzy: return is_fuzzy(t);
    case Label::Intuitionistic: return is_intuitionistic(t);
    case Label::Paraconsistent: return is_paraconsistent(t);
    case Label::Faillibilist: return is_faillibilist(t);
    case Label::Paradoxist: return is_paradoxist(t);
    case Label::PseudoParadoxist: return is_pseudo_paradoxist(t);
    case Label::Tautological: return is_tautological(t);
    case Label::Nihilist: return is_nihilist(t);
  }
  return false;
}

LabelSet classify(const NeutroTriple& t) {
  LabelSet out;
  for (Label label : kAllLabels)
    if (has_label(t, label)) out.insert(label);
  return out;
}

}  // namespace neutro
