#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/interval_set.hpp"

namespace neutro {

/// Truth, indeterminacy and falsity subsets of one element, event or
/// proposition.
struct NeutroTriple {
  NSSubset truth;
  NSSubset indeterminacy;
  NSSubset falsity;

  friend bool operator==(const NeutroTriple&, const NeutroTriple&) = default;
};

/// Per-triple classes. Values are bit positions in LabelSet and in the C API
/// bitmask, so the order is part of the ABI.
enum class Label : std::uint8_t {
  Neutrosophic = 0,
  Classical,
  Fuzzy,
  Intuitionistic,
  Paraconsistent,
  Faillibilist,
  Paradoxist,
  PseudoParadoxist,
  Tautological,
  Nihilist,
};

inline constexpr std::size_t kLabelCount = 10;

inline constexpr std::array<Label, kLabelCount> kAllLabels = {
    Label::Neutrosophic,   Label::Classical,    Label::Fuzzy,
    Label::Intuitionistic, Label::Paraconsistent, Label::Faillibilist,
    Label::Paradoxist,     Label::PseudoParadoxist, Label::Tautological,
    Label::Nihilist,
};

/// What a triple describes; selects the display vocabulary only.
enum class Kind { Element, Event, Proposition };

std::string_view label_name(Label label);
std::optional<Label> label_from_name(std::string_view name);
/// "paradoxist set", "paradoxist probability", "paradoxist logic", ...
std::string label_display_name(Label label, Kind kind);

std::string_view kind_name(Kind kind);
std::optional<Kind> kind_from_name(std::string_view name);

class LabelSet {
 public:
  LabelSet() = default;
  explicit LabelSet(std::uint32_t bits) : bits_(bits) {}

  void insert(Label label) { bits_ |= bit(label); }
  bool contains(Label label) const { return (bits_ & bit(label)) != 0; }
  std::uint32_t bits() const noexcept { return bits_; }
  std::size_t size() const;

  /// Members ordered by name, as emitted in reports.
  std::vector<Label> sorted_by_name() const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

  static constexpr std::uint32_t bit(Label label) {
    return std::uint32_t{1} << static_cast<unsigned>(label);
  }

 private:
  std::uint32_t bits_ = 0;
};

Hyperreal n_inf(const NeutroTriple& t);
Hyperreal n_sup(const NeutroTriple& t);

bool is_intuitionistic(const NeutroTriple& t);
bool is_paraconsistent(const NeutroTriple& t);
bool is_faillibilist(const NeutroTriple& t);
bool is_paradoxist(const NeutroTriple& t);
bool is_pseudo_paradoxist(const NeutroTriple& t);
bool is_tautological(const NeutroTriple& t);
bool is_nihilist(const NeutroTriple& t);
bool is_classical(const NeutroTriple& t);
bool is_fuzzy(const NeutroTriple& t);

bool has_label(const NeutroTriple& t, Label label);

/// Every label whose predicate holds, plus Neutrosophic.
LabelSet classify(const NeutroTriple& t);

}  // namespace neutro
