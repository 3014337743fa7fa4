#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/triple.hpp"

namespace neutro {

/// A set M over a universe U: each element of U carries its triple with
/// respect to M. Membership in the complement C(M) is read off the falsity
/// component.
class SetModel {
 public:
  /// Throws DuplicateId if `id` is already in the universe.
  void add(std::string id, NeutroTriple triple);

  const std::vector<std::string>& universe() const noexcept {
    return universe_;
  }
  bool empty() const noexcept { return universe_.empty(); }
  std::size_t size() const noexcept { return universe_.size(); }
  /// Throws UnknownElement.
  const NeutroTriple& triple(std::string_view id) const;
  /// Copy without `id`; throws UnknownElement.
  SetModel without(std::string_view id) const;

 private:
  std::vector<std::string> universe_;
  std::map<std::string, NeutroTriple, std::less<>> membership_;
};

/// Standard part of inf(T) strictly positive.
bool belongs_to(const SetModel& m, std::string_view id);
/// Standard part of inf(F) strictly positive.
bool belongs_to_complement(const SetModel& m, std::string_view id);

/// Some element belongs to both M and C(M). False on an empty universe.
bool is_dialetheist_set(const SetModel& m);
/// Every element belongs to both M and C(M), and there is at least one.
bool is_trivialist_set(const SetModel& m);

/// Every element carries `label`. The empty universe lifts Nihilist only.
bool lift_label(const SetModel& m, Label label);
/// By name; throws InvalidLabel for "Dialetheist", "Trivialist" or any name
/// that is not a per-triple label.
bool lift_label(const SetModel& m, std::string_view label_name);

struct EventPair {
  std::string id;
  NeutroTriple event;
  NeutroTriple co_event;
};

/// Events paired with their complements.
class ComplementSpace {
 public:
  /// Throws DuplicateId.
  void add(std::string id, NeutroTriple event, NeutroTriple co_event);
  const std::vector<EventPair>& pairs() const noexcept { return pairs_; }
  bool empty() const noexcept { return pairs_.empty(); }

 private:
  std::vector<EventPair> pairs_;
};

/// Event and complement both occur with positive standard truth.
bool overlaps(const EventPair& pair);
bool is_dialetheist_space(const ComplementSpace& s);
bool is_trivialist_space(const ComplementSpace& s);

struct Proposition {
  std::string id;
  std::optional<std::string> text;
  NeutroTriple value;
};

class PropositionCorpus {
 public:
  /// Throws DuplicateId.
  void add(Proposition item);
  const std::vector<Proposition>& items() const noexcept { return items_; }

 private:
  std::vector<Proposition> items_;
};

LabelSet classify_probability(const NeutroTriple& t);
LabelSet classify_proposition(const Proposition& p);

}  // namespace neutro
