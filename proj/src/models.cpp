#include "neutro/models.hpp"

#include <algorithm>

#include "neutro/error.hpp"

namespace neutro {

namespace {

bool positive_standard(const Hyperreal& v) { return v.standard_part() > 0; }

}  // namespace

void SetModel::add(std::string id, NeutroTriple triple) {
  if (membership_.contains(id))
    throw Error(ErrorCode::DuplicateId, "duplicate element id '" + id + "'");
  universe_.push_back(id);
  membership_.emplace(std::move(id), std::move(triple));
}

const NeutroTriple& SetModel::triple(std::string_view id) const {
  auto it = membership_.find(id);
  if (it == membership_.end())
    throw Error(ErrorCode::UnknownElement,
                "unknown element '" + std::string(id) + "'");
  return it->second;
}

SetModel SetModel::without(std::string_view id) const {
  triple(id);
  SetModel out;
  for (const auto& x : universe_)
    if (x != id) out.add(x, membership_.find(x)->second);
  return out;
}

bool belongs_to(const SetModel& m, std::string_view id) {
  return positive_standard(m.triple(id).truth.inf());
}

bool belongs_to_complement(const SetModel& m, std::string_view id) {
  return positive_standard(m.triple(id).falsity.inf());
}

static bool in_both(const SetModel& m, const std::string& x) {
  return belongs_to(m, x) && belongs_to_complement(m, x);
}

bool is_dialetheist_set(const SetModel& m) {
  return std::any_of(m.universe().begin(), m.universe().end(),
                     [&](const std::string& x) { return in_both(m, x); });
}

bool is_trivialist_set(const SetModel& m) {
  return !m.empty() &&
         std::all_of(m.universe().begin(), m.universe().end(),
                     [&](const std::string& x) { return in_both(m, x); });
}

bool lift_label(const SetModel& m, Label label) {
  if (m.empty()) return label == Label::Nihilist;
  return std::all_of(m.universe().begin(), m.universe().end(),
                     [&](const std::string& x) {
                       return classify(m.triple(x)).contains(label);
                     });
}

bool lift_label(const SetModel& m, std::string_view name) {
  if (name == "Dialetheist" || name == "Trivialist")
    throw Error(ErrorCode::InvalidLabel,
                std::string(name) +
                    " is relational; use the dialetheist/trivialist checks");
  auto label = label_from_name(name);
  if (!label)
    throw Error(ErrorCode::InvalidLabel,
                "unknown label '" + std::string(name) + "'");
  return lift_label(m, *label);
}

void ComplementSpace::add(std::string id, NeutroTriple event,
                          NeutroTriple co_event) {
  for (const auto& p : pairs_)
    if (p.id == id)
      throw Error(ErrorCode::DuplicateId, "duplicate event id '" + id + "'");
  pairs_.push_back({std::move(id), std::move(event), std::move(co_event)});
}

bool overlaps(const EventPair& pair) {
  return positive_standard(pair.event.truth.inf()) &&
         positive_standard(pair.co_event.truth.inf());
}

bool is_dialetheist_space(const ComplementSpace& s) {
  return std::any_of(s.pairs().begin(), s.pairs().end(), overlaps);
}

bool is_trivialist_space(const ComplementSpace& s) {
  return !s.empty() && std::all_of(s.pairs().begin(), s.pairs().end(), overlaps);
}

void PropositionCorpus::add(Proposition item) {
  for (const auto& p : items_)
    if (p.id == item.id)
      throw Error(ErrorCode::DuplicateId,
                  "duplicate proposition id '" + item.id + "'");
  items_.push_back(std::move(item));
}

LabelSet classify_probability(const NeutroTriple& t) { return classify(t); }

LabelSet classify_proposition(const Proposition& p) {
  return classify(p.value);
}

}  // namespace neutro
