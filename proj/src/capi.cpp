#include "neutro/neutro.h"

#include <bit>
#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "neutro/corpus.hpp"
#include "neutro/error.hpp"
#include "neutro/lattice.hpp"
#include "neutro/models.hpp"
#include "neutro/textio.hpp"

struct neutro_triple {
  neutro::NeutroTriple value;
};

struct neutro_set_model {
  neutro::SetModel value;
};

struct neutro_space {
  neutro::ComplementSpace value;
};

namespace {

struct OwnedRecord {
  std::string id;
  neutro_kind kind;
  std::uint32_t labels;
  std::string triple;
  std::string n_inf;
  std::string n_sup;
};

}  // namespace

struct neutro_corpus {
  neutro::Corpus corpus;
  std::vector<OwnedRecord> records;
  std::vector<neutro::RecordError> violations;
};

struct neutro_lattice {
  neutro::LatticeReport report;
  std::vector<std::string> endpoints;
  // Row-major kLabelCount x kLabelCount; empty string means none.
  std::vector<std::string> counterexamples;
  std::vector<std::string> witnesses;
};

namespace {

thread_local std::string g_last_error;
thread_local long g_last_offset = -1;

void clear_error() {
  g_last_error.clear();
  g_last_offset = -1;
}

neutro_status set_error(neutro_status status, const std::string& message,
                        long offset = -1) {
  g_last_error = message;
  g_last_offset = offset;
  return status;
}

neutro_status status_of(neutro::ErrorCode code) {
  using neutro::ErrorCode;
  switch (code) {
    case ErrorCode::Syntax: return NEUTRO_ERR_SYNTAX;
    case ErrorCode::OutOfRange: return NEUTRO_ERR_OUT_OF_RANGE;
    case ErrorCode::EmptyInput: return NEUTRO_ERR_EMPTY_INPUT;
    case ErrorCode::EmptySubset: return NEUTRO_ERR_EMPTY_SUBSET;
    case ErrorCode::InvalidInterval: return NEUTRO_ERR_INVALID_INTERVAL;
    case ErrorCode::Component: return NEUTRO_ERR_COMPONENT;
    case ErrorCode::UnknownElement: return NEUTRO_ERR_UNKNOWN_ELEMENT;
    case ErrorCode::InvalidLabel: return NEUTRO_ERR_INVALID_LABEL;
    case ErrorCode::DuplicateId: return NEUTRO_ERR_DUPLICATE_ID;
    case ErrorCode::Io: return NEUTRO_ERR_IO;
  }
  return NEUTRO_ERR_INTERNAL;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
neutro_status guarded(Fn&& fn) {
  clear_error();
  try {
    fn();
    return NEUTRO_OK;
  } catch (const neutro::Error& e) {
    return set_error(status_of(e.code()), e.what(),
                     e.offset() ? static_cast<long>(*e.offset()) : -1);
  } catch (const std::invalid_argument& e) {
    return set_error(NEUTRO_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(NEUTRO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(NEUTRO_ERR_INTERNAL, e.what());
  }
}

#define NEUTRO_REQUIRE(cond)                                               \
  do {                                                                     \
    if (!(cond))                                                           \
      return set_error(NEUTRO_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

neutro::Kind to_kind(neutro_kind kind) {
  switch (kind) {
    case NEUTRO_KIND_ELEMENT: return neutro::Kind::Element;
    case NEUTRO_KIND_EVENT: return neutro::Kind::Event;
    case NEUTRO_KIND_PROPOSITION: return neutro::Kind::Proposition;
  }
  throw std::invalid_argument("unknown kind");
}

neutro_kind from_kind(neutro::Kind kind) {
  switch (kind) {
    case neutro::Kind::Element: return NEUTRO_KIND_ELEMENT;
    case neutro::Kind::Event: return NEUTRO_KIND_EVENT;
    case neutro::Kind::Proposition: return NEUTRO_KIND_PROPOSITION;
  }
  return NEUTRO_KIND_ELEMENT;
}

bool single_label_bit(std::uint32_t bit) {
  return std::has_single_bit(bit) && bit < (1u << NEUTRO_LABEL_COUNT);
}

neutro::Label to_label(std::uint32_t bit) {
  if (!single_label_bit(bit))
    throw std::invalid_argument("not a single label bit");
  return static_cast<neutro::Label>(std::countr_zero(bit));
}

neutro_corpus* wrap_corpus(neutro::Corpus corpus) {
  auto* c = new neutro_corpus{std::move(corpus), {}, {}};
  for (auto& r : neutro::classify_corpus(c->corpus))
    c->records.push_back({std::move(r.id), from_kind(r.kind), r.labels.bits(),
                          neutro::format_triple(r.triple), std::move(r.n_inf),
                          std::move(r.n_sup)});
  return c;
}

void fill_error(const neutro::RecordError& e, neutro_record_error* out) {
  out->line = e.line;
  out->id = e.id.c_str();
  out->message = e.message.c_str();
}

}  // namespace

extern "C" {

const char* neutro_last_error(void) { return g_last_error.c_str(); }

long neutro_last_error_offset(void) { return g_last_offset; }

const char* neutro_status_name(neutro_status status) {
  switch (status) {
    case NEUTRO_OK: return "ok";
    case NEUTRO_ERR_SYNTAX: return "SyntaxError";
    case NEUTRO_ERR_OUT_OF_RANGE: return "OutOfRange";
    case NEUTRO_ERR_EMPTY_INPUT: return "EmptyInput";
    case NEUTRO_ERR_EMPTY_SUBSET: return "EmptySubset";
    case NEUTRO_ERR_INVALID_INTERVAL: return "InvalidInterval";
    case NEUTRO_ERR_COMPONENT: return "ComponentError";
    case NEUTRO_ERR_UNKNOWN_ELEMENT: return "UnknownElement";
    case NEUTRO_ERR_INVALID_LABEL: return "InvalidLabel";
    case NEUTRO_ERR_DUPLICATE_ID: return "DuplicateId";
    case NEUTRO_ERR_IO: return "IoError";
    case NEUTRO_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case NEUTRO_ERR_INTERNAL: return "InternalError";
  }
  return "unknown";
}

void neutro_string_free(char* s) { std::free(s); }

const char* neutro_label_name(uint32_t label_bit) {
  if (!single_label_bit(label_bit)) return nullptr;
  // Names are string literals, so the view is NUL-terminated.
  return neutro::label_name(to_label(label_bit)).data();
}

neutro_status neutro_label_from_name(const char* name, uint32_t* out_bit) {
  NEUTRO_REQUIRE(name && out_bit);
  return guarded([&] {
    auto label = neutro::label_from_name(name);
    if (!label)
      throw neutro::Error(neutro::ErrorCode::InvalidLabel,
                          std::string("unknown label '") + name + "'");
    *out_bit = neutro::LabelSet::bit(*label);
  });
}

neutro_status neutro_label_display_name(uint32_t label_bit, neutro_kind kind,
                                        char** out) {
  NEUTRO_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(
        neutro::label_display_name(to_label(label_bit), to_kind(kind)));
  });
}

const char* neutro_kind_name(neutro_kind kind) {
  switch (kind) {
    case NEUTRO_KIND_ELEMENT: return "element";
    case NEUTRO_KIND_EVENT: return "event";
    case NEUTRO_KIND_PROPOSITION: return "proposition";
  }
  return nullptr;
}

neutro_status neutro_kind_from_name(const char* name, neutro_kind* out) {
  NEUTRO_REQUIRE(name && out);
  auto kind = neutro::kind_from_name(name);
  if (!kind)
    return set_error(NEUTRO_ERR_INVALID_ARGUMENT,
                     std::string("unknown kind '") + name + "'");
  clear_error();
  *out = from_kind(*kind);
  return NEUTRO_OK;
}

neutro_status neutro_endpoint_canonical(const char* literal, char** out) {
  NEUTRO_REQUIRE(literal && out);
  return guarded(
      [&] { *out = dup_string(neutro::parse_endpoint(literal).to_string()); });
}

neutro_status neutro_triple_parse(const char* literal, neutro_triple** out) {
  NEUTRO_REQUIRE(literal && out);
  *out = nullptr;
  return guarded(
      [&] { *out = new neutro_triple{neutro::parse_triple(literal)}; });
}

void neutro_triple_free(neutro_triple* t) { delete t; }

neutro_status neutro_triple_format(const neutro_triple* t, char** out) {
  NEUTRO_REQUIRE(t && out);
  return guarded([&] { *out = dup_string(neutro::format_triple(t->value)); });
}

neutro_status neutro_triple_labels(const neutro_triple* t,
                                   uint32_t* out_labels) {
  NEUTRO_REQUIRE(t && out_labels);
  return guarded([&] { *out_labels = neutro::classify(t->value).bits(); });
}

neutro_status neutro_triple_n_inf(const neutro_triple* t, char** out) {
  NEUTRO_REQUIRE(t && out);
  return guarded([&] { *out = dup_string(neutro::n_inf(t->value).to_string()); });
}

neutro_status neutro_triple_n_sup(const neutro_triple* t, char** out) {
  NEUTRO_REQUIRE(t && out);
  return guarded([&] { *out = dup_string(neutro::n_sup(t->value).to_string()); });
}

neutro_status neutro_triple_equal(const neutro_triple* a,
                                  const neutro_triple* b, int* out_equal) {
  NEUTRO_REQUIRE(a && b && out_equal);
  clear_error();
  *out_equal = a->value == b->value;
  return NEUTRO_OK;
}

neutro_status neutro_set_model_create(neutro_set_model** out) {
  NEUTRO_REQUIRE(out);
  return guarded([&] { *out = new neutro_set_model{}; });
}

void neutro_set_model_free(neutro_set_model* m) { delete m; }

neutro_status neutro_set_model_add(neutro_set_model* m, const char* id,
                                   const neutro_triple* t) {
  NEUTRO_REQUIRE(m && id && t);
  return guarded([&] { m->value.add(id, t->value); });
}

neutro_status neutro_set_model_belongs(const neutro_set_model* m,
                                       const char* id, int* in_set,
                                       int* in_complement) {
  NEUTRO_REQUIRE(m && id);
  return guarded([&] {
    bool a = neutro::belongs_to(m->value, id);
    bool b = neutro::belongs_to_complement(m->value, id);
    if (in_set) *in_set = a;
    if (in_complement) *in_complement = b;
  });
}

neutro_status neutro_set_model_is_dialetheist(const neutro_set_model* m,
                                              int* out) {
  NEUTRO_REQUIRE(m && out);
  return guarded([&] { *out = neutro::is_dialetheist_set(m->value); });
}

neutro_status neutro_set_model_is_trivialist(const neutro_set_model* m,
                                             int* out) {
  NEUTRO_REQUIRE(m && out);
  return guarded([&] { *out = neutro::is_trivialist_set(m->value); });
}

neutro_status neutro_set_model_lift(const neutro_set_model* m,
                                    const char* label_name, int* out) {
  NEUTRO_REQUIRE(m && label_name && out);
  return guarded([&] {
    *out = neutro::lift_label(m->value, std::string_view(label_name));
  });
}

neutro_status neutro_space_create(neutro_space** out) {
  NEUTRO_REQUIRE(out);
  return guarded([&] { *out = new neutro_space{}; });
}

void neutro_space_free(neutro_space* s) { delete s; }

neutro_status neutro_space_add(neutro_space* s, const char* id,
                               const neutro_triple* event,
                               const neutro_triple* co_event) {
  NEUTRO_REQUIRE(s && id && event && co_event);
  return guarded([&] { s->value.add(id, event->value, co_event->value); });
}

neutro_status neutro_space_is_dialetheist(const neutro_space* s, int* out) {
  NEUTRO_REQUIRE(s && out);
  return guarded([&] { *out = neutro::is_dialetheist_space(s->value); });
}

neutro_status neutro_space_is_trivialist(const neutro_space* s, int* out) {
  NEUTRO_REQUIRE(s && out);
  return guarded([&] { *out = neutro::is_trivialist_space(s->value); });
}

neutro_status neutro_corpus_load(const char* path, neutro_kind default_kind,
                                 neutro_corpus** out) {
  NEUTRO_REQUIRE(path && out);
  *out = nullptr;
  return guarded([&] {
    *out = wrap_corpus(neutro::load_corpus(path, to_kind(default_kind)));
  });
}

neutro_status neutro_corpus_parse(const char* content, neutro_kind default_kind,
                                  neutro_corpus** out) {
  NEUTRO_REQUIRE(content && out);
  *out = nullptr;
  return guarded([&] {
    *out = wrap_corpus(neutro::parse_corpus(content, to_kind(default_kind)));
  });
}

void neutro_corpus_free(neutro_corpus* c) { delete c; }

int neutro_corpus_is_json(const neutro_corpus* c) {
  return c && c->corpus.json;
}

size_t neutro_corpus_record_count(const neutro_corpus* c) {
  return c ? c->records.size() : 0;
}

neutro_status neutro_corpus_record(const neutro_corpus* c, size_t index,
                                   neutro_record* out) {
  NEUTRO_REQUIRE(c && out);
  if (index >= c->records.size())
    return set_error(NEUTRO_ERR_INVALID_ARGUMENT, "record index out of range");
  clear_error();
  const auto& r = c->records[index];
  *out = {r.id.c_str(), r.kind, r.labels, r.triple.c_str(), r.n_inf.c_str(),
          r.n_sup.c_str()};
  return NEUTRO_OK;
}

size_t neutro_corpus_error_count(const neutro_corpus* c) {
  return c ? c->corpus.errors.size() : 0;
}

neutro_status neutro_corpus_error(const neutro_corpus* c, size_t index,
                                  neutro_record_error* out) {
  NEUTRO_REQUIRE(c && out);
  if (index >= c->corpus.errors.size())
    return set_error(NEUTRO_ERR_INVALID_ARGUMENT, "error index out of range");
  clear_error();
  fill_error(c->corpus.errors[index], out);
  return NEUTRO_OK;
}

neutro_status neutro_corpus_validate(neutro_corpus* c, size_t* out_count) {
  NEUTRO_REQUIRE(c && out_count);
  return guarded([&] {
    c->violations = neutro::validate_corpus(c->corpus);
    *out_count = c->violations.size();
  });
}

neutro_status neutro_corpus_violation(const neutro_corpus* c, size_t index,
                                      neutro_record_error* out) {
  NEUTRO_REQUIRE(c && out);
  if (index >= c->violations.size())
    return set_error(NEUTRO_ERR_INVALID_ARGUMENT,
                     "violation index out of range");
  clear_error();
  fill_error(c->violations[index], out);
  return NEUTRO_OK;
}

neutro_status neutro_corpus_check(const neutro_corpus* c, const char* check,
                                  int* out) {
  NEUTRO_REQUIRE(c && check && out);
  return guarded([&] { *out = neutro::check_model(c->corpus, check); });
}

neutro_status neutro_lattice_run(const char* std_list, const char* eps_list,
                                 neutro_lattice** out) {
  NEUTRO_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    neutro::LatticeGrid grid = neutro::default_lattice_grid();
    if (std_list) grid.std_values = neutro::parse_rational_list(std_list);
    if (eps_list) grid.eps_values = neutro::parse_rational_list(eps_list);

    auto* l = new neutro_lattice{neutro::lattice_report(grid), {}, {}, {}};
    for (const auto& p : l->report.endpoints)
      l->endpoints.push_back(p.to_string());
    for (const auto& row : l->report.cells)
      for (const auto& cell : row) {
        l->counterexamples.push_back(
            cell.first_counterexample
                ? neutro::format_triple(*cell.first_counterexample)
                : std::string());
        l->witnesses.push_back(cell.first_witness
                                   ? neutro::format_triple(*cell.first_witness)
                                   : std::string());
      }
    *out = l;
  });
}

void neutro_lattice_free(neutro_lattice* l) { delete l; }

size_t neutro_lattice_triple_count(const neutro_lattice* l) {
  return l ? l->report.triple_count : 0;
}

size_t neutro_lattice_endpoint_count(const neutro_lattice* l) {
  return l ? l->endpoints.size() : 0;
}

const char* neutro_lattice_endpoint(const neutro_lattice* l, size_t index) {
  if (!l || index >= l->endpoints.size()) return nullptr;
  return l->endpoints[index].c_str();
}

size_t neutro_lattice_label_count(const neutro_lattice* l, uint32_t label_bit) {
  if (!l || !single_label_bit(label_bit)) return 0;
  return l->report.label_counts[static_cast<std::size_t>(
      std::countr_zero(label_bit))];
}

neutro_status neutro_lattice_cell_get(const neutro_lattice* l,
                                      uint32_t antecedent_bit,
                                      uint32_t consequent_bit,
                                      neutro_lattice_cell* out) {
  NEUTRO_REQUIRE(l && out);
  return guarded([&] {
    auto a = to_label(antecedent_bit);
    auto b = to_label(consequent_bit);
    const auto& cell = l->report.cell(a, b);
    std::size_t flat = static_cast<std::size_t>(a) * neutro::kLabelCount +
                       static_cast<std::size_t>(b);
    const std::string& cx = l->counterexamples[flat];
    const std::string& wx = l->witnesses[flat];
    *out = {cell.antecedent_count, cell.counterexamples,
            cell.co_witnessed ? 1 : 0, cx.empty() ? nullptr : cx.c_str(),
            wx.empty() ? nullptr : wx.c_str()};
  });
}

}  // extern "C"
