#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/models.hpp"
#include "neutro/triple.hpp"

namespace neutro {

// Corpus files come in two shapes, told apart by the first non-blank
// character:
//
//  * JSON: an array of objects with "id", optional "kind" and optional
//    "text", plus either "triple" or both "event" and "co_event" (literal
//    strings). `line` on entries and errors is the 1-based record index.
//  * Lines: one record per line, either a bare literal (id "L<line>") or
//    "<id> <literal>". Blank lines and lines starting with '#' are skipped.

struct CorpusEntry {
  std::size_t line = 0;
  std::string id;
  Kind kind = Kind::Element;
  std::optional<std::string> text;
  std::optional<NeutroTriple> triple;
  /// Set instead of `triple` for event/complement records.
  std::optional<EventPair> pair;
};

struct RecordError {
  std::size_t line = 0;
  std::string id;
  std::string message;
};

struct Corpus {
  bool json = false;
  std::vector<CorpusEntry> entries;
  std::vector<RecordError> errors;
};

/// Malformed records are collected in `errors`; a document that is not
/// valid JSON at all yields a single error. `default_kind` applies to
/// records without their own "kind".
Corpus parse_corpus(std::string_view content, Kind default_kind);
/// Throws Io when the file cannot be read.
Corpus load_corpus(const std::filesystem::path& path, Kind default_kind);

struct ClassificationRecord {
  std::string id;
  Kind kind = Kind::Element;
  NeutroTriple triple;
  LabelSet labels;
  std::string n_inf;
  std::string n_sup;
};

ClassificationRecord make_record(std::string id, Kind kind,
                                 const NeutroTriple& triple);

/// One record per triple in input order. A pair record expands into
/// "<id>:event" and "<id>:co_event".
std::vector<ClassificationRecord> classify_corpus(const Corpus& corpus);

struct ClassifyResult {
  std::vector<ClassificationRecord> records;
  std::vector<RecordError> errors;
};

ClassifyResult classify_file(const std::filesystem::path& path, Kind kind);

/// Invariant checks over a parsed corpus: unique ids, label-set exclusivity,
/// the n_inf/n_sup chain and normalized components.
std::vector<RecordError> validate_corpus(const Corpus& corpus);

/// Builds the set model of all triple records; throws DuplicateId.
SetModel build_set_model(const Corpus& corpus);
/// Builds the complement space of all pair records; throws DuplicateId.
ComplementSpace build_complement_space(const Corpus& corpus);

/// Evaluates "dialetheist", "trivialist" or "lift:<Label>". Corpora holding
/// event/complement pairs are checked as complement spaces, all others as
/// set models. Throws InvalidLabel for a bad lift label and
/// std::invalid_argument for an unknown check or a lift on a space.
bool check_model(const Corpus& corpus, std::string_view check);

}  // namespace neutro
