// Command-line front end over the C interface of libneutro.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "neutro/neutro.h"

namespace {

enum ExitCode { kOk = 0, kViolation = 1, kParseError = 2, kUsage = 3 };

struct CorpusDeleter {
  void operator()(neutro_corpus* c) const { neutro_corpus_free(c); }
};
struct LatticeDeleter {
  void operator()(neutro_lattice* l) const { neutro_lattice_free(l); }
};
using CorpusPtr = std::unique_ptr<neutro_corpus, CorpusDeleter>;
using LatticePtr = std::unique_ptr<neutro_lattice, LatticeDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  neutro_string_free(s);
  return out;
}

std::vector<uint32_t> label_bits() {
  std::vector<uint32_t> out;
  for (unsigned i = 0; i < NEUTRO_LABEL_COUNT; ++i) out.push_back(1u << i);
  return out;
}

// Label bits of `labels`, ordered by canonical name.
std::vector<uint32_t> sorted_labels(uint32_t labels) {
  std::vector<uint32_t> out;
  for (uint32_t bit : label_bits())
    if (labels & bit) out.push_back(bit);
  std::sort(out.begin(), out.end(), [](uint32_t a, uint32_t b) {
    return std::string(neutro_label_name(a)) < neutro_label_name(b);
  });
  return out;
}

void report_error(const char* context) {
  std::cerr << "error: " << context << ": " << neutro_last_error() << "\n";
}

// Loads a corpus and prints its record-level errors. Returns nullptr and
// sets `code` when the file cannot be used at all.
CorpusPtr load(const std::string& path, neutro_kind kind, int& code) {
  neutro_corpus* raw = nullptr;
  if (neutro_corpus_load(path.c_str(), kind, &raw) != NEUTRO_OK) {
    report_error(path.c_str());
    code = kUsage;
    return nullptr;
  }
  CorpusPtr corpus(raw);
  const char* where = neutro_corpus_is_json(raw) ? "record" : "line";
  for (size_t i = 0; i < neutro_corpus_error_count(raw); ++i) {
    neutro_record_error e;
    neutro_corpus_error(raw, i, &e);
    std::cerr << path << ": " << where << " " << e.line;
    if (*e.id) std::cerr << " (" << e.id << ")";
    std::cerr << ": " << e.message << "\n";
  }
  code = neutro_corpus_error_count(raw) > 0 ? kParseError : kOk;
  return corpus;
}

int run_classify(const std::string& path, neutro_kind kind, bool as_json) {
  int code = kOk;
  CorpusPtr corpus = load(path, kind, code);
  if (!corpus) return code;

  std::vector<neutro_record> records(neutro_corpus_record_count(corpus.get()));
  for (size_t i = 0; i < records.size(); ++i)
    neutro_corpus_record(corpus.get(), i, &records[i]);

  if (as_json) {
    for (const auto& r : records) {
      nlohmann::json labels = nlohmann::json::array();
      for (uint32_t bit : sorted_labels(r.labels))
        labels.push_back(neutro_label_name(bit));
      nlohmann::json obj = {{"id", r.id},
                            {"labels", labels},
                            {"n_inf", r.n_inf},
                            {"n_sup", r.n_sup}};
      std::cout << obj.dump() << "\n";
    }
    return code;
  }

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"id", "kind", "n_inf", "n_sup", "classes"});
  for (const auto& r : records) {
    std::string classes;
    for (uint32_t bit : sorted_labels(r.labels)) {
      char* name = nullptr;
      neutro_label_display_name(bit, r.kind, &name);
      if (!classes.empty()) classes += ", ";
      classes += take_string(name);
    }
    rows.push_back({r.id, neutro_kind_name(r.kind), r.n_inf, r.n_sup, classes});
  }
  std::vector<size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      std::cout << row[c];
      if (c + 1 < row.size())
        std::cout << std::string(width[c] - row[c].size() + 2, ' ');
    }
    std::cout << "\n";
  }
  return code;
}

int run_validate(const std::string& path, neutro_kind kind) {
  int code = kOk;
  CorpusPtr corpus = load(path, kind, code);
  if (!corpus) return code;
  if (code != kOk) return code;

  size_t count = 0;
  if (neutro_corpus_validate(corpus.get(), &count) != NEUTRO_OK) {
    report_error("validate");
    return kViolation;
  }
  const char* where = neutro_corpus_is_json(corpus.get()) ? "record" : "line";
  for (size_t i = 0; i < count; ++i) {
    neutro_record_error e;
    neutro_corpus_violation(corpus.get(), i, &e);
    std::cout << path << ": " << where << " " << e.line << " (" << e.id
              << "): " << e.message << "\n";
  }
  if (count > 0) return kViolation;
  std::cout << "ok: " << neutro_corpus_record_count(corpus.get())
            << " records, no invariant violations\n";
  return kOk;
}

int run_lattice(const std::string& std_grid, const std::string& eps_grid) {
  neutro_lattice* raw = nullptr;
  if (neutro_lattice_run(std_grid.empty() ? nullptr : std_grid.c_str(),
                         eps_grid.empty() ? nullptr : eps_grid.c_str(),
                         &raw) != NEUTRO_OK) {
    report_error("lattice grid");
    return kUsage;
  }
  LatticePtr lattice(raw);

  std::cout << "endpoints:";
  for (size_t i = 0; i < neutro_lattice_endpoint_count(raw); ++i)
    std::cout << " " << neutro_lattice_endpoint(raw, i);
  std::cout << "\ntriples: " << neutro_lattice_triple_count(raw) << "\n\n";

  std::cout << "label counts\n";
  for (uint32_t bit : label_bits())
    std::cout << "  " << neutro_label_name(bit) << ": "
              << neutro_lattice_label_count(raw, bit) << "\n";

  std::cout << "\nimplications\n";
  for (uint32_t a : label_bits())
    for (uint32_t b : label_bits()) {
      if (a == b) continue;
      neutro_lattice_cell cell;
      neutro_lattice_cell_get(raw, a, b, &cell);
      std::cout << "  " << neutro_label_name(a) << " => "
                << neutro_label_name(b) << ": ";
      if (cell.antecedent_count == 0)
        std::cout << "vacuous";
      else if (cell.counterexamples == 0)
        std::cout << "holds (" << cell.antecedent_count << " triples)";
      else
        std::cout << "fails (" << cell.counterexamples << " of "
                  << cell.antecedent_count << ", e.g. "
                  << cell.counterexample << ")";
      std::cout << "\n";
    }

  std::cout << "\nco-occurrence\n";
  auto bits = label_bits();
  for (size_t i = 0; i < bits.size(); ++i)
    for (size_t j = i + 1; j < bits.size(); ++j) {
      neutro_lattice_cell cell;
      neutro_lattice_cell_get(raw, bits[i], bits[j], &cell);
      std::cout << "  " << neutro_label_name(bits[i]) << " & "
                << neutro_label_name(bits[j]) << ": ";
      if (cell.co_witnessed)
        std::cout << "witnessed, e.g. " << cell.witness;
      else
        std::cout << "never witnessed";
      std::cout << "\n";
    }
  return kOk;
}

int run_model(const std::string& path, neutro_kind kind,
              const std::string& check) {
  int code = kOk;
  CorpusPtr corpus = load(path, kind, code);
  if (!corpus) return code;
  if (code != kOk) return code;

  int result = 0;
  neutro_status status = neutro_corpus_check(corpus.get(), check.c_str(), &result);
  switch (status) {
    case NEUTRO_OK:
      std::cout << check << ": " << (result ? "true" : "false") << "\n";
      return kOk;
    case NEUTRO_ERR_DUPLICATE_ID:
      report_error(path.c_str());
      return kViolation;
    default:
      report_error("--check");
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify (T,I,F) triples into neutrosophic classes"};
  app.require_subcommand(1);

  const std::map<std::string, neutro_kind> kinds = {
      {"element", NEUTRO_KIND_ELEMENT},
      {"event", NEUTRO_KIND_EVENT},
      {"proposition", NEUTRO_KIND_PROPOSITION}};

  std::string path;
  neutro_kind kind = NEUTRO_KIND_ELEMENT;
  bool as_json = false;
  std::string std_grid, eps_grid, check;

  auto* classify = app.add_subcommand("classify", "Classify every record of a file");
  classify->add_option("file", path, "Literal-per-line or JSON corpus")->required();
  classify->add_option("--kind", kind, "element|event|proposition")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
  classify->add_flag("--json", as_json, "Emit one JSON object per record");

  auto* validate = app.add_subcommand("validate", "Check corpus invariants only");
  validate->add_option("file", path)->required();
  validate->add_option("--kind", kind, "element|event|proposition")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));

  auto* lattice = app.add_subcommand("lattice", "Implication/exclusion table over a singleton grid");
  lattice->add_option("--std-grid", std_grid, "Standard parts, e.g. 0,1/4,1/2,3/4,1");
  lattice->add_option("--eps-grid", eps_grid, "Infinitesimal coefficients, e.g. -1,0,1");

  auto* model = app.add_subcommand("model", "Collection-level checks");
  model->add_option("file", path)->required();
  model->add_option("--check", check, "dialetheist|trivialist|lift:<Label>")->required();
  model->add_option("--kind", kind, "element|event|proposition")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*classify) return run_classify(path, kind, as_json);
  if (*validate) return run_validate(path, kind);
  if (*lattice) return run_lattice(std_grid, eps_grid);
  if (*model) return run_model(path, kind, check);
  return kUsage;
}
