#include "neutro/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "neutro/error.hpp"
#include "neutro/textio.hpp"

namespace neutro {

namespace {

using nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

std::string describe(const Error& e) {
  return std::string(to_string(e.code())) + ": " + e.what();
}

std::string string_field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) throw std::runtime_error(std::string("missing field \"") + name + "\"");
  if (!it->is_string())
    throw std::runtime_error(std::string("field \"") + name + "\" is not a string");
  return it->get<std::string>();
}

NeutroTriple triple_field(const json& obj, const char* name) {
  std::string literal = string_field(obj, name);
  try {
    return parse_triple(literal);
  } catch (const Error& e) {
    throw std::runtime_error(std::string("field \"") + name + "\": " + describe(e));
  }
}

void parse_json_corpus(std::string_view content, Kind default_kind,
                       Corpus& out) {
  json doc;
  try {
    doc = json::parse(content);
  } catch (const json::parse_error& e) {
    out.errors.push_back({line_of_offset(content, e.byte), "",
                          std::string("invalid JSON: ") + e.what()});
    return;
  }
  if (!doc.is_array()) {
    out.errors.push_back({1, "", "JSON corpus must be an array of records"});
    return;
  }
  std::size_t index = 0;
  for (const auto& item : doc) {
    ++index;
    CorpusEntry entry;
    entry.line = index;
    try {
      if (!item.is_object()) throw std::runtime_error("record is not an object");
      entry.id = string_field(item, "id");
      entry.kind = default_kind;
      if (item.contains("kind")) {
        auto kind = kind_from_name(string_field(item, "kind"));
        if (!kind) throw std::runtime_error("unknown kind \"" + item["kind"].get<std::string>() + "\"");
        entry.kind = *kind;
      }
      if (item.contains("text")) entry.text = string_field(item, "text");
      if (item.contains("event") || item.contains("co_event")) {
        entry.pair = EventPair{entry.id, triple_field(item, "event"),
                               triple_field(item, "co_event")};
      } else {
        entry.triple = triple_field(item, "triple");
      }
      out.entries.push_back(std::move(entry));
    } catch (const std::exception& e) {
      out.errors.push_back({index, entry.id, e.what()});
    }
  }
}

void parse_line_corpus(std::string_view content, Kind default_kind,
                       Corpus& out) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(start, end - start);
    start = end + 1;
    ++line_no;

    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == content.size()) break;
      continue;
    }
    line.remove_prefix(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.remove_suffix(1);

    CorpusEntry entry;
    entry.line = line_no;
    entry.kind = default_kind;
    std::string_view literal = line;
    if (line.front() == '(') {
      entry.id = "L" + std::to_string(line_no);
    } else {
      auto gap = line.find_first_of(" \t");
      entry.id = std::string(line.substr(0, gap));
      literal = gap == std::string_view::npos ? std::string_view{}
                                              : line.substr(gap + 1);
    }
    try {
      entry.triple = parse_triple(literal);
      out.entries.push_back(std::move(entry));
    } catch (const Error& e) {
      out.errors.push_back({line_no, entry.id, describe(e)});
    }
    if (end == content.size()) break;
  }
}

}  // namespace

Corpus parse_corpus(std::string_view content, Kind default_kind) {
  Corpus out;
  auto first = content.find_first_not_of(" \t\r\n");
  out.json = first != std::string_view::npos && content[first] == '[';
  if (out.json)
    parse_json_corpus(content, default_kind, out);
  else
    parse_line_corpus(content, default_kind, out);
  return out;
}

Corpus load_corpus(const std::filesystem::path& path, Kind default_kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str(), default_kind);
}

ClassificationRecord make_record(std::string id, Kind kind,
                                 const NeutroTriple& triple) {
  return {std::move(id), kind,
          triple,        classify(triple),
          n_inf(triple).to_string(), n_sup(triple).to_string()};
}

std::vector<ClassificationRecord> classify_corpus(const Corpus& corpus) {
  std::vector<ClassificationRecord> out;
  out.reserve(corpus.entries.size());
  for (const auto& e : corpus.entries) {
    if (e.triple) {
      out.push_back(make_record(e.id, e.kind, *e.triple));
    } else {
      out.push_back(make_record(e.id + ":event", Kind::Event, e.pair->event));
      out.push_back(
          make_record(e.id + ":co_event", Kind::Event, e.pair->co_event));
    }
  }
  return out;
}

ClassifyResult classify_file(const std::filesystem::path& path, Kind kind) {
  Corpus corpus = load_corpus(path, kind);
  return {classify_corpus(corpus), std::move(corpus.errors)};
}

namespace {

void check_triple(const CorpusEntry& e, const std::string& where,
                  const NeutroTriple& t, std::vector<RecordError>& out) {
  auto report = [&](const std::string& msg) {
    out.push_back({e.line, e.id, where + msg});
  };
  for (const NSSubset* s : {&t.truth, &t.indeterminacy, &t.falsity}) {
    const auto& ivs = s->intervals();
    for (std::size_t i = 0; i < ivs.size(); ++i) {
      if (!in_unit_range(ivs[i].lo()) || !in_unit_range(ivs[i].hi()))
        report("component endpoint outside [0-,1+]");
      if (i > 0 && ivs[i].lo() <= ivs[i - 1].hi())
        report("component not normalized");
    }
  }
  Hyperreal lo = n_inf(t);
  Hyperreal hi = n_sup(t);
  if (!(kThreeMinusZero <= lo && lo <= hi && hi <= kThreePlus))
    report("n_inf/n_sup chain violated: " + lo.to_string() + " .. " +
           hi.to_string());
  LabelSet labels = classify(t);
  if (!labels.contains(Label::Neutrosophic)) report("missing Neutrosophic");
  if (labels.contains(Label::Intuitionistic) &&
      labels.contains(Label::Paraconsistent))
    report("both Intuitionistic and Paraconsistent");
  if (labels.contains(Label::Tautological) && labels.contains(Label::Nihilist))
    report("both Tautological and Nihilist");
}

}  // namespace

std::vector<RecordError> validate_corpus(const Corpus& corpus) {
  std::vector<RecordError> out;
  std::set<std::string, std::less<>> seen;
  for (const auto& e : corpus.entries) {
    if (!seen.insert(e.id).second)
      out.push_back({e.line, e.id, "duplicate id"});
    if (e.triple) {
      check_triple(e, "", *e.triple, out);
    } else {
      check_triple(e, "event: ", e.pair->event, out);
      check_triple(e, "co_event: ", e.pair->co_event, out);
    }
  }
  return out;
}

SetModel build_set_model(const Corpus& corpus) {
  SetModel m;
  for (const auto& e : corpus.entries)
    if (e.triple) m.add(e.id, *e.triple);
  return m;
}

ComplementSpace build_complement_space(const Corpus& corpus) {
  ComplementSpace s;
  for (const auto& e : corpus.entries)
    if (e.pair) s.add(e.id, e.pair->event, e.pair->co_event);
  return s;
}

bool check_model(const Corpus& corpus, std::string_view check) {
  bool is_space = false;
  for (const auto& e : corpus.entries) is_space = is_space || e.pair.has_value();

  constexpr std::string_view kLift = "lift:";
  if (check.starts_with(kLift)) {
    if (is_space)
      throw std::invalid_argument("lift checks apply to set models only");
    return lift_label(build_set_model(corpus), check.substr(kLift.size()));
  }
  if (check == "dialetheist")
    return is_space ? is_dialetheist_space(build_complement_space(corpus))
                    : is_dialetheist_set(build_set_model(corpus));
  if (check == "trivialist")
    return is_space ? is_trivialist_space(build_complement_space(corpus))
                    : is_trivialist_set(build_set_model(corpus));
  throw std::invalid_argument("unknown check '" + std::string(check) +
                              "' (expected dialetheist, trivialist or "
                              "lift:<Label>)");
}

}  // namespace neutro
