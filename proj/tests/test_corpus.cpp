#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "neutro/corpus.hpp"
#include "neutro/error.hpp"
#include "neutro/lattice.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace neutro;
using namespace neutro::testing;

namespace {

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("neutro_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_SUITE("corpus") {

TEST_CASE("line corpus") {
  auto c = parse_corpus(
      "# comment\n"
      "({1};{0.3};{1})\n"
      "\n"
      "taut ({1+};{0-};{0-})\n"
      "bad ({0.2};{};{0.3})\n",
      Kind::Proposition);
  CHECK_FALSE(c.json);
  REQUIRE(c.entries.size() == 2);
  CHECK(c.entries[0].id == "L2");
  CHECK(c.entries[0].line == 2);
  CHECK(c.entries[0].kind == Kind::Proposition);
  CHECK(c.entries[1].id == "taut");
  REQUIRE(c.errors.size() == 1);
  CHECK(c.errors[0].line == 5);
  CHECK(c.errors[0].id == "bad");
  CHECK(c.errors[0].message.find("component I") != std::string::npos);
}

TEST_CASE("JSON corpus") {
  auto c = parse_corpus(R"json([
    {"id": "a", "kind": "element", "triple": "({1};{0.3};{1})"},
    {"id": "b", "triple": "({0.2};{0.1};{0.3})", "text": "maybe"},
    {"id": "rain", "event": "({0.7};{0};{0.3})", "co_event": "({0.4};{0};{0.6})"},
    {"id": "broken", "triple": "({1};{0};"},
    {"triple": "({1};{0};{0})"},
    {"id": "k", "kind": "vibe", "triple": "({1};{0};{0})"}
  ])json",
                        Kind::Event);
  CHECK(c.json);
  REQUIRE(c.entries.size() == 3);
  CHECK(c.entries[0].kind == Kind::Element);
  CHECK(c.entries[1].kind == Kind::Event);
  CHECK(c.entries[1].text == "maybe");
  CHECK(c.entries[2].pair.has_value());
  REQUIRE(c.errors.size() == 3);
  CHECK(c.errors[0].line == 4);
  CHECK(c.errors[0].id == "broken");
  CHECK(c.errors[1].line == 5);
  CHECK(c.errors[2].line == 6);

  auto records = classify_corpus(c);
  REQUIRE(records.size() == 4);
  CHECK(records[2].id == "rain:event");
  CHECK(records[3].id == "rain:co_event");
  CHECK(records[3].kind == Kind::Event);
}

TEST_CASE("malformed JSON reports a line") {
  auto c = parse_corpus("[\n {\"id\": \"a\",\n  oops }\n]", Kind::Element);
  REQUIRE(c.errors.size() == 1);
  CHECK(c.errors[0].line == 3);
  CHECK(c.entries.empty());
}

TEST_CASE("classify_file") {
  auto path = write_temp("three.txt",
                         "({1};{0.3};{1})\n({0.2};{0.1};{0.3})\n({1};{0};{0})\n");
  auto result = classify_file(path, Kind::Element);
  CHECK(result.errors.empty());
  REQUIRE(result.records.size() == 3);
  for (const auto& r : result.records) CHECK(r.labels == classify(r.triple));
  CHECK(result.records[0].n_inf == "23/10");
  CHECK(result.records[1].n_sup == "3/5");

  auto empty = classify_file(write_temp("empty.txt", ""), Kind::Element);
  CHECK(empty.records.empty());
  CHECK(empty.errors.empty());

  auto bad = classify_file(write_temp("bad.txt", "({1};{0};{0})\n({1};{0}\n"),
                           Kind::Element);
  CHECK(bad.records.size() == 1);
  REQUIRE(bad.errors.size() == 1);
  CHECK(bad.errors[0].line == 2);

  try {
    classify_file("/nonexistent/neutro.txt", Kind::Element);
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}

TEST_CASE("validate") {
  auto ok = parse_corpus("a ({1};{0};{0})\nb ({0};{0};{1})\n", Kind::Element);
  CHECK(validate_corpus(ok).empty());
  auto dup = parse_corpus("a ({1};{0};{0})\na ({0};{0};{1})\n", Kind::Element);
  auto v = validate_corpus(dup);
  REQUIRE(v.size() == 1);
  CHECK(v[0].line == 2);
  CHECK(v[0].message == "duplicate id");
}

TEST_CASE("model checks") {
  auto one = parse_corpus("a ({0.6};{0.1};{0.5})\nb ({1};{0};{0})\n", Kind::Element);
  CHECK(check_model(one, "dialetheist"));
  CHECK_FALSE(check_model(one, "trivialist"));
  CHECK_FALSE(check_model(one, "lift:Classical"));

  auto empty = parse_corpus("", Kind::Element);
  CHECK(check_model(empty, "lift:Nihilist"));
  CHECK_FALSE(check_model(empty, "dialetheist"));
  CHECK_FALSE(check_model(empty, "trivialist"));

  auto space = parse_corpus(
      R"json([{"id":"e","event":"({0.7};{0};{0.3})","co_event":"({0.4};{0};{0.6})"}])json",
      Kind::Event);
  CHECK(check_model(space, "trivialist"));
  CHECK_THROWS_AS(check_model(space, "lift:Nihilist"), std::invalid_argument);
  CHECK_THROWS_AS(check_model(one, "bogus"), std::invalid_argument);
  CHECK_THROWS_AS(check_model(one, "lift:Dialetheist"), Error);

  auto dup = parse_corpus("a ({1};{0};{0})\na ({0};{0};{1})\n", Kind::Element);
  CHECK_THROWS_AS(check_model(dup, "dialetheist"), Error);
}

TEST_CASE("rational lists") {
  auto v = parse_rational_list("0, 1/4,0.5 ,-1,+2");
  REQUIRE(v.size() == 5);
  CHECK(v[1] == Rational(1, 4));
  CHECK(v[2] == Rational(1, 2));
  CHECK(v[3] == -1);
  CHECK(v[4] == 2);
  CHECK_THROWS_AS(parse_rational_list("0,,1"), Error);
  CHECK_THROWS_AS(parse_rational_list("1+"), Error);
}

TEST_CASE("default lattice") {
  auto report = lattice_report(default_lattice_grid());
  CHECK(report.endpoints.size() == 15);
  CHECK(report.triple_count == 3375);

  CHECK(report.implies(Label::Paradoxist, Label::Paraconsistent));
  // Only the two n_sup = 1 boundary triples break this one.
  CHECK(report.cell(Label::PseudoParadoxist, Label::Paraconsistent).counterexamples == 2);
  CHECK(format_triple(*report.cell(Label::PseudoParadoxist, Label::Paraconsistent)
                           .first_counterexample) == "({0+};{0-};{1})");
  CHECK(report.implies(Label::Classical, Label::Fuzzy));
  CHECK_FALSE(report.implies(Label::Faillibilist, Label::Paraconsistent));
  CHECK_FALSE(report.witnessed_together(Label::Intuitionistic, Label::Paraconsistent));
  CHECK_FALSE(report.witnessed_together(Label::Tautological, Label::Nihilist));
  CHECK(report.witnessed_together(Label::Faillibilist, Label::Intuitionistic));
  CHECK(classify(*report.cell(Label::Faillibilist, Label::Intuitionistic).first_witness)
            .contains(Label::Intuitionistic));

  // Whole table against the brute-force evaluator.
  std::array<std::array<std::size_t, kLabelCount>, kLabelCount> missing{};
  std::array<std::array<bool, kLabelCount>, kLabelCount> together{};
  for (int t = 0; t < 15; ++t)
    for (int i = 0; i < 15; ++i)
      for (int f = 0; f < 15; ++f) {
        auto pt = [](int k) { return std::array<int, 2>{k / 3, k % 3 - 1}; };
        auto bits = oracle::grid_labels({{pt(t), pt(i), pt(f)}});
        for (std::size_t a = 0; a < kLabelCount; ++a) {
          if (!(bits & (1u << a))) continue;
          for (std::size_t b = 0; b < kLabelCount; ++b) {
            if (bits & (1u << b))
              together[a][b] = true;
            else
              ++missing[a][b];
          }
        }
      }
  for (std::size_t a = 0; a < kLabelCount; ++a)
    for (std::size_t b = 0; b < kLabelCount; ++b) {
      CHECK(report.cells[a][b].counterexamples == missing[a][b]);
      CHECK(report.cells[a][b].co_witnessed == together[a][b]);
    }
}

TEST_CASE("custom lattice grid drops out-of-range endpoints") {
  auto report = lattice_report({{Rational(0), Rational(1)}, {Rational(-2), Rational(0)}});
  // 0-2 is below 0-; 1-2 and 1 are in range.
  CHECK(report.endpoints.size() == 3);
  CHECK(report.triple_count == 27);
}

}
