#include "neutro/lattice.hpp"

#include <algorithm>
#include <string>

#include "neutro/error.hpp"
#include "neutro/textio.hpp"

namespace neutro {

LatticeGrid default_lattice_grid() {
  return {{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4),
           Rational(1)},
          {Rational(-1), Rational(0), Rational(1)}};
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    bool negative = !item.empty() && item.front() == '-';
    if (negative || (!item.empty() && item.front() == '+')) item.remove_prefix(1);
    // A bare number parses as a hyperreal with no infinitesimal part.
    Hyperreal v;
    try {
      v = parse_hyperreal(item);
    } catch (const Error& e) {
      throw Error(ErrorCode::Syntax,
                  "bad list item '" + std::string(item) + "' at offset " +
                      std::to_string(start),
                  start);
    }
    if (v.eps() != 0)
      throw Error(ErrorCode::Syntax,
                  "list item '" + std::string(item) + "' is not a rational",
                  start);
    out.push_back(negative ? Rational(-v.standard_part()) : v.standard_part());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

LatticeReport lattice_report(const LatticeGrid& grid) {
  LatticeReport report;
  for (const auto& s : grid.std_values)
    for (const auto& e : grid.eps_values) {
      Hyperreal p(s, e);
      if (in_unit_range(p) &&
          std::find(report.endpoints.begin(), report.endpoints.end(), p) ==
              report.endpoints.end())
        report.endpoints.push_back(p);
    }
  std::sort(report.endpoints.begin(), report.endpoints.end());

  std::vector<NSSubset> points;
  points.reserve(report.endpoints.size());
  for (const auto& p : report.endpoints) points.push_back(NSSubset::singleton(p));

  for (const auto& t : points)
    for (const auto& i : points)
      for (const auto& f : points) {
        NeutroTriple triple{t, i, f};
        LabelSet labels = classify(triple);
        ++report.triple_count;
        for (Label a : kAllLabels) {
          if (!labels.contains(a)) continue;
          auto ai = static_cast<std::size_t>(a);
          ++report.label_counts[ai];
          for (Label b : kAllLabels) {
            auto& cell = report.cells[ai][static_cast<std::size_t>(b)];
            ++cell.antecedent_count;
            if (labels.contains(b)) {
              if (!cell.co_witnessed) cell.first_witness = triple;
              cell.co_witnessed = true;
            } else {
              if (cell.counterexamples == 0) cell.first_counterexample = triple;
              ++cell.counterexamples;
            }
          }
        }
      }
  return report;
}

}  // namespace neutro
