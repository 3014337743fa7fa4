#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "neutro/triple.hpp"

namespace neutro {

/// Singleton endpoints std + eps * e for every (std, eps) pair; pairs that
/// fall outside [0-, 1+] are dropped.
struct LatticeGrid {
  std::vector<Rational> std_values;
  std::vector<Rational> eps_values;
};

/// {0, 1/4, 1/2, 3/4, 1} x {-1, 0, +1}: fifteen endpoints.
LatticeGrid default_lattice_grid();

/// Comma-separated rationals, each optionally signed: "-1,0,1", "0,1/4,0.5".
std::vector<Rational> parse_rational_list(std::string_view text);

struct LatticeCell {
  /// Grid triples carrying the row label.
  std::size_t antecedent_count = 0;
  /// Of those, how many lack the column label.
  std::size_t counterexamples = 0;
  /// Row and column labels seen on one triple.
  bool co_witnessed = false;
  std::optional<NeutroTriple> first_counterexample;
  std::optional<NeutroTriple> first_witness;
};

struct LatticeReport {
  std::vector<Hyperreal> endpoints;
  std::size_t triple_count = 0;
  std::array<std::size_t, kLabelCount> label_counts{};
  std::array<std::array<LatticeCell, kLabelCount>, kLabelCount> cells{};

  const LatticeCell& cell(Label a, Label b) const {
    return cells[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  /// A => B held on every grid triple (vacuously when A never occurred).
  bool implies(Label a, Label b) const { return cell(a, b).counterexamples == 0; }
  bool witnessed_together(Label a, Label b) const {
    return cell(a, b).co_witnessed;
  }
};

/// Classifies every triple of grid singletons and tabulates, for each
/// ordered label pair, implication and co-occurrence.
LatticeReport lattice_report(const LatticeGrid& grid);

}  // namespace neutro
