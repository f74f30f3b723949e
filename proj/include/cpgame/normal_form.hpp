#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpgame/rational.hpp"

namespace cpgame {

/// Normal-form image of a game: one expected payoff per pure joint strategy.
/// Entry (k_1, ..., k_n) lives at row-major index with player 0 most
/// significant and equals the expected payoff of the k_i-th pure strategies
/// under lexicographic strategy enumeration.
struct NormalForm {
  std::vector<std::uint64_t> strategy_counts;  // |A_i|^|O_i| per player
  std::vector<Rational> payoffs;               // row-major

  const Rational& max_entry() const;
};

/// JSON document {"dims": [...], "entries": ["p/q", ...]} with entries in
/// row-major order.
std::string normal_form_to_json(const NormalForm& nf);

/// Two-player games only: CSV grid, rows = player 1 strategies, columns =
/// player 2 strategies.
std::string normal_form_to_csv(const NormalForm& nf);

}  // namespace cpgame
