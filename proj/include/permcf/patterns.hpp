#pragma once

// Length-3 pattern occurrences: classical, vincular (dashes separate
// blocks that must sit at adjacent positions) and consecutive.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permcf/permutation.hpp"

namespace permcf {

enum class PatternKind { Classical, Vincular, Consecutive };

struct PatternSpec {
  PatternKind kind = PatternKind::Classical;
  std::array<int, 3> letters{1, 2, 3};
  std::vector<int> blocks{1, 1, 1};  // block lengths, summing to 3

  static PatternSpec classical(std::string_view letters);
  /// Dashed notation, e.g. "31-2" or "2-31".
  static PatternSpec vincular(std::string_view dashed);
  static PatternSpec consecutive(std::string_view letters);
  /// "132" classical, "2-31" vincular, "[321]" consecutive.
  static PatternSpec parse(std::string_view text);

  std::string str() const;
};

/// Index triples i<j<k order-isomorphic to the pattern with adjacency inside
/// blocks.  Triples with a repeated letter never match.
long occurrences(std::span<const int> word, const PatternSpec& pat);
long occurrences(const Permutation& sigma, const PatternSpec& pat);
bool avoids(std::span<const int> word, const PatternSpec& pat);

}  // namespace permcf
