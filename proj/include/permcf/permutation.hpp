#pragma once

// Permutations in one-line notation and the excedance-based statistics
// (linked excedances, nestings and crossings among excedances and among
// anti-excedances, fixed points under arcs), with their per-index
// refinements.  Indices and values are 1-based.

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permcf/poly.hpp"

namespace permcf {

struct PermError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Permutation {
 public:
  Permutation() = default;
  /// Throws PermError unless word is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);
  /// Whitespace- or comma-separated values; a bare digit string like
  /// "597126843" is read letter by letter (only for n <= 9).
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  /// sigma(i), 1-based.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  /// sigma^{-1}(v), 1-based.
  int preimage(int v) const { return inv_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<int>& word() const { return word_; }
  Permutation inverse() const;

  bool is_excedance(int i) const { return (*this)(i) > i; }
  bool is_anti_excedance(int i) const { return (*this)(i) < i; }
  bool is_fixed_point(int i) const { return (*this)(i) == i; }
  /// i is an excedance reached from an excedance.
  bool is_linked_excedance(int i) const { return preimage(i) < i && i < (*this)(i); }
  bool is_linked_anti_excedance(int i) const { return preimage(i) > i && i > (*this)(i); }

  /// Space-separated for n >= 10, digit string otherwise.
  std::string str() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.word_ == b.word_; }
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.word_ <=> b.word_; }

 private:
  std::vector<int> word_;
  std::vector<int> inv_;
};

/// Visits S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> all_permutations(int n);

struct StatVector {
  int exc = 0, fp = 0, aexc = 0, le = 0, lae = 0;
  int ie = 0, ile = 0, nie = 0, nile = 0;
  int iae = 0, ilae = 0, niae = 0, nilae = 0;
  int iefp = 0;

  friend bool operator==(const StatVector&, const StatVector&) = default;
};

/// Field names in declaration order, paired with values; for printing.
std::vector<std::pair<std::string_view, int>> fields(const StatVector& s);

/// Each statistic counted straight from its set definition, O(n^2).
StatVector stats(const Permutation& sigma);

/// a^ile b^nile c^(ie-ile) d^(nie-nile) f^ilae g^nilae h^(iae-ilae)
/// l^(niae-nilae) p^(exc-le) r^(aexc-lae) s^le t^lae u^fp w^iefp
Monomial stat_monomial(const StatVector& s);

enum class IndexClass { NonLinkedExc, LinkedExc, NonLinkedAexc, LinkedAexc, FixedPoint };
std::string_view to_string(IndexClass c);

struct IndexProfile {
  int index = 0;
  IndexClass cls = IndexClass::FixedPoint;
  int inve = 0;   // x < i < sigma(i) < sigma(x)
  int ninve = 0;  // x < i < sigma(x) < sigma(i)
  int inva = 0;   // x > i > sigma(i) > sigma(x)
  int ninva = 0;  // x > i > sigma(x) > sigma(i)
  int iefp = 0;   // x < i < sigma(x), fixed points only
  int prex = 0;   // x < i < sigma(x)
  int fola = 0;   // sigma(x) < i < x

  friend bool operator==(const IndexProfile&, const IndexProfile&) = default;
};

/// Throws PermError if i is outside 1..n.
IndexProfile index_profile(const Permutation& sigma, int i);
std::vector<IndexProfile> index_profiles(const Permutation& sigma);

struct Chains {
  std::vector<std::vector<int>> excedance;       // ordered by starter
  std::vector<std::vector<int>> anti_excedance;  // ordered by starter
};

/// Maximal chains i, sigma(i), sigma^2(i), ... of excedances (resp.
/// anti-excedances); only the first index of each is non-linked.
Chains maximal_chains(const Permutation& sigma);

/// Descent-to-excedance bijection: a descent ..ji.. of sigma becomes
/// tau(i) = j in tau = fondamentale(sigma).
Permutation fondamentale(const Permutation& sigma);
Permutation fondamentale_inverse(const Permutation& tau);

/// Positions 2..n-1 with sigma(i-1) > sigma(i) > sigma(i+1).
int double_descents(const Permutation& sigma);

struct WordStats {
  int exc = 0;  // a_i above the i-th letter of the sorted word
  int des = 0;
  int maj = 0;
  int inv = 0;
  int asc = 0;

  friend bool operator==(const WordStats&, const WordStats&) = default;
};

/// Statistics of an arbitrary integer word (repeats and negatives allowed).
WordStats word_stats(std::span<const int> w);

/// Whitespace- or comma-separated integers, negatives allowed.
std::vector<int> parse_word(std::string_view text);
std::string word_str(std::span<const int> w);

}  // namespace permcf
