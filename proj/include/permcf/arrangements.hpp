#pragma once

// k-arrangements: permutations whose fixed points each carry one of k
// colours (k = 0 means derangements).  Counting four ways, the derangement
// and permutation forms (colours become negative letters), the colour
// encoding as a (k+1)-coloured permutation, pattern avoidance on the
// permutation form, and bounded checks of the open distribution questions.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "permcf/colored.hpp"
#include "permcf/patterns.hpp"
#include "permcf/permutation.hpp"
#include "permcf/report.hpp"

namespace permcf {

class KArrangement {
 public:
  KArrangement() = default;
  /// phi maps every fixed point of pi to a colour in 1..k and nothing else.
  KArrangement(Permutation pi, std::map<int, int> phi, int k);

  int size() const { return pi_.size(); }
  int k() const { return k_; }
  const Permutation& pi() const { return pi_; }
  const std::map<int, int>& phi() const { return phi_; }

  /// "6214573 {2:4 4:1 5:4}"
  std::string str() const;
  friend bool operator==(const KArrangement&, const KArrangement&) = default;

 private:
  Permutation pi_;
  std::map<int, int> phi_;
  int k_ = 1;
};

enum class CountMethod { Recursion, Egf, Permanent, Binomial };
std::string to_string(CountMethod m);
CountMethod parse_count_method(const std::string& name);

/// A_k(n).  Negative k is allowed.
BigInt arrangement_count(int k, int n, CountMethod method);

inline constexpr long kDefaultArrangementBound = 2'000'000;

/// Permutations in lexicographic order, colourings in lexicographic order
/// of (phi of the smallest fixed point, ...).  Rejects k < 0.
void for_each_arrangement(int k, int n, const std::function<void(const KArrangement&)>& visit,
                          long bound = kDefaultArrangementBound);
std::vector<KArrangement> enumerate_arrangements(int k, int n, long bound = kDefaultArrangementBound);

enum class FormKind { Derangement, Permutation };

/// Fixed points become -phi(i) (the permutation form keeps colour-k fixed
/// points as letters), then the remaining letters are standardised.
std::vector<int> to_form(const KArrangement& a, FormKind kind);
/// Throws PermError for words that are not forms of a k-arrangement.
KArrangement from_form(const std::vector<int>& word, FormKind kind, int k);

/// (pi, c) with c_i = phi(i) on fixed points and 0 elsewhere; k+1 colours.
ColoredPermutation color_encoding(const KArrangement& a);

/// Fraction with u -> u1 + ... + uk against the sum of col(a) times the
/// statistic monomial of pi, n <= n_max.
CheckReport refined_gf_check(int k, int n_max);

/// Number of arrangements whose permutation form avoids a classical
/// pattern, indexed by the number of negative letters.
std::map<int, long> avoider_histogram(int k, int n, const PatternSpec& pat);
long avoider_count(int k, int n, const PatternSpec& pat);

/// ((j+1)/(n+1)) C(2n-j, n)
BigInt ballot_number(int n, int j);
BigInt catalan(int n);

/// Counts (k from -2), enumeration, round trips, rearrangement classes
/// (k >= 1), the refined fraction, and the 2-arrangement avoidance counts.
CheckReport verify_arrangements(int n_max, int k_max);

/// Bounded checks C1..C5 and the proved equidistributions on permutation
/// forms (k >= 1); a failed item is a counterexample.
CheckReport conjecture_checks(int n_max, int k_max);

}  // namespace permcf
