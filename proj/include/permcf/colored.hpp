#pragma once

// k-coloured permutations (sigma, c) with c_i in {0..k-1}.  Letters are
// compared by colour first, then value; a sentinel (n+1, colour 0) follows
// the last letter when a statistic needs it.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "permcf/cfrac.hpp"
#include "permcf/permutation.hpp"
#include "permcf/report.hpp"

namespace permcf {

class ColoredPermutation {
 public:
  ColoredPermutation() = default;
  /// Throws PermError if lengths differ or a colour is outside 0..k-1.
  ColoredPermutation(Permutation pi, std::vector<int> colors, int k);
  /// "3 1 2 | 0 2 1"; k defaults to one more than the largest colour.
  static ColoredPermutation parse(std::string_view text, int k = 0);

  int size() const { return pi_.size(); }
  int colors_count() const { return k_; }
  const Permutation& pi() const { return pi_; }
  const std::vector<int>& colors() const { return colors_; }
  int value(int i) const { return pi_(i); }
  int color(int i) const { return colors_[static_cast<std::size_t>(i - 1)]; }

  std::string str() const;

 private:
  Permutation pi_;
  std::vector<int> colors_;
  int k_ = 1;
};

struct ColoredStats {
  int des = 0, exc = 0, aexc = 0, inv = 0, fix = 0;
  friend bool operator==(const ColoredStats&, const ColoredStats&) = default;
};

ColoredStats colored_stats(const ColoredPermutation& P);

/// Sum of the descent positions i <= n (sentinel included), used by the
/// arrangement conjecture checks.
int colored_descent_position_sum(const ColoredPermutation& P);

inline constexpr long kDefaultColoredBound = 2'000'000;

/// Visits all k^n n! elements: permutations in lexicographic order, colour
/// words in lexicographic order within each.
void for_each_colored(int n, int k, const std::function<void(const ColoredPermutation&)>& visit,
                      long bound = kDefaultColoredBound);
std::vector<ColoredPermutation> enumerate_colored(int n, int k, long bound = kDefaultColoredBound);

/// s = p = kx, t = r = ky, u = (k-1)x + q, others 1.
ParamAssignment exc_fix_params(int k);
/// a=c=h=r=q, b=f=d=l=t=q^2, g=w=0, p=u=1, s=2q.
ParamAssignment inversion_params();
/// The inversion settings with p = x and s = (1+x)q.
ParamAssignment exc_inv_params();
/// z -> z((k-1)q + 1)
MultiPoly inversion_z_multiplier(int k);

/// [n]_q! = prod_{i=1}^n (1 + q + ... + q^{i-1})
MultiPoly q_factorial(int n);

/// The three corollaries for every 1 <= k <= k_max, n <= n_max (the joint
/// exc/inv law for k = 1 only).
CheckReport verify_colored_corollaries(int n_max, int k_max);

}  // namespace permcf
