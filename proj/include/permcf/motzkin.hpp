#pragma once

// Labeled Motzkin paths and the bijection eta with permutations.
//
//   Up     non-linked excedance       p * c^inve * d^ninve
//   Down   non-linked anti-excedance  r * h^inva * l^ninva
//   LevelS linked excedance           s * a^inve * b^ninve
//   LevelT linked anti-excedance      t * f^inva * g^ninva
//   LevelU fixed point                u * w^height
//
// A step remembers the height of its left endpoint.  The label degree in
// the (c,d), (h,l), (a,b), (f,g) pair is that height for Up and one less
// for Down, LevelS and LevelT.

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permcf/permutation.hpp"
#include "permcf/poly.hpp"

namespace permcf {

enum class StepKind { Up, Down, LevelS, LevelT, LevelU };

struct LabeledStep {
  StepKind kind = StepKind::LevelU;
  int primary = 0;    // exponent of c, h, a, f, or w
  int secondary = 0;  // exponent of d, l, b, g; 0 for LevelU
  int height = 0;     // left endpoint

  /// Token like "U[c^1 d^0]" or "F[w^2]".
  std::string str() const;
  friend bool operator==(const LabeledStep&, const LabeledStep&) = default;
};

struct PathError : std::invalid_argument {
  PathError(int step, const std::string& what);
  int step;  // 1-based offending step, 0 when not tied to one step
};

class LabeledMotzkinPath {
 public:
  LabeledMotzkinPath() = default;
  /// Recomputes heights from the kinds, then checks the path: heights
  /// nonnegative, final height 0, exponents matching the label degree.
  /// Throws PathError.
  explicit LabeledMotzkinPath(std::vector<LabeledStep> steps);
  /// Space-separated tokens as printed by str().
  static LabeledMotzkinPath parse(std::string_view text);

  int size() const { return static_cast<int>(steps_.size()); }
  const std::vector<LabeledStep>& steps() const { return steps_; }
  const LabeledStep& operator[](int i) const { return steps_.at(static_cast<std::size_t>(i)); }

  std::string str() const;
  friend bool operator==(const LabeledMotzkinPath&, const LabeledMotzkinPath&) = default;

 private:
  std::vector<LabeledStep> steps_;
};

/// Label degree of a step (sum of its two exponents; height for LevelU).
int label_degree(StepKind kind, int height);
Monomial step_label(const LabeledStep& step);
Monomial weight(const LabeledMotzkinPath& path);

LabeledMotzkinPath eta(const Permutation& sigma);
/// Throws PathError when no permutation maps to the path.
Permutation eta_inverse(const LabeledMotzkinPath& path);

inline constexpr int kDefaultPathBound = 9;

/// Visits all n! labeled paths of length n in lexicographic order of their
/// encoded tokens.  Throws std::out_of_range when n exceeds the bound.
void for_each_path(int n, const std::function<void(const LabeledMotzkinPath&)>& visit,
                   int bound = kDefaultPathBound);
std::vector<LabeledMotzkinPath> enumerate_paths(int n, int bound = kDefaultPathBound);

}  // namespace permcf
