#include "permcf/arrangements.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "permcf/bfile.hpp"
#include "permcf/cfrac.hpp"

namespace permcf {

KArrangement::KArrangement(Permutation pi, std::map<int, int> phi, int k) : pi_(std::move(pi)), phi_(std::move(phi)), k_(k) {
  if (k_ < 0) throw PermError("k-arrangements need k >= 0");
  for (int i = 1; i <= pi_.size(); ++i) {
    const bool fixed = pi_.is_fixed_point(i);
    const auto it = phi_.find(i);
    if (fixed && it == phi_.end()) throw PermError("fixed point " + std::to_string(i) + " has no colour");
    if (!fixed && it != phi_.end()) throw PermError(std::to_string(i) + " is coloured but not a fixed point");
    if (fixed && (it->second < 1 || it->second > k_))
      throw PermError("colour " + std::to_string(it->second) + " outside 1.." + std::to_string(k_));
  }
  if (phi_.size() > static_cast<std::size_t>(pi_.size()) ||
      (!phi_.empty() && (phi_.begin()->first < 1 || phi_.rbegin()->first > pi_.size())))
    throw PermError("colour map outside 1..n");
}

std::string KArrangement::str() const {
  std::string out = pi_.str() + " {";
  bool first = true;
  for (const auto& [i, c] : phi_) {
    if (!first) out += ' ';
    out += std::to_string(i) + ":" + std::to_string(c);
    first = false;
  }
  return out + "}";
}

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::Recursion: return "recursion";
    case CountMethod::Egf: return "egf";
    case CountMethod::Permanent: return "permanent";
    case CountMethod::Binomial: return "binomial";
  }
  return "?";
}

CountMethod parse_count_method(const std::string& name) {
  for (auto m : {CountMethod::Recursion, CountMethod::Egf, CountMethod::Permanent, CountMethod::Binomial})
    if (to_string(m) == name) return m;
  throw std::invalid_argument("unknown counting method '" + name + "'");
}

namespace {

BigInt ipow(long base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Ryser's formula
BigInt permanent(const std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n > 24) throw std::out_of_range("permanent limited to n <= 24");
  BigInt total = 0;
  std::vector<BigInt> row_sum(n);
  for (unsigned long S = 1; S < (1ul << n); ++S) {
    BigInt prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) {
      BigInt s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (S & (1ul << j)) s += a[i][j];
      prod *= s;
    }
    if ((n - static_cast<std::size_t>(__builtin_popcountl(S))) % 2) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return total;
}

}  // namespace

BigInt arrangement_count(int k, int n, CountMethod method) {
  if (n < 0) throw std::out_of_range("negative n");
  switch (method) {
    case CountMethod::Recursion: {
      BigInt a = 1;
      for (int m = 1; m <= n; ++m) a = a * m + ipow(k - 1, m);
      return a;
    }
    case CountMethod::Egf: {
      // n! [x^n] e^{(k-1)x} / (1-x) = sum_j n!/j! (k-1)^j
      BigInt total = 0;
      for (int j = 0; j <= n; ++j) total += factorial(static_cast<unsigned>(n)) / factorial(static_cast<unsigned>(j)) * ipow(k - 1, j);
      return total;
    }
    case CountMethod::Permanent: {
      std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n), 1));
      for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = k;
      return permanent(a);
    }
    case CountMethod::Binomial: {
      std::vector<BigInt> seq;
      for (int i = 0; i <= n; ++i) seq.push_back(factorial(static_cast<unsigned>(i)));  // k = 1
      for (int step = 1; step < k; ++step) {
        std::vector<BigInt> next(seq.size(), 0);
        for (int m = 0; m <= n; ++m)
          for (int i = 0; i <= m; ++i) next[static_cast<std::size_t>(m)] += binomial(m, i) * seq[static_cast<std::size_t>(i)];
        seq = std::move(next);
      }
      for (int step = k; step < 1; ++step) {
        std::vector<BigInt> next(seq.size(), 0);
        for (int m = 0; m <= n; ++m)
          for (int i = 0; i <= m; ++i) {
            const BigInt term = binomial(m, i) * seq[static_cast<std::size_t>(i)];
            if ((m - i) % 2) {
              next[static_cast<std::size_t>(m)] -= term;
            } else {
              next[static_cast<std::size_t>(m)] += term;
            }
          }
        seq = std::move(next);
      }
      return seq[static_cast<std::size_t>(n)];
    }
  }
  return 0;
}

void for_each_arrangement(int k, int n, const std::function<void(const KArrangement&)>& visit, long bound) {
  if (k < 0) throw std::out_of_range("no arrangements are defined for k < 0");
  if (n < 0) throw std::out_of_range("negative n");
  if (arrangement_count(k, n, CountMethod::Recursion) > bound)
    throw std::out_of_range("A_" + std::to_string(k) + "(" + std::to_string(n) + ") exceeds the enumeration bound " +
                            std::to_string(bound));
  for_each_permutation(n, [&](const Permutation& pi) {
    std::vector<int> fixed;
    for (int i = 1; i <= n; ++i)
      if (pi.is_fixed_point(i)) fixed.push_back(i);
    if (!fixed.empty() && k == 0) return;
    std::vector<int> colors(fixed.size(), 1);
    for (;;) {
      std::map<int, int> phi;
      for (std::size_t t = 0; t < fixed.size(); ++t) phi[fixed[t]] = colors[t];
      visit(KArrangement(pi, std::move(phi), k));
      int t = static_cast<int>(fixed.size()) - 1;
      while (t >= 0 && colors[static_cast<std::size_t>(t)] == k) colors[static_cast<std::size_t>(t--)] = 1;
      if (t < 0) break;
      ++colors[static_cast<std::size_t>(t)];
    }
  });
}

std::vector<KArrangement> enumerate_arrangements(int k, int n, long bound) {
  std::vector<KArrangement> out;
  for_each_arrangement(k, n, [&](const KArrangement& a) { out.push_back(a); }, bound);
  return out;
}

std::vector<int> to_form(const KArrangement& a, FormKind kind) {
  const int n = a.size();
  std::vector<int> word(static_cast<std::size_t>(n));
  std::vector<int> kept;  // positive letters before standardisation
  for (int i = 1; i <= n; ++i) {
    auto it = a.phi().find(i);
    const bool negated = it != a.phi().end() && !(kind == FormKind::Permutation && it->second == a.k());
    word[static_cast<std::size_t>(i - 1)] = negated ? -it->second : a.pi()(i);
    if (!negated) kept.push_back(a.pi()(i));
  }
  std::sort(kept.begin(), kept.end());
  for (auto& v : word)
    if (v > 0) v = static_cast<int>(std::lower_bound(kept.begin(), kept.end(), v) - kept.begin()) + 1;
  return word;
}

KArrangement from_form(const std::vector<int>& word, FormKind kind, int k) {
  if (k < 0) throw PermError("k-arrangements need k >= 0");
  const int n = static_cast<int>(word.size());
  // with k = 0 both forms are the derangement itself
  const int max_negative = (kind == FormKind::Derangement || k == 0) ? k : k - 1;
  std::vector<int> positions;  // positions of positive letters
  std::map<int, int> phi;
  for (int i = 1; i <= n; ++i) {
    const int v = word[static_cast<std::size_t>(i - 1)];
    if (v < 0) {
      if (-v > max_negative) throw PermError("negative letter " + std::to_string(v) + " outside -" + std::to_string(max_negative) + "..-1");
      phi[i] = -v;
    } else if (v == 0) {
      throw PermError("0 is not a letter of a form");
    } else {
      positions.push_back(i);
    }
  }
  const int m = static_cast<int>(positions.size());
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(m + 1), false);
  for (int i : positions) {
    const int v = word[static_cast<std::size_t>(i - 1)];
    if (v > m || used[static_cast<std::size_t>(v)]) throw PermError("positive letters must be 1.." + std::to_string(m) + " once each");
    used[static_cast<std::size_t>(v)] = true;
    const int target = positions[static_cast<std::size_t>(v - 1)];
    if (target == i) {
      if (kind == FormKind::Derangement || k == 0) throw PermError("the positive letters must form a derangement");
      phi[i] = k;
    }
    pi[static_cast<std::size_t>(i - 1)] = target;
  }
  for (const auto& [i, c] : phi)
    if (c != k || kind == FormKind::Derangement) pi[static_cast<std::size_t>(i - 1)] = i;
  return KArrangement(Permutation(std::move(pi)), std::move(phi), k);
}

ColoredPermutation color_encoding(const KArrangement& a) {
  std::vector<int> colors(static_cast<std::size_t>(a.size()), 0);
  for (const auto& [i, c] : a.phi()) colors[static_cast<std::size_t>(i - 1)] = c;
  return ColoredPermutation(a.pi(), std::move(colors), a.k() + 1);
}

CheckReport refined_gf_check(int k, int n_max) {
  CheckReport report{"refined k=" + std::to_string(k), {}};
  ParamAssignment params;
  if (k == 0) {
    params.set("u", 0);
  } else {
    params.set_color_weights(k);
  }
  ExpansionBounds eb;
  eb.symbolic = static_cast<unsigned>(std::max(n_max, 0));
  const auto m = moments(params, static_cast<unsigned>(std::max(n_max, 0)), eb);
  for (int n = 0; n <= n_max; ++n) {
    std::unordered_map<Monomial, long, MonomialHash> acc;
    for_each_arrangement(k, n, [&](const KArrangement& a) {
      StatVector s = stats(a.pi());
      s.fp = 0;  // col(a) carries the fixed points
      Monomial mono = stat_monomial(s);
      for (const auto& [i, c] : a.phi()) mono = mono * Monomial::variable(color_weight_index(c));
      ++acc[mono];
    });
    std::vector<MultiPoly::Term> terms;
    for (const auto& [mono, c] : acc) terms.emplace_back(mono, Rational(c));
    const MultiPoly oracle = MultiPoly::from_terms(std::move(terms));
    const MultiPoly& got = m[static_cast<std::size_t>(n)];
    report.add("n=" + std::to_string(n), got == oracle,
               got == oracle ? std::to_string(oracle.size()) + " monomials"
                             : "fraction gives " + got.str() + ", enumeration gives " + oracle.str());
  }
  return report;
}

std::map<int, long> avoider_histogram(int k, int n, const PatternSpec& pat) {
  if (pat.kind != PatternKind::Classical) throw PermError("arrangement avoidance uses classical patterns only");
  std::map<int, long> hist;
  for_each_arrangement(k, n, [&](const KArrangement& a) {
    const auto w = to_form(a, FormKind::Permutation);
    if (!avoids(w, pat)) return;
    ++hist[static_cast<int>(std::count_if(w.begin(), w.end(), [](int v) { return v < 0; }))];
  });
  return hist;
}

long avoider_count(int k, int n, const PatternSpec& pat) {
  long total = 0;
  for (const auto& [j, c] : avoider_histogram(k, n, pat)) total += c;
  return total;
}

BigInt ballot_number(int n, int j) {
  if (j < 0 || j > n) return 0;
  BigInt num = BigInt(j + 1) * binomial(2 * n - j, n);
  return num / (n + 1);
}

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

namespace {

using Histogram = std::map<long, BigInt>;

std::string hist_str(const Histogram& h) {
  std::string out = "{";
  for (const auto& [k, v] : h) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(k) + ":" + v.get_str();
  }
  return out + "}";
}

void add_hist(Histogram& h, long key) { h[key] += 1; }

void compare_hist(CheckReport& r, const std::string& label, const Histogram& a, const Histogram& b) {
  r.add(label, a == b, a == b ? hist_str(a) : hist_str(a) + " vs " + hist_str(b));
}

const std::vector<std::string> kClassical3 = {"123", "132", "213", "231", "312", "321"};

std::string at(int n, int k) { return " n=" + std::to_string(n) + " k=" + std::to_string(k); }

}  // namespace

CheckReport verify_arrangements(int n_max, int k_max) {
  CheckReport report{"arrangements", {}};
  for (int k = -2; k <= k_max; ++k)
    for (int n = 0; n <= n_max; ++n) {
      const BigInt ref = arrangement_count(k, n, CountMethod::Recursion);
      std::string detail = ref.get_str();
      bool agree = true;
      for (auto m : {CountMethod::Egf, CountMethod::Permanent, CountMethod::Binomial}) {
        const BigInt v = arrangement_count(k, n, m);
        if (v != ref) {
          agree = false;
          detail += ", " + to_string(m) + " gives " + v.get_str();
        }
      }
      report.add("count methods agree" + at(n, k), agree, detail);
    }
  for (int k = 0; k <= k_max; ++k)
    for (int n = 0; n <= n_max; ++n) {
      long size = 0;
      bool round_trip = true;
      std::string bad;
      std::map<std::vector<int>, long> by_multiset;
      for_each_arrangement(k, n, [&](const KArrangement& a) {
        ++size;
        for (auto kind : {FormKind::Derangement, FormKind::Permutation}) {
          const auto w = to_form(a, kind);
          if (!(from_form(w, kind, k) == a)) {
            round_trip = false;
            if (bad.empty()) bad = a.str() + " -> " + word_str(w);
          }
          if (kind == FormKind::Permutation) {
            auto sorted = w;
            std::sort(sorted.begin(), sorted.end());
            ++by_multiset[sorted];
          }
        }
      });
      const BigInt expected = arrangement_count(k, n, CountMethod::Recursion);
      report.add("enumeration size" + at(n, k), expected == size, std::to_string(size) + " vs " + expected.get_str());
      report.add("form round trips" + at(n, k), round_trip, bad);
      // a union of rearrangement classes holds every distinct rearrangement of each multiset
      bool classes = true;
      std::string short_class;
      for (const auto& [ms, count] : by_multiset) {
        long rearrangements = 0;
        auto w = ms;
        do {
          ++rearrangements;
        } while (std::next_permutation(w.begin(), w.end()));
        if (rearrangements != count) {
          classes = false;
          if (short_class.empty()) short_class = word_str(ms) + ": " + std::to_string(count) + " of " + std::to_string(rearrangements);
        }
      }
      // derangements (k = 0) are not closed under rearrangement; the claim needs k >= 1
      if (k >= 1) report.add("permutation forms are rearrangement classes" + at(n, k), classes, short_class);
    }
  for (int k = 0; k <= k_max; ++k) report.merge(refined_gf_check(k, n_max));
  if (k_max >= 2)
    for (const auto& p : kClassical3)
      for (int n = 0; n <= n_max; ++n) {
        const auto hist = avoider_histogram(2, n, PatternSpec::classical(p));
        long total = 0;
        bool ballot = true;
        for (int j = 0; j <= n; ++j) {
          const auto it = hist.find(j);
          const long c = it == hist.end() ? 0 : it->second;
          total += c;
          if (ballot_number(n, j) != c) ballot = false;
        }
        report.add("2-arrangements avoiding " + p + " n=" + std::to_string(n) + " = C(n+1)", catalan(n + 1) == total,
                   std::to_string(total) + " vs " + catalan(n + 1).get_str());
        report.add("2-arrangements avoiding " + p + " n=" + std::to_string(n) + " by negatives = ballot", ballot);
      }
  return report;
}

CheckReport conjecture_checks(int n_max, int k_max) {
  CheckReport report{"conjectures", {}};
  // C1, C5 and the proved equidistributions, all k
  for (int k = 0; k <= k_max; ++k)
    for (int n = 0; n <= n_max; ++n) {
      Histogram des_der, des_perm, exc_perm, inv_perm, maj_perm, inv_enc, maj_enc, des_enc;
      for_each_arrangement(k, n, [&](const KArrangement& a) {
        const auto d = word_stats(to_form(a, FormKind::Derangement));
        const auto p = word_stats(to_form(a, FormKind::Permutation));
        add_hist(des_der, d.des);
        add_hist(des_perm, p.des);
        add_hist(exc_perm, p.exc);
        add_hist(inv_perm, p.inv);
        add_hist(maj_perm, p.maj);
        const auto enc = color_encoding(a);
        const auto cs = colored_stats(enc);
        add_hist(inv_enc, cs.inv);
        add_hist(maj_enc, colored_descent_position_sum(enc));
        add_hist(des_enc, cs.des);
      });
      compare_hist(report, "C1 des: derangement form vs permutation form" + at(n, k), des_der, des_perm);
      compare_hist(report, "C5 inv vs maj on colour encodings" + at(n, k), inv_enc, maj_enc);
      compare_hist(report, "C5 des: colour encoding vs permutation form" + at(n, k), des_enc, des_perm);
      compare_hist(report, "C5 des: colour encoding vs derangement form" + at(n, k), des_enc, des_der);
      if (k >= 1) {
        compare_hist(report, "exc vs des on permutation forms" + at(n, k), exc_perm, des_perm);
        compare_hist(report, "inv vs maj on permutation forms" + at(n, k), inv_perm, maj_perm);
      }
    }
  // C2: 3-arrangements
  if (k_max >= 3)
    for (const auto& p : kClassical3)
      for (int n = 0; n <= n_max; ++n) {
        const long got = avoider_count(3, n, PatternSpec::classical(p));
        const BigInt expected = catalan(n + 2) - ipow(2, n);
        report.add("C2 3-arrangements avoiding " + p + at(n, 3) + " = C(n+2) - 2^n", expected == got,
                   std::to_string(got) + " vs " + expected.get_str());
      }
  if (k_max >= 2) {
    Triangle a108838, a236406;
    try {
      a108838 = read_triangle(bundled_bfile("A108838"));
      a236406 = read_triangle(bundled_bfile("A236406"));
    } catch (const BFileError& e) {
      report.add("bundled reference triangles", false, e.what());
    }
    auto row = [](const Triangle& t, long n) {
      Histogram h;
      if (auto it = t.find(n); it != t.end())
        for (const auto& [k, v] : it->second)
          if (v != 0) h[k] = v;
      return h;
    };
    // C3: 2-arrangements of [m] are row m+1 of the triangle
    for (const std::string p : {"132", "213", "231", "312"})
      for (int m = 1; m <= n_max; ++m) {
        Histogram des;
        const auto pat = PatternSpec::classical(p);
        for_each_arrangement(2, m, [&](const KArrangement& a) {
          const auto w = to_form(a, FormKind::Permutation);
          if (avoids(w, pat)) add_hist(des, word_stats(w).des);
        });
        const long n = m + 1;
        Histogram formula;
        for (long k = 0; k <= n; ++k) {
          const BigInt v = 2 * binomial(n + 1, k + 2) * binomial(n - 2, k) / (n + 1);
          if (v != 0) formula[k] = v;
        }
        compare_hist(report, "C3 des on 2-arrangements avoiding " + p + " m=" + std::to_string(m) + " vs formula", des, formula);
        if (a108838.count(n))
          compare_hist(report, "C3 des on 2-arrangements avoiding " + p + " m=" + std::to_string(m) + " vs A108838", des,
                       row(a108838, n));
      }
    // C4
    const auto p123 = PatternSpec::classical("123");
    for (int m = 0; m <= n_max; ++m) {
      if (!a236406.count(m + 1)) continue;
      Histogram asc;
      for_each_arrangement(2, m, [&](const KArrangement& a) {
        const auto w = to_form(a, FormKind::Permutation);
        if (avoids(w, p123)) add_hist(asc, word_stats(w).asc);
      });
      compare_hist(report, "C4 asc on 123-avoiding 2-arrangements m=" + std::to_string(m) + " vs A236406", asc,
                   row(a236406, m + 1));
    }
  }
  return report;
}

}  // namespace permcf
