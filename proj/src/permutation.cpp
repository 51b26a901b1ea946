#include "permcf/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace permcf {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)), inv_(word_.size(), 0) {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    const int v = word_[static_cast<std::size_t>(i - 1)];
    if (v < 1 || v > n) throw PermError("value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    int& slot = inv_[static_cast<std::size_t>(v - 1)];
    if (slot != 0) throw PermError("value " + std::to_string(v) + " repeated");
    slot = i;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

std::vector<int> parse_word(std::string_view text) {
  std::vector<int> out;
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw PermError("not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw PermError("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

Permutation Permutation::parse(std::string_view text) {
  std::string trimmed(text);
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
  trimmed.erase(trimmed.find_last_not_of(" \t\r\n") + 1);
  const bool bare = !trimmed.empty() && std::all_of(trimmed.begin(), trimmed.end(),
                                                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (bare && trimmed.size() > 1) {
    if (trimmed.size() > 9) throw PermError("digit strings are only read for n <= 9; separate the values");
    std::vector<int> w;
    for (char c : trimmed) w.push_back(c - '0');
    return Permutation(std::move(w));
  }
  return Permutation(parse_word(trimmed));
}

Permutation Permutation::inverse() const { return Permutation(inv_); }

std::string word_str(std::span<const int> w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string Permutation::str() const {
  if (size() >= 10) return word_str(word_);
  std::string out;
  for (int v : word_) out += static_cast<char>('0' + v);
  return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::vector<std::pair<std::string_view, int>> fields(const StatVector& s) {
  return {{"exc", s.exc},   {"fp", s.fp},     {"aexc", s.aexc},   {"le", s.le},     {"lae", s.lae},
          {"ie", s.ie},     {"ile", s.ile},   {"nie", s.nie},     {"nile", s.nile}, {"iae", s.iae},
          {"ilae", s.ilae}, {"niae", s.niae}, {"nilae", s.nilae}, {"iefp", s.iefp}};
}

StatVector stats(const Permutation& sigma) {
  const int n = sigma.size();
  StatVector s;
  for (int i = 1; i <= n; ++i) {
    const int si = sigma(i);
    if (si > i) ++s.exc;
    if (si == i) ++s.fp;
    if (si < i) ++s.aexc;
    if (sigma.preimage(i) < i && i < si) ++s.le;
    if (sigma.preimage(i) > i && i > si) ++s.lae;
  }
  for (int i = 1; i <= n; ++i) {
    const int si = sigma(i);
    for (int j = i + 1; j <= n; ++j) {
      const int sj = sigma(j);
      const bool j_linked = sigma.preimage(j) < j;
      const bool i_linked = sigma.preimage(i) > i;
      if (j < sj && sj < si) {
        ++s.ie;
        if (j_linked) ++s.ile;
      }
      if (j < si && si < sj) {
        ++s.nie;
        if (j_linked) ++s.nile;
      }
      if (i > si && si > sj) {
        ++s.iae;
        if (i_linked) ++s.ilae;
      }
      if (i > sj && sj > si) {
        ++s.niae;
        if (i_linked) ++s.nilae;
      }
      if (j == sj && sj < si) ++s.iefp;
    }
  }
  return s;
}

Monomial stat_monomial(const StatVector& s) {
  const int exps[14] = {s.ile,        s.nile,       s.ie - s.ile,  s.nie - s.nile, s.ilae,     s.nilae,
                        s.iae - s.ilae, s.niae - s.nilae, s.exc - s.le, s.aexc - s.lae, s.le, s.lae, s.fp, s.iefp};
  Monomial m;
  for (std::size_t v = 0; v < 14; ++v)
    if (exps[v] > 0) m = m * Monomial::variable(v, static_cast<unsigned>(exps[v]));
  return m;
}

std::string_view to_string(IndexClass c) {
  switch (c) {
    case IndexClass::NonLinkedExc: return "NonLinkedExc";
    case IndexClass::LinkedExc: return "LinkedExc";
    case IndexClass::NonLinkedAexc: return "NonLinkedAexc";
    case IndexClass::LinkedAexc: return "LinkedAexc";
    case IndexClass::FixedPoint: return "FixedPoint";
  }
  return "?";
}

IndexProfile index_profile(const Permutation& sigma, int i) {
  const int n = sigma.size();
  if (i < 1 || i > n) throw PermError("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  IndexProfile p;
  p.index = i;
  const int si = sigma(i);
  if (si > i) {
    p.cls = sigma.is_linked_excedance(i) ? IndexClass::LinkedExc : IndexClass::NonLinkedExc;
  } else if (si < i) {
    p.cls = sigma.is_linked_anti_excedance(i) ? IndexClass::LinkedAexc : IndexClass::NonLinkedAexc;
  } else {
    p.cls = IndexClass::FixedPoint;
  }
  for (int x = 1; x <= n; ++x) {
    const int sx = sigma(x);
    if (x < i && i < si && si < sx) ++p.inve;
    if (x < i && i < sx && sx < si) ++p.ninve;
    if (x > i && i > si && si > sx) ++p.inva;
    if (x > i && i > sx && sx > si) ++p.ninva;
    if (x < i && i < sx) ++p.prex;
    if (sx < i && i < x) ++p.fola;
  }
  if (p.cls == IndexClass::FixedPoint) p.iefp = p.prex;
  return p;
}

std::vector<IndexProfile> index_profiles(const Permutation& sigma) {
  std::vector<IndexProfile> out;
  for (int i = 1; i <= sigma.size(); ++i) out.push_back(index_profile(sigma, i));
  return out;
}

Chains maximal_chains(const Permutation& sigma) {
  Chains c;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (sigma.is_excedance(i) && !sigma.is_linked_excedance(i)) {
      std::vector<int> chain{i};
      for (int j = sigma(i); sigma.is_excedance(j); j = sigma(j)) chain.push_back(j);
      c.excedance.push_back(std::move(chain));
    }
    if (sigma.is_anti_excedance(i) && !sigma.is_linked_anti_excedance(i)) {
      std::vector<int> chain{i};
      for (int j = sigma(i); sigma.is_anti_excedance(j); j = sigma(j)) chain.push_back(j);
      c.anti_excedance.push_back(std::move(chain));
    }
  }
  return c;
}

Permutation fondamentale(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> a(static_cast<std::size_t>(n + 1), 0);  // a[0] = 0
  for (int i = 1; i <= n; ++i) a[static_cast<std::size_t>(i)] = sigma(i);
  // suffix minima decide which rule applies
  std::vector<int> suffix_min(static_cast<std::size_t>(n + 2), n + 1);
  for (int i = n; i >= 1; --i)
    suffix_min[static_cast<std::size_t>(i)] = std::min(a[static_cast<std::size_t>(i)], suffix_min[static_cast<std::size_t>(i + 1)]);
  std::vector<int> b(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    const int ai = a[static_cast<std::size_t>(i)];
    int k = i;
    if (suffix_min[static_cast<std::size_t>(i + 1)] > ai) {
      // every later letter is larger: use the rightmost smaller letter to the left
      k = i - 1;
      while (a[static_cast<std::size_t>(k)] > ai) --k;
    }
    b[static_cast<std::size_t>(a[static_cast<std::size_t>(k + 1)] - 1)] = ai;
  }
  return Permutation(std::move(b));
}

Permutation fondamentale_inverse(const Permutation& tau) {
  const int n = tau.size();
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  std::vector<int> word;
  for (int m = 1; m <= n; ++m) {
    if (seen[static_cast<std::size_t>(m)]) continue;
    // m is the minimum of its cycle; write tau^{-1}(m), tau^{-2}(m), ..., m
    int x = m;
    do {
      x = tau.preimage(x);
      seen[static_cast<std::size_t>(x)] = true;
      word.push_back(x);
    } while (x != m);
  }
  return Permutation(std::move(word));
}

int double_descents(const Permutation& sigma) {
  int count = 0;
  for (int i = 2; i + 1 <= sigma.size(); ++i)
    if (sigma(i - 1) > sigma(i) && sigma(i) > sigma(i + 1)) ++count;
  return count;
}

WordStats word_stats(std::span<const int> w) {
  WordStats s;
  std::vector<int> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > sorted[i]) ++s.exc;
    if (i + 1 < w.size()) {
      if (w[i] > w[i + 1]) {
        ++s.des;
        s.maj += static_cast<int>(i + 1);
      } else if (w[i] < w[i + 1]) {
        ++s.asc;
      }
    }
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++s.inv;
  }
  return s;
}

}  // namespace permcf
