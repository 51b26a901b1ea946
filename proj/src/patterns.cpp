#include "permcf/patterns.hpp"

#include <algorithm>

namespace permcf {

namespace {

std::array<int, 3> read_letters(std::string_view text) {
  std::string digits;
  for (char c : text)
    if (c != '-') digits += c;
  if (digits.size() != 3) throw PermError("only length-3 patterns are supported, got '" + std::string(text) + "'");
  std::array<int, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) out[i] = digits[i] - '0';
  std::array<int, 3> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3}) throw PermError("pattern must rearrange 123: '" + std::string(text) + "'");
  return out;
}

}  // namespace

PatternSpec PatternSpec::classical(std::string_view letters) {
  return PatternSpec{PatternKind::Classical, read_letters(letters), {1, 1, 1}};
}

PatternSpec PatternSpec::consecutive(std::string_view letters) {
  return PatternSpec{PatternKind::Consecutive, read_letters(letters), {3}};
}

PatternSpec PatternSpec::vincular(std::string_view dashed) {
  PatternSpec p{PatternKind::Vincular, read_letters(dashed), {}};
  int run = 0;
  for (char c : dashed) {
    if (c == '-') {
      if (run == 0) throw PermError("empty block in '" + std::string(dashed) + "'");
      p.blocks.push_back(run);
      run = 0;
    } else {
      ++run;
    }
  }
  if (run == 0) throw PermError("empty block in '" + std::string(dashed) + "'");
  p.blocks.push_back(run);
  return p;
}

PatternSpec PatternSpec::parse(std::string_view text) {
  if (text.size() == 5 && text.front() == '[' && text.back() == ']') return consecutive(text.substr(1, 3));
  if (text.find('-') != std::string_view::npos) return vincular(text);
  return classical(text);
}

std::string PatternSpec::str() const {
  std::string out;
  if (kind == PatternKind::Consecutive) out += '[';
  std::size_t pos = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b && kind == PatternKind::Vincular) out += '-';
    for (int j = 0; j < blocks[b]; ++j) out += static_cast<char>('0' + letters[pos++]);
  }
  if (kind == PatternKind::Consecutive) out += ']';
  return out;
}

long occurrences(std::span<const int> word, const PatternSpec& pat) {
  const long n = static_cast<long>(word.size());
  // need_adj[t]: positions t and t+1 of the occurrence are adjacent in the word
  std::array<bool, 2> need_adj{false, false};
  int pos = 0;
  for (int len : pat.blocks) {
    for (int j = 0; j + 1 < len; ++j) need_adj[static_cast<std::size_t>(pos + j)] = true;
    pos += len;
  }
  const auto& L = pat.letters;
  auto matches = [&](int x, int y, int z) {
    if (x == y || y == z || x == z) return false;
    const std::array<int, 3> v{x, y, z};
    for (int s = 0; s < 3; ++s)
      for (int t = 0; t < 3; ++t)
        if ((L[static_cast<std::size_t>(s)] < L[static_cast<std::size_t>(t)]) != (v[static_cast<std::size_t>(s)] < v[static_cast<std::size_t>(t)]))
          return false;
    return true;
  };
  long count = 0;
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) {
      if (need_adj[0] && j != i + 1) break;
      for (long k = j + 1; k < n; ++k) {
        if (need_adj[1] && k != j + 1) break;
        if (matches(word[static_cast<std::size_t>(i)], word[static_cast<std::size_t>(j)], word[static_cast<std::size_t>(k)])) ++count;
      }
    }
  return count;
}

long occurrences(const Permutation& sigma, const PatternSpec& pat) { return occurrences(sigma.word(), pat); }

bool avoids(std::span<const int> word, const PatternSpec& pat) { return occurrences(word, pat) == 0; }

}  // namespace permcf
