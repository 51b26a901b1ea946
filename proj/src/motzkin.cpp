#include "permcf/motzkin.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace permcf {

namespace {

struct KindInfo {
  char tag;
  const char* first;   // primary variable
  const char* second;  // secondary variable, nullptr for LevelU
  const char* base;    // leading label variable
};

const KindInfo& info(StepKind k) {
  static const KindInfo table[] = {
      {'U', "c", "d", "p"}, {'D', "h", "l", "r"}, {'S', "a", "b", "s"}, {'T', "f", "g", "t"}, {'F', "w", nullptr, "u"}};
  return table[static_cast<int>(k)];
}

int delta(StepKind k) { return k == StepKind::Up ? 1 : (k == StepKind::Down ? -1 : 0); }

}  // namespace

PathError::PathError(int step_, const std::string& what)
    : std::invalid_argument(step_ > 0 ? "step " + std::to_string(step_) + ": " + what : what), step(step_) {}

int label_degree(StepKind kind, int height) {
  return (kind == StepKind::Up || kind == StepKind::LevelU) ? height : height - 1;
}

std::string LabeledStep::str() const {
  const auto& k = info(kind);
  std::string out(1, k.tag);
  out += '[';
  out += k.first;
  out += '^' + std::to_string(primary);
  if (k.second) {
    out += ' ';
    out += k.second;
    out += '^' + std::to_string(secondary);
  }
  return out + ']';
}

LabeledMotzkinPath::LabeledMotzkinPath(std::vector<LabeledStep> steps) : steps_(std::move(steps)) {
  int h = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    auto& st = steps_[i];
    const int idx = static_cast<int>(i) + 1;
    st.height = h;
    if (st.kind == StepKind::Down && h == 0) throw PathError(idx, "down step below the axis");
    const int deg = label_degree(st.kind, h);
    if (st.kind == StepKind::LevelU) {
      if (st.primary != h) throw PathError(idx, "w exponent must equal the height " + std::to_string(h));
      st.secondary = 0;
    } else {
      if (deg < 0) throw PathError(idx, "level step at height 0 cannot carry this label");
      if (st.primary < 0 || st.secondary < 0 || st.primary + st.secondary != deg)
        throw PathError(idx, "exponents must be nonnegative and sum to " + std::to_string(deg));
    }
    h += delta(st.kind);
  }
  if (h != 0) throw PathError(0, "path ends at height " + std::to_string(h));
}

LabeledMotzkinPath LabeledMotzkinPath::parse(std::string_view text) {
  std::vector<LabeledStep> steps;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
  };
  auto read_exp = [&](const char* var, int idx) {
    skip();
    const std::string v(var);
    if (text.substr(pos, v.size() + 1) != v + "^") throw PathError(idx, "expected " + v + "^");
    pos += v.size() + 1;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw PathError(idx, "expected an exponent after " + v + "^");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  skip();
  while (pos < text.size()) {
    const int idx = static_cast<int>(steps.size()) + 1;
    LabeledStep st;
    bool known = false;
    for (StepKind k : {StepKind::Up, StepKind::Down, StepKind::LevelS, StepKind::LevelT, StepKind::LevelU})
      if (info(k).tag == text[pos]) {
        st.kind = k;
        known = true;
      }
    if (!known) throw PathError(idx, "unknown step '" + std::string(1, text[pos]) + "'");
    ++pos;
    if (pos >= text.size() || text[pos] != '[') throw PathError(idx, "expected '['");
    ++pos;
    st.primary = read_exp(info(st.kind).first, idx);
    if (info(st.kind).second) st.secondary = read_exp(info(st.kind).second, idx);
    skip();
    if (pos >= text.size() || text[pos] != ']') throw PathError(idx, "expected ']'");
    ++pos;
    steps.push_back(st);
    skip();
  }
  return LabeledMotzkinPath(std::move(steps));
}

std::string LabeledMotzkinPath::str() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) out += ' ';
    out += steps_[i].str();
  }
  return out;
}

Monomial step_label(const LabeledStep& st) {
  const auto& k = info(st.kind);
  Monomial m = Monomial::variable(require_variable(k.base));
  if (st.primary > 0) m = m * Monomial::variable(require_variable(k.first), static_cast<unsigned>(st.primary));
  if (k.second && st.secondary > 0)
    m = m * Monomial::variable(require_variable(k.second), static_cast<unsigned>(st.secondary));
  return m;
}

Monomial weight(const LabeledMotzkinPath& path) {
  Monomial m;
  for (const auto& st : path.steps()) m = m * step_label(st);
  return m;
}

LabeledMotzkinPath eta(const Permutation& sigma) {
  std::vector<LabeledStep> steps;
  steps.reserve(static_cast<std::size_t>(sigma.size()));
  for (const auto& p : index_profiles(sigma)) {
    LabeledStep st;
    switch (p.cls) {
      case IndexClass::NonLinkedExc: st = {StepKind::Up, p.inve, p.ninve, 0}; break;
      case IndexClass::LinkedExc: st = {StepKind::LevelS, p.inve, p.ninve, 0}; break;
      case IndexClass::NonLinkedAexc: st = {StepKind::Down, p.inva, p.ninva, 0}; break;
      case IndexClass::LinkedAexc: st = {StepKind::LevelT, p.inva, p.ninva, 0}; break;
      case IndexClass::FixedPoint: st = {StepKind::LevelU, p.iefp, 0, 0}; break;
    }
    steps.push_back(st);
  }
  return LabeledMotzkinPath(std::move(steps));
}

Permutation eta_inverse(const LabeledMotzkinPath& path) {
  const int n = path.size();
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  // Images of excedances sit at LevelS and Down positions, images of
  // anti-excedances at LevelT and Up positions.
  std::set<int> exc_images, aexc_images;
  for (int i = 1; i <= n; ++i) {
    switch (path[i - 1].kind) {
      case StepKind::LevelS:
      case StepKind::Down: exc_images.insert(i); break;
      case StepKind::LevelT:
      case StepKind::Up: aexc_images.insert(i); break;
      case StepKind::LevelU: word[static_cast<std::size_t>(i - 1)] = i; break;
    }
  }
  // Excedances from the right: sigma(i) has exactly inve_i larger images still unplaced.
  for (int i = n; i >= 1; --i) {
    const auto& st = path[i - 1];
    if (st.kind != StepKind::Up && st.kind != StepKind::LevelS) continue;
    const int kappa = static_cast<int>(exc_images.size());
    const int rank = kappa - st.primary;  // 1-based, from the smallest
    if (rank < 1) throw PathError(i, "no image left for this excedance");
    auto it = exc_images.begin();
    std::advance(it, rank - 1);
    if (*it <= i) throw PathError(i, "label forces sigma(" + std::to_string(i) + ") = " + std::to_string(*it) + ", not an excedance");
    word[static_cast<std::size_t>(i - 1)] = *it;
    exc_images.erase(it);
  }
  // Anti-excedances from the left: inva_i smaller images still unplaced.
  for (int i = 1; i <= n; ++i) {
    const auto& st = path[i - 1];
    if (st.kind != StepKind::Down && st.kind != StepKind::LevelT) continue;
    if (st.primary >= static_cast<int>(aexc_images.size())) throw PathError(i, "no image left for this anti-excedance");
    auto it = aexc_images.begin();
    std::advance(it, st.primary);
    if (*it >= i) throw PathError(i, "label forces sigma(" + std::to_string(i) + ") = " + std::to_string(*it) + ", not an anti-excedance");
    word[static_cast<std::size_t>(i - 1)] = *it;
    aexc_images.erase(it);
  }
  Permutation sigma(std::move(word));
  const LabeledMotzkinPath back = eta(sigma);
  for (int i = 0; i < n; ++i)
    if (!(back[i] == path[i]))
      throw PathError(i + 1, "reconstructed " + sigma.str() + " gives " + back[i].str() + " instead of " + path[i].str());
  return sigma;
}

void for_each_path(int n, const std::function<void(const LabeledMotzkinPath&)>& visit, int bound) {
  if (n < 0) throw std::out_of_range("negative path length");
  if (n > bound) throw std::out_of_range("path length " + std::to_string(n) + " exceeds the bound " + std::to_string(bound));
  std::vector<LabeledStep> steps(static_cast<std::size_t>(n));
  // Kinds in token order D < F < S < T < U; exponents ascend within a kind.
  const StepKind order[] = {StepKind::Down, StepKind::LevelU, StepKind::LevelS, StepKind::LevelT, StepKind::Up};
  std::function<void(int, int)> rec = [&](int i, int h) {
    const int remaining = n - i;
    if (remaining == 0) {
      if (h == 0) visit(LabeledMotzkinPath(steps));
      return;
    }
    for (StepKind k : order) {
      const int nh = h + delta(k);
      if (nh < 0 || nh > remaining - 1) continue;
      if (k == StepKind::LevelU) {
        steps[static_cast<std::size_t>(i)] = {k, h, 0, h};
        rec(i + 1, nh);
        continue;
      }
      const int deg = label_degree(k, h);
      for (int e = 0; e <= deg; ++e) {
        steps[static_cast<std::size_t>(i)] = {k, e, deg - e, h};
        rec(i + 1, nh);
      }
    }
  };
  rec(0, 0);
}

std::vector<LabeledMotzkinPath> enumerate_paths(int n, int bound) {
  std::vector<LabeledMotzkinPath> out;
  for_each_path(n, [&](const LabeledMotzkinPath& p) { out.push_back(p); }, bound);
  return out;
}

}  // namespace permcf
