#include "permcf/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "permcf/colored.hpp"
#include "permcf/moments.hpp"
#include "permcf/patterns.hpp"
#include "permcf/permutation.hpp"

namespace permcf {

std::string to_string(SpecKind k) {
  switch (k) {
    case SpecKind::Moments: return "moments";
    case SpecKind::Corollary: return "corollary";
    case SpecKind::OrthoPoly: return "orthopoly";
  }
  return "?";
}

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_param_name(const std::string& name) {
  return name == "ell" || std::find(kParamNames.begin(), kParamNames.end(), name) != kParamNames.end();
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Bindings resolve(const SpecializationSpec& spec, bool ring_names_too) {
  Bindings out;
  for (const auto& [name, text] : spec.bindings) {
    if (!ring_names_too && variable_index(name)) continue;
    const auto v = parse_poly(text, out).constant_value();
    if (!v) throw PolyError(spec.name + ": '" + name + "' is not a number here");
    out[name] = *v;
  }
  return out;
}

ParamAssignment build(const SpecializationSpec& spec, const Bindings& b) {
  ParamAssignment out = ParamAssignment::constant(spec.default_value);
  for (const auto& [name, text] : spec.params) out.set(name, parse_poly(text, b));
  return out;
}

MultiPoly monomial_xq(unsigned xe, unsigned qe) {
  return MultiPoly::term(Monomial::variable(require_variable("x"), xe) * Monomial::variable(require_variable("q"), qe));
}

}  // namespace

ParamAssignment SpecializationSpec::assignment() const { return build(*this, resolve(*this, true)); }

ParamAssignment SpecializationSpec::symbolic_assignment() const { return build(*this, resolve(*this, false)); }

std::optional<MultiPoly> SpecializationSpec::z_mult() const {
  if (z_multiplier.empty()) return std::nullopt;
  return parse_poly(z_multiplier, resolve(*this, true));
}

std::string SpecializationSpec::text() const {
  std::string out;
  for (const auto& [n, v] : params) out += n + " = " + v + "\n";
  for (const auto& [n, v] : bindings) out += n + " = " + v + "\n";
  return out;
}

Catalog Catalog::parse(std::istream& in, const std::string& origin) {
  Catalog cat;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) -> void {
    throw CatalogError(origin + ":" + std::to_string(lineno) + ": " + what);
  };
  SpecializationSpec* cur = nullptr;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (name.empty()) fail("empty name");
      if (cat.contains(name)) fail("duplicate entry '" + name + "'");
      cat.specs_.push_back(SpecializationSpec{});
      cur = &cat.specs_.back();
      cur->name = name;
      continue;
    }
    if (!cur) fail("setting before the first [name]");
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    const std::string lhs = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) fail("empty value for '" + lhs + "'");
    if (lhs == "kind") {
      if (value == "moments") {
        cur->kind = SpecKind::Moments;
      } else if (value == "corollary") {
        cur->kind = SpecKind::Corollary;
      } else if (value == "orthopoly") {
        cur->kind = SpecKind::OrthoPoly;
      } else {
        fail("unknown kind '" + value + "'");
      }
    } else if (lhs == "note") {
      cur->note = value;
    } else if (lhs == "reference") {
      cur->reference = value;
    } else if (lhs == "oracle") {
      if (std::find(std::begin(kOracleNames), std::end(kOracleNames), value) == std::end(kOracleNames))
        fail("unknown oracle '" + value + "'");
      cur->oracle = value;
    } else if (lhs == "even") {
      if (value != "true" && value != "false") fail("even must be true or false");
      cur->even = value == "true";
    } else if (lhs == "default") {
      try {
        cur->default_value = Rational::parse(value);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    } else if (lhs == "z") {
      cur->z_multiplier = value;
    } else {
      std::stringstream names(lhs);
      std::string name;
      while (std::getline(names, name, ',')) {
        name = trim(name);
        if (!is_identifier(name)) fail("bad name '" + name + "'");
        if (is_param_name(name)) {
          cur->params.emplace_back(name == "ell" ? "l" : name, value);
        } else {
          cur->bindings.emplace_back(name, value);
        }
      }
    }
  }
  // parse every row up front so a bad registry fails at load time
  for (const auto& s : cat.specs_) {
    if (s.reference && s.oracle) throw CatalogError(origin + ": '" + s.name + "' has both a reference and an oracle");
    try {
      (void)s.assignment();
      (void)s.z_mult();
    } catch (const std::exception& e) {
      throw CatalogError(origin + ": '" + s.name + "': " + e.what());
    }
  }
  return cat;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalogue " + path);
  return parse(in, path);
}

const Catalog& Catalog::bundled() {
  static const Catalog cat = load(data_dir() + "/catalog.txt");
  return cat;
}

bool Catalog::contains(const std::string& name) const {
  return std::any_of(specs_.begin(), specs_.end(), [&](const auto& s) { return s.name == name; });
}

const SpecializationSpec& Catalog::get(const std::string& name) const {
  for (const auto& s : specs_)
    if (s.name == name) return s;
  throw CatalogError("unknown catalogue entry '" + name + "'");
}

std::vector<std::string> Catalog::list() const {
  std::vector<std::string> out;
  for (const auto& s : specs_) out.push_back(s.name);
  return out;
}

std::vector<MultiPoly> oracle_sequence(const std::string& oracle, unsigned N, const Bindings& bindings) {
  std::vector<MultiPoly> out;
  const MultiPoly q = MultiPoly::variable("q");
  if (oracle == "colored-inv") {
    const auto it = bindings.find("K");
    const long k = it == bindings.end() ? 2 : it->second.numerator().get_si();
    if (it != bindings.end() && !it->second.is_integer()) throw CatalogError("K must be an integer");
    if (k < 1) throw CatalogError("K must be at least 1");
    for (unsigned n = 0; n <= N; ++n) {
      std::unordered_map<int, long> hist;
      for_each_colored(static_cast<int>(n), static_cast<int>(k), [&](const ColoredPermutation& P) { ++hist[colored_stats(P).inv]; });
      MultiPoly sum;
      for (const auto& [e, c] : hist) sum += MultiPoly::term(Monomial::variable(require_variable("q"), static_cast<unsigned>(e)), Rational(c));
      out.push_back(sum);
    }
    return out;
  }
  const auto p321 = PatternSpec::consecutive("321");
  const auto p2_31 = PatternSpec::vincular("2-31");
  if (N > static_cast<unsigned>(kDefaultBruteForceBound))
    throw std::out_of_range("brute force is limited to n <= " + std::to_string(kDefaultBruteForceBound));
  for (unsigned n = 0; n <= N; ++n) {
    std::map<std::pair<unsigned, unsigned>, long> hist;
    for_each_permutation(static_cast<int>(n), [&](const Permutation& s) {
      const auto w = word_stats(s.word());
      std::pair<unsigned, unsigned> key;
      if (oracle == "des-occ321") {
        key = {static_cast<unsigned>(w.des), static_cast<unsigned>(occurrences(s, p321))};
      } else if (oracle == "des-occ2-31") {
        // des + 1 counts weak excedances in distribution; the empty permutation has none
        key = {n == 0 ? 0u : static_cast<unsigned>(w.des + 1), static_cast<unsigned>(occurrences(s, p2_31))};
      } else if (oracle == "inv") {
        key = {0, static_cast<unsigned>(w.inv)};
      } else if (oracle == "exc-inv") {
        key = {static_cast<unsigned>(w.exc), static_cast<unsigned>(w.inv)};
      } else {
        throw CatalogError("unknown oracle '" + oracle + "'");
      }
      ++hist[key];
    });
    MultiPoly sum;
    for (const auto& [k, c] : hist) sum += Rational(c) * monomial_xq(k.first, k.second);
    out.push_back(sum);
  }
  return out;
}

CatalogComparison compare(const SpecializationSpec& spec, unsigned N, const ExpansionBounds& bounds) {
  CatalogComparison out;
  out.name = spec.name;
  out.order = N;
  if (spec.reference) {
    out.against = *spec.reference;
    Sequence ref = read_bfile(bundled_bfile(*spec.reference));
    if (spec.even) {
      Sequence wide;
      wide.offset = 2 * ref.offset;
      for (std::size_t i = 0; i < ref.values.size(); ++i) {
        if (i > 0) wide.values.emplace_back();
        wide.values.push_back(ref.values[i]);
      }
      ref = std::move(wide);
    }
    for (std::size_t i = 0; i < ref.values.size(); ++i) {
      const long n = ref.offset + static_cast<long>(i);
      if (n >= 0 && n <= static_cast<long>(N)) {
        if (out.expected.size() < static_cast<std::size_t>(n)) out.expected.resize(static_cast<std::size_t>(n));
        out.expected.push_back(ref.values[i]);
      }
    }
  } else if (spec.oracle) {
    out.against = "brute force " + *spec.oracle;
    out.expected = oracle_sequence(*spec.oracle, N, resolve(spec, true));
  } else {
    throw CatalogError("'" + spec.name + "' has no reference to compare against");
  }
  out.computed = moments(spec.assignment(), N, bounds);
  if (auto m = spec.z_mult()) out.computed = rescale_z(out.computed, *m);
  Sequence expected{0, out.expected};
  out.mismatch = first_mismatch(expected, out.computed, true);
  return out;
}

CheckReport compare_all(const Catalog& catalog, unsigned N) {
  CheckReport report{"catalogue", {}};
  for (const auto& s : catalog.specs()) {
    if (!s.reference && !s.oracle) continue;
    const unsigned n = s.oracle && *s.oracle != "colored-inv" ? std::min<unsigned>(N, kDefaultBruteForceBound)
                                                                : s.oracle ? std::min<unsigned>(N, 6) : N;
    const auto c = compare(s, n);
    std::string detail = "order " + std::to_string(n) + " against " + c.against;
    if (c.mismatch)
      detail = "index " + std::to_string(c.mismatch->index) + ": expected " + c.mismatch->expected + ", got " + c.mismatch->actual;
    report.add(s.name, c.ok(), detail);
  }
  return report;
}

CheckReport orthopoly_rows(const Catalog& catalog, unsigned N) {
  CheckReport report{"orthogonal families", {}};
  for (const auto& s : catalog.specs()) {
    if (s.kind != SpecKind::OrthoPoly) continue;
    auto r = check_orthogonality(s.assignment(), N);
    for (auto& item : r.items) item.label = s.name + ": " + item.label;
    report.merge(r);
  }
  return report;
}

}  // namespace permcf
