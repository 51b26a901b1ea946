// permcf: command-line front end.  Exit 0 ok, 1 mismatch, 2 usage or input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <json.hpp>
#include <sstream>

#include "permcf/arrangements.hpp"
#include "permcf/bfile.hpp"
#include "permcf/catalog.hpp"
#include "permcf/cfrac.hpp"
#include "permcf/colored.hpp"
#include "permcf/moments.hpp"
#include "permcf/motzkin.hpp"
#include "permcf/patterns.hpp"
#include "permcf/permutation.hpp"

using json = nlohmann::ordered_json;
using namespace permcf;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2 };

struct Output {
  json payload = json::object();
  std::string text;
  int code = kOk;
};

bool g_json = false;

int emit(const Output& out) {
  if (g_json) {
    json j;
    j["schema"] = 1;
    j["status"] = out.code == kOk ? "ok" : out.code == kMismatch ? "mismatch" : "error";
    for (auto& [k, v] : out.payload.items()) j[k] = v;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << out.text;
  }
  return out.code;
}

int emit_error(const std::string& what) {
  if (g_json) {
    json j;
    j["schema"] = 1;
    j["status"] = "error";
    j["error"] = what;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "permcf: " << what << "\n";
  }
  return kUsage;
}

json report_json(const CheckReport& r) {
  json items = json::array();
  long failed = 0;
  for (const auto& i : r.items) {
    items.push_back({{"label", i.label}, {"passed", i.passed}, {"detail", i.detail}});
    if (!i.passed) ++failed;
  }
  json j = {{"name", r.name}, {"checked", r.items.size()}, {"failed", failed}, {"items", items}};
  if (auto f = r.first_failure()) j["first_failure"] = {{"label", f->label}, {"detail", f->detail}};
  return j;
}

Output report_output(const CheckReport& r, bool verbose) {
  Output out;
  out.payload["report"] = report_json(r);
  std::ostringstream t;
  long failed = 0;
  for (const auto& i : r.items) {
    if (!i.passed) ++failed;
    if (verbose || !i.passed)
      t << (i.passed ? "PASS " : "FAIL ") << i.label << (i.detail.empty() ? "" : "  (" + i.detail + ")") << "\n";
  }
  t << r.name << ": " << r.items.size() - static_cast<std::size_t>(failed) << "/" << r.items.size() << " passed";
  if (failed) t << ", " << failed << " failed";
  t << "\n";
  out.text = t.str();
  out.code = r.ok() ? kOk : kMismatch;
  return out;
}

json poly_list(const std::vector<MultiPoly>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(p.str());
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// parameter options shared by expand, hankel, classify, orthopoly, compare-seq
struct ParamOptions {
  std::string file;
  std::vector<std::string> sets;
  std::optional<std::string> default_value;
  bool symbolic = false;
  std::string catalog;
  int colors = 0;
  std::string z_mult;

  void add(CLI::App* app, bool with_z = true) {
    app->add_option("--params", file, "file of name = value lines")->check(CLI::ExistingFile);
    app->add_option("--set", sets, "name=value, repeatable (names outside the fourteen are numeric bindings)");
    auto* d = app->add_option("--default", default_value, "value for every parameter not set");
    app->add_flag("--symbolic", symbolic, "unset parameters stay symbolic")->excludes(d);
    app->add_option("--catalog", catalog, "start from a catalogue row");
    app->add_option("--colors", colors, "replace u by u1+...+uK")->check(CLI::Range(0, kMaxColorWeights));
    if (with_z) app->add_option("--z-mult", z_mult, "substitute z -> z*EXPR");
  }

  ParamAssignment build(const ParamAssignment& fallback) const {
    ParamAssignment base = fallback;
    if (!catalog.empty()) {
      base = Catalog::bundled().get(catalog).assignment();
    } else if (default_value) {
      const auto v = parse_poly(*default_value).constant_value();
      if (!v) throw std::invalid_argument("--default needs a number");
      base = ParamAssignment::constant(*v);
    } else if (symbolic) {
      base = ParamAssignment::symbolic();
    }
    std::string text = file.empty() ? "" : read_file(file);
    for (const auto& s : sets) {
      if (s.find('=') == std::string::npos) throw std::invalid_argument("--set expects name=value, got '" + s + "'");
      text += "\n" + s;
    }
    ParamAssignment p = ParamAssignment::parse(text, base);
    if (colors > 0) p.set_color_weights(colors);
    return p;
  }

  std::optional<MultiPoly> multiplier() const {
    if (!z_mult.empty()) return parse_poly(z_mult);
    if (!catalog.empty()) return Catalog::bundled().get(catalog).z_mult();
    return std::nullopt;
  }
};

ExpansionBounds bounds_for(std::optional<unsigned> max_order) {
  ExpansionBounds b;
  if (max_order) b.symbolic = b.numeric = *max_order;
  return b;
}

Output cmd_stats(const std::string& perm) {
  const Permutation sigma = Permutation::parse(perm);
  const StatVector s = stats(sigma);
  Output out;
  std::ostringstream t;
  json st = json::object();
  t << "permutation " << sigma.str() << "\n";
  for (const auto& [name, v] : fields(s)) {
    st[std::string(name)] = v;
    t << "  " << name << " = " << v << "\n";
  }
  const auto mono = MultiPoly::term(stat_monomial(s)).str();
  t << "monomial " << mono << "\n";
  json prof = json::array();
  t << "index  class                 inve ninve inva ninva iefp prex fola\n";
  for (const auto& p : index_profiles(sigma)) {
    prof.push_back({{"index", p.index}, {"class", std::string(to_string(p.cls))}, {"inve", p.inve}, {"ninve", p.ninve},
                    {"inva", p.inva}, {"ninva", p.ninva}, {"iefp", p.iefp}, {"prex", p.prex}, {"fola", p.fola}});
    char line[160];
    std::snprintf(line, sizeof line, "%5d  %-21s %4d %5d %4d %5d %4d %4d %4d\n", p.index, std::string(to_string(p.cls)).c_str(),
                  p.inve, p.ninve, p.inva, p.ninva, p.iefp, p.prex, p.fola);
    t << line;
  }
  out.payload = {{"permutation", sigma.str()}, {"stats", st}, {"monomial", mono}, {"profiles", prof}};
  out.text = t.str();
  return out;
}

Output cmd_path(const std::string& perm) {
  const Permutation sigma = Permutation::parse(perm);
  const auto path = eta(sigma);
  Output out;
  json steps = json::array();
  std::ostringstream t;
  t << path.str() << "\n";
  for (const auto& s : path.steps()) {
    const auto label = MultiPoly::term(step_label(s)).str();
    steps.push_back({{"token", s.str()}, {"height", s.height}, {"label", label}});
    t << "  " << s.str() << "  height " << s.height << "  label " << label << "\n";
  }
  const auto w = MultiPoly::term(weight(path)).str();
  t << "weight " << w << "\n";
  out.payload = {{"permutation", sigma.str()}, {"path", path.str()}, {"steps", steps}, {"weight", w}};
  out.text = t.str();
  return out;
}

Output cmd_unpath(const std::string& text) {
  const auto path = LabeledMotzkinPath::parse(text);
  const Permutation sigma = eta_inverse(path);
  Output out;
  out.payload = {{"path", path.str()}, {"permutation", sigma.str()}};
  out.text = sigma.str() + "\n";
  return out;
}

// per-conjecture verdicts: items are labelled "C<i> ..." or name a proved result
Output conjecture_output(const CheckReport& r, bool verbose) {
  Output out = report_output(r, verbose);
  std::map<std::string, const CheckItem*> first_bad;
  std::vector<std::string> order;
  for (const auto& i : r.items) {
    std::string key = i.label.rfind('C', 0) == 0 ? i.label.substr(0, i.label.find(' ')) : "proved";
    if (!first_bad.count(key)) {
      first_bad[key] = nullptr;
      order.push_back(key);
    }
    if (!i.passed && !first_bad[key]) first_bad[key] = &i;
  }
  json summary = json::object();
  std::string text;
  for (const auto& key : order) {
    const CheckItem* bad = first_bad[key];
    summary[key] = bad ? "counterexample found" : "verified up to bound";
    text += key + ": " + (bad ? "counterexample found, " + bad->label + " (" + bad->detail + ")" : "verified up to bound") + "\n";
  }
  out.payload["summary"] = summary;
  out.text += text;
  return out;
}

Output sequence_output(const std::vector<MultiPoly>& m, const char* key = "moments") {
  Output out;
  out.payload[key] = poly_list(m);
  std::ostringstream t;
  for (std::size_t i = 0; i < m.size(); ++i) t << "m_" << i << " = " << m[i].str() << "\n";
  out.text = t.str();
  return out;
}

Output mismatch_output(Output out, const SequenceMismatch& mm, const std::string& against) {
  out.code = kMismatch;
  out.payload["mismatch"] = {{"index", mm.index}, {"expected", mm.expected}, {"actual", mm.actual}};
  out.text += "mismatch against " + against + " at index " + std::to_string(mm.index) + ": expected " + mm.expected +
              ", got " + mm.actual + "\n";
  return out;
}

std::vector<MultiPoly> expand_with(const ParamOptions& po, unsigned n, std::optional<unsigned> max_order) {
  auto m = moments(po.build(ParamAssignment::symbolic()), n, bounds_for(max_order));
  if (auto z = po.multiplier()) m = rescale_z(m, *z);
  return m;
}

Output cmd_hankel(const ParamOptions& po, unsigned n, bool closed) {
  const ParamAssignment params = po.build(ParamAssignment::symbolic());
  ExpansionBounds b;
  b.symbolic = std::max(b.symbolic, 2 * n);
  b.numeric = std::max(b.numeric, 2 * n);
  const auto m = moments(params, 2 * n, b);
  Output out;
  json dets = json::array();
  std::ostringstream t;
  bool agree = true;
  for (unsigned k = 0; k <= n; ++k) {
    const MultiPoly det = hankel_det(m, k);
    json row = {{"n", k}, {"determinant", det.str()}};
    t << "det_" << k << " = " << det.str() << "\n";
    if (closed) {
      const MultiPoly cf = hankel_closed_form(params, k);
      row["closed_form"] = cf.str();
      row["agree"] = cf == det;
      if (!(cf == det)) {
        agree = false;
        if (!out.payload.contains("mismatch"))
          out.payload["mismatch"] = {{"index", k}, {"expected", cf.str()}, {"actual", det.str()}};
      }
      t << "  closed form " << (cf == det ? "agrees" : "DIFFERS: " + cf.str()) << "\n";
    }
    dets.push_back(row);
  }
  out.payload["hankel"] = dets;
  out.text = t.str();
  if (!agree) out.code = kMismatch;
  return out;
}

Output cmd_classify(const ParamOptions& po, unsigned scan) {
  const auto c = classify(po.build(ParamAssignment::constant(1)), scan);
  Output out;
  out.payload = {{"verdict", to_string(c.verdict)}, {"uniqueness", to_string(c.uniqueness)},
                 {"support", c.support ? json(to_string(*c.support)) : json(nullptr)}, {"reason", c.reason}};
  if (c.support == SupportKind::FiniteAtoms) out.payload["atoms_from"] = c.atoms_from;
  if (c.negative_beta) out.payload["negative_beta"] = *c.negative_beta;
  std::ostringstream t;
  t << "verdict    " << to_string(c.verdict) << "\n"
    << "uniqueness " << to_string(c.uniqueness) << "\n"
    << "support    " << (c.support ? to_string(*c.support) : "-") << "\n";
  if (c.negative_beta) t << "beta_" << *c.negative_beta << " < 0\n";
  t << c.reason << "\n";
  out.text = t.str();
  return out;
}

Output cmd_orthopoly(const ParamOptions& po, unsigned n, bool check) {
  const ParamAssignment params = po.build(ParamAssignment::symbolic());
  const auto polys = orthogonal_polys(params, n);
  Output out;
  json arr = json::array();
  std::ostringstream t;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    arr.push_back(ortho_str(polys[i]));
    t << "P_" << i << " = " << ortho_str(polys[i]) << "\n";
  }
  out.payload["polynomials"] = arr;
  if (check) {
    ExpansionBounds b;
    b.symbolic = std::max(b.symbolic, 2 * n);
    const auto r = check_orthogonality(params, n, b);
    out.payload["orthogonality"] = report_json(r);
    t << "orthogonality " << (r.ok() ? "holds" : "FAILS: " + r.first_failure()->label + " " + r.first_failure()->detail) << "\n";
    if (!r.ok()) out.code = kMismatch;
  }
  out.text = t.str();
  return out;
}

Output cmd_catalog_list() {
  Output out;
  json arr = json::array();
  std::ostringstream t;
  for (const auto& s : Catalog::bundled().specs()) {
    const std::string against = s.reference ? *s.reference : s.oracle ? "oracle " + *s.oracle : "-";
    arr.push_back({{"name", s.name}, {"kind", to_string(s.kind)}, {"reference", against}, {"note", s.note}});
    char line[200];
    std::snprintf(line, sizeof line, "%-26s %-10s %-20s %s\n", s.name.c_str(), to_string(s.kind).c_str(), against.c_str(),
                  s.note.c_str());
    t << line;
  }
  out.payload["entries"] = arr;
  out.text = t.str();
  return out;
}

Output cmd_catalog_show(const std::string& name) {
  const auto& s = Catalog::bundled().get(name);
  Output out;
  json params = json::object(), bindings = json::object();
  for (const auto& [k, v] : s.params) params[k] = v;
  for (const auto& [k, v] : s.bindings) bindings[k] = v;
  out.payload = {{"name", s.name}, {"kind", to_string(s.kind)}, {"note", s.note}, {"params", params},
                 {"bindings", bindings}, {"default", s.default_value.str()}, {"even", s.even}};
  if (s.reference) out.payload["reference"] = *s.reference;
  if (s.oracle) out.payload["oracle"] = *s.oracle;
  if (!s.z_multiplier.empty()) out.payload["z"] = s.z_multiplier;
  std::ostringstream t;
  t << "[" << s.name << "] " << to_string(s.kind) << "  " << s.note << "\n" << s.text();
  t << "other parameters = " << s.default_value.str() << "\n";
  if (!s.z_multiplier.empty()) t << "z -> z*(" << s.z_multiplier << ")\n";
  if (s.reference) t << "reference " << *s.reference << (s.even ? " (even moments)" : "") << "\n";
  if (s.oracle) t << "oracle " << *s.oracle << "\n";
  const ParamAssignment a = s.assignment();
  json values = json::object();
  t << "assignment:";
  for (auto p : kParamNames) {
    values[std::string(p)] = a.get(p).str();
    t << " " << p << "=" << a.get(p).str();
  }
  t << "\n";
  out.payload["assignment"] = values;
  out.text = t.str();
  return out;
}

Output cmd_catalog_compare(const std::string& name, unsigned n, std::optional<unsigned> max_order) {
  const auto& s = Catalog::bundled().get(name);
  ExpansionBounds b = kCatalogBounds;
  if (max_order) b.symbolic = b.numeric = *max_order;
  const auto c = compare(s, n, b);
  Output out = sequence_output(c.computed);
  out.payload["name"] = c.name;
  out.payload["against"] = c.against;
  out.payload["expected"] = poly_list(c.expected);
  if (c.mismatch) return mismatch_output(out, *c.mismatch, c.against);
  out.text += "ok: m_0..m_" + std::to_string(n) + " match " + c.against + "\n";
  return out;
}

Output cmd_compare_seq(const std::string& file, const ParamOptions& po, std::optional<unsigned> n,
                       std::optional<unsigned> max_order) {
  const Sequence ref = read_bfile(file);
  const long last = ref.offset + static_cast<long>(ref.values.size()) - 1;
  if (last < 0) throw std::invalid_argument(file + " has no entries at nonnegative indices");
  const unsigned order = n ? *n : static_cast<unsigned>(last);
  const auto m = expand_with(po, order, max_order);
  Output out = sequence_output(m);
  if (auto mm = first_mismatch(ref, m)) return mismatch_output(out, *mm, file);
  out.text += "ok: matches " + file + " up to index " + std::to_string(std::min<long>(last, order)) + "\n";
  return out;
}

Output cmd_arr_count(int k, int n, const std::string& method) {
  Output out;
  std::vector<CountMethod> methods;
  if (method == "all") {
    methods = {CountMethod::Recursion, CountMethod::Egf, CountMethod::Permanent, CountMethod::Binomial};
  } else {
    methods = {parse_count_method(method)};
  }
  json rows = json::array();
  std::ostringstream t;
  bool agree = true;
  for (int i = 0; i <= n; ++i) {
    json row = {{"n", i}};
    BigInt first;
    for (std::size_t j = 0; j < methods.size(); ++j) {
      const BigInt v = arrangement_count(k, i, methods[j]);
      row[to_string(methods[j])] = v.get_str();
      if (j == 0) first = v;
      if (v != first) agree = false;
    }
    rows.push_back(row);
    t << "A_" << k << "(" << i << ") = " << first.get_str() << "\n";
  }
  out.payload = {{"k", k}, {"counts", rows}};
  if (!agree) {
    out.code = kMismatch;
    t << "counting methods DISAGREE\n";
  }
  out.text = t.str();
  return out;
}

Output cmd_arr_enumerate(int k, int n, long limit) {
  Output out;
  json arr = json::array();
  std::ostringstream t;
  for_each_arrangement(k, n, [&](const KArrangement& a) {
    const auto d = word_str(to_form(a, FormKind::Derangement));
    const auto p = word_str(to_form(a, FormKind::Permutation));
    arr.push_back({{"arrangement", a.str()}, {"derangement_form", d}, {"permutation_form", p}});
    t << a.str() << "  |  " << d << "  |  " << p << "\n";
  }, limit);
  out.payload = {{"k", k}, {"n", n}, {"arrangements", arr}};
  out.text = t.str();
  return out;
}

Output cmd_arr_avoid(int k, int n, const std::string& pattern) {
  const auto pat = PatternSpec::parse(pattern);
  Output out;
  json rows = json::array();
  std::ostringstream t;
  for (int i = 0; i <= n; ++i) {
    const auto hist = avoider_histogram(k, i, pat);
    long total = 0;
    json h = json::object();
    std::string line;
    for (const auto& [j, c] : hist) {
      total += c;
      h[std::to_string(j)] = c;
      line += " " + std::to_string(j) + ":" + std::to_string(c);
    }
    rows.push_back({{"n", i}, {"count", total}, {"by_negatives", h}});
    t << "n=" << i << "  " << total << "  by negatives" << line << "\n";
  }
  out.payload = {{"k", k}, {"pattern", pat.str()}, {"avoiders", rows}};
  out.text = t.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation statistics and the fourteen-parameter continued fraction"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "machine-readable output");
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "list passing checks too");

  std::string perm, path_text, name, file, pattern, method = "all";
  unsigned n = 6, scan = kDefaultBetaScan;
  std::optional<unsigned> opt_n, max_order;
  int k = 2;
  long limit = 100000;
  bool closed = false, check = false;
  ParamOptions po;

  auto* stats_cmd = app.add_subcommand("stats", "statistics and index profiles of a permutation");
  stats_cmd->add_option("perm", perm, "one-line notation, e.g. 597126843 or '10 2 1 ...'")->required();

  auto* path_cmd = app.add_subcommand("path", "labelled Motzkin path of a permutation");
  path_cmd->add_option("perm", perm)->required();

  auto* unpath_cmd = app.add_subcommand("unpath", "permutation of a labelled Motzkin path");
  unpath_cmd->add_option("path", path_text, "tokens such as 'U[c^0 d^0] S[a^0 b^0] D[h^0 l^0]'")->required();

  auto* expand_cmd = app.add_subcommand("expand", "moments m_0..m_N of the fraction");
  po.add(expand_cmd);
  expand_cmd->add_option("-n", n, "highest order");
  expand_cmd->add_option("--max-order", max_order, "raise the expansion bound");

  auto* verify_cmd = app.add_subcommand("verify", "bounded verification reports");
  verify_cmd->require_subcommand(1);
  auto* v_main = verify_cmd->add_subcommand("main", "fraction against brute force over S_n");
  v_main->add_option("-n", n, "highest n");
  auto* v_col = verify_cmd->add_subcommand("colored", "coloured permutation corollaries");
  auto* v_arr = verify_cmd->add_subcommand("arrangements", "k-arrangement counts, forms and avoidance");
  auto* v_conj = verify_cmd->add_subcommand("conjectures", "arrangement conjectures C1..C5");
  for (auto* c : {v_col, v_arr, v_conj}) {
    c->add_option("-n", n, "highest n");
    c->add_option("-k", k, "highest k");
  }

  auto* hankel_cmd = app.add_subcommand("hankel", "Hankel determinants det(m_{i+j})_{0..n}");
  po.add(hankel_cmd, false);
  hankel_cmd->add_option("-n", n, "largest n");
  hankel_cmd->add_flag("--closed-form", closed, "compare with the product formula");

  auto* classify_cmd = app.add_subcommand("classify", "is (m_n) a moment sequence (unset parameters are 1)");
  po.add(classify_cmd, false);
  classify_cmd->add_option("--beta-scan", scan, "how many beta_n to inspect");

  auto* ortho_cmd = app.add_subcommand("orthopoly", "orthogonal polynomials P_0..P_N");
  po.add(ortho_cmd, false);
  ortho_cmd->add_option("-n", n, "highest degree");
  ortho_cmd->add_flag("--check", check, "check orthogonality against the moments");

  auto* cat_cmd = app.add_subcommand("catalog", "named parameter settings");
  cat_cmd->require_subcommand(1);
  auto* cat_list = cat_cmd->add_subcommand("list", "all entries");
  auto* cat_show = cat_cmd->add_subcommand("show", "one entry");
  cat_show->add_option("name", name)->required();
  auto* cat_cmp = cat_cmd->add_subcommand("compare", "expand an entry and diff against its reference");
  cat_cmp->add_option("name", name)->required();
  cat_cmp->add_option("-n", n, "highest order");
  cat_cmp->add_option("--max-order", max_order, "raise the expansion bound");

  auto* arr_cmd = app.add_subcommand("arrangements", "k-arrangements");
  arr_cmd->require_subcommand(1);
  auto* arr_count = arr_cmd->add_subcommand("count", "A_k(0..n)");
  arr_count->add_option("--method", method, "recursion, egf, permanent, binomial or all");
  auto* arr_enum = arr_cmd->add_subcommand("enumerate", "list with both forms");
  arr_enum->add_option("--limit", limit, "refuse to list more than this many");
  auto* arr_avoid = arr_cmd->add_subcommand("avoid", "avoiders of a classical pattern by number of negatives");
  arr_avoid->add_option("--pattern", pattern, "e.g. 312")->required();
  for (auto* c : {arr_count, arr_enum, arr_avoid}) {
    c->add_option("-k", k, "colours");
    c->add_option("-n", n, "size");
  }

  auto* cmp_cmd = app.add_subcommand("compare-seq", "diff an expansion against a b-file");
  cmp_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
  po.add(cmp_cmd);
  cmp_cmd->add_option("-n", opt_n, "highest order (default: the file's last index)");
  cmp_cmd->add_option("--max-order", max_order, "raise the expansion bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Output out;
    if (*stats_cmd) {
      out = cmd_stats(perm);
    } else if (*path_cmd) {
      out = cmd_path(perm);
    } else if (*unpath_cmd) {
      out = cmd_unpath(path_text);
    } else if (*expand_cmd) {
      out = sequence_output(expand_with(po, n, max_order));
    } else if (*v_main) {
      out = report_output(verify_main(static_cast<int>(n)), verbose);
    } else if (*v_col) {
      out = report_output(verify_colored_corollaries(static_cast<int>(n), k), verbose);
    } else if (*v_arr) {
      out = report_output(verify_arrangements(static_cast<int>(n), k), verbose);
    } else if (*v_conj) {
      out = conjecture_output(conjecture_checks(static_cast<int>(n), k), verbose);
    } else if (*hankel_cmd) {
      out = cmd_hankel(po, n, closed);
    } else if (*classify_cmd) {
      out = cmd_classify(po, scan);
    } else if (*ortho_cmd) {
      out = cmd_orthopoly(po, n, check);
    } else if (*cat_list) {
      out = cmd_catalog_list();
    } else if (*cat_show) {
      out = cmd_catalog_show(name);
    } else if (*cat_cmp) {
      out = cmd_catalog_compare(name, n, max_order);
    } else if (*arr_count) {
      out = cmd_arr_count(k, static_cast<int>(n), method);
    } else if (*arr_enum) {
      out = cmd_arr_enumerate(k, static_cast<int>(n), limit);
    } else if (*arr_avoid) {
      out = cmd_arr_avoid(k, static_cast<int>(n), pattern);
    } else if (*cmp_cmd) {
      out = cmd_compare_seq(file, po, opt_n, max_order);
    }
    return emit(out);
  } catch (const std::exception& e) {
    return emit_error(e.what());
  }
}
