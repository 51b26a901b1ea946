#include "permcf/bfile.hpp"

#include <fstream>
#include <sstream>

namespace permcf {

namespace {

std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  line.erase(0, line.find_first_not_of(" \t\r"));
  line.erase(line.find_last_not_of(" \t\r") + 1);
  return line;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BFileError("cannot open '" + path + "'");
  return in;
}

}  // namespace

Sequence parse_bfile(std::istream& in, const std::string& origin) {
  Sequence seq;
  std::string line;
  long expected = 0;
  int lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    long n = 0;
    if (!(ls >> n)) throw BFileError(origin + ":" + std::to_string(lineno) + ": expected an index");
    std::string rest;
    std::getline(ls, rest);
    if (first) {
      seq.offset = n;
      expected = n;
      first = false;
    }
    if (n != expected)
      throw BFileError(origin + ":" + std::to_string(lineno) + ": index " + std::to_string(n) + " out of sequence");
    try {
      seq.values.push_back(parse_poly(rest));
    } catch (const PolyError& e) {
      throw BFileError(origin + ":" + std::to_string(lineno) + ": " + e.what());
    }
    ++expected;
  }
  return seq;
}

Sequence read_bfile(const std::string& path) {
  auto in = open(path);
  return parse_bfile(in, path);
}

void write_bfile(std::ostream& out, const std::vector<MultiPoly>& values, long offset) {
  for (std::size_t i = 0; i < values.size(); ++i) out << offset + static_cast<long>(i) << ' ' << values[i] << '\n';
}

Triangle read_triangle(const std::string& path) {
  auto in = open(path);
  Triangle t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    long n = 0, k = 0;
    std::string value;
    if (!(ls >> n >> k >> value)) throw BFileError(path + ":" + std::to_string(lineno) + ": expected 'n k T(n,k)'");
    t[n][k] = BigInt(value);
  }
  return t;
}

std::string data_dir() { return PERMCF_DATA_DIR; }

std::string bundled_bfile(const std::string& name) {
  const bool has_ext = name.size() > 4 && name.substr(name.size() - 4) == ".txt";
  return data_dir() + "/bfiles/" + name + (has_ext ? "" : ".txt");
}

std::optional<SequenceMismatch> first_mismatch(const Sequence& reference, const std::vector<MultiPoly>& actual,
                                               bool require_length) {
  for (std::size_t i = 0; i < reference.values.size(); ++i) {
    const long n = reference.offset + static_cast<long>(i);
    if (n < 0) continue;
    if (static_cast<std::size_t>(n) >= actual.size()) {
      if (require_length) return SequenceMismatch{n, reference.values[i].str(), "(missing)"};
      break;
    }
    if (!(actual[static_cast<std::size_t>(n)] == reference.values[i]))
      return SequenceMismatch{n, reference.values[i].str(), actual[static_cast<std::size_t>(n)].str()};
  }
  return std::nullopt;
}

}  // namespace permcf
