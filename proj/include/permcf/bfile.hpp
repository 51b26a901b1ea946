#pragma once

// OEIS-style b-files: "n a(n)" lines, '#' comments.  Values may be
// polynomials in the printed grammar.  Triangles use "n k T(n,k)" lines.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permcf/poly.hpp"

namespace permcf {

struct BFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Sequence {
  long offset = 0;                // index of values[0]
  std::vector<MultiPoly> values;  // consecutive indices from offset
};

Sequence parse_bfile(std::istream& in, const std::string& origin = "<input>");
Sequence read_bfile(const std::string& path);
void write_bfile(std::ostream& out, const std::vector<MultiPoly>& values, long offset = 0);

using Triangle = std::map<long, std::map<long, BigInt>>;
Triangle read_triangle(const std::string& path);

/// Directory holding the bundled catalogue and b-files.
std::string data_dir();
/// data_dir()/bfiles/name, name with or without ".txt".
std::string bundled_bfile(const std::string& name);

struct SequenceMismatch {
  long index = 0;
  std::string expected;
  std::string actual;  // "(missing)" when the computed sequence is too short
};

/// First index where `actual` (0-based) disagrees with the reference.
/// Entries past either end are not compared unless `require_length`.
std::optional<SequenceMismatch> first_mismatch(const Sequence& reference, const std::vector<MultiPoly>& actual,
                                               bool require_length = false);

}  // namespace permcf
