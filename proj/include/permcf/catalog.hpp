#pragma once

// Named parameter settings: the classical moment sequences, the pattern and
// inversion corollaries, and the q-orthogonal families.  The registry is a
// plain text file (data/catalog.txt):
//
//   [name]
//   kind = moments | corollary | orthopoly
//   note = free text
//   h, s, t, u = 0          parameters; unlisted ones take `default` (1)
//   lambda = 1              any other name is a numeric binding
//   reference = A000142     bundled b-file, or
//   oracle = des-occ321     brute-force distribution
//   even = true             reference holds the even moments only
//   z = (K-1)*q + 1         z -> z*mult

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "permcf/bfile.hpp"
#include "permcf/cfrac.hpp"

namespace permcf {

struct CatalogError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class SpecKind { Moments, Corollary, OrthoPoly };
std::string to_string(SpecKind k);

struct SpecializationSpec {
  std::string name;
  SpecKind kind = SpecKind::Moments;
  std::string note;
  std::vector<std::pair<std::string, std::string>> params;  // verbatim, one parameter per entry
  std::vector<std::pair<std::string, std::string>> bindings;
  Rational default_value = 1;
  std::string z_multiplier;  // empty: none
  std::optional<std::string> reference;
  std::optional<std::string> oracle;
  bool even = false;

  /// Every binding applied.
  ParamAssignment assignment() const;
  /// Only bindings of names outside the ring (so q, x, lambda stay free).
  /// Throws PolyError when a value needs a root of a free variable.
  ParamAssignment symbolic_assignment() const;
  std::optional<MultiPoly> z_mult() const;
  /// "name = value" lines as stored.
  std::string text() const;
};

class Catalog {
 public:
  static Catalog parse(std::istream& in, const std::string& origin = "<catalog>");
  static Catalog load(const std::string& path);
  /// data_dir()/catalog.txt, loaded once.
  static const Catalog& bundled();

  const SpecializationSpec& get(const std::string& name) const;
  bool contains(const std::string& name) const;
  std::vector<std::string> list() const;
  const std::vector<SpecializationSpec>& specs() const { return specs_; }

 private:
  std::vector<SpecializationSpec> specs_;
};

/// Expansion bounds used by catalogue comparisons; rows symbolic in x, q or
/// lambda need order 10.
inline constexpr ExpansionBounds kCatalogBounds{12, 64};

inline constexpr const char* kOracleNames[] = {"des-occ321", "des-occ2-31", "inv", "exc-inv", "colored-inv"};

/// Brute-force generating polynomials for oracle rows, n = 0..N.
std::vector<MultiPoly> oracle_sequence(const std::string& oracle, unsigned N, const Bindings& bindings = {});

struct CatalogComparison {
  std::string name;
  std::string against;  // b-file or oracle name
  unsigned order = 0;
  std::vector<MultiPoly> computed;  // m_0..m_order
  std::vector<MultiPoly> expected;  // same length or shorter when the reference ends
  std::optional<SequenceMismatch> mismatch;
  bool ok() const { return !mismatch; }
};

/// Expands m_0..m_N (applying the z multiplier) and diffs against the
/// reference, interleaving zeros for even rows.  Throws CatalogError for
/// rows without a reference or oracle.
CatalogComparison compare(const SpecializationSpec& spec, unsigned N, const ExpansionBounds& bounds = kCatalogBounds);

/// Every moments/corollary row with a reference, to order N.
CheckReport compare_all(const Catalog& catalog, unsigned N);

/// Numeric assignments of the orthopoly rows through check_orthogonality.
CheckReport orthopoly_rows(const Catalog& catalog, unsigned N);

}  // namespace permcf
