#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "leavitt/bigint.hpp"
#include "leavitt/parse_error.hpp"

namespace leavitt {

// Finitely generated abelian group in invariant-factor form: Z^rank plus
// cyclic summands Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.  The
// constructor canonicalizes, so equality is isomorphism.
class FgAbGroup {
 public:
  FgAbGroup() = default;  // trivial group

  static FgAbGroup trivial() { return FgAbGroup(); }
  static FgAbGroup free(int rank);
  // n == 0 gives Z, n >= 1 gives Z/n (so n == 1 gives the trivial group).
  static FgAbGroup cyclic(const Int& n);
  // Any list of cyclic orders >= 1; reduced to the invariant-factor chain.
  static FgAbGroup from_orders(int rank, std::vector<Int> orders);

  int rank() const { return rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }
  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  bool is_free() const { return torsion_.empty(); }

  FgAbGroup direct_sum(const FgAbGroup& other) const;
  FgAbGroup power(int m) const;

  // G (x) Z/m and Tor(G, Z/m) for m >= 1.
  FgAbGroup tensor_mod(const Int& m) const;
  FgAbGroup torsion_product_mod(const Int& m) const;

  // "0", "Z", "Z^2 + Z/3 + Z/9", ...
  std::string render() const;

  bool operator==(const FgAbGroup&) const = default;

 private:
  int rank_ = 0;
  std::vector<Int> torsion_;  // ascending divisibility chain, entries >= 2
};

// Inverse of FgAbGroup::render (plus whitespace slack).  Accepts summands in
// any order and non-canonical orders; the result is canonicalized.
FgAbGroup parse_group(std::string_view text);

// Group expression over an unevaluated base group G (for example the unit
// group k* of an unspecified field): a sum of copies of G and of quotients
// G/dG.  No identifications between distinct quotients are assumed; equality
// is term-by-term.  A term G/1G is trivial and dropped on construction.
class SymbolicGroup {
 public:
  explicit SymbolicGroup(std::string base_name) : name_(std::move(base_name)) {}

  const std::string& base_name() const { return name_; }
  bool is_zero() const { return !unresolved_ && power_ == 0 && quotients_.empty(); }
  bool is_unresolved() const { return unresolved_; }
  int base_power() const { return power_; }
  const std::vector<std::pair<Int, int>>& quotients() const { return quotients_; }

  void add_power(int mult);
  void add_quotient(const Int& d, int mult);
  void mark_unresolved(std::string reason);
  const std::string& unresolved_reason() const { return reason_; }

  // "0", "k*", "(k*)^2 + k*/(k*)^3", or "unresolved: ..." when marked.
  std::string render() const;

  bool operator==(const SymbolicGroup&) const = default;

 private:
  std::string name_;
  int power_ = 0;                             // multiplicity of the plain base
  std::vector<std::pair<Int, int>> quotients_;  // (d, multiplicity), d >= 2, sorted
  bool unresolved_ = false;
  std::string reason_;
};

// A group value in a K-table entry or report: either a concrete group or a
// symbolic expression.
using GroupValue = std::variant<FgAbGroup, SymbolicGroup>;

std::string render(const GroupValue& g);
bool is_zero(const GroupValue& g);

}  // namespace leavitt
