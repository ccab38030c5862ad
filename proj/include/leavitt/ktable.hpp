#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "leavitt/abelian.hpp"

namespace leavitt {

// Which K-theory the coefficient table describes.
enum class KMode { K, KH, KTop };

enum class TableFlag { Pid, RegularSupercoherent, StableCstar, Field, Complex };

// Raised for semantic table problems (missing entries, broken periodicity);
// syntax problems surface as ParseError.
struct KTableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// User-declared coefficient K-groups of the base ring, one entry per degree,
// with default rules for degrees outside the declared range.
struct KTable {
  enum class DefaultRule { None, Zero, Repeat2 };

  KMode mode = KMode::K;
  std::set<TableFlag> declared_flags;
  std::map<int, GroupValue> entries;
  DefaultRule below = DefaultRule::None;
  DefaultRule above = DefaultRule::None;

  // Closed under implications: complex => field => pid => regular-supercoherent.
  bool has_flag(TableFlag f) const;

  int min_degree() const;  // explicit entries only; throws when empty
  int max_degree() const;

  struct Lookup {
    GroupValue value;
    bool defaulted;  // true when produced by a default rule
  };
  // Throws KTableError when the degree is not covered by entries or rules.
  Lookup at(int degree) const;
};

// Text format, one directive per line ('#' comments, blank lines skipped):
//   mode: K            (or KH, Ktop; required)
//   flags: pid, field  (optional: pid, regular-supercoherent, stable-cstar,
//                       field, complex)
//   default-: 0        (rule below the declared degrees: 0 or repeat-2)
//   default+: repeat-2 (rule above)
//   0: Z               (entry: degree, then a group or sym:<name>)
//   1: sym:k*
// A Ktop table defaults both rules to repeat-2 and must be 2-periodic.
KTable parse_ktable(std::string_view text);

std::string to_string(KMode mode);
std::string to_string(TableFlag f);

}  // namespace leavitt
