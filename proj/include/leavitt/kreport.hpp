#pragma once

#include <optional>
#include <utility>

#include "leavitt/abelian.hpp"
#include "leavitt/ktable.hpp"
#include "leavitt/quiver.hpp"
#include "leavitt/smith.hpp"

namespace leavitt {

// Cokernel and kernel of the map g^cols -> g^rows given by an integer matrix,
// computed from its Smith normal form.  Exact for every finitely generated g;
// no matrix nullspace over g is ever touched.
std::pair<FgAbGroup, FgAbGroup> coker_ker(const IntMatrix& a, const FgAbGroup& g);

// Same, from a precomputed list of invariant factors (callers that evaluate
// one matrix against many coefficient groups factor once).
std::pair<FgAbGroup, FgAbGroup> coker_ker_from_factors(int rows, int cols,
                                                       const std::vector<Int>& factors,
                                                       const FgAbGroup& g);

// Symbolic analogue over a formal base group G: the cokernel is exactly
// G^(rows - r) + sum of G/djG over the nonzero invariant factors dj >= 2.
// The kernel is G^(cols - r) when every nonzero factor is 1; otherwise it
// involves dj-torsion of G, which the symbolic calculus cannot name, and the
// result is marked unresolved.
std::pair<SymbolicGroup, SymbolicGroup> coker_ker_symbolic(
    int rows, int cols, const std::vector<Int>& factors, const SymbolicGroup& g);

// One K-group of the graph algebra, presented as the two pieces of the
// defining exact sequence: coker_piece at degree n, ker_piece one degree down.
struct DegreeReport {
  int degree = 0;
  GroupValue coker_piece;
  GroupValue ker_piece;
  bool coker_defaulted = false;  // table entry came from a default rule
  bool ker_defaulted = false;
  // Set when the extension is resolved; total_group additionally when the
  // result is a concrete group.
  std::optional<FgAbGroup> total_group;
  std::optional<std::string> total_display;
  std::string split_status;  // "split (ker free)", "split (PID)", "unresolved-extension"
  std::vector<std::string> citations;
};

struct KReport {
  KMode mode = KMode::K;
  std::vector<std::string> flags;  // declared flags, rendered
  std::vector<DegreeReport> degrees;
  // Set when the table mode promises nothing for this quiver/ring combination
  // in negative or positive degrees.
  std::optional<std::string> obstruction_note;
};

// K-groups of the graph algebra over the coefficient ring described by the
// table, for all degrees in [degree_lo, degree_hi].
KReport k_groups(const Quiver& q, const KTable& table, int degree_lo, int degree_hi);

// Shortcut for coefficients in a principal ideal domain: K0 and K1 from
// K0(R) = Z and K1(R) = units.  Every degree splits.
KReport k0_k1_pid(const Quiver& q, const GroupValue& units);

// Equality of the group content (pieces, totals, split status), ignoring mode
// and citations.  Used to confirm that K, KH and Ktop runs over the same
// table data agree.
bool same_group_data(const KReport& a, const KReport& b);

// Text rendering, one line per degree; with_citations appends the citation
// keys in brackets.
std::string render_text(const KReport& r, bool with_citations);

}  // namespace leavitt
