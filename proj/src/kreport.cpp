#include "leavitt/kreport.hpp"

#include <algorithm>
#include <sstream>

#include "leavitt/graph_matrices.hpp"

namespace leavitt {

std::pair<FgAbGroup, FgAbGroup> coker_ker_from_factors(int rows, int cols,
                                                       const std::vector<Int>& factors,
                                                       const FgAbGroup& g) {
  const int s = static_cast<int>(factors.size());
  if (s != std::min(rows, cols))
    throw std::invalid_argument("factor list does not match the matrix shape");
  int s1 = 0;  // nonzero factors
  for (const Int& d : factors)
    if (d != 0) ++s1;

  std::vector<Int> coker_orders, ker_orders;
  // Free summands of g: each Z contributes Z/dj per nonzero factor to the
  // cokernel and survives untouched beyond the factor range.
  for (const Int& d : factors)
    if (d >= 2)
      for (int r = 0; r < g.rank(); ++r) coker_orders.push_back(d);
  const int coker_rank = g.rank() * (rows - s1);
  const int ker_rank = g.rank() * (cols - s1);
  // Torsion summands of g: multiplication by dj on Z/t has cokernel and
  // kernel both Z/gcd(dj, t); a zero factor acts as the zero map.
  for (const Int& t : g.torsion()) {
    for (const Int& d : factors) {
      Int x = gcd(d, t);
      coker_orders.push_back(x);
      ker_orders.push_back(x);
    }
    for (int i = 0; i < rows - s; ++i) coker_orders.push_back(t);
    for (int i = 0; i < cols - s; ++i) ker_orders.push_back(t);
  }
  return {FgAbGroup::from_orders(coker_rank, std::move(coker_orders)),
          FgAbGroup::from_orders(ker_rank, std::move(ker_orders))};
}

std::pair<FgAbGroup, FgAbGroup> coker_ker(const IntMatrix& a, const FgAbGroup& g) {
  auto sf = smith_normal_form(a);
  return coker_ker_from_factors(a.rows(), a.cols(), sf.factors, g);
}

std::pair<SymbolicGroup, SymbolicGroup> coker_ker_symbolic(
    int rows, int cols, const std::vector<Int>& factors, const SymbolicGroup& g) {
  if (static_cast<int>(factors.size()) != std::min(rows, cols))
    throw std::invalid_argument("factor list does not match the matrix shape");
  if (g.is_unresolved())
    throw std::invalid_argument("cannot map an unresolved symbolic group");
  if (g.base_power() != 1 || !g.quotients().empty())
    throw std::invalid_argument(
        "symbolic coefficients must be a single plain base group");
  int s1 = 0;
  Int torsion_factor = 0;
  for (const Int& d : factors) {
    if (d != 0) ++s1;
    if (d >= 2 && torsion_factor == 0) torsion_factor = d;
  }
  SymbolicGroup coker(g.base_name()), ker(g.base_name());
  coker.add_power(rows - s1);
  for (const Int& d : factors)
    if (d >= 2) coker.add_quotient(d, 1);
  if (torsion_factor != 0) {
    ker.mark_unresolved("kernel involves the " + torsion_factor.str() +
                        "-torsion of " + g.base_name());
  } else {
    ker.add_power(cols - s1);
  }
  return {std::move(coker), std::move(ker)};
}

namespace {

GroupValue apply_coker(int rows, int cols, const std::vector<Int>& factors,
                       const GroupValue& g) {
  if (const auto* c = std::get_if<FgAbGroup>(&g))
    return coker_ker_from_factors(rows, cols, factors, *c).first;
  return coker_ker_symbolic(rows, cols, factors, std::get<SymbolicGroup>(g)).first;
}

GroupValue apply_ker(int rows, int cols, const std::vector<Int>& factors,
                     const GroupValue& g) {
  if (const auto* c = std::get_if<FgAbGroup>(&g))
    return coker_ker_from_factors(rows, cols, factors, *c).second;
  return coker_ker_symbolic(rows, cols, factors, std::get<SymbolicGroup>(g)).second;
}

std::vector<std::string> sequence_citations(const KTable& table) {
  switch (table.mode) {
    case KMode::KH:
      return {"Thm. thm:kh"};
    case KMode::KTop:
      return {"Thm. thm:ktop"};
    case KMode::K:
      if (table.has_flag(TableFlag::RegularSupercoherent)) return {"Thm. rf-coh"};
      if (table.has_flag(TableFlag::StableCstar)) return {"Cor. cor:stablereg"};
      return {"Thm. row-finitecase"};
  }
  return {};
}

// Fills total/split fields of a report row whose pieces are already set.
void resolve_extension(DegreeReport& row, bool pid_split_allowed) {
  const GroupValue& ck = row.coker_piece;
  const GroupValue& kr = row.ker_piece;

  const auto* ck_conc = std::get_if<FgAbGroup>(&ck);
  const auto* kr_conc = std::get_if<FgAbGroup>(&kr);

  if (is_zero(kr)) {
    row.split_status = "split (ker free)";
    row.total_display = render(ck);
    if (ck_conc) row.total_group = *ck_conc;
    return;
  }
  if (is_zero(ck)) {
    // The sequence collapses: the whole group is the kernel piece.
    row.split_status = "split (coker zero)";
    row.total_display = render(kr);
    if (kr_conc) row.total_group = *kr_conc;
    return;
  }
  if (kr_conc && kr_conc->is_free()) {
    row.split_status = "split (ker free)";
    if (ck_conc) {
      row.total_group = ck_conc->direct_sum(*kr_conc);
      row.total_display = row.total_group->render();
    } else {
      row.total_display = render(ck) + " + " + kr_conc->render();
    }
    return;
  }
  if (pid_split_allowed && ck_conc && kr_conc) {
    row.split_status = "split (PID)";
    row.total_group = ck_conc->direct_sum(*kr_conc);
    row.total_display = row.total_group->render();
    row.citations.push_back("Cor. after Thm. rf-coh");
    return;
  }
  row.split_status = "unresolved-extension";
}

}  // namespace

KReport k_groups(const Quiver& q, const KTable& table, int degree_lo, int degree_hi) {
  if (degree_lo > degree_hi)
    throw std::invalid_argument("empty degree range");
  KReport report;
  report.mode = table.mode;
  for (TableFlag f : table.declared_flags) report.flags.push_back(to_string(f));

  const IntMatrix a = one_minus_nt(q);
  const SmithForm sf = smith_normal_form(a);
  const auto cites = sequence_citations(table);
  const bool pid = table.has_flag(TableFlag::Pid);

  for (int n = degree_lo; n <= degree_hi; ++n) {
    DegreeReport row;
    row.degree = n;
    auto coeff_n = table.at(n);
    auto coeff_prev = table.at(n - 1);
    row.coker_piece = apply_coker(a.rows(), a.cols(), sf.factors, coeff_n.value);
    row.ker_piece = apply_ker(a.rows(), a.cols(), sf.factors, coeff_prev.value);
    row.coker_defaulted = coeff_n.defaulted;
    row.ker_defaulted = coeff_prev.defaulted;
    row.citations = cites;
    // The splitting the PID corollary provides is for the degree-one group.
    resolve_extension(row, pid && n == 1);
    report.degrees.push_back(std::move(row));
  }

  if (table.mode == KMode::K && !table.has_flag(TableFlag::RegularSupercoherent) &&
      !table.has_flag(TableFlag::StableCstar)) {
    report.obstruction_note =
        "coefficients are not declared regular-supercoherent or stable-cstar: "
        "the two pieces embed as a split summand but NK-type classes may "
        "enlarge the true groups";
  }
  return report;
}

KReport k0_k1_pid(const Quiver& q, const GroupValue& units) {
  KReport report;
  report.mode = KMode::K;
  report.flags = {"pid"};

  const IntMatrix a = one_minus_nt(q);
  const SmithForm sf = smith_normal_form(a);
  const FgAbGroup z = FgAbGroup::free(1);

  DegreeReport k0;
  k0.degree = 0;
  k0.coker_piece = coker_ker_from_factors(a.rows(), a.cols(), sf.factors, z).first;
  k0.ker_piece = FgAbGroup::trivial();  // negative K-theory of a PID vanishes
  k0.citations = {"Thm. rf-coh"};
  resolve_extension(k0, false);
  report.degrees.push_back(std::move(k0));

  DegreeReport k1;
  k1.degree = 1;
  k1.coker_piece = apply_coker(a.rows(), a.cols(), sf.factors, units);
  // Kernel piece over K0(R) = Z: free, and the PID corollary splits it off.
  k1.ker_piece = coker_ker_from_factors(a.rows(), a.cols(), sf.factors, z).second;
  k1.citations = {"Thm. rf-coh", "Cor. after Thm. rf-coh"};
  const auto* ck_conc = std::get_if<FgAbGroup>(&k1.coker_piece);
  const auto& kr_conc = std::get<FgAbGroup>(k1.ker_piece);
  k1.split_status = "split (PID)";
  if (ck_conc) {
    k1.total_group = ck_conc->direct_sum(kr_conc);
    k1.total_display = k1.total_group->render();
  } else if (kr_conc.is_trivial()) {
    k1.total_display = render(k1.coker_piece);
  } else {
    k1.total_display = render(k1.coker_piece) + " + " + kr_conc.render();
  }
  report.degrees.push_back(std::move(k1));
  return report;
}

bool same_group_data(const KReport& a, const KReport& b) {
  if (a.degrees.size() != b.degrees.size()) return false;
  for (size_t i = 0; i < a.degrees.size(); ++i) {
    const DegreeReport& x = a.degrees[i];
    const DegreeReport& y = b.degrees[i];
    if (x.degree != y.degree) return false;
    if (render(x.coker_piece) != render(y.coker_piece)) return false;
    if (render(x.ker_piece) != render(y.ker_piece)) return false;
    if (x.total_display != y.total_display) return false;
    if (x.split_status != y.split_status) return false;
  }
  return true;
}

std::string render_text(const KReport& r, bool with_citations) {
  std::ostringstream os;
  const std::string prefix = to_string(r.mode);
  for (const DegreeReport& row : r.degrees) {
    os << prefix << row.degree;
    if (row.total_display) {
      os << " = " << *row.total_display;
    } else {
      os << ": coker piece = " << render(row.coker_piece)
         << ", ker piece = " << render(row.ker_piece) << " (extension unresolved)";
    }
    if (row.coker_defaulted) os << " [table default]";
    if (with_citations && !row.citations.empty()) {
      os << "  [";
      for (size_t i = 0; i < row.citations.size(); ++i) {
        if (i) os << "; ";
        os << row.citations[i];
      }
      os << "]";
    }
    os << '\n';
  }
  if (r.obstruction_note) os << "note: " << *r.obstruction_note << '\n';
  return os.str();
}

}  // namespace leavitt
