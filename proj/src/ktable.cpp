#include "leavitt/ktable.hpp"

#include <algorithm>
#include <sstream>

namespace leavitt {

std::string to_string(KMode mode) {
  switch (mode) {
    case KMode::K: return "K";
    case KMode::KH: return "KH";
    case KMode::KTop: return "Ktop";
  }
  return "?";
}

std::string to_string(TableFlag f) {
  switch (f) {
    case TableFlag::Pid: return "pid";
    case TableFlag::RegularSupercoherent: return "regular-supercoherent";
    case TableFlag::StableCstar: return "stable-cstar";
    case TableFlag::Field: return "field";
    case TableFlag::Complex: return "complex";
  }
  return "?";
}

bool KTable::has_flag(TableFlag f) const {
  if (declared_flags.count(f)) return true;
  switch (f) {
    case TableFlag::Field:
      return declared_flags.count(TableFlag::Complex) > 0;
    case TableFlag::Pid:
      return has_flag(TableFlag::Field);
    case TableFlag::RegularSupercoherent:
      return has_flag(TableFlag::Pid);
    default:
      return false;
  }
}

int KTable::min_degree() const {
  if (entries.empty()) throw KTableError("K-table has no entries");
  return entries.begin()->first;
}

int KTable::max_degree() const {
  if (entries.empty()) throw KTableError("K-table has no entries");
  return entries.rbegin()->first;
}

KTable::Lookup KTable::at(int degree) const {
  if (entries.empty()) throw KTableError("K-table has no entries");
  if (auto it = entries.find(degree); it != entries.end())
    return {it->second, false};
  const int lo = min_degree(), hi = max_degree();
  if (degree > lo && degree < hi)
    throw KTableError("K-table has a gap at degree " + std::to_string(degree) +
                      "; add an entry");
  DefaultRule rule = degree < lo ? below : above;
  switch (rule) {
    case DefaultRule::None:
      throw KTableError(
          "degree " + std::to_string(degree) +
          " is outside the declared K-table range and no default rule is set "
          "(add 'default" + std::string(degree < lo ? "-" : "+") +
          ": 0' or ': repeat-2')");
    case DefaultRule::Zero:
      return {FgAbGroup::trivial(), true};
    case DefaultRule::Repeat2: {
      int d = degree;
      while (d < lo) d += 2;
      while (d > hi) d -= 2;
      auto it = entries.find(d);
      if (it == entries.end())
        throw KTableError("repeat-2 default lands on degree " +
                          std::to_string(d) + " which has no entry");
      return {it->second, true};
    }
  }
  throw KTableError("unreachable default rule");
}

namespace {

GroupValue parse_entry_value(const std::string& text, int lineno, int column) {
  std::string t = text;
  if (t.rfind("sym:", 0) == 0) {
    std::string nm = t.substr(4);
    if (nm.empty()) throw ParseError(lineno, column, "empty symbolic group name");
    SymbolicGroup g(nm);
    g.add_power(1);
    return g;
  }
  try {
    return parse_group(t);
  } catch (const ParseError& e) {
    throw ParseError(lineno, column, e.what());
  }
}

KTable::DefaultRule parse_rule(const std::string& val, int lineno, int column) {
  if (val == "0") return KTable::DefaultRule::Zero;
  if (val == "repeat-2") return KTable::DefaultRule::Repeat2;
  throw ParseError(lineno, column, "default rule must be '0' or 'repeat-2', got '" + val + "'");
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  size_t b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

}  // namespace

KTable parse_ktable(std::string_view text) {
  KTable table;
  bool saw_mode = false, saw_below = false, saw_above = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(lineno, 1, "expected 'key: value'");
    std::string key = trim(line.substr(0, colon));
    std::string val = trim(line.substr(colon + 1));
    int vcol = static_cast<int>(colon) + 2;
    if (key == "mode") {
      if (saw_mode) throw ParseError(lineno, 1, "duplicate 'mode' directive");
      if (val == "K")
        table.mode = KMode::K;
      else if (val == "KH")
        table.mode = KMode::KH;
      else if (val == "Ktop")
        table.mode = KMode::KTop;
      else
        throw ParseError(lineno, vcol, "mode must be K, KH or Ktop, got '" + val + "'");
      saw_mode = true;
    } else if (key == "flags") {
      std::istringstream fs(val);
      std::string tok;
      while (std::getline(fs, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        if (tok == "pid")
          table.declared_flags.insert(TableFlag::Pid);
        else if (tok == "regular-supercoherent")
          table.declared_flags.insert(TableFlag::RegularSupercoherent);
        else if (tok == "stable-cstar")
          table.declared_flags.insert(TableFlag::StableCstar);
        else if (tok == "field")
          table.declared_flags.insert(TableFlag::Field);
        else if (tok == "complex")
          table.declared_flags.insert(TableFlag::Complex);
        else
          throw ParseError(lineno, vcol, "unknown flag '" + tok + "'");
      }
    } else if (key == "default-") {
      if (saw_below) throw ParseError(lineno, 1, "duplicate 'default-' directive");
      table.below = parse_rule(val, lineno, vcol);
      saw_below = true;
    } else if (key == "default+") {
      if (saw_above) throw ParseError(lineno, 1, "duplicate 'default+' directive");
      table.above = parse_rule(val, lineno, vcol);
      saw_above = true;
    } else {
      int degree = 0;
      try {
        size_t used = 0;
        degree = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError(lineno, 1, "unknown directive '" + key + "'");
      }
      if (table.entries.count(degree))
        throw ParseError(lineno, 1, "duplicate entry for degree " + std::to_string(degree));
      table.entries.emplace(degree, parse_entry_value(val, lineno, vcol));
    }
  }
  if (!saw_mode) throw ParseError(lineno == 0 ? 1 : lineno, 1, "missing 'mode:' directive");
  if (table.entries.empty())
    throw ParseError(lineno == 0 ? 1 : lineno, 1, "K-table declares no degree entries");

  if (table.mode == KMode::KTop) {
    if (!saw_below) table.below = KTable::DefaultRule::Repeat2;
    if (!saw_above) table.above = KTable::DefaultRule::Repeat2;
    if (table.below != KTable::DefaultRule::Repeat2 ||
        table.above != KTable::DefaultRule::Repeat2)
      throw ParseError(lineno, 1, "Ktop tables must use repeat-2 default rules");
    // Bott periodicity: entries of equal parity must agree.
    for (auto it = table.entries.begin(); it != table.entries.end(); ++it)
      for (auto jt = std::next(it); jt != table.entries.end(); ++jt)
        if ((it->first - jt->first) % 2 == 0 &&
            render(it->second) != render(jt->second))
          throw ParseError(lineno, 1,
                           "Ktop table is not 2-periodic: degrees " +
                               std::to_string(it->first) + " and " +
                               std::to_string(jt->first) + " disagree");
  }
  return table;
}

}  // namespace leavitt
