#include "leavitt/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace leavitt {

FgAbGroup FgAbGroup::free(int rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  FgAbGroup g;
  g.rank_ = rank;
  return g;
}

FgAbGroup FgAbGroup::cyclic(const Int& n) {
  if (n < 0) throw std::invalid_argument("negative cyclic order");
  if (n == 0) return free(1);
  FgAbGroup g;
  if (n >= 2) g.torsion_.push_back(n);
  return g;
}

FgAbGroup FgAbGroup::from_orders(int rank, std::vector<Int> orders) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  for (const Int& d : orders)
    if (d < 1) throw std::invalid_argument("cyclic order must be >= 1");
  std::erase_if(orders, [](const Int& d) { return d == 1; });
  // Pairwise (gcd, lcm) replacement: Z/a + Z/b and Z/gcd + Z/lcm agree, and
  // after the sweep orders[j] divides every later entry.
  const size_t k = orders.size();
  for (size_t j = 0; j < k; ++j)
    for (size_t i = j + 1; i < k; ++i) {
      Int g = gcd(orders[j], orders[i]);
      Int l = (orders[j] / g) * orders[i];
      orders[j] = g;
      orders[i] = l;
    }
  std::erase_if(orders, [](const Int& d) { return d == 1; });
  FgAbGroup g;
  g.rank_ = rank;
  g.torsion_ = std::move(orders);
  return g;
}

FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& other) const {
  std::vector<Int> orders = torsion_;
  orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
  return from_orders(rank_ + other.rank_, std::move(orders));
}

FgAbGroup FgAbGroup::power(int m) const {
  if (m < 0) throw std::invalid_argument("negative power");
  std::vector<Int> orders;
  orders.reserve(torsion_.size() * m);
  for (int i = 0; i < m; ++i)
    orders.insert(orders.end(), torsion_.begin(), torsion_.end());
  return from_orders(rank_ * m, std::move(orders));
}

FgAbGroup FgAbGroup::tensor_mod(const Int& m) const {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  std::vector<Int> orders(rank_, m);
  for (const Int& t : torsion_) orders.push_back(gcd(t, m));
  return from_orders(0, std::move(orders));
}

FgAbGroup FgAbGroup::torsion_product_mod(const Int& m) const {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  std::vector<Int> orders;
  for (const Int& t : torsion_) orders.push_back(gcd(t, m));
  return from_orders(0, std::move(orders));
}

std::string FgAbGroup::render() const {
  std::vector<std::string> parts;
  if (rank_ == 1) parts.push_back("Z");
  if (rank_ >= 2) parts.push_back("Z^" + std::to_string(rank_));
  for (const Int& t : torsion_) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

FgAbGroup parse_group(std::string_view text) {
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  std::string whole = trim(std::string(text));
  if (whole.empty()) throw ParseError(1, 1, "empty group expression");
  if (whole == "0") return FgAbGroup::trivial();

  int rank = 0;
  std::vector<Int> orders;
  size_t pos = 0;
  while (pos <= whole.size()) {
    size_t plus = whole.find('+', pos);
    std::string term = trim(whole.substr(pos, plus == std::string::npos
                                                  ? std::string::npos
                                                  : plus - pos));
    if (term.empty())
      throw ParseError(1, static_cast<int>(pos) + 1, "empty summand in group expression");
    if (term == "Z") {
      ++rank;
    } else if (term.rfind("Z^", 0) == 0) {
      try {
        int r = std::stoi(term.substr(2));
        if (r < 1) throw std::invalid_argument("");
        rank += r;
      } catch (const std::exception&) {
        throw ParseError(1, static_cast<int>(pos) + 1,
                         "invalid free summand '" + term + "'");
      }
    } else if (term.rfind("Z/", 0) == 0) {
      try {
        Int d(term.substr(2));
        if (d < 1) throw std::invalid_argument("");
        orders.push_back(d);
      } catch (const std::exception&) {
        throw ParseError(1, static_cast<int>(pos) + 1,
                         "invalid cyclic summand '" + term + "'");
      }
    } else {
      throw ParseError(1, static_cast<int>(pos) + 1,
                       "unrecognized group summand '" + term + "'");
    }
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return FgAbGroup::from_orders(rank, std::move(orders));
}

void SymbolicGroup::add_power(int mult) {
  if (mult < 0) throw std::invalid_argument("negative multiplicity");
  power_ += mult;
}

void SymbolicGroup::add_quotient(const Int& d, int mult) {
  if (mult < 0) throw std::invalid_argument("negative multiplicity");
  if (d < 1) throw std::invalid_argument("quotient divisor must be >= 1");
  if (d == 1 || mult == 0) return;  // G/G = 0
  auto it = std::lower_bound(
      quotients_.begin(), quotients_.end(), d,
      [](const std::pair<Int, int>& p, const Int& x) { return p.first < x; });
  if (it != quotients_.end() && it->first == d)
    it->second += mult;
  else
    quotients_.insert(it, {d, mult});
}

void SymbolicGroup::mark_unresolved(std::string reason) {
  unresolved_ = true;
  reason_ = std::move(reason);
}

std::string SymbolicGroup::render() const {
  if (unresolved_) return "unresolved: " + reason_;
  std::vector<std::string> parts;
  if (power_ == 1) parts.push_back(name_);
  if (power_ >= 2) parts.push_back("(" + name_ + ")^" + std::to_string(power_));
  for (const auto& [d, mult] : quotients_) {
    std::string q = name_ + "/(" + name_ + ")^" + d.str();
    if (mult == 1)
      parts.push_back(q);
    else
      parts.push_back("(" + q + ")^" + std::to_string(mult));
  }
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::string render(const GroupValue& g) {
  return std::visit([](const auto& x) { return x.render(); }, g);
}

bool is_zero(const GroupValue& g) {
  if (const auto* c = std::get_if<FgAbGroup>(&g)) return c->is_trivial();
  return std::get<SymbolicGroup>(g).is_zero();
}

}  // namespace leavitt
