#pragma once

// Test-only oracles: brute-force enumerations written independently of the
// library algorithms, kept deliberately naive.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "leavitt/abelian.hpp"
#include "leavitt/int_matrix.hpp"
#include "leavitt/quiver.hpp"

namespace oracle {

using leavitt::FgAbGroup;
using leavitt::Int;
using leavitt::IntMatrix;
using leavitt::Quiver;

struct FinitePair {
  FgAbGroup coker;
  FgAbGroup ker;
};

inline std::vector<int> divisors_of(int m) {
  std::vector<int> out;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) out.push_back(d);
  return out;
}

// Reconstructs a finite abelian group of exponent dividing m from the sizes
// of its d-torsion subgroups: for p^k || the structure, the p^k-torsion
// ratios count the cyclic summands of each order.
template <typename CountFn>
FgAbGroup group_from_torsion_counts(int m, CountFn count) {
  std::vector<Int> orders;
  for (int p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    bool prime = true;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    // n_k = number of cyclic p-power summands of order >= p^k.
    std::vector<long long> n_k{0};
    long long prev = count(1);
    for (long long pk = p; m % (pk * 1) == 0 && pk <= m; pk *= p) {
      if (m % pk != 0) break;
      long long cur = count(static_cast<int>(pk));
      long long ratio = cur / prev;
      long long k = 0;
      while (ratio > 1) {
        ratio /= p;
        ++k;
      }
      n_k.push_back(k);
      prev = cur;
      if (pk > m / p) break;
    }
    for (size_t k = 1; k < n_k.size(); ++k) {
      long long exactly = n_k[k] - (k + 1 < n_k.size() ? n_k[k + 1] : 0);
      Int pk = 1;
      for (size_t i = 0; i < k; ++i) pk *= p;
      for (long long c = 0; c < exactly; ++c) orders.push_back(pk);
    }
  }
  return FgAbGroup::from_orders(0, std::move(orders));
}

// Cokernel and kernel of the reduction of a modulo m, acting on (Z/m)^cols ->
// (Z/m)^rows, by plain enumeration of all elements.  Requires m^rows and
// m^cols to stay small.
inline FinitePair enumerate_coker_ker_mod(const IntMatrix& a, int m) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  const int b = a.rows(), c = a.cols();
  double size_b = 1, size_c = 1;
  for (int i = 0; i < b; ++i) size_b *= m;
  for (int i = 0; i < c; ++i) size_c *= m;
  if (size_b > 3e6 || size_c > 3e6)
    throw std::invalid_argument("enumeration oracle domain too large");

  std::vector<std::vector<int>> amod(b, std::vector<int>(c));
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < c; ++j) {
      Int r = a(i, j) % m;
      if (r < 0) r += m;
      amod[i][j] = static_cast<int>(r);
    }

  auto encode = [m](const std::vector<int>& v) {
    std::uint64_t key = 0;
    for (int x : v) key = key * static_cast<std::uint64_t>(m) + x;
    return key;
  };
  auto step = [m](std::vector<int>& v) {  // odometer; false when wrapped around
    for (size_t i = 0; i < v.size(); ++i) {
      if (++v[i] < m) return true;
      v[i] = 0;
    }
    return false;
  };

  // Image and kernel by walking the whole domain.
  std::set<std::uint64_t> image;
  std::vector<std::vector<int>> kernel_elems;
  std::vector<int> x(c, 0);
  do {
    std::vector<int> y(b, 0);
    for (int i = 0; i < b; ++i) {
      long long acc = 0;
      for (int j = 0; j < c; ++j) acc += static_cast<long long>(amod[i][j]) * x[j];
      y[i] = static_cast<int>(acc % m);
    }
    image.insert(encode(y));
    bool zero = true;
    for (int v : y) zero = zero && v == 0;
    if (zero) kernel_elems.push_back(x);
  } while (c > 0 && step(x));
  if (c == 0) image.insert(0);  // empty sum: the zero vector

  // d-torsion of the quotient: |{y : d*y lies in the image}| / |image|.
  auto coker_count = [&](int d) {
    long long hits = 0;
    std::vector<int> y(b, 0);
    do {
      std::vector<int> dy(b);
      for (int i = 0; i < b; ++i) dy[i] = static_cast<int>((static_cast<long long>(d) * y[i]) % m);
      if (image.count(encode(dy))) ++hits;
    } while (b > 0 && step(y));
    if (b == 0) hits = 1;
    return hits / static_cast<long long>(image.size());
  };
  auto ker_count = [&](int d) {
    long long hits = 0;
    for (const auto& v : kernel_elems) {
      bool zero = true;
      for (int vi : v) zero = zero && (static_cast<long long>(d) * vi) % m == 0;
      if (zero) ++hits;
    }
    return hits;
  };

  FinitePair out;
  out.coker = group_from_torsion_counts(m, coker_count);
  out.ker = group_from_torsion_counts(m, ker_count);
  return out;
}

// Vertices lying on or reachable from a directed cycle, by exhaustive path
// enumeration with repetition detection.  Paths up to length 2 * vertex count
// suffice: loop once around a cycle, then walk anywhere.
inline std::vector<int> cycle_closure_bruteforce(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<bool> marked(n, false);
  const int max_len = 2 * n;
  std::vector<int> visit_count(n, 0);

  struct Frame {
    int vertex;
    size_t next_edge;
  };
  for (int start = 0; start < n; ++start) {
    std::vector<Frame> stack{{start, 0}};
    visit_count[start] = 1;
    bool repeat = false;
    std::vector<bool> repeat_stack{false};
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& outs = q.out_edges(f.vertex);
      if (static_cast<int>(stack.size()) - 1 < max_len && f.next_edge < outs.size()) {
        int w = q.edges()[outs[f.next_edge++]].dst;
        bool now_repeat = repeat || visit_count[w] > 0;
        ++visit_count[w];
        stack.push_back({w, 0});
        repeat_stack.push_back(repeat);
        repeat = now_repeat;
        if (repeat) marked[w] = true;
      } else {
        --visit_count[f.vertex];
        stack.pop_back();
        repeat = repeat_stack.back();
        repeat_stack.pop_back();
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (marked[v]) out.push_back(v);
  return out;
}

// Cofactor-expansion determinant for cross-checking the elimination code.
inline Int cofactor_det(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("square matrices only");
  const int n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Int det = 0;
  for (int j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int k = 0, col = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, col++) = a(i, k);
      }
    Int term = a(0, j) * cofactor_det(minor);
    det += (j % 2 == 0) ? term : Int(-term);
  }
  return det;
}

}  // namespace oracle
