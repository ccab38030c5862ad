#include "leavitt/graph_matrices.hpp"

#include <algorithm>
#include <stdexcept>

namespace leavitt {

IntMatrix adjacency_matrix(const Quiver& q) {
  const int n = q.vertex_count();
  IntMatrix a(n, n);
  for (const auto& e : q.edges()) a(q.position(e.src), q.position(e.dst)) += 1;
  return a;
}

std::vector<int> edge_order(const Quiver& q) {
  std::vector<int> idx(q.edge_count());
  for (int i = 0; i < q.edge_count(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&q](int a, int b) {
    const auto& ea = q.edges()[a];
    const auto& eb = q.edges()[b];
    auto ka = std::make_tuple(q.position(ea.src), q.position(ea.dst), a);
    auto kb = std::make_tuple(q.position(eb.src), q.position(eb.dst), b);
    return ka < kb;
  });
  return idx;
}

IntMatrix edge_matrix(const Quiver& q) {
  std::vector<int> order = edge_order(q);
  const int m = q.edge_count();
  IntMatrix em(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (q.edges()[order[a]].dst == q.edges()[order[b]].src) em(a, b) = 1;
  return em;
}

IntMatrix one_minus_nt(const Quiver& q) {
  const int n = q.vertex_count();
  const int regular = n - q.sink_count();
  IntMatrix a = adjacency_matrix(q);
  IntMatrix r(n, regular);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < regular; ++c) {
      int u = q.sink_count() + c;  // non-sink column, transposed entry (u, i)
      r(i, c) = (i == u ? 1 : 0) - a(u, i);
    }
  return r;
}

IntMatrix range_pullback(const Quiver& q) {
  std::vector<int> order = edge_order(q);
  IntMatrix r(q.edge_count(), q.vertex_count());
  for (int a = 0; a < q.edge_count(); ++a)
    r(a, q.position(q.edges()[order[a]].dst)) = 1;
  return r;
}

IntMatrix source_pushforward(const Quiver& q) {
  std::vector<int> order = edge_order(q);
  IntMatrix s(q.vertex_count(), q.edge_count());
  for (int a = 0; a < q.edge_count(); ++a)
    s(q.position(q.edges()[order[a]].src), a) = 1;
  return s;
}

IntMatrix one_minus(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("one_minus: matrix not square");
  IntMatrix r = a;
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) r(i, j) = (i == j ? 1 : 0) - a(i, j);
  return r;
}

}  // namespace leavitt
