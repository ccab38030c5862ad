#include "leavitt/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>

namespace leavitt {

Quiver::Quiver() = default;

Quiver::Quiver(std::vector<std::string> names, std::vector<Edge> edges)
    : names_(std::move(names)), edges_(std::move(edges)) {
  const int n = vertex_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (names_[i] == names_[j])
        throw std::invalid_argument("duplicate vertex name '" + names_[i] + "'");
    }
  }
  out_.assign(n, {});
  in_degree_.assign(n, 0);
  for (int e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.src < 0 || ed.src >= n || ed.dst < 0 || ed.dst >= n)
      throw std::invalid_argument("edge endpoint out of range");
    out_[ed.src].push_back(e);
    ++in_degree_[ed.dst];
  }
  // Sinks-first order, stable within each class.
  order_.reserve(n);
  for (int v = 0; v < n; ++v)
    if (out_[v].empty()) order_.push_back(v);
  sink_count_ = static_cast<int>(order_.size());
  for (int v = 0; v < n; ++v)
    if (!out_[v].empty()) order_.push_back(v);
  pos_.assign(n, -1);
  for (int p = 0; p < n; ++p) pos_[order_[p]] = p;
}

std::optional<int> Quiver::index_of(std::string_view name) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

bool Quiver::same_presentation(const Quiver& other) const {
  if (names_ != other.names_) return false;
  auto key = [](const std::vector<Edge>& es) {
    std::vector<std::pair<int, int>> k;
    k.reserve(es.size());
    for (const Edge& e : es) k.emplace_back(e.src, e.dst);
    std::sort(k.begin(), k.end());
    return k;
  };
  return key(edges_) == key(other.edges_);
}

std::string Quiver::to_file_text() const {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& n : names_) os << ' ' << n;
  os << "\nedges:\n";
  // Collapse parallel edges back into multiplicities, in (src, dst) order.
  std::map<std::pair<int, int>, long long> mult;
  for (const Edge& e : edges_) ++mult[{e.src, e.dst}];
  for (const auto& [k, m] : mult)
    os << names_[k.first] << ' ' << names_[k.second] << ' ' << m << '\n';
  return os.str();
}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.' || c == '\'';
}

std::vector<Token> lex_line(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

constexpr long long kMaxExpandedEdges = 1'000'000;

}  // namespace

Quiver parse_quiver(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  std::vector<Quiver::Edge> edges;

  enum class State { WantVertices, WantEdgesHeader, EdgeLines };
  State state = State::WantVertices;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  long long expanded = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::vector<Token> toks = lex_line(raw);
    if (toks.empty()) continue;

    switch (state) {
      case State::WantVertices: {
        if (toks[0].text != "vertices:")
          throw ParseError(lineno, toks[0].column, "expected 'vertices:' header");
        if (toks.size() == 1)
          throw ParseError(lineno, toks[0].column,
                           "expected at least one vertex name after 'vertices:'");
        for (size_t t = 1; t < toks.size(); ++t) {
          const std::string& nm = toks[t].text;
          for (char c : nm)
            if (!ident_char(c))
              throw ParseError(lineno, toks[t].column,
                               "invalid vertex name '" + nm + "'");
          if (index.count(nm))
            throw ParseError(lineno, toks[t].column,
                             "duplicate vertex declaration '" + nm + "'");
          index[nm] = static_cast<int>(names.size());
          names.push_back(nm);
        }
        state = State::WantEdgesHeader;
        break;
      }
      case State::WantEdgesHeader: {
        if (toks[0].text != "edges:" || toks.size() != 1)
          throw ParseError(lineno, toks[0].column, "expected 'edges:' header");
        state = State::EdgeLines;
        break;
      }
      case State::EdgeLines: {
        if (toks.size() != 3)
          throw ParseError(lineno, toks[0].column,
                           "expected 'src dst multiplicity'");
        auto vertex = [&](const Token& tk) {
          auto it = index.find(tk.text);
          if (it == index.end())
            throw ParseError(lineno, tk.column,
                             "undeclared vertex '" + tk.text + "'");
          return it->second;
        };
        int src = vertex(toks[0]);
        int dst = vertex(toks[1]);
        const std::string& ms = toks[2].text;
        bool digits = !ms.empty() &&
                      std::all_of(ms.begin(), ms.end(), [](char c) {
                        return std::isdigit(static_cast<unsigned char>(c));
                      });
        long long mult = 0;
        if (digits && ms.size() <= 18) mult = std::stoll(ms);
        if (!digits || mult < 1)
          throw ParseError(lineno, toks[2].column,
                           "multiplicity must be a positive integer, got '" + ms + "'");
        expanded += mult;
        if (expanded > kMaxExpandedEdges)
          throw ParseError(lineno, toks[2].column, "too many edges (limit " +
                                                       std::to_string(kMaxExpandedEdges) + ")");
        for (long long k = 0; k < mult; ++k) edges.push_back({src, dst});
        break;
      }
    }
  }
  if (state == State::WantVertices)
    throw ParseError(lineno == 0 ? 1 : lineno, 1, "expected 'vertices:' header");
  if (state == State::WantEdgesHeader)
    throw ParseError(lineno, 1, "expected 'edges:' header");
  return Quiver(std::move(names), std::move(edges));
}

namespace {

// Iterative Tarjan; comp[v] = SCC id, comp_size[id] = member count.
void strongly_connected_components(const Quiver& q, std::vector<int>& comp,
                                   std::vector<int>& comp_size) {
  const int n = q.vertex_count();
  comp.assign(n, -1);
  comp_size.clear();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0;

  struct Frame {
    int v;
    size_t edge_pos;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& outs = q.out_edges(f.v);
      if (f.edge_pos < outs.size()) {
        int w = q.edges()[outs[f.edge_pos++]].dst;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          int id = static_cast<int>(comp_size.size());
          int members = 0, w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = id;
            ++members;
          } while (w != f.v);
          comp_size.push_back(members);
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
}

// Subquiver on `keep` (declaration indices, deduplicated) together with every
// edge emitted by a kept vertex.  All such edges must stay inside `keep`.
Quiver closure_subquiver(const Quiver& q, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> new_index(q.vertex_count(), -1);
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (int v : keep) {
    new_index[v] = static_cast<int>(names.size());
    names.push_back(q.name(v));
  }
  std::vector<Quiver::Edge> edges;
  for (int v : keep) {
    for (int e : q.out_edges(v)) {
      int dst = q.edges()[e].dst;
      if (new_index[dst] < 0)
        throw std::logic_error("closure_subquiver: edge leaves the vertex set");
      edges.push_back({new_index[v], new_index[dst]});
    }
  }
  return Quiver(std::move(names), std::move(edges));
}

std::vector<int> cycle_closure_vertices(const Quiver& q) {
  std::vector<int> comp, comp_size;
  strongly_connected_components(q, comp, comp_size);
  const int n = q.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<int> work;
  for (int v = 0; v < n; ++v) {
    bool self_loop = false;
    for (int e : q.out_edges(v))
      if (q.edges()[e].dst == v) self_loop = true;
    if (self_loop || comp_size[comp[v]] >= 2) {
      seen[v] = true;
      work.push_back(v);
    }
  }
  // Forward closure: everything reachable from a vertex lying on a cycle.
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    for (int e : q.out_edges(v)) {
      int w = q.edges()[e].dst;
      if (!seen[w]) {
        seen[w] = true;
        work.push_back(w);
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

}  // namespace

VertexClassification classify(const Quiver& q) {
  VertexClassification c;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (q.is_sink(v)) c.sinks.push_back(v);
    if (q.is_source(v)) c.sources.push_back(v);
  }
  c.on_or_after_cycle = cycle_closure_vertices(q);
  return c;
}

Quiver opposite(const Quiver& q) {
  std::vector<Quiver::Edge> rev;
  rev.reserve(q.edges().size());
  for (const auto& e : q.edges()) rev.push_back({e.dst, e.src});
  return Quiver(q.names(), std::move(rev));
}

bool is_complete_subquiver(const Quiver& f, const Quiver& e) {
  // Subquiver test first: vertices by name, edges as a multiset of name pairs.
  std::vector<int> to_e(f.vertex_count(), -1);
  for (int v = 0; v < f.vertex_count(); ++v) {
    auto idx = e.index_of(f.name(v));
    if (!idx)
      throw std::invalid_argument("not a subquiver: vertex '" + f.name(v) +
                                  "' does not occur in the ambient quiver");
    to_e[v] = *idx;
  }
  auto out_multiset = [](const Quiver& q, int v) {
    std::map<std::string, int> m;
    for (int ed : q.out_edges(v)) ++m[q.name(q.edges()[ed].dst)];
    return m;
  };
  for (int v = 0; v < f.vertex_count(); ++v) {
    auto fo = out_multiset(f, v);
    auto eo = out_multiset(e, to_e[v]);
    for (const auto& [dst, m] : fo) {
      auto it = eo.find(dst);
      if (it == eo.end() || it->second < m)
        throw std::invalid_argument("not a subquiver: edge multiset at vertex '" +
                                    f.name(v) + "' exceeds the ambient quiver");
    }
    // Complete at v: emits nothing, or everything the ambient vertex emits.
    if (!fo.empty() && fo != eo) return false;
  }
  return true;
}

Quiver tilde_quiver(const Quiver& q) {
  return closure_subquiver(q, cycle_closure_vertices(q));
}

ReductionChain reduction_chain(const Quiver& q) {
  ReductionChain chain;
  std::vector<int> core = cycle_closure_vertices(q);
  std::vector<bool> in_set(q.vertex_count(), false);
  for (int v : core) in_set[v] = true;
  chain.ell = 0;
  std::vector<int> members = core;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (q.is_sink(v) && !in_set[v]) {
      in_set[v] = true;
      members.push_back(v);
      ++chain.ell;
    }
  }
  chain.stages.push_back(closure_subquiver(q, members));
  int missing = q.vertex_count() - static_cast<int>(members.size());
  while (missing > 0) {
    int pick = -1;
    for (int v = 0; v < q.vertex_count() && pick < 0; ++v) {
      if (in_set[v]) continue;
      bool ok = true;  // v must emit edges, all landing in the current stage
      for (int e : q.out_edges(v))
        if (!in_set[q.edges()[e].dst]) ok = false;
      if (ok && q.out_degree(v) > 0) pick = v;
    }
    if (pick < 0)
      throw std::logic_error("reduction_chain: no admissible vertex to add");
    in_set[pick] = true;
    members.push_back(pick);
    chain.stages.push_back(closure_subquiver(q, members));
    chain.added_vertex.push_back(q.name(pick));
    --missing;
  }
  return chain;
}

PathCountTable path_counts(const Quiver& q, int n_max) {
  if (n_max < 0) throw std::invalid_argument("path_counts: negative length");
  const int n = q.vertex_count();
  std::vector<std::vector<Int>> counts(n_max + 1, std::vector<Int>(n, 0));
  for (int v = 0; v < n; ++v) counts[0][v] = 1;
  for (int len = 0; len < n_max; ++len)
    for (int v = 0; v < n; ++v)
      for (int e : q.out_edges(v))
        counts[len + 1][q.edges()[e].dst] += counts[len][v];
  return PathCountTable(std::move(counts));
}

Int truncation_dimension(const Quiver& q, const PathCountTable& counts, int n) {
  if (n < 0 || n > counts.max_length())
    throw std::invalid_argument("truncation_dimension: length outside the table");
  Int dim = 0;
  for (int m = 0; m < n; ++m)
    for (int v = 0; v < q.vertex_count(); ++v)
      if (q.is_sink(v)) dim += counts.count(m, v) * counts.count(m, v);
  for (int v = 0; v < q.vertex_count(); ++v)
    dim += counts.count(n, v) * counts.count(n, v);
  return dim;
}

}  // namespace leavitt
