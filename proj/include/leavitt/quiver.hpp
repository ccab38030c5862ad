#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "leavitt/bigint.hpp"
#include "leavitt/parse_error.hpp"

namespace leavitt {

// Finite quiver (directed multigraph).  Vertices keep their declaration order
// and names; parallel edges are stored as repeated entries.  On top of the
// declaration order the quiver maintains a "sinks first" vertex ordering: the
// positions 0..sink_count()-1 are exactly the sinks.  All matrix builders
// and K-theory code index vertices by that ordering.
class Quiver {
 public:
  struct Edge {
    int src;
    int dst;
    bool operator==(const Edge&) const = default;
  };

  Quiver();
  Quiver(std::vector<std::string> names, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int decl) const { return names_.at(decl); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<int> index_of(std::string_view name) const;

  bool is_sink(int decl) const { return out_[decl].empty(); }
  bool is_source(int decl) const { return in_degree_[decl] == 0; }
  int out_degree(int decl) const { return static_cast<int>(out_[decl].size()); }
  const std::vector<int>& out_edges(int decl) const { return out_[decl]; }

  // Sinks-first ordering: order()[pos] = declaration index, position(decl) = pos.
  const std::vector<int>& order() const { return order_; }
  int vertex_at(int pos) const { return order_.at(pos); }
  int position(int decl) const { return pos_.at(decl); }
  int sink_count() const { return sink_count_; }

  // Same vertex names in the same declaration order and the same edge multiset.
  bool same_presentation(const Quiver& other) const;

  // Round-trips through parse_quiver.
  std::string to_file_text() const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;  // decl index -> indices into edges_
  std::vector<int> in_degree_;
  std::vector<int> order_;  // pos -> decl, sinks first
  std::vector<int> pos_;    // decl -> pos
  int sink_count_ = 0;
};

// Input grammar:
//   vertices: a b c
//   edges:
//   a b 2
//   b c 1
// '#' starts a comment, blank lines are skipped, multiplicity k >= 1 expands
// to k parallel edges.  Throws ParseError with a 1-based location.
Quiver parse_quiver(std::string_view text);

struct VertexClassification {
  std::vector<int> sinks;              // no outgoing edges
  std::vector<int> sources;            // no incoming edges
  std::vector<int> on_or_after_cycle;  // reachable from some directed cycle
};

VertexClassification classify(const Quiver& q);

// Reverses every edge; vertex names and declaration order are kept.
Quiver opposite(const Quiver& q);

// f must be a subquiver of e (by vertex names / edge multiset), otherwise
// throws std::invalid_argument.  Returns true when every vertex of f emits
// either none or all of its e-edges.
bool is_complete_subquiver(const Quiver& f, const Quiver& e);

// Subquiver on the vertices reachable from a directed cycle, with every edge
// they emit.  Empty when q is acyclic.
Quiver tilde_quiver(const Quiver& q);

struct ReductionChain {
  // stages.front() is the cycle closure together with all sinks; each later
  // stage adds one vertex (added_vertex[i] names the vertex joining stage i+1)
  // with all of its outgoing edges; stages.back() equals the input quiver.
  std::vector<Quiver> stages;
  std::vector<std::string> added_vertex;
  // Number of sinks not reachable from any cycle.
  int ell = 0;
};

ReductionChain reduction_chain(const Quiver& q);

// counts(n, decl) = number of paths of length exactly n ending at the vertex;
// length 0 counts the vertex itself.
class PathCountTable {
 public:
  PathCountTable(std::vector<std::vector<Int>> counts) : counts_(std::move(counts)) {}
  const Int& count(int n, int decl) const { return counts_.at(n).at(decl); }
  int max_length() const { return static_cast<int>(counts_.size()) - 1; }

 private:
  std::vector<std::vector<Int>> counts_;  // [n][decl]
};

PathCountTable path_counts(const Quiver& q, int n_max);

// Dimension of the step-n finite-dimensional approximation algebra: a full
// matrix block of size (number of paths of length m ending in a sink) for
// every m < n, plus one block of size (number of paths of length n ending at
// i) for every vertex i.  counts must cover lengths up to n.
Int truncation_dimension(const Quiver& q, const PathCountTable& counts, int n);

}  // namespace leavitt
