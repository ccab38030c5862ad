#pragma once

#include "leavitt/int_matrix.hpp"
#include "leavitt/quiver.hpp"

namespace leavitt {

// All builders index vertices by the quiver's sinks-first ordering and edges
// by edge_order(): edges sorted by (source position, target position).

// Vertex adjacency N': entry (i, j) = number of edges from vertex i to j.
// Sinks come first, so the first sink_count() rows are zero.
IntMatrix adjacency_matrix(const Quiver& q);

// Edge adjacency M: entry (a, b) = 1 when edge b starts where edge a ends.
IntMatrix edge_matrix(const Quiver& q);

// The K-theory transfer map as a rectangular matrix of shape
// vertex_count() x (vertex_count() - sink_count()): the identity block on
// non-sink columns minus the transpose of N' with sink columns removed.
// For a sink-free quiver this is the square matrix I - N'^t.
IntMatrix one_minus_nt(const Quiver& q);

// Positional order of edges used by edge_matrix: indices into q.edges().
std::vector<int> edge_order(const Quiver& q);

// Incidence factors: range_pullback has a 1 at (edge a, vertex j) when a ends
// at j; source_pushforward has a 1 at (vertex i, edge a) when a starts at i.
// They satisfy source_pushforward * range_pullback == adjacency_matrix and
// range_pullback * source_pushforward == edge_matrix.
IntMatrix range_pullback(const Quiver& q);
IntMatrix source_pushforward(const Quiver& q);

// I - a for a square matrix.
IntMatrix one_minus(const IntMatrix& a);

}  // namespace leavitt
