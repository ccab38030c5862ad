#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "leavitt/kreport.hpp"

namespace leavitt {

// Result of a self-check.  On failure, witness_json carries a self-contained
// reproduction bundle (input text, matrices, both computed sides, seed).
struct CheckOutcome {
  std::string name;
  bool passed = true;
  std::string detail;
  std::optional<std::string> witness_json;
};

// Confirms that the vertex matrix map and the edge matrix map have the same
// cokernel and kernel, over Z and over Z/m for each modulus, and that the
// incidence factorizations of both matrices hold.
CheckOutcome check_myn(const Quiver& q, const std::vector<Int>& moduli,
                       std::optional<unsigned long long> seed = std::nullopt);

// Confirms that every stage of the reduction chain yields the same K-theory
// pieces, and that the full quiver decomposes as the cycle closure plus one
// coefficient summand per cycle-free sink.  Degrees run over the table's
// explicit entries.
CheckOutcome check_reduction_invariance(const Quiver& q, const KTable& table,
                                        std::optional<unsigned long long> seed = std::nullopt);

// Re-derives the Smith form certificates: u*a*v == d, unimodularity, the
// divisibility chain, the determinant product, and agreement with the naive
// elimination below for small shapes.
CheckOutcome certify_snf(const IntMatrix& a,
                         std::optional<unsigned long long> seed = std::nullopt);

// Cross-checks the path-count recursion against explicit path enumeration and
// the dimension formula for lengths 0..n_max.
CheckOutcome check_dimension_tower(const Quiver& q, int n_max,
                                   std::optional<unsigned long long> seed = std::nullopt);

// Comparison-map prediction for the topological side.
struct GammaPrediction {
  std::optional<Int> det_value;  // det of the square transfer matrix if defined
  std::string det_display;       // decimal string, or an explanation when undefined
  std::string verdict;
  std::vector<std::string> hypothesis_trail;
};

GammaPrediction predict_gamma(const Quiver& q, const KTable& table);

// Independent Smith-form oracle: first-nonzero pivoting and plain Euclidean
// reduction, no balancing, factors only.  Deliberately limited to 8x8.
std::vector<Int> naive_smith_factors(const IntMatrix& a);

// Explicit edge-path enumeration (depth-first, one edge sequence at a time):
// result[n][decl] = number of paths of length n ending at the vertex.  The
// independent oracle for path_counts.
std::vector<std::vector<Int>> enumerate_path_counts(const Quiver& q, int n_max);

// Deterministic generators for randomized checks.
Quiver random_quiver(std::mt19937_64& rng, int max_vertices, int max_mult);
IntMatrix random_matrix(std::mt19937_64& rng, int max_dim, int max_abs);

// All quivers with 1..max_vertices vertices and every ordered vertex pair
// carrying 0..max_mult parallel edges.
std::vector<Quiver> enumerate_quivers(int max_vertices, int max_mult);

}  // namespace leavitt
