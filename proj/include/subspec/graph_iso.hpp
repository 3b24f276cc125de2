// Backtracking isomorphism tests for small simple graphs and simplicial
// complexes, with degree-profile pruning. Intended for the verification
// searches in this project (at most a couple hundred vertices).

#pragma once

#include <utility>
#include <vector>

#include "subspec/complex.hpp"

namespace subspec {

/// Isomorphism of simple undirected graphs on n vertices given by edge
/// lists (no loops, no multi-edges).
bool graphs_isomorphic(int n, const std::vector<std::pair<int, int>>& edges_a,
                       const std::vector<std::pair<int, int>>& edges_b);

/// Simplicial isomorphism: a vertex bijection carrying the face set of A
/// onto the face set of B.
bool complexes_isomorphic(const Complex& A, const Complex& B);

}  // namespace subspec
