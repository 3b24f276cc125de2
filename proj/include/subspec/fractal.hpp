// Self-similar graph sequence dualizing iterated subdivision: the input
// data (dual graph of div Delta_d with boundary loops, incidence labels
// kappa, edge bijections rho, and the S_{d+1} action), the level
// iteration, and the duality verification against actual dual graphs.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "subspec/complex.hpp"
#include "subspec/subdivide.hpp"

namespace subspec {

using Perm = std::vector<int>;  // permutation of {0..d}

struct FractalData {
    int d = 0;   // dimension
    int n = 0;   // boundary set size f_{d-1}(div)
    int N = 0;   // vertex count f_d(div)
    Subdivision kind{SubdivisionKind::Cone, 0};

    // Gamma_0: the d-dual graph of div Delta_d, made (d+1)-regular by one
    // loop per boundary incidence.
    std::vector<std::pair<int, int>> edges;     // u < v
    std::vector<std::vector<int>> loop_labels;  // per vertex: sorted boundary indices
    std::vector<std::vector<int>> boundary;     // boundary[b]: sorted vertices of d_b Gamma_0

    // kappa: the label of each incidence. For the edge e = edges[t],
    // edge_labels[t] = (kappa at e.first, kappa at e.second); a loop for
    // boundary b carries label b by definition.
    std::vector<std::pair<int, int>> edge_labels;
    // rho[t]: bijection of {0..d} mapping labels at edges[t].first to
    // labels at edges[t].second (inverse gives the other direction).
    std::vector<Perm> rho;

    // S_{d+1} acting on Gamma_0 through the extension of vertex
    // permutations of Delta_d to the subdivision.
    std::vector<Perm> group;                 // all permutations, lex order
    std::map<Perm, int> group_index;
    std::vector<std::vector<int>> action;    // action[g][v]
    std::vector<std::vector<Perm>> nu;       // nu[g][v]: label permutation at v

    int degree(int v) const;
};

/// Builds and validates the construction data for a subdivision kind
/// (cone/barycentric with d >= 2, edgewise with d = 2). Every structural
/// invariant is checked; violations throw.
FractalData derive_fractal_data(const Subdivision& kind, int d);

struct LevelGraph {
    int k = -1;
    long long num_vertices = 0;  // N^{k+1}, vertex (i, v) at index i*|prev| + v
    std::vector<std::pair<long long, long long>> edges;
    std::vector<std::vector<int>> loop_labels;        // per vertex
    std::vector<std::vector<long long>> boundary;     // (d+1) sorted lists
    std::vector<std::vector<long long>> action;       // per group element
};

/// Gamma_0 as a level graph.
LevelGraph level0(const FractalData& data);

/// One construction step: N blocks of the previous level, cross edges
/// where Gamma_0 has an edge (joined through rho over the action), loops
/// kept at boundary slots that stay on the global boundary. Validates
/// regularity, boundary compatibility, and action equivariance.
LevelGraph next_level(const LevelGraph& prev, const FractalData& data);

LevelGraph build_level(const FractalData& data, int k);

long long total_loops(const LevelGraph& g);

/// True iff the loop-stripped level-k graph is isomorphic to the d-dual
/// graph of div^{k+1} Delta_d (spectral pre-filter, then backtracking).
bool verify_duality(const Subdivision& kind, int d, int k);

/// For finitely ramified data (n = 1): the relation on [d+1] x [N]
/// generated by (kappa_i(e), i) ~ (kappa_j(e), j) over edges e = {i, j}.
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> finitely_ramified_relation(
    const FractalData& data);

}  // namespace subspec
