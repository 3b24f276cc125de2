// Self-similar action on the (d+1)-ary tree behind cone subdivision:
// generator a cycles the last letter, generator b is the recursive
// boundary automorphism. Level-n Schreier graphs approximate the dual
// graphs of cd^n Delta_d up to d+1 loops; the facet labeling realizes the
// isomorphism explicitly.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "subspec/complex.hpp"

namespace subspec {

/// Letters 1..d+1; w[0] is the first letter, w.back() the last.
using Word = std::vector<int>;

/// Index of a word among X^n in reverse-lexicographic order (the last
/// letter is the most significant digit).
long long word_index(const Word& w, int d);
Word word_from_index(long long idx, int d, int n);

/// Applies the letter cycle alpha^k (alpha decrements a letter, wrapping
/// 1 to d+1) to the last letter. Requires 1 <= k <= d.
Word act_a(Word w, int k, int d);

/// The self-similar generator: b(w x) = a^{d+1-x}(w) (d+1-x) for
/// x != d+1, b(w (d+1)) = b(w) (d+1), and b fixes single letters (this
/// level-1 initial condition is what produces the d+1 loops).
Word act_b(Word w, int d);

/// Level-n Schreier graph of the group generated by {a, ..., a^d, b};
/// adjacency includes loop counts on the diagonal.
struct SchreierGraph {
    int d = 0, n = 0;
    Eigen::MatrixXi adjacency;
};

SchreierGraph build_schreier(int d, int n);

/// Loops stripped, all signs +1.
SignedGraph reduced(const SchreierGraph& g);
int loop_count(const SchreierGraph& g);

/// Facet addressing of the cone-subdivision tower: words over X = [d+1]
/// for the facets of each cd^m Delta_d, compatible with the tree's
/// parental map.
struct FacetLabeling {
    int d = 0, n = 0;
    /// words[m][j] addresses the j-th facet of cd^m Delta_d.
    std::vector<std::vector<Word>> words;
    /// The complexes cd^m Delta_d the labeling refers to.
    std::vector<Complex> levels;
};

FacetLabeling facet_labeling(int d, int n);

/// True iff the facet labeling maps the edge set of the d-dual graph of
/// cd^n Delta_d exactly onto the loop-free edges of the level-n Schreier
/// graph.
bool verify_approx(int d, int n);

/// lambda * sum_k rho(a^k) + rho(b) - mu * I; at lambda = 1 this is the
/// characteristic pencil of the level-n adjacency matrix.
Eigen::MatrixXd xi_pencil(int d, int n, double mu, double lambda);

/// Adjacency of the level-n Schreier graph assembled from the recursive
/// block description (antidiagonal powers of a, corner block b); equals
/// build_schreier's matrix under reverse-lexicographic indexing.
Eigen::MatrixXi xi_block_form(int d, int n);

/// Maximum admissible matrix order, overridable via SUBSPEC_SIZE_BUDGET.
long long size_budget();

}  // namespace subspec
