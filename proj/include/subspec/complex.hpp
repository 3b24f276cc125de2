// Oriented abstract simplicial complexes: boundary operators, up/down
// Laplacians, signed dual graphs, and gluing along vertex-induced
// subcomplexes.
//
// Conventions (fixed project-wide):
//   - A face is its strictly ascending vertex list; the ascending order is
//     the canonical orientation. Opposite orientations appear only as signs.
//   - Faces of each dimension are enumerated lexicographically, so every
//     matrix produced here is deterministic for a given complex.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace subspec {

/// Strictly ascending list of non-negative vertex ids.
using Face = std::vector<int>;

/// Sparse integer matrix as (row, col, value) triplets.
struct SignedSparseMatrix {
    struct Entry {
        int row, col, value;
    };
    int rows = 0, cols = 0;
    std::vector<Entry> entries;

    Eigen::MatrixXi dense() const;
};

/// Undirected signed graph with optional per-vertex loop multiplicities.
struct SignedGraph {
    struct Edge {
        int u, v;  // u < v
        int sign;  // +1 or -1
    };
    int n = 0;
    std::vector<Edge> edges;
    std::vector<int> loops;  // size n; loop multiplicity per vertex

    explicit SignedGraph(int n_ = 0) : n(n_), loops(n_, 0) {}
};

class Complex {
public:
    /// Downward closure of the given facets. Facets that are contained in
    /// other facets are absorbed silently. Throws on an empty facet list,
    /// an empty facet, negative ids, or repeated vertices within a facet.
    static Complex from_facets(const std::vector<Face>& facets);

    int dim() const { return static_cast<int>(faces_by_dim_.size()) - 1; }

    /// All i-faces in lexicographic order.
    const std::vector<Face>& faces(int i) const;
    int face_count(int i) const;
    std::vector<int> f_vector() const;

    /// Index of f among the i-faces, or -1 if absent; i = f.size()-1.
    int face_index(const Face& f) const;
    bool contains(const Face& f) const;

    /// Maximal faces (no coface), any dimension, in (dim, lex) order.
    std::vector<Face> maximal_faces() const;
    bool is_pure() const;

    /// Vertex ids present in the complex (ascending).
    std::vector<int> vertex_ids() const;
    int max_vertex_id() const;

private:
    std::vector<std::vector<Face>> faces_by_dim_;
    std::vector<std::map<Face, int>> index_by_dim_;
};

/// Matrix of the boundary operator from i-chains to (i-1)-chains with
/// respect to ascending orientations; entry for (tau minus its j-th vertex,
/// tau) is (-1)^j. Requires 1 <= i <= dim.
SignedSparseMatrix boundary_matrix(const Complex& K, int i);

/// B_i^t B_i on i-chains; symmetric PSD with constant diagonal i+1.
/// Requires 1 <= i <= dim.
Eigen::MatrixXi down_laplacian(const Complex& K, int i);

/// B_{i+1} B_{i+1}^t on i-chains; zero matrix when i = dim.
/// Requires 0 <= i <= dim.
Eigen::MatrixXi up_laplacian(const Complex& K, int i);

/// Up plus down (down term absent at i = 0). Requires 0 <= i <= dim.
Eigen::MatrixXi full_laplacian(const Complex& K, int i);

/// Graph on F_i(K) with an edge whenever two i-faces share an (i-1)-face;
/// edge sign is the product of the two induced-orientation coefficients on
/// the shared face. No loops. Requires 1 <= i <= dim.
SignedGraph dual_graph(const Complex& K, int i);

/// D + A with graph degrees on the diagonal (loops ignored).
Eigen::MatrixXi signed_laplacian(const SignedGraph& G);

/// (d+1) I + A: the constant-diagonal form that reproduces the d-down
/// Laplacian exactly when G is the d-dual graph of a complex.
Eigen::MatrixXi complex_laplacian_of_dual(const SignedGraph& G, int d);

/// Vertex identifications between two formally disjoint complexes.
struct GluingSpec {
    std::vector<std::pair<int, int>> pairs;  // (vertex of K, vertex of L)
};

struct GlueResult {
    Complex complex;
    std::vector<long long> relation_counts;  // r_i, i = 0..dim
    // Vertex relabeling into the glued complex. K keeps its ids; an
    // identified L vertex takes its partner's id, the rest are offset past
    // max(K ids).
    std::map<int, int> left_vertex_map;
    std::map<int, int> right_vertex_map;
};

/// Quotient of the disjoint union by the gluing relation. Throws if the
/// identification does not induce a simplicial isomorphism between the
/// vertex-induced subcomplexes on the two sides.
GlueResult glue(const Complex& K, const Complex& L, const GluingSpec& g);

}  // namespace subspec
