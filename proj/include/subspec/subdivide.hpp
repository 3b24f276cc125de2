// Inclusion-uniform subdivision procedures with carrier maps: cone
// subdivision (facets replaced by the cone over their boundary),
// barycentric subdivision (flag complex), and edgewise subdivision of
// dimension <= 2 complexes (triangular grid with parameter r).
//
// New vertices get fresh ids (next unused integer) in a deterministic
// order, and each records the parent face it subdivides together with its
// barycentric weights there, so vertex permutations of the parent extend
// to the child combinatorially.

#pragma once

#include <map>
#include <vector>

#include "subspec/complex.hpp"
#include "subspec/rational.hpp"

namespace subspec {

enum class SubdivisionKind { Cone, Barycentric, Edgewise };

struct Subdivision {
    SubdivisionKind kind;
    int r = 0;  // edgewise parameter, >= 2

    static Subdivision cone() { return {SubdivisionKind::Cone, 0}; }
    static Subdivision barycentric() { return {SubdivisionKind::Barycentric, 0}; }
    static Subdivision edgewise(int r) { return {SubdivisionKind::Edgewise, r}; }

    std::string name() const;
};

/// Where a subdivision vertex sits: integer barycentric weights on the
/// parent face (aligned with the ascending parent vertex list). Original
/// vertices carry parent = {v}, weights = {1}.
struct VertexProvenance {
    Face parent;
    std::vector<int> weights;

    friend bool operator<(const VertexProvenance& a, const VertexProvenance& b) {
        return std::tie(a.parent, a.weights) < std::tie(b.parent, b.weights);
    }
    friend bool operator==(const VertexProvenance& a, const VertexProvenance& b) {
        return a.parent == b.parent && a.weights == b.weights;
    }
};

struct SubdivisionResult {
    Complex child;
    /// carrier[i][j] = smallest parent face containing the j-th i-face of
    /// the child.
    std::vector<std::vector<Face>> carrier;
    /// Provenance of vertices created by the subdivision (old vertices are
    /// absent; they map to themselves).
    std::map<int, VertexProvenance> new_vertex_provenance;

    const Face& carrier_of(int i, int index) const { return carrier[i][index]; }
    VertexProvenance provenance(int vertex) const;

    /// Vertices of the child lying over tau (carrier contained in tau).
    /// Returns the restricted subcomplex div_K(tau) with child vertex ids.
    Complex restriction(const Face& tau) const;
};

/// Replaces every facet sigma of a pure complex (dim >= 1) by the cone of
/// a fresh vertex over the boundary of sigma. Non-pure input is rejected.
SubdivisionResult cone_subdivide(const Complex& K);

/// Flag complex of K (dim >= 1): vertices are barycenters of faces,
/// simplices are chains of faces.
SubdivisionResult barycentric_subdivide(const Complex& K);

/// Triangular-grid subdivision for dim <= 2, r >= 2: each edge splits into
/// r segments, each triangle into r^2 triangles.
SubdivisionResult edgewise_subdivide(const Complex& K, int r);

SubdivisionResult subdivide(const Complex& K, const Subdivision& s);

/// [K_0, ..., K_n] with K_0 = K.
std::vector<Complex> iterate(const Subdivision& s, const Complex& K, int n);

struct IterationTrace {
    Complex initial;
    std::vector<SubdivisionResult> steps;  // steps[m] subdivides level m
    const Complex& level(int m) const { return m == 0 ? initial : steps[m - 1].child; }
};
IterationTrace iterate_detailed(const Subdivision& s, const Complex& K, int n);

/// Exact facet-count ratio f_{d-1}(div) / f_d(div) of the subdivision
/// scheme, computed from div Delta_d and its restriction to a boundary
/// face. Strictly below 1 for the implemented kinds.
Rational q_ratio(const Subdivision& s, int d);

/// The gluing of div K and div L induced by a gluing of K and L with
/// r_d = 0 (old vertices pair via the original map, subdivision vertices
/// pair when their parent faces correspond). Supported for cone and
/// barycentric subdivisions.
GluingSpec induced_gluing(const SubdivisionResult& divK, const SubdivisionResult& divL,
                          const GluingSpec& g);

}  // namespace subspec
