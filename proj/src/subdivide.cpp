#include "subspec/subdivide.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace subspec {

std::string Subdivision::name() const {
    switch (kind) {
        case SubdivisionKind::Cone: return "cd";
        case SubdivisionKind::Barycentric: return "sd";
        case SubdivisionKind::Edgewise: return "esd" + std::to_string(r);
    }
    return "?";
}

VertexProvenance SubdivisionResult::provenance(int vertex) const {
    auto it = new_vertex_provenance.find(vertex);
    if (it != new_vertex_provenance.end()) return it->second;
    return VertexProvenance{{vertex}, {1}};
}

Complex SubdivisionResult::restriction(const Face& tau) const {
    const int i = static_cast<int>(tau.size()) - 1;
    std::vector<Face> facets;
    for (size_t j = 0; j < carrier[i].size(); ++j) {
        if (std::includes(tau.begin(), tau.end(), carrier[i][j].begin(), carrier[i][j].end()))
            facets.push_back(child.faces(i)[j]);
    }
    if (facets.empty()) throw std::invalid_argument("restriction: not a parent face");
    return Complex::from_facets(facets);
}

namespace {

// Fills result.carrier from per-vertex supports: the carrier of a child
// face is the union of the parent supports of its vertices.
void carriers_from_supports(SubdivisionResult& res) {
    res.carrier.assign(res.child.dim() + 1, {});
    for (int i = 0; i <= res.child.dim(); ++i) {
        for (const Face& f : res.child.faces(i)) {
            Face support;
            for (int v : f) {
                const Face& p = res.new_vertex_provenance.count(v)
                                    ? res.new_vertex_provenance.at(v).parent
                                    : Face{v};
                support.insert(support.end(), p.begin(), p.end());
            }
            std::sort(support.begin(), support.end());
            support.erase(std::unique(support.begin(), support.end()), support.end());
            res.carrier[i].push_back(std::move(support));
        }
    }
}

}  // namespace

SubdivisionResult cone_subdivide(const Complex& K) {
    const int d = K.dim();
    if (d < 1) throw std::invalid_argument("cone_subdivide: dimension must be at least 1");
    if (!K.is_pure()) throw std::invalid_argument("cone_subdivide: complex is not pure");

    SubdivisionResult res;
    int next_id = K.max_vertex_id() + 1;
    std::vector<Face> facets;
    for (const Face& sigma : K.faces(d)) {
        const int apex = next_id++;
        res.new_vertex_provenance[apex] = {sigma, std::vector<int>(sigma.size(), 1)};
        for (size_t j = 0; j < sigma.size(); ++j) {
            Face facet = sigma;
            facet.erase(facet.begin() + j);
            facet.push_back(apex);  // apex id exceeds all old ids
            facets.push_back(std::move(facet));
        }
    }
    res.child = Complex::from_facets(facets);
    carriers_from_supports(res);
    return res;
}

SubdivisionResult barycentric_subdivide(const Complex& K) {
    if (K.dim() < 1) throw std::invalid_argument("barycentric_subdivide: dimension must be at least 1");

    SubdivisionResult res;
    // Barycenter ids: a vertex is its own barycenter; higher faces get
    // fresh ids in (dimension, lex) order.
    std::map<Face, int> bary;
    for (const Face& v : K.faces(0)) bary[v] = v[0];
    int next_id = K.max_vertex_id() + 1;
    for (int i = 1; i <= K.dim(); ++i) {
        for (const Face& f : K.faces(i)) {
            bary[f] = next_id;
            res.new_vertex_provenance[next_id] = {f, std::vector<int>(f.size(), 1)};
            ++next_id;
        }
    }

    // Facets of the flag complex: vertex orderings of maximal faces.
    std::vector<Face> facets;
    for (const Face& top : K.maximal_faces()) {
        std::vector<int> perm(top.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Face flag;
            Face prefix;
            for (int p : perm) {
                prefix.push_back(top[p]);
                Face sorted = prefix;
                std::sort(sorted.begin(), sorted.end());
                flag.push_back(bary.at(sorted));
            }
            std::sort(flag.begin(), flag.end());
            facets.push_back(std::move(flag));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    res.child = Complex::from_facets(facets);
    carriers_from_supports(res);
    return res;
}

SubdivisionResult edgewise_subdivide(const Complex& K, int r) {
    if (K.dim() > 2) throw std::invalid_argument("edgewise_subdivide: dimension must be at most 2");
    if (r < 2) throw std::invalid_argument("edgewise_subdivide: parameter r must be at least 2");

    SubdivisionResult res;
    if (K.dim() == 0) {
        res.child = Complex::from_facets(K.faces(0));
        carriers_from_supports(res);
        return res;
    }

    int next_id = K.max_vertex_id() + 1;
    // Interior points of each edge {u,v}: weight k on v, k = 1..r-1.
    std::map<Face, std::vector<int>> edge_ids;
    for (const Face& e : K.faces(1)) {
        auto& ids = edge_ids[e];
        for (int k = 1; k <= r - 1; ++k) {
            ids.push_back(next_id);
            res.new_vertex_provenance[next_id] = {e, {r - k, k}};
            ++next_id;
        }
    }
    // Interior lattice points of each triangle.
    std::map<std::pair<Face, std::vector<int>>, int> tri_ids;
    if (K.dim() == 2) {
        for (const Face& t : K.faces(2)) {
            for (int a = 1; a <= r - 2; ++a) {
                for (int b = 1; b <= r - 1 - a; ++b) {
                    const int c = r - a - b;
                    tri_ids[{t, {a, b, c}}] = next_id;
                    res.new_vertex_provenance[next_id] = {t, {a, b, c}};
                    ++next_id;
                }
            }
        }
    }

    std::vector<Face> facets;
    // Path subdivision of maximal edges; grid subdivision of triangles.
    auto edge_point = [&](const Face& e, int k) {  // weight k on e[1]
        if (k == 0) return e[0];
        if (k == r) return e[1];
        return edge_ids.at(e)[k - 1];
    };
    for (const Face& m : K.maximal_faces()) {
        if (m.size() == 1) {
            facets.push_back(m);
        } else if (m.size() == 2) {
            for (int k = 0; k < r; ++k)
                facets.push_back({std::min(edge_point(m, k), edge_point(m, k + 1)),
                                  std::max(edge_point(m, k), edge_point(m, k + 1))});
        } else {
            auto point = [&](int a, int b, int c) {
                if (a == r) return m[0];
                if (b == r) return m[1];
                if (c == r) return m[2];
                if (c == 0) return edge_point({m[0], m[1]}, b);
                if (b == 0) return edge_point({m[0], m[2]}, c);
                if (a == 0) return edge_point({m[1], m[2]}, c);
                return tri_ids.at({m, {a, b, c}});
            };
            for (int a = 0; a <= r - 1; ++a) {
                for (int b = 0; b <= r - 1 - a; ++b) {
                    const int c = r - 1 - a - b;
                    Face up{point(a + 1, b, c), point(a, b + 1, c), point(a, b, c + 1)};
                    std::sort(up.begin(), up.end());
                    facets.push_back(std::move(up));
                }
            }
            for (int a = 1; a <= r + 1; ++a) {
                for (int b = 1; b <= r + 1 - a; ++b) {
                    const int c = r + 1 - a - b;
                    if (c < 1) continue;
                    Face down{point(a - 1, b, c), point(a, b - 1, c), point(a, b, c - 1)};
                    std::sort(down.begin(), down.end());
                    facets.push_back(std::move(down));
                }
            }
        }
    }
    res.child = Complex::from_facets(facets);
    carriers_from_supports(res);
    return res;
}

SubdivisionResult subdivide(const Complex& K, const Subdivision& s) {
    switch (s.kind) {
        case SubdivisionKind::Cone: return cone_subdivide(K);
        case SubdivisionKind::Barycentric: return barycentric_subdivide(K);
        case SubdivisionKind::Edgewise: return edgewise_subdivide(K, s.r);
    }
    throw std::logic_error("subdivide: unknown kind");
}

std::vector<Complex> iterate(const Subdivision& s, const Complex& K, int n) {
    if (n < 0) throw std::invalid_argument("iterate: negative iteration count");
    std::vector<Complex> levels{K};
    for (int m = 0; m < n; ++m) levels.push_back(subdivide(levels.back(), s).child);
    return levels;
}

IterationTrace iterate_detailed(const Subdivision& s, const Complex& K, int n) {
    if (n < 0) throw std::invalid_argument("iterate: negative iteration count");
    IterationTrace trace{K, {}};
    for (int m = 0; m < n; ++m) trace.steps.push_back(subdivide(trace.level(m), s));
    return trace;
}

Rational q_ratio(const Subdivision& s, int d) {
    if (d < 1) throw std::invalid_argument("q_ratio: dimension must be at least 1");
    Face simplex(d + 1);
    std::iota(simplex.begin(), simplex.end(), 0);
    SubdivisionResult res = subdivide(Complex::from_facets({simplex}), s);
    const long long fd = res.child.face_count(d);
    // f_{d-1}(div) counted on the restriction to one boundary face.
    Face sigma(simplex.begin(), simplex.end() - 1);
    long long fdm1 = 0;
    for (const Face& c : res.carrier[d - 1])
        if (std::includes(sigma.begin(), sigma.end(), c.begin(), c.end())) ++fdm1;
    return Rational(fdm1, fd);
}

GluingSpec induced_gluing(const SubdivisionResult& divK, const SubdivisionResult& divL,
                          const GluingSpec& g) {
    std::map<int, int> phi(g.pairs.begin(), g.pairs.end());
    GluingSpec out;
    out.pairs = g.pairs;

    std::map<VertexProvenance, int> lookup;
    for (const auto& [id, prov] : divL.new_vertex_provenance) lookup[prov] = id;

    for (const auto& [id, prov] : divK.new_vertex_provenance) {
        bool inside = std::all_of(prov.parent.begin(), prov.parent.end(),
                                  [&](int v) { return phi.count(v); });
        if (!inside) continue;
        // Image face with weights realigned to its ascending order.
        std::vector<std::pair<int, int>> img;
        for (size_t t = 0; t < prov.parent.size(); ++t)
            img.push_back({phi.at(prov.parent[t]), prov.weights[t]});
        std::sort(img.begin(), img.end());
        VertexProvenance target;
        for (const auto& [v, w] : img) {
            target.parent.push_back(v);
            target.weights.push_back(w);
        }
        auto it = lookup.find(target);
        if (it == lookup.end())
            throw std::invalid_argument("induced_gluing: image face not subdivided on the other side");
        out.pairs.push_back({id, it->second});
    }
    return out;
}

}  // namespace subspec
