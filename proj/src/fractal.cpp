#include "subspec/fractal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "subspec/graph_iso.hpp"
#include "subspec/spectral.hpp"

namespace subspec {

int FractalData::degree(int v) const {
    int deg = 0;
    for (const auto& [a, b] : edges) deg += (a == v) + (b == v);
    return deg;
}

namespace {

Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

Perm compose(const Perm& f, const Perm& g) {  // (f o g)(x) = f(g(x))
    Perm h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
    return h;
}

void check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("fractal: ") + msg);
}

}  // namespace

FractalData derive_fractal_data(const Subdivision& kind, int d) {
    if (kind.kind == SubdivisionKind::Edgewise) {
        if (d != 2) throw std::invalid_argument("derive_fractal_data: edgewise requires d = 2");
    } else if (d < 2) {
        throw std::invalid_argument("derive_fractal_data: need d >= 2");
    }

    Face simplex(d + 1);
    std::iota(simplex.begin(), simplex.end(), 0);
    const Complex delta = Complex::from_facets({simplex});
    SubdivisionResult res = subdivide(delta, kind);
    const Complex& child = res.child;

    FractalData data;
    data.d = d;
    data.kind = kind;
    data.N = child.face_count(d);
    const auto& facets = child.faces(d);

    // Incidences of each facet: its (d-1)-faces are either interior
    // (shared with one other facet) or lie over a boundary face sigma_b of
    // Delta_d. The label of each incidence is decided per facet: boundary
    // incidences must carry their boundary index, interior ones take the
    // remaining labels in ascending order of the opposite vertex.
    std::vector<std::vector<int>> cofacets(child.face_count(d - 1));
    for (int t = 0; t < data.N; ++t) {
        for (size_t j = 0; j < facets[t].size(); ++j) {
            Face sub = facets[t];
            sub.erase(sub.begin() + j);
            cofacets[child.face_index(sub)].push_back(t);
        }
    }

    data.boundary.assign(d + 1, {});
    data.loop_labels.assign(data.N, {});
    std::vector<std::vector<int>> label_vertex(data.N, std::vector<int>(d + 1, -1));
    std::vector<std::map<int, int>> vertex_label(data.N);
    std::map<std::pair<int, int>, std::pair<Face, int>> edge_info;  // (i,j) -> (shared face, index)

    for (int t = 0; t < data.N; ++t) {
        std::vector<std::pair<int, int>> interior;  // (opposite vertex, other facet)
        std::vector<bool> label_used(d + 1, false);
        for (size_t j = 0; j < facets[t].size(); ++j) {
            Face sub = facets[t];
            const int opposite = sub[j];
            sub.erase(sub.begin() + j);
            const auto& cof = cofacets[child.face_index(sub)];
            check(cof.size() <= 2, "a (d-1)-face has more than two cofacets");
            if (cof.size() == 2) {
                interior.push_back({opposite, cof[0] == t ? cof[1] : cof[0]});
            } else {
                // Boundary: the carrier is the unique sigma_b containing it.
                const Face& carrier = res.carrier_of(d - 1, child.face_index(sub));
                check(static_cast<int>(carrier.size()) == d, "boundary carrier has wrong dimension");
                int b = 0;
                while (std::binary_search(carrier.begin(), carrier.end(), b)) ++b;
                check(!label_used[b], "two boundary faces of one facet over the same sigma_b");
                label_used[b] = true;
                data.loop_labels[t].push_back(b);
                label_vertex[t][b] = opposite;
                vertex_label[t][opposite] = b;
            }
        }
        std::sort(data.loop_labels[t].begin(), data.loop_labels[t].end());
        for (int b : data.loop_labels[t]) data.boundary[b].push_back(t);
        // Remaining labels for interior incidences, ascending opposite id.
        std::sort(interior.begin(), interior.end());
        int next_label = 0;
        for (const auto& [opposite, other] : interior) {
            while (label_used[next_label]) ++next_label;
            label_used[next_label] = true;
            label_vertex[t][next_label] = opposite;
            vertex_label[t][opposite] = next_label;
            if (t < other) {
                Face shared;
                std::set_intersection(facets[t].begin(), facets[t].end(), facets[other].begin(),
                                      facets[other].end(), std::back_inserter(shared));
                edge_info[{t, other}] = {shared, -1};
            }
        }
        check(static_cast<int>(interior.size()) + static_cast<int>(data.loop_labels[t].size()) ==
                  d + 1,
              "degree condition deg v + b_v = d+1 violated");
    }

    data.n = static_cast<int>(data.boundary[0].size());
    for (const auto& side : data.boundary)
        check(static_cast<int>(side.size()) == data.n, "boundary sets have unequal sizes");

    // Edges with labels and rho: labels of shared vertices correspond, the
    // two private apexes correspond.
    for (auto& [key, info] : edge_info) {
        const auto [i, j] = key;
        info.second = static_cast<int>(data.edges.size());
        data.edges.push_back({i, j});
        const Face& shared = info.first;
        int ai = -1, aj = -1;
        for (int v : facets[i])
            if (!std::binary_search(shared.begin(), shared.end(), v)) ai = v;
        for (int v : facets[j])
            if (!std::binary_search(shared.begin(), shared.end(), v)) aj = v;
        data.edge_labels.push_back({vertex_label[i].at(ai), vertex_label[j].at(aj)});
        Perm r(d + 1, -1);
        r[vertex_label[i].at(ai)] = vertex_label[j].at(aj);
        for (int v : shared) r[vertex_label[i].at(v)] = vertex_label[j].at(v);
        data.rho.push_back(r);
    }

    // S_{d+1} action through subdivision provenance.
    std::map<VertexProvenance, int> key_to_id;
    for (int v : child.vertex_ids()) key_to_id[res.provenance(v)] = v;
    Perm identity(d + 1);
    std::iota(identity.begin(), identity.end(), 0);
    Perm sigma = identity;
    do {
        data.group_index[sigma] = static_cast<int>(data.group.size());
        data.group.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    for (const Perm& g : data.group) {
        auto map_vertex = [&](int v) {
            VertexProvenance p = res.provenance(v);
            std::vector<std::pair<int, int>> img;
            for (size_t t = 0; t < p.parent.size(); ++t) img.push_back({g[p.parent[t]], p.weights[t]});
            std::sort(img.begin(), img.end());
            VertexProvenance q;
            for (const auto& [pv, pw] : img) {
                q.parent.push_back(pv);
                q.weights.push_back(pw);
            }
            auto it = key_to_id.find(q);
            check(it != key_to_id.end(), "vertex permutation does not extend to the subdivision");
            return it->second;
        };
        std::vector<int> act(data.N);
        for (int t = 0; t < data.N; ++t) {
            Face img;
            for (int v : facets[t]) img.push_back(map_vertex(v));
            std::sort(img.begin(), img.end());
            const int idx = child.face_index(img);
            check(idx >= 0, "facet image is not a facet");
            act[t] = idx;
        }
        data.action.push_back(act);

        // nu_{g,t}: labels of incidences at t map to labels at g t.
        std::vector<Perm> nus(data.N, Perm(d + 1, -1));
        for (int t = 0; t < data.N; ++t) {
            const int gt = act[t];
            for (int b : data.loop_labels[t]) nus[t][b] = g[b];
            for (size_t e = 0; e < data.edges.size(); ++e) {
                const auto [u, v] = data.edges[e];
                if (u != t && v != t) continue;
                const int other = u == t ? v : u;
                const int own_label = u == t ? data.edge_labels[e].first : data.edge_labels[e].second;
                const int gu = act[t], gv = act[other];
                const auto it = edge_info.find({std::min(gu, gv), std::max(gu, gv)});
                check(it != edge_info.end(), "action does not preserve edges");
                const int ge = it->second.second;
                nus[t][own_label] = data.edges[ge].first == gt ? data.edge_labels[ge].first
                                                               : data.edge_labels[ge].second;
            }
            check(std::find(nus[t].begin(), nus[t].end(), -1) == nus[t].end(),
                  "nu is not a full permutation");
            (void)gt;
        }
        data.nu.push_back(nus);
    }

    // Validation of the remaining structural conditions.
    for (int t = 0; t < data.N; ++t)
        check(data.degree(t) + static_cast<int>(data.loop_labels[t].size()) == d + 1,
              "degree condition violated");
    for (size_t gi = 0; gi < data.group.size(); ++gi) {
        const Perm& g = data.group[gi];
        // Boundary compatibility: g maps boundary b onto boundary g(b);
        // this covers both the transposition condition and stabilizer
        // invariance.
        for (int b = 0; b <= d; ++b) {
            std::vector<int> img;
            for (int v : data.boundary[b]) img.push_back(data.action[gi][v]);
            std::sort(img.begin(), img.end());
            check(img == data.boundary[g[b]], "boundary sets not action-compatible");
        }
        // rho equivariance: rho_{g i, g j} = nu_{g,j} rho_{ij} nu_{g,i}^{-1}.
        for (size_t e = 0; e < data.edges.size(); ++e) {
            const auto [i, j] = data.edges[e];
            const int gi_v = data.action[gi][i], gj_v = data.action[gi][j];
            auto it = edge_info.find({std::min(gi_v, gj_v), std::max(gi_v, gj_v)});
            check(it != edge_info.end(), "action does not preserve edges");
            const int ge = it->second.second;
            Perm rho_img = data.edges[ge].first == gi_v ? data.rho[ge] : inverse(data.rho[ge]);
            Perm expect = compose(data.nu[gi][j], compose(data.rho[e], inverse(data.nu[gi][i])));
            check(rho_img == expect, "rho is not equivariant under the action");
        }
    }
    // Group action: identity and composition.
    const int id_idx = data.group_index.at(identity);
    for (int t = 0; t < data.N; ++t) check(data.action[id_idx][t] == t, "identity acts non-trivially");
    for (size_t a = 0; a < data.group.size(); ++a) {
        for (size_t b = 0; b < data.group.size(); ++b) {
            const int ab = data.group_index.at(compose(data.group[a], data.group[b]));
            for (int t = 0; t < data.N; ++t)
                check(data.action[ab][t] == data.action[a][data.action[b][t]],
                      "action is not a homomorphism");
        }
    }
    return data;
}

LevelGraph level0(const FractalData& data) {
    LevelGraph g;
    g.k = 0;
    g.num_vertices = data.N;
    for (const auto& [u, v] : data.edges) g.edges.push_back({u, v});
    g.loop_labels = data.loop_labels;
    g.boundary.assign(data.boundary.size(), {});
    for (size_t b = 0; b < data.boundary.size(); ++b)
        g.boundary[b].assign(data.boundary[b].begin(), data.boundary[b].end());
    for (const auto& act : data.action) g.action.push_back({act.begin(), act.end()});
    return g;
}

namespace {

void validate_level(const LevelGraph& g, const FractalData& data) {
    const int d = data.d;
    std::vector<int> degree(g.num_vertices, 0);
    for (const auto& [u, v] : g.edges) {
        ++degree[u];
        ++degree[v];
    }
    for (long long x = 0; x < g.num_vertices; ++x)
        check(degree[x] + static_cast<int>(g.loop_labels[x].size()) == d + 1,
              "level graph is not (d+1)-regular with loops");

    std::set<std::pair<long long, long long>> edge_set(g.edges.begin(), g.edges.end());
    check(edge_set.size() == g.edges.size(), "duplicate edges in level graph");

    for (size_t gi = 0; gi < data.group.size(); ++gi) {
        const Perm& sigma = data.group[gi];
        const auto& act = g.action[gi];
        for (const auto& [u, v] : g.edges) {
            const long long x = std::min(act[u], act[v]), y = std::max(act[u], act[v]);
            check(edge_set.count({x, y}) > 0, "action does not preserve level edges");
        }
        for (long long x = 0; x < g.num_vertices; ++x) {
            std::vector<int> img;
            for (int b : g.loop_labels[x]) img.push_back(sigma[b]);
            std::sort(img.begin(), img.end());
            check(img == g.loop_labels[act[x]], "action does not preserve loops");
        }
        for (int b = 0; b <= d; ++b) {
            std::vector<long long> img;
            for (long long v : g.boundary[b]) img.push_back(act[v]);
            std::sort(img.begin(), img.end());
            check(img == g.boundary[sigma[b]], "level boundary sets not action-compatible");
        }
    }
}

}  // namespace

LevelGraph next_level(const LevelGraph& prev, const FractalData& data) {
    const int d = data.d;
    LevelGraph g;
    g.k = prev.k + 1;
    const long long M = prev.num_vertices;
    g.num_vertices = static_cast<long long>(data.N) * M;
    g.loop_labels.assign(g.num_vertices, {});

    for (int i = 0; i < data.N; ++i)
        for (const auto& [v, w] : prev.edges) g.edges.push_back({i * M + v, i * M + w});

    for (size_t e = 0; e < data.edges.size(); ++e) {
        const auto [i, j] = data.edges[e];
        const auto [li, lj] = data.edge_labels[e];
        const auto& act = prev.action[data.group_index.at(data.rho[e])];
        for (long long v : prev.boundary[li]) {
            const long long w = act[v];
            check(std::binary_search(prev.boundary[lj].begin(), prev.boundary[lj].end(), w),
                  "rho does not map boundary to boundary");
            g.edges.push_back({i * M + v, j * M + w});
        }
    }

    for (int i = 0; i < data.N; ++i)
        for (int b : data.loop_labels[i])
            for (long long v : prev.boundary[b]) g.loop_labels[i * M + v].push_back(b);
    for (auto& labels : g.loop_labels) std::sort(labels.begin(), labels.end());

    g.boundary.assign(d + 1, {});
    for (int b = 0; b <= d; ++b)
        for (int i : data.boundary[b])
            for (long long v : prev.boundary[b]) g.boundary[b].push_back(i * M + v);
    for (auto& side : g.boundary) std::sort(side.begin(), side.end());

    for (size_t gi = 0; gi < data.group.size(); ++gi) {
        std::vector<long long> act(g.num_vertices);
        for (int i = 0; i < data.N; ++i) {
            const auto& inner = prev.action[data.group_index.at(data.nu[gi][i])];
            const long long block = static_cast<long long>(data.action[gi][i]) * M;
            for (long long v = 0; v < M; ++v) act[i * M + v] = block + inner[v];
        }
        g.action.push_back(std::move(act));
    }

    validate_level(g, data);
    return g;
}

LevelGraph build_level(const FractalData& data, int k) {
    LevelGraph g = level0(data);
    for (int i = 0; i < k; ++i) g = next_level(g, data);
    return g;
}

long long total_loops(const LevelGraph& g) {
    long long total = 0;
    for (const auto& labels : g.loop_labels) total += static_cast<long long>(labels.size());
    return total;
}

bool verify_duality(const Subdivision& kind, int d, int k) {
    FractalData data = derive_fractal_data(kind, d);
    LevelGraph g = build_level(data, k);
    if (g.num_vertices > 200)
        throw std::invalid_argument("verify_duality: graph too large for isomorphism search");

    Face simplex(d + 1);
    std::iota(simplex.begin(), simplex.end(), 0);
    Complex K = iterate(kind, Complex::from_facets({simplex}), k + 1).back();
    SignedGraph dual = dual_graph(K, d);
    if (dual.n != g.num_vertices) return false;

    std::vector<std::pair<int, int>> ea, eb;
    for (const auto& [u, v] : g.edges) ea.push_back({static_cast<int>(u), static_cast<int>(v)});
    for (const auto& e : dual.edges) eb.push_back({e.u, e.v});

    // Spectral pre-filter: adjacency spectra must agree.
    auto adjacency = [](int n, const std::vector<std::pair<int, int>>& edges) {
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
        for (auto [u, v] : edges) A(u, v) = A(v, u) = 1;
        return A;
    };
    auto sa = eigenvalues_sym(adjacency(dual.n, ea)).eigenvalues;
    auto sb = eigenvalues_sym(adjacency(dual.n, eb)).eigenvalues;
    for (size_t i = 0; i < sa.size(); ++i)
        if (std::abs(sa[i] - sb[i]) > 1e-8) return false;

    return graphs_isomorphic(dual.n, ea, eb);
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> finitely_ramified_relation(
    const FractalData& data) {
    if (data.n != 1)
        throw std::invalid_argument("finitely_ramified_relation: requires singleton boundaries");
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> rel;
    for (size_t e = 0; e < data.edges.size(); ++e)
        rel.push_back({{data.edge_labels[e].first, data.edges[e].first},
                       {data.edge_labels[e].second, data.edges[e].second}});
    return rel;
}

}  // namespace subspec
