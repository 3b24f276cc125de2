#include "subspec/graph_iso.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace subspec {

namespace {

using AdjSets = std::vector<std::set<int>>;

AdjSets adjacency_sets(int n, const std::vector<std::pair<int, int>>& edges) {
    AdjSets adj(n);
    for (auto [u, v] : edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return adj;
}

// Signature: (degree, sorted multiset of neighbor degrees).
std::vector<std::pair<int, std::vector<int>>> signatures(const AdjSets& adj) {
    std::vector<std::pair<int, std::vector<int>>> sig(adj.size());
    for (size_t v = 0; v < adj.size(); ++v) {
        sig[v].first = static_cast<int>(adj[v].size());
        for (int u : adj[v]) sig[v].second.push_back(static_cast<int>(adj[u].size()));
        std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    return sig;
}

// Order vertices of A so that each one (after the first of a component)
// has a previously ordered neighbor; keeps the search tree shallow.
std::vector<int> search_order(const AdjSets& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> order;
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            int v = queue.front();
            queue.erase(queue.begin());
            order.push_back(v);
            for (int u : adj[v])
                if (!seen[u]) {
                    seen[u] = true;
                    queue.push_back(u);
                }
        }
    }
    return order;
}

bool extend(const AdjSets& A, const AdjSets& B, const std::vector<int>& order, size_t pos,
            std::vector<int>& map_ab, std::vector<bool>& used,
            const std::vector<std::pair<int, std::vector<int>>>& sig_a,
            const std::vector<std::pair<int, std::vector<int>>>& sig_b) {
    if (pos == order.size()) return true;
    const int a = order[pos];
    for (int b = 0; b < static_cast<int>(B.size()); ++b) {
        if (used[b] || sig_a[a] != sig_b[b]) continue;
        bool ok = true;
        for (int u : A[a]) {
            if (map_ab[u] >= 0 && !B[b].count(map_ab[u])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            // Mapped neighbors of b must be neighbors of a.
            for (int w : B[b]) {
                auto it = std::find(map_ab.begin(), map_ab.end(), w);
                if (it != map_ab.end() && !A[a].count(static_cast<int>(it - map_ab.begin()))) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        map_ab[a] = b;
        used[b] = true;
        if (extend(A, B, order, pos + 1, map_ab, used, sig_a, sig_b)) return true;
        map_ab[a] = -1;
        used[b] = false;
    }
    return false;
}

}  // namespace

bool graphs_isomorphic(int n, const std::vector<std::pair<int, int>>& edges_a,
                       const std::vector<std::pair<int, int>>& edges_b) {
    if (edges_a.size() != edges_b.size()) return false;
    AdjSets A = adjacency_sets(n, edges_a), B = adjacency_sets(n, edges_b);
    auto sig_a = signatures(A), sig_b = signatures(B);
    auto sorted_a = sig_a, sorted_b = sig_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;
    std::vector<int> map_ab(n, -1);
    std::vector<bool> used(n, false);
    return extend(A, B, search_order(A), 0, map_ab, used, sig_a, sig_b);
}

namespace {

// Per-vertex profile: for each dimension, the number of faces containing
// the vertex.
std::map<int, std::vector<int>> vertex_profiles(const Complex& K) {
    std::map<int, std::vector<int>> prof;
    for (int v : K.vertex_ids()) prof[v] = std::vector<int>(K.dim() + 1, 0);
    for (int i = 0; i <= K.dim(); ++i)
        for (const Face& f : K.faces(i))
            for (int v : f) ++prof[v][i];
    return prof;
}

struct ComplexIsoSearch {
    const Complex& A;
    const Complex& B;
    std::vector<int> va, vb;                 // vertex ids
    std::map<int, std::vector<int>> pa, pb;  // profiles
    std::map<int, int> assign;               // A vertex -> B vertex
    std::set<int> used;

    bool run() {
        if (va.size() != vb.size()) return false;
        return extend(0);
    }

    bool extend(size_t pos) {
        if (pos == va.size()) return check_full();
        const int a = va[pos];
        for (int b : vb) {
            if (used.count(b) || pa.at(a) != pb.at(b)) continue;
            assign[a] = b;
            used.insert(b);
            if (consistent(pos) && extend(pos + 1)) return true;
            assign.erase(a);
            used.erase(b);
        }
        return false;
    }

    // Faces of A with all vertices assigned must map into faces of B.
    bool consistent(size_t pos) {
        const int a = va[pos];
        for (int i = 1; i <= A.dim(); ++i) {
            for (const Face& f : A.faces(i)) {
                if (std::find(f.begin(), f.end(), a) == f.end()) continue;
                Face img;
                bool full = true;
                for (int v : f) {
                    auto it = assign.find(v);
                    if (it == assign.end()) {
                        full = false;
                        break;
                    }
                    img.push_back(it->second);
                }
                if (!full) continue;
                std::sort(img.begin(), img.end());
                if (!B.contains(img)) return false;
            }
        }
        return true;
    }

    bool check_full() {
        for (int i = 0; i <= A.dim(); ++i) {
            for (const Face& f : A.faces(i)) {
                Face img;
                for (int v : f) img.push_back(assign.at(v));
                std::sort(img.begin(), img.end());
                if (!B.contains(img)) return false;
            }
        }
        return true;
    }
};

}  // namespace

bool complexes_isomorphic(const Complex& A, const Complex& B) {
    if (A.dim() != B.dim() || A.f_vector() != B.f_vector()) return false;
    ComplexIsoSearch search{A, B, A.vertex_ids(), B.vertex_ids(),
                            vertex_profiles(A), vertex_profiles(B), {}, {}};
    return search.run();
}

}  // namespace subspec
