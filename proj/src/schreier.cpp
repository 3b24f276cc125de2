#include "subspec/schreier.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include "subspec/subdivide.hpp"

namespace subspec {

long long size_budget() {
    if (const char* env = std::getenv("SUBSPEC_SIZE_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 3000;
}

long long word_index(const Word& w, int d) {
    long long idx = 0, base = 1;
    for (int letter : w) {
        idx += static_cast<long long>(letter - 1) * base;
        base *= d + 1;
    }
    return idx;
}

Word word_from_index(long long idx, int d, int n) {
    Word w(n);
    for (int k = 0; k < n; ++k) {
        w[k] = static_cast<int>(idx % (d + 1)) + 1;
        idx /= d + 1;
    }
    return w;
}

namespace {
// alpha = ((d+1) d ... 2 1): each letter maps to its predecessor, 1 wraps
// to d+1. alpha^k subtracts k modulo d+1.
int alpha_pow(int x, int k, int d) { return (x - 1 - k % (d + 1) + (d + 1)) % (d + 1) + 1; }
}  // namespace

Word act_a(Word w, int k, int d) {
    if (w.empty()) throw std::invalid_argument("act_a: empty word");
    if (k < 1 || k > d) throw std::invalid_argument("act_a: power out of range");
    w.back() = alpha_pow(w.back(), k, d);
    return w;
}

Word act_b(Word w, int d) {
    if (w.empty()) throw std::invalid_argument("act_b: empty word");
    if (w.size() == 1) return w;
    const int x = w.back();
    Word prefix(w.begin(), w.end() - 1);
    if (x == d + 1) {
        Word out = act_b(std::move(prefix), d);
        out.push_back(d + 1);
        return out;
    }
    Word out = act_a(std::move(prefix), d + 1 - x, d);
    out.push_back(d + 1 - x);
    return out;
}

SchreierGraph build_schreier(int d, int n) {
    if (d < 1 || n < 1) throw std::invalid_argument("build_schreier: need d >= 1, n >= 1");
    long long size = 1;
    for (int i = 0; i < n; ++i) {
        size *= d + 1;
        if (size > size_budget()) throw std::invalid_argument("build_schreier: size budget exceeded");
    }
    SchreierGraph g{d, n, Eigen::MatrixXi::Zero(size, size)};
    for (long long idx = 0; idx < size; ++idx) {
        Word w = word_from_index(idx, d, n);
        for (int k = 1; k <= d; ++k) g.adjacency(word_index(act_a(w, k, d), d), idx) += 1;
        g.adjacency(word_index(act_b(w, d), d), idx) += 1;
    }
    return g;
}

SignedGraph reduced(const SchreierGraph& g) {
    SignedGraph out(static_cast<int>(g.adjacency.rows()));
    for (int u = 0; u < out.n; ++u)
        for (int v = u + 1; v < out.n; ++v)
            if (g.adjacency(u, v) != 0) out.edges.push_back({u, v, 1});
    return out;
}

int loop_count(const SchreierGraph& g) { return g.adjacency.diagonal().sum(); }

namespace {

// Cofacet indices of every (d-1)-face of K.
std::vector<std::vector<int>> cofacet_table(const Complex& K) {
    const int d = K.dim();
    std::vector<std::vector<int>> cof(K.face_count(d - 1));
    const auto& facets = K.faces(d);
    for (int t = 0; t < static_cast<int>(facets.size()); ++t) {
        for (size_t j = 0; j < facets[t].size(); ++j) {
            Face sub = facets[t];
            sub.erase(sub.begin() + j);
            cof[K.face_index(sub)].push_back(t);
        }
    }
    return cof;
}

}  // namespace

FacetLabeling facet_labeling(int d, int n) {
    if (d < 1 || n < 0) throw std::invalid_argument("facet_labeling: need d >= 1, n >= 0");
    Face simplex(d + 1);
    for (int i = 0; i <= d; ++i) simplex[i] = i;
    IterationTrace trace = iterate_detailed(Subdivision::cone(), Complex::from_facets({simplex}), n);

    FacetLabeling lab;
    lab.d = d;
    lab.n = n;
    lab.levels.push_back(trace.initial);
    for (const auto& step : trace.steps) lab.levels.push_back(step.child);
    lab.words.resize(n + 1);
    lab.words[0] = {Word{}};

    for (int m = 1; m <= n; ++m) {
        const Complex& K = lab.levels[m];
        const Complex& P = lab.levels[m - 1];
        const SubdivisionResult& step = trace.steps[m - 1];
        const auto cof = cofacet_table(P);
        const auto& facets = K.faces(d);
        lab.words[m].resize(facets.size());

        // Map each parent facet to its index and carrier chain.
        for (int t = 0; t < static_cast<int>(facets.size()); ++t) {
            const Face& parent = step.carrier_of(d, t);
            const int parent_idx = P.face_index(parent);
            int letter;
            if (m == 1) {
                // Arbitrary level-1 labeling, fixed to enumeration order.
                letter = t + 1;
            } else {
                // The outward face of the facet: everything except the apex.
                Face sigma;
                for (int v : facets[t])
                    if (!step.new_vertex_provenance.count(v)) sigma.push_back(v);
                const auto& cofs = cof[P.face_index(sigma)];
                if (cofs.size() == 1) {
                    letter = d + 1;  // boundary face
                } else {
                    const int other = cofs[0] == parent_idx ? cofs[1] : cofs[0];
                    const SubdivisionResult& prev = trace.steps[m - 2];
                    if (prev.carrier_of(d, other) == prev.carrier_of(d, parent_idx)) {
                        // Interior to a common grandparent facet: letter is the
                        // cyclic offset between the sibling labels.
                        const int own = lab.words[m - 1][parent_idx].back();
                        const int nb = lab.words[m - 1][other].back();
                        letter = (nb - own + (d + 1)) % (d + 1);
                    } else {
                        letter = d + 1;
                    }
                }
            }
            Word w = lab.words[m - 1][parent_idx];
            w.push_back(letter);
            lab.words[m][t] = std::move(w);
        }

        // Sanity: the labeling is a bijection compatible with the parental map.
        std::set<long long> seen;
        for (int t = 0; t < static_cast<int>(facets.size()); ++t) {
            if (!seen.insert(word_index(lab.words[m][t], d)).second)
                throw std::logic_error("facet_labeling: labeling is not injective");
            Word parent_word(lab.words[m][t].begin(), lab.words[m][t].end() - 1);
            const int parent_idx = P.face_index(step.carrier_of(d, t));
            if (parent_word != lab.words[m - 1][parent_idx])
                throw std::logic_error("facet_labeling: parental compatibility violated");
        }
    }
    return lab;
}

bool verify_approx(int d, int n) {
    FacetLabeling lab = facet_labeling(d, n);
    const Complex& K = lab.levels[n];
    SignedGraph gamma = dual_graph(K, d);
    std::set<std::pair<long long, long long>> dual_edges;
    for (const auto& e : gamma.edges) {
        long long a = word_index(lab.words[n][e.u], d);
        long long b = word_index(lab.words[n][e.v], d);
        dual_edges.insert({std::min(a, b), std::max(a, b)});
    }
    SignedGraph red = reduced(build_schreier(d, n));
    std::set<std::pair<long long, long long>> schreier_edges;
    for (const auto& e : red.edges) schreier_edges.insert({e.u, e.v});
    return dual_edges == schreier_edges;
}

namespace {

// rho(a^k) at level n under reverse-lexicographic indexing.
Eigen::MatrixXi rho_a_pow(int d, int n, int k) {
    long long size = 1;
    for (int i = 0; i < n; ++i) size *= d + 1;
    const long long block = size / (d + 1);
    Eigen::MatrixXi M = Eigen::MatrixXi::Zero(size, size);
    for (int x = 1; x <= d + 1; ++x) {
        const int y = alpha_pow(x, k, d);
        for (long long j = 0; j < block; ++j)
            M((y - 1) * block + j, (x - 1) * block + j) = 1;
    }
    return M;
}

Eigen::MatrixXi rho_b_blocks(int d, int n) {
    if (n == 1) return Eigen::MatrixXi::Identity(d + 1, d + 1);
    long long size = 1;
    for (int i = 0; i < n; ++i) size *= d + 1;
    const long long block = size / (d + 1);
    Eigen::MatrixXi M = Eigen::MatrixXi::Zero(size, size);
    for (int x = 1; x <= d; ++x) {
        Eigen::MatrixXi inner = rho_a_pow(d, n - 1, d + 1 - x);
        M.block((d + 1 - x - 1) * block, (x - 1) * block, block, block) = inner;
    }
    M.block(d * block, d * block, block, block) = rho_b_blocks(d, n - 1);
    return M;
}

}  // namespace

Eigen::MatrixXd xi_pencil(int d, int n, double mu, double lambda) {
    long long size = 1;
    for (int i = 0; i < n; ++i) size *= d + 1;
    if (size > size_budget()) throw std::invalid_argument("xi_pencil: size budget exceeded");
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(size, size) * (-mu);
    for (long long idx = 0; idx < size; ++idx) {
        Word w = word_from_index(idx, d, n);
        for (int k = 1; k <= d; ++k) M(word_index(act_a(w, k, d), d), idx) += lambda;
        M(word_index(act_b(w, d), d), idx) += 1.0;
    }
    return M;
}

Eigen::MatrixXi xi_block_form(int d, int n) {
    long long size = 1;
    for (int i = 0; i < n; ++i) size *= d + 1;
    const long long block = size / (d + 1);
    Eigen::MatrixXi M = rho_b_blocks(d, n);
    // (J - I) tensor identity: the d powers of a acting on the last letter.
    for (int x = 0; x <= d; ++x)
        for (int y = 0; y <= d; ++y)
            if (x != y)
                for (long long j = 0; j < block; ++j) M(y * block + j, x * block + j) += 1;
    return M;
}

}  // namespace subspec
