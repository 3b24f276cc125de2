#include "subspec/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace subspec {

Eigen::MatrixXi SignedSparseMatrix::dense() const {
    Eigen::MatrixXi M = Eigen::MatrixXi::Zero(rows, cols);
    for (const Entry& e : entries) M(e.row, e.col) += e.value;
    return M;
}

Complex Complex::from_facets(const std::vector<Face>& facets) {
    if (facets.empty()) throw std::invalid_argument("from_facets: empty facet list");
    std::vector<std::set<Face>> sets;
    for (const Face& input : facets) {
        if (input.empty()) throw std::invalid_argument("from_facets: empty facet");
        Face f = input;
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("from_facets: repeated vertex in facet");
        if (f.front() < 0) throw std::invalid_argument("from_facets: negative vertex id");
        const int s = static_cast<int>(f.size());
        if (static_cast<int>(sets.size()) < s) sets.resize(s);
        // Insert all non-empty subsets (downward closure).
        for (unsigned mask = 1; mask < (1u << s); ++mask) {
            Face sub;
            for (int j = 0; j < s; ++j)
                if (mask & (1u << j)) sub.push_back(f[j]);
            sets[sub.size() - 1].insert(std::move(sub));
        }
    }
    Complex K;
    K.faces_by_dim_.resize(sets.size());
    K.index_by_dim_.resize(sets.size());
    for (size_t i = 0; i < sets.size(); ++i) {
        K.faces_by_dim_[i].assign(sets[i].begin(), sets[i].end());
        for (size_t j = 0; j < K.faces_by_dim_[i].size(); ++j)
            K.index_by_dim_[i].emplace(K.faces_by_dim_[i][j], static_cast<int>(j));
    }
    return K;
}

const std::vector<Face>& Complex::faces(int i) const {
    if (i < 0 || i > dim()) throw std::out_of_range("Complex::faces: dimension out of range");
    return faces_by_dim_[i];
}

int Complex::face_count(int i) const {
    if (i < 0 || i > dim()) return 0;
    return static_cast<int>(faces_by_dim_[i].size());
}

std::vector<int> Complex::f_vector() const {
    std::vector<int> f;
    for (const auto& fs : faces_by_dim_) f.push_back(static_cast<int>(fs.size()));
    return f;
}

int Complex::face_index(const Face& f) const {
    const int i = static_cast<int>(f.size()) - 1;
    if (i < 0 || i > dim()) return -1;
    auto it = index_by_dim_[i].find(f);
    return it == index_by_dim_[i].end() ? -1 : it->second;
}

bool Complex::contains(const Face& f) const { return face_index(f) >= 0; }

std::vector<Face> Complex::maximal_faces() const {
    std::vector<Face> out;
    for (int i = 0; i <= dim(); ++i) {
        std::vector<bool> has_coface(faces_by_dim_[i].size(), false);
        if (i + 1 <= dim()) {
            for (const Face& f : faces_by_dim_[i + 1]) {
                for (size_t j = 0; j < f.size(); ++j) {
                    Face sub = f;
                    sub.erase(sub.begin() + j);
                    has_coface[index_by_dim_[i].at(sub)] = true;
                }
            }
        }
        for (size_t j = 0; j < faces_by_dim_[i].size(); ++j)
            if (!has_coface[j]) out.push_back(faces_by_dim_[i][j]);
    }
    return out;
}

bool Complex::is_pure() const {
    for (const Face& f : maximal_faces())
        if (static_cast<int>(f.size()) - 1 != dim()) return false;
    return true;
}

std::vector<int> Complex::vertex_ids() const {
    std::vector<int> ids;
    for (const Face& f : faces_by_dim_[0]) ids.push_back(f[0]);
    return ids;
}

int Complex::max_vertex_id() const { return faces_by_dim_[0].back()[0]; }

SignedSparseMatrix boundary_matrix(const Complex& K, int i) {
    if (i < 1 || i > K.dim()) throw std::out_of_range("boundary_matrix: dimension out of range");
    SignedSparseMatrix B;
    B.rows = K.face_count(i - 1);
    B.cols = K.face_count(i);
    const auto& faces = K.faces(i);
    for (int c = 0; c < static_cast<int>(faces.size()); ++c) {
        const Face& tau = faces[c];
        int sign = 1;
        for (size_t j = 0; j < tau.size(); ++j) {
            Face sub = tau;
            sub.erase(sub.begin() + j);
            B.entries.push_back({K.face_index(sub), c, sign});
            sign = -sign;
        }
    }
    return B;
}

Eigen::MatrixXi down_laplacian(const Complex& K, int i) {
    SignedSparseMatrix B = boundary_matrix(K, i);
    // Gram matrix B^t B accumulated row by row; each row of B holds the
    // coface incidences of one (i-1)-face.
    std::vector<std::vector<std::pair<int, int>>> rows(B.rows);
    for (const auto& e : B.entries) rows[e.row].push_back({e.col, e.value});
    Eigen::MatrixXi L = Eigen::MatrixXi::Zero(B.cols, B.cols);
    for (const auto& row : rows)
        for (const auto& [c1, v1] : row)
            for (const auto& [c2, v2] : row) L(c1, c2) += v1 * v2;
    return L;
}

Eigen::MatrixXi up_laplacian(const Complex& K, int i) {
    if (i < 0 || i > K.dim()) throw std::out_of_range("up_laplacian: dimension out of range");
    const int n = K.face_count(i);
    Eigen::MatrixXi L = Eigen::MatrixXi::Zero(n, n);
    if (i == K.dim()) return L;
    SignedSparseMatrix B = boundary_matrix(K, i + 1);
    std::vector<std::vector<std::pair<int, int>>> cols(B.cols);
    for (const auto& e : B.entries) cols[e.col].push_back({e.row, e.value});
    for (const auto& col : cols)
        for (const auto& [r1, v1] : col)
            for (const auto& [r2, v2] : col) L(r1, r2) += v1 * v2;
    return L;
}

Eigen::MatrixXi full_laplacian(const Complex& K, int i) {
    Eigen::MatrixXi L = up_laplacian(K, i);
    if (i >= 1) L += down_laplacian(K, i);
    return L;
}

namespace {

// Coefficient of the oriented (i-1)-face nu in the boundary of tau:
// (-1)^j where j is the position of the vertex tau \ nu within tau.
int boundary_sign(const Face& tau, const Face& nu) {
    for (size_t j = 0; j < tau.size(); ++j) {
        if (nu.size() <= j || tau[j] != nu[j]) return (j % 2 == 0) ? 1 : -1;
    }
    throw std::logic_error("boundary_sign: nu is not a sub-face of tau");
}

}  // namespace

SignedGraph dual_graph(const Complex& K, int i) {
    if (i < 1 || i > K.dim()) throw std::out_of_range("dual_graph: dimension out of range");
    const auto& faces = K.faces(i);
    SignedGraph G(static_cast<int>(faces.size()));
    // Cofaces of each (i-1)-face; two i-faces share at most one of them.
    std::vector<std::vector<int>> cofaces(K.face_count(i - 1));
    for (int t = 0; t < static_cast<int>(faces.size()); ++t) {
        const Face& tau = faces[t];
        for (size_t j = 0; j < tau.size(); ++j) {
            Face sub = tau;
            sub.erase(sub.begin() + j);
            cofaces[K.face_index(sub)].push_back(t);
        }
    }
    for (int nu = 0; nu < static_cast<int>(cofaces.size()); ++nu) {
        const auto& cf = cofaces[nu];
        for (size_t a = 0; a < cf.size(); ++a) {
            for (size_t b = a + 1; b < cf.size(); ++b) {
                int sign = boundary_sign(faces[cf[a]], K.faces(i - 1)[nu]) *
                           boundary_sign(faces[cf[b]], K.faces(i - 1)[nu]);
                G.edges.push_back({cf[a], cf[b], sign});
            }
        }
    }
    std::sort(G.edges.begin(), G.edges.end(), [](const auto& a, const auto& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    return G;
}

Eigen::MatrixXi signed_laplacian(const SignedGraph& G) {
    Eigen::MatrixXi L = Eigen::MatrixXi::Zero(G.n, G.n);
    for (const auto& e : G.edges) {
        L(e.u, e.u) += 1;
        L(e.v, e.v) += 1;
        L(e.u, e.v) += e.sign;
        L(e.v, e.u) += e.sign;
    }
    return L;
}

Eigen::MatrixXi complex_laplacian_of_dual(const SignedGraph& G, int d) {
    Eigen::MatrixXi L = Eigen::MatrixXi::Identity(G.n, G.n) * (d + 1);
    for (const auto& e : G.edges) {
        L(e.u, e.v) += e.sign;
        L(e.v, e.u) += e.sign;
    }
    return L;
}

GlueResult glue(const Complex& K, const Complex& L, const GluingSpec& g) {
    std::map<int, int> phi, phi_inv;
    for (const auto& [v, w] : g.pairs) {
        if (!K.contains({v}) || !L.contains({w}))
            throw std::invalid_argument("glue: identified vertex not present");
        if (!phi.emplace(v, w).second || !phi_inv.emplace(w, v).second)
            throw std::invalid_argument("glue: vertex appears in more than one pair");
    }

    // The identification must carry the vertex-induced subcomplex of K onto
    // that of L, both ways.
    const int top = std::max(K.dim(), L.dim());
    std::vector<long long> r(top + 1, 0);
    for (int i = 0; i <= K.dim(); ++i) {
        for (const Face& f : K.faces(i)) {
            bool inside = std::all_of(f.begin(), f.end(), [&](int v) { return phi.count(v); });
            if (!inside) continue;
            Face img;
            for (int v : f) img.push_back(phi.at(v));
            std::sort(img.begin(), img.end());
            if (!L.contains(img))
                throw std::invalid_argument("glue: identification is not simplicial (K side)");
            ++r[i];
        }
    }
    for (int i = 0; i <= L.dim(); ++i) {
        for (const Face& f : L.faces(i)) {
            bool inside = std::all_of(f.begin(), f.end(), [&](int w) { return phi_inv.count(w); });
            if (!inside) continue;
            Face pre;
            for (int w : f) pre.push_back(phi_inv.at(w));
            std::sort(pre.begin(), pre.end());
            if (!K.contains(pre))
                throw std::invalid_argument("glue: identification is not simplicial (L side)");
        }
    }

    GlueResult out;
    out.relation_counts = r;
    for (int v : K.vertex_ids()) out.left_vertex_map[v] = v;
    const int offset = K.max_vertex_id() + 1;
    for (int w : L.vertex_ids())
        out.right_vertex_map[w] = phi_inv.count(w) ? phi_inv.at(w) : offset + w;

    std::vector<Face> gen;
    for (const Face& f : K.maximal_faces()) gen.push_back(f);
    for (const Face& f : L.maximal_faces()) {
        Face img;
        for (int w : f) img.push_back(out.right_vertex_map.at(w));
        std::sort(img.begin(), img.end());
        gen.push_back(img);
    }
    out.complex = Complex::from_facets(gen);
    return out;
}

}  // namespace subspec
