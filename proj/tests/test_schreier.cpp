#include <doctest.h>

#include <set>

#include "subspec/decimation.hpp"
#include "subspec/schreier.hpp"
#include "subspec/spectral.hpp"
#include "subspec/subdivide.hpp"
#include "test_util.hpp"

using namespace subspec;
using namespace subspec::testutil;

TEST_CASE("letter action of the generator a") {
    CHECK(act_a({1}, 1, 2) == Word{3});
    CHECK(act_a({2, 1}, 2, 2) == Word{2, 2});
    CHECK_THROWS(act_a({1}, 0, 2));
    CHECK_THROWS(act_a({1}, 3, 2));

    // a has order d+1 on every level.
    for (int d : {2, 3}) {
        for (int n : {1, 2, 3}) {
            long long size = 1;
            for (int i = 0; i < n; ++i) size *= d + 1;
            for (long long idx = 0; idx < size; ++idx) {
                Word w = word_from_index(idx, d, n);
                Word v = w;
                for (int k = 0; k <= d; ++k) v = act_a(v, 1, d);
                CHECK(v == w);
            }
        }
    }
}

TEST_CASE("recursive action of the generator b") {
    CHECK(act_b({1, 3}, 2) == Word{1, 3});
    CHECK(act_b({1, 1}, 2) == Word{2, 2});
    CHECK(act_b({3}, 2) == Word{3});

    // b is an involution, hence a bijection on every level.
    for (int d : {2, 3}) {
        for (int n = 1; n <= 6; ++n) {
            long long size = 1;
            for (int i = 0; i < n; ++i) size *= d + 1;
            if (size > 4096) break;
            for (long long idx = 0; idx < size; ++idx) {
                Word w = word_from_index(idx, d, n);
                CHECK(act_b(act_b(w, d), d) == w);
            }
        }
    }
}

TEST_CASE("word indexing is reverse-lexicographic") {
    // Words sharing a suffix sit in a contiguous block.
    CHECK(word_index({1, 1}, 2) == 0);
    CHECK(word_index({2, 1}, 2) == 1);
    CHECK(word_index({3, 1}, 2) == 2);
    CHECK(word_index({1, 2}, 2) == 3);
    for (long long idx = 0; idx < 27; ++idx) CHECK(word_index(word_from_index(idx, 2, 3), 2) == idx);
}

TEST_CASE("level-1 Schreier graph is the complete graph with loops") {
    SchreierGraph g = build_schreier(2, 1);
    CHECK(g.adjacency == Eigen::MatrixXi::Ones(3, 3));
    auto eig = eigenvalues_sym(g.adjacency).eigenvalues;
    CHECK(eig[0] == doctest::Approx(0).epsilon(1e-12));
    CHECK(eig[1] == doctest::Approx(0).epsilon(1e-12));
    CHECK(eig[2] == doctest::Approx(3).epsilon(1e-12));
    CHECK(loop_count(g) == 3);

    SchreierGraph g4 = build_schreier(4, 1);
    CHECK(loop_count(g4) == 5);
    SignedGraph red = reduced(g4);
    CHECK(red.edges.size() == 10);  // K_5
}

TEST_CASE("loops sit at the boundary words i(d+1)...(d+1)") {
    SchreierGraph g = build_schreier(3, 2);
    CHECK(g.adjacency.rows() == 16);
    CHECK(loop_count(g) == 4);
    for (int i = 1; i <= 4; ++i) {
        const long long idx = word_index({i, 4}, 3);
        CHECK(g.adjacency(idx, idx) == 1);
    }

    CHECK(loop_count(build_schreier(2, 3)) == 3);
}

TEST_CASE("row sums and spectral range") {
    for (int d : {2, 3}) {
        for (int n = 1; n <= (d == 2 ? 5 : 4); ++n) {
            SchreierGraph g = build_schreier(d, n);
            CHECK(g.adjacency == g.adjacency.transpose().eval());
            for (int r = 0; r < g.adjacency.rows(); ++r)
                CHECK(g.adjacency.row(r).sum() == d + 1);
            auto eig = eigenvalues_sym(g.adjacency).eigenvalues;
            CHECK(eig.front() >= -2 - 1e-9);
            CHECK(eig.back() <= d + 1 + 1e-9);
        }
    }
}

TEST_CASE("block recursion reproduces the action-built adjacency") {
    for (int n = 1; n <= 3; ++n) CHECK(xi_block_form(2, n) == build_schreier(2, n).adjacency);
    CHECK(xi_block_form(3, 2) == build_schreier(3, 2).adjacency);
}

TEST_CASE("characteristic pencil matches the adjacency matrix at lambda = 1") {
    for (int n : {1, 2}) {
        SchreierGraph g = build_schreier(2, n);
        Eigen::MatrixXd expect =
            g.adjacency.cast<double>() - 0.7 * Eigen::MatrixXd::Identity(g.adjacency.rows(), g.adjacency.rows());
        CHECK((xi_pencil(2, n, 0.7, 1.0) - expect).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("facet labeling is parental-compatible and validates the approximation") {
    FacetLabeling lab = facet_labeling(2, 3);
    for (int m = 1; m <= 3; ++m)
        for (const Word& w : lab.words[m]) CHECK(w.size() == static_cast<size_t>(m));

    for (int d : {2, 3})
        for (int n = 1; n <= 3; ++n) CHECK(verify_approx(d, n));
}

TEST_CASE("any level-1 labeling works for n = 1") {
    // The level-1 dual graph and reduced Schreier graph are both complete,
    // so every bijection of facets to letters is an isomorphism.
    Complex K = subdivide(standard_simplex(2), Subdivision::cone()).child;
    SignedGraph dual = dual_graph(K, 2);
    SignedGraph red = reduced(build_schreier(2, 1));
    std::set<std::pair<int, int>> a, b;
    for (const auto& e : dual.edges) a.insert({e.u, e.v});
    for (const auto& e : red.edges) b.insert({e.u, e.v});
    CHECK(a == b);  // both are K_3 on indices 0..2
}

TEST_CASE("quantile distance between dual-graph and Schreier Laplacians") {
    auto levels = iterate(Subdivision::cone(), standard_simplex(2), 4);
    for (int n = 1; n <= 4; ++n) {
        StepFunction lhs = laplacian_quantile(levels[n], 2);
        SchreierGraph g = build_schreier(2, n);
        Eigen::MatrixXi M =
            Eigen::MatrixXi::Identity(g.adjacency.rows(), g.adjacency.cols()) * 3 - g.adjacency;
        StepFunction rhs = quantile_function(eigenvalues_sym(M));
        double bound = 3.0;
        for (int i = 0; i < n; ++i) bound /= 3.0;
        CHECK(l1_distance(lhs, rhs) <= bound + 1e-10);
    }
}

TEST_CASE("size budget guards construction") {
    CHECK_THROWS(build_schreier(2, 20));
}
