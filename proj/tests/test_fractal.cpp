#include <doctest.h>

#include <set>

#include "subspec/fractal.hpp"
#include "subspec/graph_iso.hpp"
#include "subspec/schreier.hpp"
#include "test_util.hpp"

using namespace subspec;
using namespace subspec::testutil;

TEST_CASE("derived data for barycentric subdivision, d = 2") {
    FractalData data = derive_fractal_data(Subdivision::barycentric(), 2);
    CHECK(data.N == 6);
    CHECK(data.n == 2);
    CHECK(data.edges.size() == 6);
    // The dual graph of sd of a triangle is a 6-cycle: every vertex has
    // degree 2 and one loop.
    for (int v = 0; v < 6; ++v) {
        CHECK(data.degree(v) == 2);
        CHECK(data.loop_labels[v].size() == 1);
    }
    for (int b = 0; b <= 2; ++b) CHECK(data.boundary[b].size() == 2);
}

TEST_CASE("derived data for cone subdivision is finitely ramified") {
    FractalData cd2 = derive_fractal_data(Subdivision::cone(), 2);
    CHECK(cd2.N == 3);
    CHECK(cd2.n == 1);
    CHECK(cd2.edges.size() == 3);  // K_3
    long long loops = 0;
    for (const auto& l : cd2.loop_labels) loops += static_cast<long long>(l.size());
    CHECK(loops == 3);

    auto rel = finitely_ramified_relation(cd2);
    CHECK(rel.size() == 3);

    FractalData cd3 = derive_fractal_data(Subdivision::cone(), 3);
    CHECK(cd3.N == 4);
    CHECK(finitely_ramified_relation(cd3).size() == 6);  // K_4 edges

    CHECK_THROWS(finitely_ramified_relation(derive_fractal_data(Subdivision::barycentric(), 2)));
}

TEST_CASE("derived data for edgewise subdivision with r = 3") {
    FractalData data = derive_fractal_data(Subdivision::edgewise(3), 2);
    CHECK(data.N == 9);
    CHECK(data.n == 3);
    long long loops = 0;
    for (const auto& l : data.loop_labels) loops += static_cast<long long>(l.size());
    CHECK(loops == 9);
    for (int b = 0; b <= 2; ++b) CHECK(data.boundary[b].size() == 3);

    CHECK_THROWS(derive_fractal_data(Subdivision::edgewise(3), 3));
}

TEST_CASE("level construction: sizes and loop counts") {
    FractalData sd = derive_fractal_data(Subdivision::barycentric(), 2);
    LevelGraph sd1 = build_level(sd, 1);
    CHECK(sd1.num_vertices == 36);
    CHECK(total_loops(sd1) == 12);  // (d+1) f_{d-1}^{k+1} = 3 * 2^2

    FractalData esd = derive_fractal_data(Subdivision::edgewise(3), 2);
    LevelGraph esd1 = build_level(esd, 1);
    CHECK(esd1.num_vertices == 81);
    CHECK(total_loops(esd1) == 27);  // 3 * 3^2

    FractalData cd = derive_fractal_data(Subdivision::cone(), 2);
    for (int k = 0; k <= 3; ++k) {
        LevelGraph g = build_level(cd, k);
        long long nv = 1;
        for (int i = 0; i <= k; ++i) nv *= 3;
        CHECK(g.num_vertices == nv);
        CHECK(total_loops(g) == 3);  // finitely ramified: 3 * 1^{k+1}
    }
}

TEST_CASE("level-1 cone fractal is the reduced level-2 Schreier graph") {
    FractalData cd = derive_fractal_data(Subdivision::cone(), 2);
    LevelGraph g = build_level(cd, 1);
    SignedGraph red = reduced(build_schreier(2, 2));
    std::vector<std::pair<int, int>> ea, eb;
    for (const auto& [u, v] : g.edges) ea.push_back({static_cast<int>(u), static_cast<int>(v)});
    for (const auto& e : red.edges) eb.push_back({e.u, e.v});
    CHECK(graphs_isomorphic(9, ea, eb));
}

TEST_CASE("the finitely ramified relation reproduces the cone cross edges") {
    FractalData cd = derive_fractal_data(Subdivision::cone(), 2);
    LevelGraph g0 = level0(cd);
    LevelGraph g1 = next_level(g0, cd);
    const long long M = g0.num_vertices;
    std::set<std::pair<long long, long long>> cross;
    for (const auto& [u, v] : g1.edges)
        if (u / M != v / M) cross.insert({u, v});
    std::set<std::pair<long long, long long>> from_relation;
    for (const auto& [a, b] : finitely_ramified_relation(cd)) {
        // Boundary sets are singletons; the relation joins them directly.
        const long long u = a.second * M + cd.boundary[a.first][0];
        const long long v = b.second * M + cd.boundary[b.first][0];
        from_relation.insert({std::min(u, v), std::max(u, v)});
    }
    CHECK(cross == from_relation);
}

TEST_CASE("group action on levels: identity and composition") {
    FractalData sd = derive_fractal_data(Subdivision::barycentric(), 2);
    LevelGraph g = build_level(sd, 1);
    const int id = sd.group_index.at({0, 1, 2});
    for (long long v = 0; v < g.num_vertices; ++v) CHECK(g.action[id][v] == v);
    for (size_t a = 0; a < sd.group.size(); ++a) {
        for (size_t b = 0; b < sd.group.size(); ++b) {
            Perm ab(3);
            for (int i = 0; i < 3; ++i) ab[i] = sd.group[a][sd.group[b][i]];
            const int ci = sd.group_index.at(ab);
            for (long long v = 0; v < g.num_vertices; v += 7)
                CHECK(g.action[ci][v] == g.action[a][g.action[b][v]]);
        }
    }
}

TEST_CASE("duality with the actual dual graphs") {
    CHECK(verify_duality(Subdivision::cone(), 2, 0));
    CHECK(verify_duality(Subdivision::cone(), 2, 1));
    CHECK(verify_duality(Subdivision::barycentric(), 2, 0));
    CHECK(verify_duality(Subdivision::edgewise(3), 2, 0));
}
