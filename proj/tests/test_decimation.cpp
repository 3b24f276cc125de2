#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "subspec/decimation.hpp"

using namespace subspec;

namespace {

// Sampling that stays away from the singular sets of the renormalization.
RenormPoint random_regular_point(std::mt19937_64& rng, int d) {
    std::uniform_real_distribution<double> mu(-3.0, d + 2.0);
    std::uniform_real_distribution<double> la(0.1, 2.0);
    while (true) {
        RenormPoint p{mu(rng), la(rng)};
        if (std::abs(poly_linear(p, d) * poly_quad(p, d)) < 0.05) continue;
        if (std::abs(poly_b2(p)) < 0.05 || std::abs(poly_a1(p)) < 0.05) continue;
        return p;
    }
}

}  // namespace

TEST_CASE("renormalization at hand-evaluated points") {
    RenormPoint q = renormalize({3.0, 1.0}, 2);
    CHECK(q.mu == doctest::Approx(1.75).epsilon(1e-14));
    CHECK(q.lambda == doctest::Approx(0.375).epsilon(1e-14));
    RenormPoint qu = renormalize_unfactored({3.0, 1.0}, 2);
    CHECK(qu.mu == doctest::Approx(1.75).epsilon(1e-14));
    CHECK(qu.lambda == doctest::Approx(0.375).epsilon(1e-14));

    // lambda = 0 is a fixed line away from the singular set.
    for (int d : {2, 3, 4}) {
        RenormPoint fixed = renormalize({0.4, 0.0}, d);
        CHECK(fixed.mu == doctest::Approx(0.4));
        CHECK(fixed.lambda == 0.0);
    }

    CHECK_THROWS(renormalize({2.0, 1.0}, 2));
}

TEST_CASE("factored and coronal formulas agree off the singular set") {
    std::mt19937_64 rng(31);
    for (int d : {2, 3, 4}) {
        for (int trial = 0; trial < 1000; ++trial) {
            RenormPoint p = random_regular_point(rng, d);
            RenormPoint a = renormalize(p, d);
            RenormPoint b = renormalize_unfactored(p, d);
            CHECK(std::abs(a.mu - b.mu) <= 1e-10 * std::max(1.0, std::abs(a.mu)));
            CHECK(std::abs(a.lambda - b.lambda) <= 1e-10 * std::max(1.0, std::abs(a.lambda)));
        }
    }
}

TEST_CASE("semi-conjugacy to the one-variable map") {
    CHECK(psi({3.0, 1.0}, 2) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(adjacency_map(3.0, 2) == doctest::Approx(3.0));
    CHECK(semiconjugacy_residual({3.0, 1.0}, 2) <= 1e-12);

    CHECK(psi({0.0, 1.0}, 2) == doctest::Approx(-3.0));
    CHECK(adjacency_map(-3.0, 2) == doctest::Approx(9.0));

    CHECK_THROWS(psi({1.0, 0.0}, 2));

    std::mt19937_64 rng(37);
    for (int d : {2, 3, 4}) {
        for (int trial = 0; trial < 1000; ++trial) {
            RenormPoint p = random_regular_point(rng, d);
            const double rel = semiconjugacy_residual(p, d) /
                               std::max(1.0, std::abs(adjacency_map(psi(p, d), d)));
            CHECK(rel < 1e-9);
        }
    }
}

TEST_CASE("corner-block determinant: closed form vs dense evaluation") {
    CHECK(det_x0({3.0, 1.0}, 2) == doctest::Approx(320.0).epsilon(1e-12));
    CHECK(det_x0_explicit({3.0, 1.0}, 2) == doctest::Approx(320.0).epsilon(1e-9));
    CHECK(det_x0({1.0, 0.0}, 2) == doctest::Approx(0.0));

    CHECK(det_cyclic_sum(2.0, 1.0, 2) == doctest::Approx(4.0));
    CHECK(det_cyclic_sum_explicit(2.0, 1.0, 2) == doctest::Approx(4.0).epsilon(1e-12));

    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int d : {2, 3, 4}) {
        for (int trial = 0; trial < 200; ++trial) {
            RenormPoint p{u(rng), u(rng)};
            const double closed = det_x0(p, d);
            const double dense = det_x0_explicit(p, d);
            CHECK(std::abs(closed - dense) <= 1e-9 * std::max(1.0, std::abs(closed)));
            const double c2 = det_cyclic_sum(p.mu, p.lambda, d);
            const double d2 = det_cyclic_sum_explicit(p.mu, p.lambda, d);
            CHECK(std::abs(c2 - d2) <= 1e-9 * std::max(1.0, std::abs(c2)));
        }
    }
}

namespace {

// Independent route: the recursions the factorization forces, solved
// forward instead of in closed form.
std::pair<std::vector<long long>, std::vector<long long>> sequences_by_recursion(int d, int n) {
    const long long c_d = static_cast<long long>(d + 1) * d / 2 - (d + 1);
    std::vector<long long> alpha{d}, beta{0}, sigma{0, 0};  // beta_1 = 0, sigma_1 = sigma_2 = 0
    std::vector<long long> pw{1};                           // (d+1)^k
    for (int k = 1; k <= n; ++k) pw.push_back(pw.back() * (d + 1));
    for (int k = 2; k <= n; ++k) {
        if (k > 2) {
            // sigma_k = sum 2^j alpha_{k-2-j} + sum 2^j beta_{k-2-j}
            long long s = 0, twos = 1;
            for (int j = 0; j + 1 <= k - 2; ++j, twos *= 2) s += twos * alpha[k - 3 - j];
            twos = 1;
            for (int j = 0; j + 2 <= k - 2; ++j, twos *= 2) s += twos * beta[k - 3 - j];
            sigma.push_back(s);
        }
        beta.push_back((c_d + 1) * pw[k - 2] + beta[k - 2]);
        alpha.push_back(c_d * pw[k - 2] + sigma[k - 1] + alpha[k - 2] + 1);
    }
    beta.erase(beta.begin());  // drop beta_1
    return {alpha, beta};
}

}  // namespace

TEST_CASE("multiplicity sequences") {
    Multiplicities m2 = multiplicities(2, 4);
    CHECK(m2.alpha == std::vector<long long>{2, 3, 6, 15});
    CHECK(m2.beta == std::vector<long long>{1, 4, 13});
    CHECK(m2.c_d == 0);
    CHECK(m2.sigma == std::vector<long long>{0, 0, 2, 8});

    Multiplicities m3 = multiplicities(3, 3);
    CHECK(m3.alpha == std::vector<long long>{3, 6, 18});
    CHECK(m3.beta == std::vector<long long>{3, 15});

    CHECK_THROWS(multiplicities(1, 2));

    for (int d : {2, 3, 4, 5}) {
        for (int n : {1, 2, 3, 5, 8}) {
            Multiplicities m = multiplicities(d, n);
            auto [alpha, beta] = sequences_by_recursion(d, n);
            CHECK(m.alpha == alpha);
            CHECK(m.beta == beta);
        }
    }
}

TEST_CASE("degree bookkeeping of the factorization") {
    // deg D0 = 1, deg A_k = 2^{k-1}, deg B_k = 2^{k-2}; total (d+1)^n.
    for (int d : {2, 3}) {
        for (int n : {1, 2, 3, 4, 5}) {
            Multiplicities m = multiplicities(d, n);
            long long total = 1;
            for (int k = 1; k <= n; ++k) total += m.alpha[n - k] * (1LL << (k - 1));
            for (int k = 2; k <= n; ++k) total += m.beta[n - k] * (1LL << (k - 2));
            long long expect = 1;
            for (int i = 0; i < n; ++i) expect *= d + 1;
            CHECK(total == expect);
        }
    }
}

TEST_CASE("predicted adjacency spectra at small levels") {
    SpectrumPrediction p1 = predicted_spectrum_adjacency(2, 1);
    REQUIRE(p1.pairs.size() == 2);
    CHECK(p1.pairs[0].first == doctest::Approx(0.0));
    CHECK(p1.pairs[0].second == 2);
    CHECK(p1.pairs[1].first == doctest::Approx(3.0));
    CHECK(p1.pairs[1].second == 1);

    SpectrumPrediction p2 = predicted_spectrum_adjacency(2, 2);
    REQUIRE(p2.pairs.size() == 5);
    const double r13 = std::sqrt(13.0);
    CHECK(p2.pairs[0].first == doctest::Approx(-2.0));
    CHECK(p2.pairs[0].second == 1);
    CHECK(p2.pairs[1].first == doctest::Approx((1 - r13) / 2));
    CHECK(p2.pairs[1].second == 2);
    CHECK(p2.pairs[2].first == doctest::Approx(0.0));
    CHECK(p2.pairs[2].second == 3);
    CHECK(p2.pairs[3].first == doctest::Approx((1 + r13) / 2));
    CHECK(p2.pairs[3].second == 2);
    CHECK(p2.pairs[4].first == doctest::Approx(3.0));
    CHECK(p2.pairs[4].second == 1);
    CHECK(p2.total() == 9);

    // Level 3: multiplicity profile 1x6, 2x3, 4x2, 1x4, 2x1, 1x1 = 27.
    SpectrumPrediction p3 = predicted_spectrum_adjacency(2, 3);
    CHECK(p3.total() == 27);
    std::map<long long, int> profile;
    for (const auto& [v, m] : p3.pairs) ++profile[m];
    CHECK(profile[6] == 1);  // 0 with alpha_3
    CHECK(profile[3] == 2);  // first preimages of 0 with alpha_2
    CHECK(profile[2] == 4);  // second preimages with alpha_1
    CHECK(profile[4] == 1);  // -2 with beta_3
    CHECK(profile[1] == 3);  // d+1, and the two preimages of -2 with beta_2
}

TEST_CASE("preimage trees stay in range with full levels") {
    for (int d : {2, 3, 4}) {
        for (auto fam : {PreimageFamily::LaplacianP, PreimageFamily::LaplacianQ}) {
            PreimageTree t = preimage_tree(d, fam, 6);
            for (int i = 0; i <= 6; ++i) {
                CHECK(t.levels[i].size() == (1u << i));
                for (double v : t.levels[i]) {
                    CHECK(v >= -1e-12);
                    CHECK(v <= d + 3 + 1e-12);
                }
            }
        }
        for (auto fam : {PreimageFamily::AdjacencyA, PreimageFamily::AdjacencyB}) {
            PreimageTree t = preimage_tree(d, fam, 6);
            for (int i = 0; i <= 6; ++i) {
                CHECK(t.levels[i].size() == (1u << i));
                for (double v : t.levels[i]) {
                    CHECK(v >= -2 - 1e-12);
                    CHECK(v <= d + 1 + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("pairwise disjointness of all preimage families to depth 6") {
    for (int d : {2, 3, 4}) {
        std::vector<double> laplacian_values, adjacency_values;
        for (auto fam : {PreimageFamily::LaplacianP, PreimageFamily::LaplacianQ}) {
            PreimageTree t = preimage_tree(d, fam, 6);
            for (const auto& level : t.levels)
                laplacian_values.insert(laplacian_values.end(), level.begin(), level.end());
        }
        for (auto fam : {PreimageFamily::AdjacencyA, PreimageFamily::AdjacencyB}) {
            PreimageTree t = preimage_tree(d, fam, 6);
            for (const auto& level : t.levels)
                adjacency_values.insert(adjacency_values.end(), level.begin(), level.end());
        }
        for (auto* values : {&laplacian_values, &adjacency_values}) {
            std::sort(values->begin(), values->end());
            for (size_t i = 0; i + 1 < values->size(); ++i)
                CHECK((*values)[i + 1] - (*values)[i] > 1e-8);
        }
    }
}

TEST_CASE("truncated limit function for cone subdivision") {
    TruncatedLimit lim0 = limit_quantile_cd(2, 0);
    // Steps: 3 on [0, 1/6), 5 from 1/6 on, stretched to the right endpoint.
    CHECK(lim0.function.values() == std::vector<double>{3.0, 5.0});
    CHECK(lim0.function.breakpoints()[1] == Rational(1, 6));
    CHECK(lim0.covered_mass == Rational(1, 3));
    CHECK(lim0.tail_mass == Rational(2, 3));

    TruncatedLimit lim1 = limit_quantile_cd(2, 1);
    CHECK(lim1.covered_mass == Rational(5, 9));
    CHECK(lim1.tail_mass == Rational(4, 9));
    const double r13 = std::sqrt(13.0), r5 = std::sqrt(5.0);
    std::vector<double> expect{(5 - r13) / 2, (5 - r5) / 2, 3.0, (5 + r5) / 2, (5 + r13) / 2, 5.0};
    REQUIRE(lim1.function.values().size() == 6);
    for (size_t i = 0; i < expect.size(); ++i)
        CHECK(lim1.function.values()[i] == doctest::Approx(expect[i]).epsilon(1e-14));
    // Depth-1 values sit on intervals of length 1/18.
    CHECK(lim1.function.breakpoints()[1] == Rational(1, 18));

    CHECK_THROWS(limit_quantile_cd(1, 3));
}

TEST_CASE("limit mass telescopes to one") {
    for (int d : {2, 3, 4}) {
        Rational total = limit_mass_to_depth(d, 20) + Rational::pow(Rational(2, d + 1), 21);
        CHECK(total == Rational(1));
    }
    // And matches the covered mass of the truncated function.
    for (int depth : {0, 3, 7}) {
        TruncatedLimit lim = limit_quantile_cd(3, depth);
        CHECK(lim.covered_mass == limit_mass_to_depth(3, depth));
        CHECK(lim.covered_mass + lim.tail_mass == Rational(1));
    }
}

TEST_CASE("reflection of the adjacency limit reproduces the Laplacian limit") {
    // sigma(x) = d+1-x sends the family roots across.
    CHECK(adjacency_map(0, 2) == doctest::Approx(-3.0));
    for (int d : {2, 3}) {
        const double sigma0 = d + 1 - 0.0, sigma2 = d + 1 - (-2.0);
        CHECK(sigma0 == doctest::Approx(d + 1));
        CHECK(sigma2 == doctest::Approx(d + 3));
        for (int depth : {0, 1, 2}) {
            TruncatedLimit a = laplacian_limit_from_adjacency(d, depth);
            TruncatedLimit b = limit_quantile_cd(d, depth);
            CHECK(a.covered_mass == b.covered_mass);
            REQUIRE(a.function.breakpoints().size() == b.function.breakpoints().size());
            for (size_t i = 0; i < a.function.breakpoints().size(); ++i)
                CHECK(a.function.breakpoints()[i] == b.function.breakpoints()[i]);
            for (size_t i = 0; i < a.function.values().size(); ++i)
                CHECK(a.function.values()[i] ==
                      doctest::Approx(b.function.values()[i]).epsilon(1e-10));
        }
    }
}

TEST_CASE("one-dimensional limit law discretization") {
    StepFunction f = limit_quantile_1d(256);
    CHECK(f.value_at(Rational(0)) == 0.0);
    CHECK(f.value_at(Rational(1, 2)) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(f.values().back() == doctest::Approx(4 * std::pow(std::sin(M_PI * 255 / 512.0), 2)));
    CHECK_THROWS(limit_quantile_1d(1));
}
