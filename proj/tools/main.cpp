// Command-line surface: subdivision pipelines, spectra, Schreier graphs,
// decimation predictions, limit functions, convergence tables, fractal
// levels, and figure data. Every command is deterministic for a given
// configuration; exit code 0 only if all internal assertions pass.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>

#include <CLI11.hpp>

#include "subspec/complex.hpp"
#include "subspec/decimation.hpp"
#include "subspec/fractal.hpp"
#include "subspec/io.hpp"
#include "subspec/schreier.hpp"
#include "subspec/spectral.hpp"
#include "subspec/subdivide.hpp"

namespace {

using namespace subspec;

Subdivision parse_kind(const std::string& kind, int r) {
    if (kind == "cd") return Subdivision::cone();
    if (kind == "sd") return Subdivision::barycentric();
    if (kind == "esd") return Subdivision::edgewise(r);
    throw CLI::ValidationError("--kind must be cd, sd or esd");
}

Complex standard_simplex(int d) {
    Face f(d + 1);
    std::iota(f.begin(), f.end(), 0);
    return Complex::from_facets({f});
}

int cmd_subdivide(const std::string& kind, int r, int n, const std::string& in,
                  const std::string& out_dir) {
    Subdivision s = parse_kind(kind, r);
    Complex K = read_complex_json(in);
    std::vector<Complex> levels = iterate(s, K, n);
    std::filesystem::create_directories(out_dir);
    std::ofstream fv(out_dir + "/fvectors.csv");
    fv << "level";
    for (int i = 0; i <= levels.back().dim(); ++i) fv << ",f" << i;
    fv << "\n";
    for (int m = 0; m <= n; ++m) {
        write_complex_json(out_dir + "/level_" + std::to_string(m) + ".json", levels[m]);
        fv << m;
        for (int i = 0; i <= levels.back().dim(); ++i) fv << "," << levels[m].face_count(i);
        fv << "\n";
    }
    return 0;
}

int cmd_spectrum(const std::string& in, int dim, const std::string& out) {
    Complex K = read_complex_json(in);
    if (dim < 0) dim = K.dim();
    write_step_function_csv(out, laplacian_quantile(K, dim));
    return 0;
}

int cmd_schreier(int d, int n, const std::string& out, bool verify) {
    SchreierGraph g = build_schreier(d, n);
    if (!out.empty()) write_triplets_csv(out, g.adjacency);
    std::cout << "vertices=" << g.adjacency.rows() << " loops=" << loop_count(g) << "\n";
    if (verify) {
        const bool ok = verify_approx(d, n);
        std::cout << "verify_approx=" << (ok ? "true" : "false") << "\n";
        if (!ok) return 1;
    }
    return 0;
}

int cmd_predict(int d, int n, const std::string& out) {
    SpectrumPrediction pred = predicted_spectrum_adjacency(d, n);
    write_prediction_json(out, pred, d, n);
    std::cout << "values=" << pred.pairs.size() << " total_multiplicity=" << pred.total() << "\n";
    return 0;
}

int cmd_limit(int d, int depth, const std::string& out) {
    if (d == 1) {
        write_step_function_csv(out, limit_quantile_1d(1 << std::min(depth, 12)));
        std::cout << "tail_mass=0 (closed-form law)\n";
        return 0;
    }
    TruncatedLimit lim = limit_quantile_cd(d, depth);
    write_step_function_csv(out, lim.function);
    std::cout << "covered_mass=" << lim.covered_mass.str() << " tail_mass=" << lim.tail_mass.str()
              << "\n";
    return 0;
}

int cmd_converge(const std::string& kind, int r, int d, int n_max, const std::string& in,
                 const std::string& out) {
    Subdivision s = parse_kind(kind, r);
    Complex K = in.empty() ? standard_simplex(d) : read_complex_json(in);
    if (K.dim() != d) throw CLI::ValidationError("--d does not match the input complex dimension");
    std::vector<Complex> levels = iterate(s, K, n_max);
    if (levels.back().face_count(d) > size_budget())
        throw CLI::ValidationError("size budget exceeded (set SUBSPEC_SIZE_BUDGET to override)");
    std::vector<StepFunction> quantiles;
    for (const Complex& L : levels) quantiles.push_back(laplacian_quantile(L, d));

    const bool against_limit = s.kind == SubdivisionKind::Cone && d >= 2;
    TruncatedLimit lim = against_limit ? limit_quantile_cd(d, 10) : TruncatedLimit{
        StepFunction::constant(0), Rational(0), Rational(0)};

    std::ofstream csv(out);
    csv << std::setprecision(17) << "n,distance_to_final";
    if (against_limit) csv << ",distance_to_limit,limit_tail_bound";
    csv << "\n";
    double prev = -1;
    bool monotone = true;
    for (int m = 0; m <= n_max; ++m) {
        const double dist = l1_distance(quantiles[m], quantiles[n_max]);
        if (m > 0 && m < n_max && dist > prev + 1e-9 && prev >= 0) monotone = false;
        prev = dist;
        csv << m << "," << dist;
        if (against_limit)
            csv << "," << l1_distance(quantiles[m], lim.function) << ","
                << ((d + 3) * lim.tail_mass.to_double());
        csv << "\n";
    }
    std::cout << "monotone=" << (monotone ? "true" : "false") << "\n";
    return 0;
}

int cmd_fractal(const std::string& kind, int r, int d, int k, const std::string& out, bool verify) {
    Subdivision s = parse_kind(kind, r);
    FractalData data = derive_fractal_data(s, d);
    LevelGraph g = build_level(data, k);
    if (!out.empty()) write_fractal_json(out, g, data);
    std::cout << "vertices=" << g.num_vertices << " edges=" << g.edges.size()
              << " loops=" << total_loops(g) << "\n";
    if (verify) {
        const bool ok = verify_duality(s, d, k);
        std::cout << "verify_duality=" << (ok ? "true" : "false") << "\n";
        if (!ok) return 1;
    }
    return 0;
}

int cmd_figures(int d, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    const std::string suffix = "_d" + std::to_string(d) + ".csv";
    if (d == 1) {
        write_step_function_csv(out_dir + "/limit" + suffix, limit_quantile_1d(512));
    } else {
        write_step_function_csv(out_dir + "/limit" + suffix, limit_quantile_cd(d, 10).function);
    }
    std::ofstream poly(out_dir + "/decimation_poly" + suffix);
    poly << std::setprecision(17) << "zeta,f\n";
    for (int i = 0; i <= 512; ++i) {
        const double z = (d + 3) * i / 512.0;
        poly << z << "," << laplacian_map(z, d) << "\n";
    }
    return 0;
}

int cmd_selftest() {
    // A quick battery of the structural identities; the full acceptance
    // suite lives in the test tree.
    Complex K = Complex::from_facets({{0, 1, 2}, {1, 2, 3}});
    Eigen::MatrixXi B1 = boundary_matrix(K, 1).dense();
    Eigen::MatrixXi B2 = boundary_matrix(K, 2).dense();
    if ((B1 * B2).cwiseAbs().maxCoeff() != 0) throw std::logic_error("selftest: dd != 0");
    if (down_laplacian(K, 2) != complex_laplacian_of_dual(dual_graph(K, 2), 2))
        throw std::logic_error("selftest: dual-graph Laplacian mismatch");

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        Eigen::MatrixXd L(n, n), E(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                L(i, j) = L(j, i) = u(rng);
                E(i, j) = E(j, i) = u(rng);
            }
        if (!wielandt_check(L, E).holds) throw std::logic_error("selftest: perturbation bound failed");
    }
    for (int d = 2; d <= 4; ++d) {
        RenormPoint p{1.3 + 0.1 * d, 0.7};
        if (semiconjugacy_residual(p, d) > 1e-9) throw std::logic_error("selftest: semiconjugacy");
        const double a = det_x0(p, d), b = det_x0_explicit(p, d);
        if (std::abs(a - b) > 1e-9 * std::max(1.0, std::abs(a)))
            throw std::logic_error("selftest: corner determinant mismatch");
    }
    if (!verify_approx(2, 2)) throw std::logic_error("selftest: Schreier approximation");
    std::cout << "selftest passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Iterated inclusion-uniform subdivisions and their Laplacian spectra"};
    app.require_subcommand(1);

    std::string kind = "cd", in, out, out_dir = ".";
    int r = 2, d = 2, n = 1, k = 1, depth = 8, dim = -1;
    bool verify = false;

    auto* sub = app.add_subcommand("subdivide", "Iterate a subdivision, emit levels and f-vectors");
    sub->add_option("--kind", kind, "cd|sd|esd")->required();
    sub->add_option("--r", r, "edgewise parameter");
    sub->add_option("--n", n, "iterations")->required();
    sub->add_option("--in", in, "complex JSON")->required();
    sub->add_option("--out", out_dir, "output directory")->required();

    auto* spec = app.add_subcommand("spectrum", "Quantile function of the down-Laplacian spectrum");
    spec->add_option("--in", in)->required();
    spec->add_option("--dim", dim, "chain dimension (default: top)");
    spec->add_option("--out", out)->required();

    auto* sch = app.add_subcommand("schreier", "Level-n Schreier graph adjacency");
    sch->add_option("--d", d)->required();
    sch->add_option("--n", n)->required();
    sch->add_option("--out", out);
    sch->add_flag("--verify-approx", verify, "check the facet-labeling isomorphism");

    auto* pred = app.add_subcommand("predict", "Decimation-predicted adjacency spectrum");
    pred->add_option("--d", d)->required();
    pred->add_option("--n", n)->required();
    pred->add_option("--out", out)->required();

    auto* lim = app.add_subcommand("limit", "Truncated universal limit function");
    lim->add_option("--d", d)->required();
    lim->add_option("--depth", depth);
    lim->add_option("--out", out)->required();

    auto* conv = app.add_subcommand("converge", "Distances between successive quantile functions");
    conv->add_option("--kind", kind)->required();
    conv->add_option("--r", r);
    conv->add_option("--d", d)->required();
    conv->add_option("--n", n, "maximum iteration")->required();
    conv->add_option("--in", in, "initial complex (default: standard simplex)");
    conv->add_option("--out", out)->required();

    auto* fr = app.add_subcommand("fractal", "Self-similar graph level dualizing subdivision");
    fr->add_option("--kind", kind)->required();
    fr->add_option("--r", r);
    fr->add_option("--d", d)->required();
    fr->add_option("--k", k)->required();
    fr->add_option("--out", out);
    fr->add_flag("--verify", verify, "check duality against the actual dual graph");

    auto* fig = app.add_subcommand("figures", "Limit-function and decimation-polynomial data");
    fig->add_option("--d", d)->required()->check(CLI::Range(1, 3));
    fig->add_option("--out", out_dir)->required();

    app.add_subcommand("selftest", "Run the built-in consistency battery");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sub->parsed()) return cmd_subdivide(kind, r, n, in, out_dir);
        if (spec->parsed()) return cmd_spectrum(in, dim, out);
        if (sch->parsed()) return cmd_schreier(d, n, out, verify);
        if (pred->parsed()) return cmd_predict(d, n, out);
        if (lim->parsed()) return cmd_limit(d, depth, out);
        if (conv->parsed()) return cmd_converge(kind, r, d, n, in, out);
        if (fr->parsed()) return cmd_fractal(kind, r, d, k, out, verify);
        if (fig->parsed()) return cmd_figures(d, out_dir);
        return cmd_selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
