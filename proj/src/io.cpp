#include "subspec/io.hpp"

#include <fstream>
#include <iomanip>
#include <stdexcept>

#include <json.hpp>

namespace subspec {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

}  // namespace

Complex read_complex_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    nlohmann::json j;
    in >> j;
    if (!j.contains("facets")) throw std::runtime_error("complex JSON lacks \"facets\": " + path);
    std::vector<Face> facets;
    for (const auto& f : j["facets"]) facets.push_back(f.get<Face>());
    return Complex::from_facets(facets);
}

void write_complex_json(const std::string& path, const Complex& K) {
    nlohmann::json j;
    j["facets"] = K.maximal_faces();
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

void write_triplets_csv(const std::string& path, const Eigen::MatrixXi& M) {
    auto out = open_out(path);
    out << "row,col,value\n";
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c)
            if (M(r, c) != 0) out << r << "," << c << "," << M(r, c) << "\n";
}

void write_step_function_csv(const std::string& path, const StepFunction& f) {
    auto out = open_out(path);
    out << "x_left,x_right,value\n";
    out << std::setprecision(17);
    for (size_t i = 0; i < f.step_count(); ++i)
        out << f.breakpoints()[i].to_double() << "," << f.breakpoints()[i + 1].to_double() << ","
            << f.values()[i] << "\n";
}

void write_prediction_json(const std::string& path, const SpectrumPrediction& pred, int d, int n) {
    nlohmann::json j;
    j["d"] = d;
    j["n"] = n;
    j["total_multiplicity"] = pred.total();
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [value, mult] : pred.pairs) pairs.push_back({{"value", value}, {"multiplicity", mult}});
    j["pairs"] = pairs;
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

void write_fractal_json(const std::string& path, const LevelGraph& g, const FractalData& data) {
    nlohmann::json j;
    j["kind"] = data.kind.name();
    j["d"] = data.d;
    j["k"] = g.k;
    // Vertex (i, v) has index i * N^k + v, so the outermost block index is
    // the most significant digit.
    auto tuple_of = [&](long long idx) {
        std::vector<int> digits(g.k + 1);
        for (int t = g.k; t >= 0; --t) {
            digits[t] = static_cast<int>(idx % data.N);
            idx /= data.N;
        }
        return digits;
    };
    nlohmann::json vertices = nlohmann::json::array();
    for (long long v = 0; v < g.num_vertices; ++v) vertices.push_back(tuple_of(v));
    j["vertices"] = vertices;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    j["edges"] = edges;
    nlohmann::json loops = nlohmann::json::array();
    for (long long v = 0; v < g.num_vertices; ++v)
        for (int b : g.loop_labels[v]) loops.push_back({v, b});
    j["loops"] = loops;
    j["boundary"] = g.boundary;
    auto out = open_out(path);
    out << j.dump() << "\n";
}

}  // namespace subspec
