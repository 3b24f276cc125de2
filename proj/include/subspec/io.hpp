// File formats: complexes as {"facets": [[...]]} JSON, matrices as
// row,col,value triplet CSV, step functions as x_left,x_right,value CSV.

#pragma once

#include <string>

#include <Eigen/Dense>

#include "subspec/complex.hpp"
#include "subspec/decimation.hpp"
#include "subspec/fractal.hpp"
#include "subspec/step_function.hpp"

namespace subspec {

Complex read_complex_json(const std::string& path);
void write_complex_json(const std::string& path, const Complex& K);

void write_triplets_csv(const std::string& path, const Eigen::MatrixXi& M);
void write_step_function_csv(const std::string& path, const StepFunction& f);
void write_prediction_json(const std::string& path, const SpectrumPrediction& pred, int d, int n);
void write_fractal_json(const std::string& path, const LevelGraph& g, const FractalData& data);

}  // namespace subspec
