#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hr/operators.hpp"

// Exact finite-matrix reduction of the transfer operators and the Perron
// eigenpair machinery: power iteration, the ratio iteration
// B^n(f)(x0) / B^n(1)(x0), and the histogram over depth-k cylinders.
namespace hr {

struct Matrix {
    std::size_t n = 0;
    std::vector<double> a; // row-major, n*n

    explicit Matrix(std::size_t n_) : n(n_), a(n_ * n_, 0.0) {}
    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    std::vector<double> apply(const std::vector<double>& v) const;
    std::vector<double> apply_transpose(const std::vector<double>& v) const;
};

struct CylinderMeasure {
    int depth;
    std::vector<double> masses; // nonnegative, sum 1
};

struct EigenResult {
    double eigenvalue = 0.0;        // Perron value of the supplied matrix
    CylinderMeasure measure;        // left eigenvector, mass 1
    DepthFunction eigenfunction;    // right eigenvector, sum(h * mu) = 1
    double residual = 0.0;          // max of the two eigen-equation defects
    std::size_t iterations = 0;
    bool primitive = true;
};

struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A * vec(f) = vec(apply_operator(spec, f)) for every depth-k f
Matrix build_matrix(const OperatorSpec& spec, int depth);

// depth tags the returned measure/eigenfunction; the matrix itself is
// depth-agnostic
EigenResult perron_pair(const Matrix& a, int depth, double tol = 1e-13,
                        std::size_t max_iter = 100000);

// B^n(f)(x0) / B^n(1)(x0) by n matrix-vector products with shared
// per-level rescaling of the (numerator, denominator) pair
double ratio_iteration(const OperatorSpec& spec, const DepthFunction& f,
                       const Point& x0, int n);

struct HistogramRow {
    double beta;
    Cylinder cylinder;
    std::optional<double> t; // only for d = 2
    double mass_ratio_iteration;
    double mass_oracle;
};

// one row per depth-k cylinder and per beta; flavor of the spec template
// is forced to HutchinsonBarnsley for the iteration and its dual oracle
std::vector<HistogramRow> histogram(const FreeCoordinateRelation& rel,
                                    const Potential& v,
                                    const std::vector<double>& beta_list,
                                    int k, int n, const Point& x0);

} // namespace hr
