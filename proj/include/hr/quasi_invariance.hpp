#pragma once

#include <string>

#include "hr/eigensolver.hpp"
#include "hr/operators.hpp"

// Numerical verification of the quasi-invariance double-integral identity,
// the Haar fixed-point characterization, and the M <-> M* transform.
namespace hr {

/// Test function h(x, y) on the groupoid, depending on finitely many
/// coordinates of each argument.
struct PairTestFunction {
    enum class Kind { CylinderPair, SeparableProduct };
    Kind kind;
    Cylinder a, b;       // CylinderPair: h = 1_a(x) 1_b(y)
    DepthFunction f, g;  // SeparableProduct: h = f(x) g(y)

    static PairTestFunction cylinder_pair(Cylinder a, Cylinder b);
    static PairTestFunction separable_product(DepthFunction f, DepthFunction g);

    double operator()(const Alphabet& al, const Point& x, const Point& y) const;
    std::string describe() const;
};

struct QuasiInvarianceReport {
    double max_abs_residual = 0.0;
    std::string worst_test;
    std::size_t tests_run = 0;
};

// | sum_w M(w) sum_t h(psi_t(w), w)
//   - sum_w M(w) sum_t h(w, psi_t(w)) e^{-beta c(w, psi_t(w))} |
double quasi_invariance_residual(const CylinderMeasure& m,
                                 const FreeCoordinateRelation& rel,
                                 const ModularParameters& params,
                                 const PairTestFunction& h);

// the exhaustive basis of d^{2k} cylinder-pair indicators at the
// measure's depth
QuasiInvarianceReport run_pair_indicator_suite(const CylinderMeasure& m,
                                               const FreeCoordinateRelation& rel,
                                               const ModularParameters& params);

// max over basis indicators f of |sum f M - sum H(f) M|
double haar_fixed_point_residual(const CylinderMeasure& m, const OperatorSpec& spec);

// forward: M*(w) ~ e^{V(w)} M(w) with V = ln H_{-beta c}(1); backward
// inverts it; both renormalize to mass 1
CylinderMeasure transform_measure(const CylinderMeasure& m, const OperatorSpec& spec,
                                  bool forward);

} // namespace hr
