#pragma once

#include "hr/eigensolver.hpp"
#include "hr/operators.hpp"

// Straight-line serial implementations of the kernels. Kept as the
// reference the OpenMP paths are tested and benchmarked against; also
// the branch-recursion form of the ratio iteration, whose cost grows as
// (d K)^n and which therefore only runs at small n.
namespace hr::reference {

DepthFunction apply_operator(const OperatorSpec& spec, const DepthFunction& f);

Matrix build_matrix(const OperatorSpec& spec, int depth);

// B^n(f)(x0) / B^n(1)(x0) by explicit recursion over the orbit tree
double ratio_iteration_tree(const OperatorSpec& spec, const DepthFunction& f,
                            const Point& x0, int n);

double quasi_invariance_max_residual(const CylinderMeasure& m,
                                     const FreeCoordinateRelation& rel,
                                     const ModularParameters& params);

} // namespace hr::reference
