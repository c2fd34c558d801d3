#pragma once

#include <vector>

#include "hr/cocycle.hpp"
#include "hr/relation.hpp"
#include "hr/symbolic.hpp"

// Transfer operators acting exactly on the space of functions that depend
// on the first k coordinates only. The prepend-and-substitute class maps
// preserve these spaces whenever max(S) <= k, so every application is a
// finite sum on the d^k cylinder values.
namespace hr {

/// f: X -> R depending only on coord(x, 1..depth); one value per
/// lexicographic depth-k cylinder.
struct DepthFunction {
    int depth;
    std::vector<double> values; // length d^depth

    static DepthFunction constant(const Alphabet& a, int depth, double v);
    double value_at(const Alphabet& a, const Point& x) const;
};

enum class OperatorFlavor {
    HaarRuelleGeneral,   // weight e^{-beta c(j*x, psi_i(j*x))}, prefactor 1/d
    HaarRuelleSeparable, // weight e^{-beta V(psi_i(j*x))},      prefactor 1/d
    HutchinsonBarnsley,  // same weights, no prefactor (B_R = d L)
    Haar,                // class average with weight e^{-beta c(x, psi_t(x))}
    HaarNormalized       // Haar with cocycle -beta c + b, b = coboundary of ln H(1)
};

struct OperatorSpec {
    FreeCoordinateRelation relation;
    ModularParameters params;
    OperatorFlavor flavor;
};

// throws std::invalid_argument on depth incompatibility
void check_depth_compatible(const OperatorSpec& spec, int depth);

DepthFunction apply_operator(const OperatorSpec& spec, const DepthFunction& f);

// named entry points matching the operator definitions
DepthFunction apply_haar_ruelle(const OperatorSpec& spec, const DepthFunction& f);
DepthFunction apply_separable_haar_ruelle(const OperatorSpec& spec, const DepthFunction& f);
DepthFunction apply_hutchinson_barnsley(const OperatorSpec& spec, const DepthFunction& f);
DepthFunction apply_haar(const OperatorSpec& spec, const DepthFunction& f);
DepthFunction apply_normalized_haar(const OperatorSpec& spec, const DepthFunction& f);

} // namespace hr
