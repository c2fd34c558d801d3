#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hr/relation.hpp"
#include "hr/symbolic.hpp"

// Potentials, cocycles and the derived modular weight e^{-beta c(x,y)}.
namespace hr {

/// A potential V whose value depends only on the first m coordinates,
/// stored as a table over depth-m words. Potentials of unbounded depth
/// must be truncated to a table by the caller; the truncation error of
/// an alpha-Hoelder V is bounded by Hoelder(V) * 2^{-alpha m}.
class Potential {
public:
    Potential(Alphabet a, int depth, std::vector<double> table);

    // V(x) = (1/4)(x_1 - 1)^2, the Example-style single-coordinate well
    static Potential quarter_square_first_coord(Alphabet a);
    static Potential zero(Alphabet a);

    double operator()(const Point& x) const;
    double at_word(const std::vector<Symbol>& w) const; // first depth() symbols used
    int depth() const { return depth_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<double>& table() const { return table_; }

private:
    Alphabet alphabet_;
    int depth_;
    std::vector<double> table_; // d^depth values, lexicographic
};

/// A cocycle on the groupoid: either the coboundary of a potential,
/// c(x,y) = V(y) - V(x), or a general callable of declared depth.
class Cocycle {
public:
    using Fn = std::function<double(const Point&, const Point&)>;

    static Cocycle separable(Potential v);
    static Cocycle general(Fn fn, int depth);

    bool is_separable() const { return separable_.has_value(); }
    const Potential& potential() const;
    int depth() const { return depth_; }

    // raw evaluation, no equivalence check; used in operator kernels
    // where both arguments are constructed inside one class
    double operator()(const Point& x, const Point& y) const;

private:
    Cocycle() = default;
    std::optional<Potential> separable_;
    Fn fn_;
    int depth_ = 0;
};

struct ModularParameters {
    double beta;
    Cocycle cocycle;

    double modular(const Point& x, const Point& y) const; // e^{-beta c(x,y)}
};

// checked evaluation: rejects pairs that are not equivalent under rel
double evaluate_cocycle(const Cocycle& c, const FreeCoordinateRelation& rel,
                        const Point& x, const Point& y);

// |c(x,z) - c(x,y) - c(y,z)| for an equivalent triple
double cocycle_identity_residual(const Cocycle& c, const FreeCoordinateRelation& rel,
                                 const Point& x, const Point& y, const Point& z);

// max over depth-limited word pairs of |V(x)-V(z)| / metric(x,z)^alpha
double holder_estimate(const Potential& v, double alpha, int probe_depth);

// beta * lip^alpha / alpha; finite value certifies Dini continuity of
// the IFS weights e^{-beta V(psi_i(j*x))}
double dini_bound(double beta, double alpha, double lip);

} // namespace hr
