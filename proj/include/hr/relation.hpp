#pragma once

#include <cstddef>
#include <vector>

#include "hr/symbolic.hpp"

// Free-coordinate equivalence relations x ~ y <=> x_i = y_i for every
// coordinate i outside a finite free set S, their ordered class
// enumerations psi, and Lipschitz estimates of the class maps.
namespace hr {

struct FreeCoordinateRelation {
    Alphabet alphabet;
    std::vector<int> free_set; // sorted ascending, unique, entries >= 1

    FreeCoordinateRelation(Alphabet a, std::vector<int> s);

    // x ~ y <=> sigma(x) = sigma(y), i.e. S = {1}
    static FreeCoordinateRelation first_coordinate_free(Alphabet a);

    std::size_t class_size() const; // d^{|S|}
    int max_free() const;           // 0 when S is empty
    bool equivalent(const Point& x, const Point& y) const;
};

struct ClassEnumeration {
    std::vector<Point> members;   // lexicographic over free-coordinate assignments
    std::size_t index_of_base;    // 1-based position a with psi_a(x) == x
};

ClassEnumeration class_of(const FreeCoordinateRelation& rel, const Point& x);

// a-th member of [x], a in 1..d^{|S|}
Point psi(const FreeCoordinateRelation& rel, std::size_t a, const Point& x);

// max over depth-limited word pairs x != z of
// metric(psi_a(j*x), psi_a(j*z)) / metric(x, z)
double lipschitz_estimate(const FreeCoordinateRelation& rel, Symbol j,
                          std::size_t a, int probe_depth);

} // namespace hr
