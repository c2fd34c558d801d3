#include "hr/relation.hpp"

#include <algorithm>
#include <stdexcept>

namespace hr {

FreeCoordinateRelation::FreeCoordinateRelation(Alphabet a, std::vector<int> s)
    : alphabet(a), free_set(std::move(s)) {
    std::sort(free_set.begin(), free_set.end());
    free_set.erase(std::unique(free_set.begin(), free_set.end()), free_set.end());
    if (!free_set.empty() && free_set.front() < 1)
        throw std::invalid_argument("free coordinates are 1-based");
}

FreeCoordinateRelation FreeCoordinateRelation::first_coordinate_free(Alphabet a) {
    return FreeCoordinateRelation(a, {1});
}

std::size_t FreeCoordinateRelation::class_size() const {
    std::size_t k = 1;
    for (std::size_t i = 0; i < free_set.size(); ++i) k *= static_cast<std::size_t>(alphabet.d);
    return k;
}

int FreeCoordinateRelation::max_free() const {
    return free_set.empty() ? 0 : free_set.back();
}

bool FreeCoordinateRelation::equivalent(const Point& x, const Point& y) const {
    std::size_t n = std::max({x.horizon(), y.horizon(),
                              static_cast<std::size_t>(max_free())});
    for (std::size_t k = 1; k <= n; ++k) {
        if (std::binary_search(free_set.begin(), free_set.end(), static_cast<int>(k)))
            continue;
        if (x.coord(k) != y.coord(k)) return false;
    }
    return x.tail() == y.tail();
}

Point psi(const FreeCoordinateRelation& rel, std::size_t a, const Point& x) {
    const std::size_t big_k = rel.class_size();
    if (a < 1 || a > big_k) throw std::out_of_range("psi: class index out of range");
    const int d = rel.alphabet.d;
    std::vector<Symbol> p = x.prefix();
    if (static_cast<int>(p.size()) < rel.max_free())
        p.resize(static_cast<std::size_t>(rel.max_free()), x.tail());
    // digits of a-1 in base d, most significant digit at the smallest
    // free coordinate
    std::size_t rem = a - 1;
    for (std::size_t i = rel.free_set.size(); i-- > 0;) {
        p[static_cast<std::size_t>(rel.free_set[i] - 1)] =
            static_cast<Symbol>(rem % static_cast<std::size_t>(d)) + 1;
        rem /= static_cast<std::size_t>(d);
    }
    return Point(std::move(p), x.tail());
}

ClassEnumeration class_of(const FreeCoordinateRelation& rel, const Point& x) {
    ClassEnumeration en;
    const std::size_t big_k = rel.class_size();
    en.members.reserve(big_k);
    en.index_of_base = 0;
    for (std::size_t a = 1; a <= big_k; ++a) {
        en.members.push_back(psi(rel, a, x));
        if (en.members.back() == x) en.index_of_base = a;
    }
    return en;
}

double lipschitz_estimate(const FreeCoordinateRelation& rel, Symbol j,
                          std::size_t a, int probe_depth) {
    if (probe_depth < rel.max_free() + 2)
        throw std::invalid_argument("probe depth must be >= max(S) + 2");
    const Alphabet& al = rel.alphabet;
    const std::size_t n = al.num_words(probe_depth);
    double worst = 0.0;
    for (std::size_t ix = 0; ix < n; ++ix) {
        Point x(index_word(al, probe_depth, ix), 1);
        Point px = psi(rel, a, concat(al, j, x));
        for (std::size_t iz = 0; iz < n; ++iz) {
            if (iz == ix) continue;
            Point z(index_word(al, probe_depth, iz), 1);
            double base = metric(x, z);
            if (base == 0.0) continue;
            double ratio = metric(px, psi(rel, a, concat(al, j, z))) / base;
            worst = std::max(worst, ratio);
        }
    }
    return worst;
}

} // namespace hr
