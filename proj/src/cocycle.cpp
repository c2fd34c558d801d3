#include "hr/cocycle.hpp"

#include <cmath>
#include <stdexcept>

namespace hr {

Potential::Potential(Alphabet a, int depth, std::vector<double> table)
    : alphabet_(a), depth_(depth), table_(std::move(table)) {
    if (depth_ < 0) throw std::invalid_argument("potential depth must be >= 0");
    if (table_.size() != alphabet_.num_words(depth_))
        throw std::invalid_argument("potential table size must be d^depth");
}

Potential Potential::quarter_square_first_coord(Alphabet a) {
    std::vector<double> t(static_cast<std::size_t>(a.d));
    for (int s = 1; s <= a.d; ++s)
        t[static_cast<std::size_t>(s - 1)] = 0.25 * (s - 1) * (s - 1);
    return Potential(a, 1, std::move(t));
}

Potential Potential::zero(Alphabet a) { return Potential(a, 0, {0.0}); }

double Potential::operator()(const Point& x) const {
    std::size_t idx = 0;
    for (int k = 1; k <= depth_; ++k) {
        Symbol s = x.coord(static_cast<std::size_t>(k));
        if (s < 1 || s > alphabet_.d) throw std::out_of_range("potential: symbol out of range");
        idx = idx * static_cast<std::size_t>(alphabet_.d) + static_cast<std::size_t>(s - 1);
    }
    return table_[idx];
}

double Potential::at_word(const std::vector<Symbol>& w) const {
    if (static_cast<int>(w.size()) < depth_)
        throw std::invalid_argument("potential: word shorter than potential depth");
    std::size_t idx = 0;
    for (int k = 0; k < depth_; ++k)
        idx = idx * static_cast<std::size_t>(alphabet_.d) +
              static_cast<std::size_t>(w[static_cast<std::size_t>(k)] - 1);
    return table_[idx];
}

Cocycle Cocycle::separable(Potential v) {
    Cocycle c;
    c.depth_ = v.depth();
    c.separable_ = std::move(v);
    return c;
}

Cocycle Cocycle::general(Fn fn, int depth) {
    if (depth < 0) throw std::invalid_argument("cocycle depth must be >= 0");
    Cocycle c;
    c.fn_ = std::move(fn);
    c.depth_ = depth;
    return c;
}

const Potential& Cocycle::potential() const {
    if (!separable_) throw std::logic_error("cocycle is not separable");
    return *separable_;
}

double Cocycle::operator()(const Point& x, const Point& y) const {
    if (separable_) return (*separable_)(y) - (*separable_)(x);
    return fn_(x, y);
}

double ModularParameters::modular(const Point& x, const Point& y) const {
    return std::exp(-beta * cocycle(x, y));
}

double evaluate_cocycle(const Cocycle& c, const FreeCoordinateRelation& rel,
                        const Point& x, const Point& y) {
    if (!rel.equivalent(x, y))
        throw std::invalid_argument("cocycle evaluated on a non-equivalent pair");
    return c(x, y);
}

double cocycle_identity_residual(const Cocycle& c, const FreeCoordinateRelation& rel,
                                 const Point& x, const Point& y, const Point& z) {
    if (!rel.equivalent(x, y) || !rel.equivalent(y, z))
        throw std::invalid_argument("cocycle identity needs an equivalent triple");
    return std::abs(c(x, z) - c(x, y) - c(y, z));
}

double holder_estimate(const Potential& v, double alpha, int probe_depth) {
    if (alpha <= 0.0) throw std::invalid_argument("alpha must be positive");
    const Alphabet& a = v.alphabet();
    const std::size_t n = a.num_words(probe_depth);
    double worst = 0.0;
    for (std::size_t ix = 0; ix < n; ++ix) {
        Point x(index_word(a, probe_depth, ix), 1);
        double vx = v(x);
        for (std::size_t iz = ix + 1; iz < n; ++iz) {
            Point z(index_word(a, probe_depth, iz), 1);
            double dd = metric(x, z);
            if (dd == 0.0) continue;
            worst = std::max(worst, std::abs(vx - v(z)) / std::pow(dd, alpha));
        }
    }
    return worst;
}

double dini_bound(double beta, double alpha, double lip) {
    if (alpha <= 0.0) throw std::invalid_argument("alpha must be positive");
    if (lip < 0.0) throw std::invalid_argument("lip must be nonnegative");
    return beta * std::pow(lip, alpha) / alpha;
}

} // namespace hr
