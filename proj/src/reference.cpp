#include "hr/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace hr::reference {

namespace {

double haar_one_at(const OperatorSpec& spec, const Point& x) {
    auto cls = class_of(spec.relation, x);
    double acc = 0.0;
    for (const Point& s : cls.members) acc += spec.params.modular(x, s);
    return acc / static_cast<double>(cls.members.size());
}

double value_at(const OperatorSpec& spec, const DepthFunction& f, const Point& x) {
    const Alphabet& al = spec.relation.alphabet;
    switch (spec.flavor) {
        case OperatorFlavor::HaarRuelleGeneral:
        case OperatorFlavor::HaarRuelleSeparable:
        case OperatorFlavor::HutchinsonBarnsley: {
            double acc = 0.0;
            for (Symbol j = 1; j <= al.d; ++j) {
                Point jx = concat(al, j, x);
                auto cls = class_of(spec.relation, jx);
                for (const Point& s : cls.members) {
                    double w = spec.flavor == OperatorFlavor::HaarRuelleGeneral
                                   ? spec.params.modular(jx, s)
                                   : std::exp(-spec.params.beta *
                                              spec.params.cocycle.potential()(s));
                    acc += f.value_at(al, s) * w;
                }
            }
            if (spec.flavor != OperatorFlavor::HutchinsonBarnsley)
                acc /= static_cast<double>(al.d);
            return acc;
        }
        case OperatorFlavor::Haar: {
            auto cls = class_of(spec.relation, x);
            double acc = 0.0;
            for (const Point& s : cls.members)
                acc += f.value_at(al, s) * spec.params.modular(x, s);
            return acc / static_cast<double>(cls.members.size());
        }
        case OperatorFlavor::HaarNormalized: {
            OperatorSpec plain = spec;
            plain.flavor = OperatorFlavor::Haar;
            auto cls = class_of(spec.relation, x);
            double hx = haar_one_at(plain, x);
            double acc = 0.0;
            for (const Point& s : cls.members)
                acc += f.value_at(al, s) * spec.params.modular(x, s) *
                       haar_one_at(plain, s) / hx;
            return acc / static_cast<double>(cls.members.size());
        }
    }
    throw std::logic_error("unknown operator flavor");
}

} // namespace

DepthFunction apply_operator(const OperatorSpec& spec, const DepthFunction& f) {
    check_depth_compatible(spec, f.depth);
    const Alphabet& al = spec.relation.alphabet;
    const std::size_t n = al.num_words(f.depth);
    DepthFunction out{f.depth, std::vector<double>(n, 0.0)};
    for (std::size_t i = 0; i < n; ++i)
        out.values[i] = value_at(spec, f, Point(index_word(al, f.depth, i), 1));
    return out;
}

Matrix build_matrix(const OperatorSpec& spec, int depth) {
    const Alphabet& al = spec.relation.alphabet;
    const std::size_t n = al.num_words(depth);
    Matrix A(n);
    // column by column, from basis indicators
    for (std::size_t c = 0; c < n; ++c) {
        DepthFunction e{depth, std::vector<double>(n, 0.0)};
        e.values[c] = 1.0;
        DepthFunction col = reference::apply_operator(spec, e);
        for (std::size_t r = 0; r < n; ++r) A.at(r, c) = col.values[r];
    }
    return A;
}

namespace {

double tree_power(const OperatorSpec& spec, const DepthFunction* f, const Point& x,
                  int n) {
    const Alphabet& al = spec.relation.alphabet;
    if (n == 0) return f ? f->value_at(al, x) : 1.0;
    double acc = 0.0;
    for (Symbol j = 1; j <= al.d; ++j) {
        Point jx = concat(al, j, x);
        auto cls = class_of(spec.relation, jx);
        for (const Point& s : cls.members) {
            double q = std::exp(-spec.params.beta * spec.params.cocycle.potential()(s));
            acc += q * tree_power(spec, f, s, n - 1);
        }
    }
    return acc;
}

} // namespace

double ratio_iteration_tree(const OperatorSpec& spec, const DepthFunction& f,
                            const Point& x0, int n) {
    if (n < 1) throw std::invalid_argument("ratio iteration needs n >= 1");
    double num = tree_power(spec, &f, x0, n);
    double den = tree_power(spec, nullptr, x0, n);
    return num / den;
}

double quasi_invariance_max_residual(const CylinderMeasure& m,
                                     const FreeCoordinateRelation& rel,
                                     const ModularParameters& params) {
    const Alphabet& al = rel.alphabet;
    const std::size_t n = al.num_words(m.depth);
    const std::size_t big_k = rel.class_size();
    double worst = 0.0;
    // closed form per indicator pair (A, B):
    //   lhs = M(B) #{t : psi_t(B) in A},  rhs = M(A) sum_{t: psi_t(A) in B} w
    for (std::size_t ia = 0; ia < n; ++ia) {
        Point pa(index_word(al, m.depth, ia), 1);
        for (std::size_t ib = 0; ib < n; ++ib) {
            Point pb(index_word(al, m.depth, ib), 1);
            double lhs = 0.0, rhs = 0.0;
            for (std::size_t t = 1; t <= big_k; ++t) {
                Point sb = psi(rel, t, pb);
                if (word_index(al, leading_word(sb, m.depth)) == ia)
                    lhs += m.masses[ib];
                Point sa = psi(rel, t, pa);
                if (word_index(al, leading_word(sa, m.depth)) == ib)
                    rhs += m.masses[ia] * params.modular(pa, sa);
            }
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

} // namespace hr::reference
