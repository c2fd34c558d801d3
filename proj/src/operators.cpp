#include "hr/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace hr {

DepthFunction DepthFunction::constant(const Alphabet& a, int depth, double v) {
    return DepthFunction{depth, std::vector<double>(a.num_words(depth), v)};
}

double DepthFunction::value_at(const Alphabet& a, const Point& x) const {
    std::size_t idx = 0;
    for (int k = 1; k <= depth; ++k)
        idx = idx * static_cast<std::size_t>(a.d) +
              static_cast<std::size_t>(x.coord(static_cast<std::size_t>(k)) - 1);
    return values[idx];
}

void check_depth_compatible(const OperatorSpec& spec, int depth) {
    if (spec.relation.max_free() > depth)
        throw std::invalid_argument("relation free set exceeds function depth");
    const bool prepends = spec.flavor == OperatorFlavor::HaarRuelleGeneral ||
                          spec.flavor == OperatorFlavor::HaarRuelleSeparable ||
                          spec.flavor == OperatorFlavor::HutchinsonBarnsley;
    const int limit = prepends ? depth + 1 : depth;
    if (spec.params.cocycle.depth() > limit)
        throw std::invalid_argument("cocycle depth exceeds function depth");
}

namespace {

// sum over j = 1..d and class index i = 1..K, fixed ascending order
DepthFunction apply_prepend_family(const OperatorSpec& spec, const DepthFunction& f,
                                   double prefactor) {
    const Alphabet& al = spec.relation.alphabet;
    const bool separable_weight = spec.flavor != OperatorFlavor::HaarRuelleGeneral;
    if (separable_weight && !spec.params.cocycle.is_separable())
        throw std::invalid_argument("separable operator flavor requires a separable cocycle");
    const std::size_t n = al.num_words(f.depth);
    const std::size_t big_k = spec.relation.class_size();
    DepthFunction out{f.depth, std::vector<double>(n, 0.0)};
    const double beta = spec.params.beta;
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        Point x(index_word(al, f.depth, idx), 1);
        double acc = 0.0;
        for (Symbol j = 1; j <= al.d; ++j) {
            Point jx = concat(al, j, x);
            for (std::size_t a = 1; a <= big_k; ++a) {
                Point s = psi(spec.relation, a, jx);
                double w = separable_weight
                               ? std::exp(-beta * spec.params.cocycle.potential()(s))
                               : spec.params.modular(jx, s);
                acc += f.value_at(al, s) * w;
            }
        }
        out.values[idx] = prefactor * acc;
    }
    return out;
}

DepthFunction apply_class_average(const OperatorSpec& spec, const DepthFunction& f,
                                  const DepthFunction* log_weight) {
    const Alphabet& al = spec.relation.alphabet;
    const std::size_t n = al.num_words(f.depth);
    const std::size_t big_k = spec.relation.class_size();
    DepthFunction out{f.depth, std::vector<double>(n, 0.0)};
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        Point x(index_word(al, f.depth, idx), 1);
        double acc = 0.0;
        for (std::size_t t = 1; t <= big_k; ++t) {
            Point s = psi(spec.relation, t, x);
            double w = spec.params.modular(x, s);
            if (log_weight)
                w *= std::exp(log_weight->value_at(al, s) - log_weight->values[idx]);
            acc += f.value_at(al, s) * w;
        }
        out.values[idx] = acc / static_cast<double>(big_k);
    }
    return out;
}

} // namespace

DepthFunction apply_operator(const OperatorSpec& spec, const DepthFunction& f) {
    check_depth_compatible(spec, f.depth);
    const double d = static_cast<double>(spec.relation.alphabet.d);
    switch (spec.flavor) {
        case OperatorFlavor::HaarRuelleGeneral:
        case OperatorFlavor::HaarRuelleSeparable:
            return apply_prepend_family(spec, f, 1.0 / d);
        case OperatorFlavor::HutchinsonBarnsley:
            return apply_prepend_family(spec, f, 1.0);
        case OperatorFlavor::Haar:
            return apply_class_average(spec, f, nullptr);
        case OperatorFlavor::HaarNormalized: {
            OperatorSpec plain = spec;
            plain.flavor = OperatorFlavor::Haar;
            DepthFunction one = DepthFunction::constant(spec.relation.alphabet, f.depth, 1.0);
            DepthFunction h1 = apply_class_average(plain, one, nullptr);
            for (double& v : h1.values) v = std::log(v);
            return apply_class_average(plain, f, &h1);
        }
    }
    throw std::logic_error("unknown operator flavor");
}

DepthFunction apply_haar_ruelle(const OperatorSpec& spec, const DepthFunction& f) {
    OperatorSpec s = spec;
    s.flavor = OperatorFlavor::HaarRuelleGeneral;
    return apply_operator(s, f);
}

DepthFunction apply_separable_haar_ruelle(const OperatorSpec& spec, const DepthFunction& f) {
    OperatorSpec s = spec;
    s.flavor = OperatorFlavor::HaarRuelleSeparable;
    return apply_operator(s, f);
}

DepthFunction apply_hutchinson_barnsley(const OperatorSpec& spec, const DepthFunction& f) {
    OperatorSpec s = spec;
    s.flavor = OperatorFlavor::HutchinsonBarnsley;
    return apply_operator(s, f);
}

DepthFunction apply_haar(const OperatorSpec& spec, const DepthFunction& f) {
    OperatorSpec s = spec;
    s.flavor = OperatorFlavor::Haar;
    return apply_operator(s, f);
}

DepthFunction apply_normalized_haar(const OperatorSpec& spec, const DepthFunction& f) {
    OperatorSpec s = spec;
    s.flavor = OperatorFlavor::HaarNormalized;
    return apply_operator(s, f);
}

} // namespace hr
