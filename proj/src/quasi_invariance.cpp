#include "hr/quasi_invariance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hr {

PairTestFunction PairTestFunction::cylinder_pair(Cylinder a, Cylinder b) {
    PairTestFunction h;
    h.kind = Kind::CylinderPair;
    h.a = std::move(a);
    h.b = std::move(b);
    return h;
}

PairTestFunction PairTestFunction::separable_product(DepthFunction f, DepthFunction g) {
    PairTestFunction h;
    h.kind = Kind::SeparableProduct;
    h.f = std::move(f);
    h.g = std::move(g);
    return h;
}

namespace {

bool in_cylinder(const Point& x, const Cylinder& c) {
    for (std::size_t i = 0; i < c.word.size(); ++i)
        if (x.coord(i + 1) != c.word[i]) return false;
    return true;
}

} // namespace

double PairTestFunction::operator()(const Alphabet& al, const Point& x,
                                    const Point& y) const {
    if (kind == Kind::CylinderPair)
        return (in_cylinder(x, a) && in_cylinder(y, b)) ? 1.0 : 0.0;
    return f.value_at(al, x) * g.value_at(al, y);
}

std::string PairTestFunction::describe() const {
    if (kind == Kind::CylinderPair)
        return "indicator_pair(" + a.str() + ";" + b.str() + ")";
    return "separable_product(depth " + std::to_string(f.depth) + ")";
}

double quasi_invariance_residual(const CylinderMeasure& m,
                                 const FreeCoordinateRelation& rel,
                                 const ModularParameters& params,
                                 const PairTestFunction& h) {
    const Alphabet& al = rel.alphabet;
    if (rel.max_free() > m.depth)
        throw std::invalid_argument("relation free set exceeds measure depth");
    if (params.cocycle.depth() > m.depth)
        throw std::invalid_argument("cocycle depth exceeds measure depth");
    const std::size_t n = al.num_words(m.depth);
    const std::size_t big_k = rel.class_size();
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t w = 0; w < n; ++w) {
        if (m.masses[w] == 0.0) continue;
        Point x(index_word(al, m.depth, w), 1);
        double sl = 0.0, sr = 0.0;
        for (std::size_t t = 1; t <= big_k; ++t) {
            Point s = psi(rel, t, x);
            sl += h(al, s, x);
            sr += h(al, x, s) * params.modular(x, s);
        }
        lhs += m.masses[w] * sl;
        rhs += m.masses[w] * sr;
    }
    return std::abs(lhs - rhs);
}

QuasiInvarianceReport run_pair_indicator_suite(const CylinderMeasure& m,
                                               const FreeCoordinateRelation& rel,
                                               const ModularParameters& params) {
    const Alphabet& al = rel.alphabet;
    auto cylinders = enumerate_cylinders(al, m.depth);
    const std::size_t n = cylinders.size();
    QuasiInvarianceReport report;
    report.tests_run = n * n;
    double worst = -1.0;
    std::size_t worst_idx = 0;
#pragma omp parallel
    {
        double local_worst = -1.0;
        std::size_t local_idx = 0;
#pragma omp for schedule(static)
        for (long long t = 0; t < static_cast<long long>(n * n); ++t) {
            const std::size_t ia = static_cast<std::size_t>(t) / n;
            const std::size_t ib = static_cast<std::size_t>(t) % n;
            double r = quasi_invariance_residual(
                m, rel, params,
                PairTestFunction::cylinder_pair(cylinders[ia], cylinders[ib]));
            if (r > local_worst) {
                local_worst = r;
                local_idx = static_cast<std::size_t>(t);
            }
        }
#pragma omp critical
        {
            if (local_worst > worst ||
                (local_worst == worst && local_idx < worst_idx)) {
                worst = local_worst;
                worst_idx = local_idx;
            }
        }
    }
    report.max_abs_residual = worst;
    report.worst_test = PairTestFunction::cylinder_pair(cylinders[worst_idx / n],
                                                        cylinders[worst_idx % n])
                            .describe();
    return report;
}

double haar_fixed_point_residual(const CylinderMeasure& m, const OperatorSpec& spec) {
    OperatorSpec haar = spec;
    haar.flavor = OperatorFlavor::Haar;
    Matrix H = build_matrix(haar, m.depth);
    std::vector<double> htm = H.apply_transpose(m.masses);
    double res = 0.0;
    for (std::size_t i = 0; i < H.n; ++i)
        res = std::max(res, std::abs(htm[i] - m.masses[i]));
    return res;
}

CylinderMeasure transform_measure(const CylinderMeasure& m, const OperatorSpec& spec,
                                  bool forward) {
    OperatorSpec haar = spec;
    haar.flavor = OperatorFlavor::Haar;
    const Alphabet& al = spec.relation.alphabet;
    DepthFunction h1 = apply_operator(haar, DepthFunction::constant(al, m.depth, 1.0));
    CylinderMeasure out{m.depth, std::vector<double>(m.masses.size(), 0.0)};
    double total = 0.0;
    for (std::size_t i = 0; i < m.masses.size(); ++i) {
        // V(w) = ln H(1)(w), so e^{+-V(w)} = H(1)(w)^{+-1}
        double factor = forward ? h1.values[i] : 1.0 / h1.values[i];
        out.masses[i] = m.masses[i] * factor;
        total += out.masses[i];
    }
    for (double& x : out.masses) x /= total;
    return out;
}

} // namespace hr
