#include "hr/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace hr {

std::vector<double> Matrix::apply(const std::vector<double>& v) const {
    std::vector<double> out(n, 0.0);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        double acc = 0.0;
        const double* row = a.data() + static_cast<std::size_t>(i) * n;
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * v[j];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

std::vector<double> Matrix::apply_transpose(const std::vector<double>& v) const {
    std::vector<double> out(n, 0.0);
#pragma omp parallel for schedule(static)
    for (long long j = 0; j < static_cast<long long>(n); ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += a[i * n + static_cast<std::size_t>(j)] * v[i];
        out[static_cast<std::size_t>(j)] = acc;
    }
    return out;
}

Matrix build_matrix(const OperatorSpec& spec, int depth) {
    check_depth_compatible(spec, depth);
    const Alphabet& al = spec.relation.alphabet;
    const std::size_t n = al.num_words(depth);
    const std::size_t big_k = spec.relation.class_size();
    const double beta = spec.params.beta;
    Matrix A(n);

    const bool prepends = spec.flavor == OperatorFlavor::HaarRuelleGeneral ||
                          spec.flavor == OperatorFlavor::HaarRuelleSeparable ||
                          spec.flavor == OperatorFlavor::HutchinsonBarnsley;

    DepthFunction log_h1{depth, {}};
    if (spec.flavor == OperatorFlavor::HaarNormalized) {
        OperatorSpec plain = spec;
        plain.flavor = OperatorFlavor::Haar;
        log_h1 = apply_operator(plain, DepthFunction::constant(al, depth, 1.0));
        for (double& v : log_h1.values) v = std::log(v);
    }

#pragma omp parallel for schedule(static)
    for (long long r = 0; r < static_cast<long long>(n); ++r) {
        const std::size_t row = static_cast<std::size_t>(r);
        Point x(index_word(al, depth, row), 1);
        if (prepends) {
            const bool separable_weight = spec.flavor != OperatorFlavor::HaarRuelleGeneral;
            const double pre = spec.flavor == OperatorFlavor::HutchinsonBarnsley
                                   ? 1.0
                                   : 1.0 / static_cast<double>(al.d);
            for (Symbol j = 1; j <= al.d; ++j) {
                Point jx = concat(al, j, x);
                for (std::size_t a = 1; a <= big_k; ++a) {
                    Point s = psi(spec.relation, a, jx);
                    double w = separable_weight
                                   ? std::exp(-beta * spec.params.cocycle.potential()(s))
                                   : spec.params.modular(jx, s);
                    A.at(row, word_index(al, leading_word(s, depth))) += pre * w;
                }
            }
        } else {
            for (std::size_t t = 1; t <= big_k; ++t) {
                Point s = psi(spec.relation, t, x);
                double w = spec.params.modular(x, s);
                if (spec.flavor == OperatorFlavor::HaarNormalized)
                    w *= std::exp(log_h1.value_at(al, s) - log_h1.values[row]);
                A.at(row, word_index(al, leading_word(s, depth))) +=
                    w / static_cast<double>(big_k);
            }
        }
    }
    return A;
}

namespace {

// boolean reachability: some power of (A > 0) strictly positive
bool is_primitive(const Matrix& A) {
    const std::size_t n = A.n;
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> p(n * words, 0), q, nq(n * words, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (A.at(i, j) > 0.0) p[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
    q = p;
    auto all_set = [&](const std::vector<std::uint64_t>& m) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t want = (w + 1 < words || n % 64 == 0)
                                         ? ~std::uint64_t{0}
                                         : (std::uint64_t{1} << (n % 64)) - 1;
                if ((m[i * words + w] & want) != want) return false;
            }
        return true;
    };
    if (all_set(q)) return true;
    for (std::size_t e = 1; e <= n; ++e) {
        std::fill(nq.begin(), nq.end(), 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (q[i * words + j / 64] >> (j % 64) & 1)
                    for (std::size_t w = 0; w < words; ++w)
                        nq[i * words + w] |= p[j * words + w];
        if (all_set(nq)) return true;
        if (nq == q) return false; // stationary but not full
        q = nq;
    }
    return false;
}

void normalize_sum(std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    if (s <= 0.0) throw NonConvergence("power iteration hit a nonpositive vector sum");
    for (double& x : v) x /= s;
}

} // namespace

EigenResult perron_pair(const Matrix& A, int depth, double tol, std::size_t max_iter) {
    const std::size_t n = A.n;
    std::vector<double> v(n, 1.0), u(n, 1.0);
    normalize_sum(v);
    normalize_sum(u);
    std::size_t it = 0;
    for (; it < max_iter; ++it) {
        std::vector<double> v1 = A.apply(v);
        std::vector<double> u1 = A.apply_transpose(u);
        normalize_sum(v1);
        normalize_sum(u1);
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            delta = std::max(delta, std::abs(v1[i] - v[i]));
            delta = std::max(delta, std::abs(u1[i] - u[i]));
        }
        v.swap(v1);
        u.swap(u1);
        if (delta < tol) break;
    }
    if (it == max_iter)
        throw NonConvergence("power iteration did not converge");

    std::vector<double> av = A.apply(v);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += u[i] * av[i];
        den += u[i] * v[i];
    }
    const double rho = num / den;

    // mu has mass 1 already; rescale h so that sum(h * mu) = 1
    double hm = 0.0;
    for (std::size_t i = 0; i < n; ++i) hm += v[i] * u[i];
    for (double& x : v) x /= hm;

    std::vector<double> atu = A.apply_transpose(u);
    av = A.apply(v);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        res = std::max(res, std::abs(atu[i] - rho * u[i]));
        res = std::max(res, std::abs(av[i] - rho * v[i]));
    }

    EigenResult r;
    r.eigenvalue = rho;
    r.measure = CylinderMeasure{depth, std::move(u)};
    r.eigenfunction = DepthFunction{depth, std::move(v)};
    r.residual = res;
    r.iterations = it + 1;
    r.primitive = is_primitive(A);
    return r;
}

namespace {

double ratio_from_matrix(const Matrix& A, const std::vector<double>& f,
                         std::size_t idx, int n_steps) {
    if (n_steps < 1) throw std::invalid_argument("ratio iteration needs n >= 1");
    std::vector<double> u = f, v(A.n, 1.0);
    for (int s = 0; s < n_steps; ++s) {
        u = A.apply(u);
        v = A.apply(v);
        double scale = *std::max_element(v.begin(), v.end());
        if (!(scale > 0.0)) throw NonConvergence("ratio iteration denominator vanished");
        for (double& x : u) x /= scale;
        for (double& x : v) x /= scale;
    }
    if (v[idx] == 0.0) throw NonConvergence("ratio iteration denominator vanished at x0");
    return u[idx] / v[idx];
}

} // namespace

double ratio_iteration(const OperatorSpec& spec, const DepthFunction& f,
                       const Point& x0, int n) {
    Matrix A = build_matrix(spec, f.depth);
    std::size_t idx = word_index(spec.relation.alphabet, leading_word(x0, f.depth));
    return ratio_from_matrix(A, f.values, idx, n);
}

std::vector<HistogramRow> histogram(const FreeCoordinateRelation& rel,
                                    const Potential& v,
                                    const std::vector<double>& beta_list,
                                    int k, int n, const Point& x0) {
    const Alphabet& al = rel.alphabet;
    const std::size_t count = al.num_words(k);
    const std::size_t idx0 = word_index(al, leading_word(x0, k));
    auto cylinders = enumerate_cylinders(al, k);
    std::vector<HistogramRow> rows;
    rows.reserve(beta_list.size() * count);
    for (double beta : beta_list) {
        OperatorSpec spec{rel, ModularParameters{beta, Cocycle::separable(v)},
                          OperatorFlavor::HutchinsonBarnsley};
        Matrix A = build_matrix(spec, k);
        EigenResult oracle = perron_pair(A, k);
        for (std::size_t c = 0; c < count; ++c) {
            std::vector<double> f(count, 0.0);
            f[c] = 1.0;
            HistogramRow row;
            row.beta = beta;
            row.cylinder = cylinders[c];
            if (al.d == 2) row.t = t_coordinate(al, cylinders[c]);
            row.mass_ratio_iteration = ratio_from_matrix(A, f, idx0, n);
            row.mass_oracle = oracle.measure.masses[c];
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace hr
