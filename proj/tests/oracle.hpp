#pragma once

#include <cmath>
#include <vector>

#include "hr/eigensolver.hpp"

// Independent Perron oracle: repeated squaring of the normalized matrix.
// A^(2^m)/rho^(2^m) converges to the rank-one projector h mu^T, so the
// dominant left/right vectors are read off a row and a column, with no
// shared code path with the power iteration under test.
namespace oracle {

struct PerronOracle {
    double rho;
    std::vector<double> mu; // mass 1
    std::vector<double> h;  // scaled so sum(h * mu) = 1
};

inline PerronOracle perron_by_squaring(const hr::Matrix& A, int squarings = 40) {
    const std::size_t n = A.n;
    std::vector<double> p = A.a;
    auto renorm = [&](std::vector<double>& m) {
        double mx = 0.0;
        for (double v : m) mx = std::max(mx, std::abs(v));
        for (double& v : m) v /= mx;
    };
    renorm(p);
    std::vector<double> q(n * n, 0.0);
    for (int s = 0; s < squarings; ++s) {
        std::fill(q.begin(), q.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                double pik = p[i * n + k];
                if (pik == 0.0) continue;
                for (std::size_t j = 0; j < n; ++j) q[i * n + j] += pik * p[k * n + j];
            }
        p.swap(q);
        renorm(p);
    }

    PerronOracle out;
    // pick the row/column with the largest total to stay away from zeros
    std::size_t best_row = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += p[i * n + j];
        if (s > best) {
            best = s;
            best_row = i;
        }
    }
    out.mu.assign(n, 0.0);
    double row_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) row_sum += p[best_row * n + j];
    for (std::size_t j = 0; j < n; ++j) out.mu[j] = p[best_row * n + j] / row_sum;

    std::size_t best_col = 0;
    best = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += p[i * n + j];
        if (s > best) {
            best = s;
            best_col = j;
        }
    }
    out.h.assign(n, 0.0);
    double hm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out.h[i] = p[i * n + best_col];
        hm += out.h[i] * out.mu[i];
    }
    for (double& v : out.h) v /= hm;

    // rho from the eigen equation applied to the oracle vector
    std::vector<double> ah = A.apply(out.h);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += out.mu[i] * ah[i];
        den += out.mu[i] * out.h[i];
    }
    out.rho = num / den;
    return out;
}

} // namespace oracle
