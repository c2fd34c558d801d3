#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hr/quasi_invariance.hpp"
#include "hr/reference.hpp"

using clk = std::chrono::high_resolution_clock;

static double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n");
#endif

    hr::Alphabet a(2);
    hr::FreeCoordinateRelation rel(a, {3});
    hr::Cocycle c = hr::Cocycle::separable(hr::Potential::quarter_square_first_coord(a));
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    std::printf("\napply_operator, HutchinsonBarnsley, d=2, S={3}, beta=1\n");
    std::printf("%6s %12s %12s %10s %12s\n", "k", "omp[ms]", "serial[ms]", "speedup", "maxdiff");
    for (int k = 8; k <= 13; ++k) {
        hr::OperatorSpec spec{rel, hr::ModularParameters{1.0, c},
                              hr::OperatorFlavor::HutchinsonBarnsley};
        hr::DepthFunction f{k, std::vector<double>(a.num_words(k))};
        for (double& v : f.values) v = uni(rng);

        const int reps = k <= 10 ? 50 : 10;
        auto t0 = clk::now();
        hr::DepthFunction out{k, {}};
        for (int r = 0; r < reps; ++r) out = hr::apply_operator(spec, f);
        double t_omp = ms_since(t0) / reps;

        t0 = clk::now();
        hr::DepthFunction ref{k, {}};
        for (int r = 0; r < reps; ++r) ref = hr::reference::apply_operator(spec, f);
        double t_ser = ms_since(t0) / reps;

        double diff = 0.0;
        for (std::size_t i = 0; i < out.values.size(); ++i)
            diff = std::max(diff, std::abs(out.values[i] - ref.values[i]));
        std::printf("%6d %12.3f %12.3f %10.2f %12.3e\n", k, t_omp, t_ser,
                    t_ser / t_omp, diff);
    }

    std::printf("\nquasi-invariance pair-indicator suite, d=2, S={3}, beta=10\n");
    std::printf("%6s %12s %12s %10s %12s\n", "k", "omp[ms]", "serial[ms]", "speedup", "maxdiff");
    for (int k = 5; k <= 7; ++k) {
        hr::OperatorSpec spec{rel, hr::ModularParameters{10.0, c},
                              hr::OperatorFlavor::HutchinsonBarnsley};
        auto eig = hr::perron_pair(hr::build_matrix(spec, k), k);
        hr::ModularParameters params{10.0, c};

        auto t0 = clk::now();
        auto report = hr::run_pair_indicator_suite(eig.measure, rel, params);
        double t_omp = ms_since(t0);

        t0 = clk::now();
        double ref = hr::reference::quasi_invariance_max_residual(eig.measure, rel, params);
        double t_ser = ms_since(t0);

        std::printf("%6d %12.3f %12.3f %10.2f %12.3e\n", k, t_omp, t_ser,
                    t_ser / t_omp, std::abs(report.max_abs_residual - ref));
    }
    return 0;
}
