// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hr/io.hpp"
#include "hr/quasi_invariance.hpp"
#include "hr/reference.hpp"

using namespace hr;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void criterion(int number, const char* title, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d: %-4s %s%s%s\n", number, ok ? "PASS" : "FAIL", title,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

OperatorSpec example53(double beta, OperatorFlavor flavor) {
    Alphabet a(2);
    return OperatorSpec{FreeCoordinateRelation(a, {3}),
                        ModularParameters{beta, Cocycle::separable(
                                                    Potential::quarter_square_first_coord(a))},
                        flavor};
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    if (!is) return {};
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

} // namespace

int main() {
    criterion(1, "classical reduction: rho = 2, uniform cylinder masses, k = 1..6",
              [](std::string& detail) {
        auto t0 = std::chrono::steady_clock::now();
        Alphabet a(2);
        OperatorSpec spec{FreeCoordinateRelation::first_coordinate_free(a),
                          ModularParameters{1.0, Cocycle::separable(Potential::zero(a))},
                          OperatorFlavor::HaarRuelleSeparable};
        double worst_rho = 0.0, worst_mass = 0.0;
        for (int k = 1; k <= 6; ++k) {
            EigenResult r = perron_pair(build_matrix(spec, k), k);
            worst_rho = std::max(worst_rho, std::abs(r.eigenvalue - 2.0));
            for (double m : r.measure.masses)
                worst_mass = std::max(worst_mass, std::abs(m - std::ldexp(1.0, -k)));
        }
        double dt = elapsed_s(t0);
        detail = "rho defect " + format_double(worst_rho) + ", mass defect " +
                 format_double(worst_mass) + ", " + format_double(dt) + " s";
        return worst_rho <= 1e-12 && worst_mass <= 1e-10 && dt < 1.0;
    });

    criterion(2, "ratio iteration matches the Perron oracle at n = 9 and n = 30",
              [](std::string& detail) {
        auto t0 = std::chrono::steady_clock::now();
        Alphabet a(2);
        Point x0 = Point::constant(1);
        double worst9 = 0.0, worst30 = 0.0, worst_sum = 0.0;
        for (double beta : {1.0, 10.0, 30.0}) {
            auto spec = example53(beta, OperatorFlavor::HutchinsonBarnsley);
            EigenResult oracle = perron_pair(build_matrix(spec, 5), 5);
            double sum = 0.0;
            for (std::size_t c = 0; c < 32; ++c) {
                DepthFunction ind{5, std::vector<double>(32, 0.0)};
                ind.values[c] = 1.0;
                double r9 = ratio_iteration(spec, ind, x0, 9);
                double r30 = ratio_iteration(spec, ind, x0, 30);
                sum += r9;
                worst9 = std::max(worst9, std::abs(r9 - oracle.measure.masses[c]));
                worst30 = std::max(worst30, std::abs(r30 - oracle.measure.masses[c]));
            }
            worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
        }
        double dt = elapsed_s(t0);
        detail = "n=9 err " + format_double(worst9) + ", n=30 err " + format_double(worst30) +
                 ", sum defect " + format_double(worst_sum) + ", " + format_double(dt) + " s";
        return worst_sum <= 1e-9 && worst9 <= 5e-3 && worst30 <= 1e-8 && dt < 10.0;
    });

    criterion(3, "mass of the (1,1) prefix increases with beta and matches the product form",
              [](std::string& detail) {
        Alphabet a(2);
        double prev = -1.0, last = 0.0;
        for (double beta : {1.0, 10.0, 30.0}) {
            auto spec = example53(beta, OperatorFlavor::HutchinsonBarnsley);
            EigenResult r = perron_pair(build_matrix(spec, 5), 5);
            double mass = 0.0;
            for (std::size_t c = 0; c < 8; ++c) mass += r.measure.masses[c];
            if (mass <= prev) return false;
            prev = last = mass;
        }
        // product-form prediction at beta = 30: (p(1))^2 with p(1) = 1/(1+e^{-7.5})
        double p1 = 1.0 / (1.0 + std::exp(-0.25 * 30.0));
        detail = "mass(1,1 ; beta=30) = " + format_double(last) + ", predicted " +
                 format_double(p1 * p1);
        return last > 0.99 * p1 * p1;
    });

    criterion(4, "quasi-invariance suite passes for eigenmeasures, point mass fails",
              [](std::string& detail) {
        double worst = 0.0;
        for (double beta : {1.0, 10.0, 30.0}) {
            auto sep = example53(beta, OperatorFlavor::HaarRuelleSeparable);
            auto gen = example53(beta, OperatorFlavor::HaarRuelleGeneral);
            for (const auto& spec : {sep, gen}) {
                EigenResult r = perron_pair(build_matrix(spec, 5), 5);
                auto rep = run_pair_indicator_suite(r.measure, spec.relation, spec.params);
                if (rep.tests_run != 1024) return false;
                worst = std::max(worst, rep.max_abs_residual);
            }
        }
        CylinderMeasure delta{5, std::vector<double>(32, 0.0)};
        delta.masses[0] = 1.0;
        auto sep10 = example53(10.0, OperatorFlavor::HaarRuelleSeparable);
        auto bad = run_pair_indicator_suite(delta, sep10.relation, sep10.params);
        detail = "max residual " + format_double(worst) + ", negative control " +
                 format_double(bad.max_abs_residual);
        return worst <= 1e-9 && bad.max_abs_residual > 1e-3;
    });

    criterion(5, "haar operator: idempotent, stochastic after normalization, positive",
              [](std::string& detail) {
        Alphabet a(2);
        auto spec = example53(5.0, OperatorFlavor::Haar);
        OperatorSpec norm{FreeCoordinateRelation::first_coordinate_free(a),
                          ModularParameters{2.0, Cocycle::separable(
                                                     Potential::quarter_square_first_coord(a))},
                          OperatorFlavor::HaarNormalized};
        std::mt19937 rng(71);
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        double worst_idem = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            DepthFunction f{5, std::vector<double>(32)};
            for (auto& v : f.values) v = uni(rng);
            auto hf = apply_haar(spec, f);
            auto hhf = apply_haar(spec, hf);
            for (std::size_t i = 0; i < 32; ++i)
                worst_idem = std::max(worst_idem, std::abs(hhf.values[i] - hf.values[i]));
            // positivity on the shifted nonnegative copy
            DepthFunction g = f;
            for (auto& v : g.values) v += 1.0;
            for (double v : apply_haar(spec, g).values)
                if (v < 0.0) return false;
        }
        auto ones = apply_normalized_haar(norm, DepthFunction::constant(a, 5, 1.0));
        double worst_one = 0.0;
        for (double v : ones.values) worst_one = std::max(worst_one, std::abs(v - 1.0));
        detail = "idempotence defect " + format_double(worst_idem) + ", H_n(1) defect " +
                 format_double(worst_one);
        return worst_idem <= 1e-12 && worst_one <= 1e-12;
    });

    criterion(6, "fixed-point characterization and the M <-> M* transform",
              [](std::string& detail) {
        double worst_fp = 0.0, worst_rt = 0.0, worst_dual = 0.0;
        for (double beta : {1.0, 10.0, 30.0}) {
            auto sep = example53(beta, OperatorFlavor::HaarRuelleSeparable);
            auto haar = example53(beta, OperatorFlavor::Haar);
            EigenResult r = perron_pair(build_matrix(sep, 5), 5);
            worst_fp = std::max(worst_fp, haar_fixed_point_residual(r.measure, haar));
            auto star = transform_measure(r.measure, haar, true);
            auto back = transform_measure(star, haar, false);
            for (std::size_t i = 0; i < 32; ++i)
                worst_rt = std::max(worst_rt, std::abs(back.masses[i] - r.measure.masses[i]));
            auto norm = haar;
            norm.flavor = OperatorFlavor::HaarNormalized;
            auto dual = build_matrix(norm, 5).apply_transpose(star.masses);
            for (std::size_t i = 0; i < 32; ++i)
                worst_dual = std::max(worst_dual, std::abs(dual[i] - star.masses[i]));
        }
        detail = "fixed point " + format_double(worst_fp) + ", round trip " +
                 format_double(worst_rt) + ", normalized dual " + format_double(worst_dual);
        return worst_fp <= 1e-9 && worst_rt <= 1e-12 && worst_dual <= 1e-9;
    });

    criterion(7, "absorption and cocycle identities hold exactly", [](std::string& detail) {
        std::mt19937 rng(72);
        auto run_absorption = [&](const FreeCoordinateRelation& rel, int d) {
            std::uniform_int_distribution<int> sym(1, d);
            for (int trial = 0; trial < 1000; ++trial) {
                std::vector<Symbol> pre(7);
                for (auto& s : pre) s = sym(rng);
                Point x(pre, sym(rng));
                for (std::size_t ai = 1; ai <= rel.class_size(); ++ai)
                    for (std::size_t b = 1; b <= rel.class_size(); ++b)
                        if (!(psi(rel, ai, psi(rel, b, x)) == psi(rel, ai, x))) return false;
            }
            return true;
        };
        if (!run_absorption(FreeCoordinateRelation(Alphabet(2), {3}), 2)) return false;
        if (!run_absorption(FreeCoordinateRelation::first_coordinate_free(Alphabet(2)), 2))
            return false;

        Alphabet a(2);
        FreeCoordinateRelation rel(a, {3});
        Potential v = Potential::quarter_square_first_coord(a);
        Potential w(a, 2, {0.0, 1.0, -0.5, 2.0});
        std::uniform_int_distribution<int> pick(1, 2);
        std::uniform_int_distribution<int> sym(1, 2);
        for (int ai = 0; ai < 20; ++ai) {
            double alpha = -2.0 + 0.2 * ai;
            Cocycle combo = Cocycle::general(
                [v, w, alpha](const Point& x, const Point& y) {
                    return (v(y) - v(x)) + alpha * (w(y) - w(x));
                },
                2);
            Cocycle plain = Cocycle::separable(v);
            for (int trial = 0; trial < 50; ++trial) {
                std::vector<Symbol> pre(6);
                for (auto& s : pre) s = sym(rng);
                Point x(pre, 1);
                Point y = psi(rel, static_cast<std::size_t>(pick(rng)), x);
                Point z = psi(rel, static_cast<std::size_t>(pick(rng)), x);
                if (cocycle_identity_residual(plain, rel, x, y, z) != 0.0) return false;
                if (cocycle_identity_residual(combo, rel, x, y, z) != 0.0) return false;
            }
        }
        detail = "1000 absorption triples x 2 relations, 20 cocycle combinations";
        return true;
    });

    criterion(8, "regularity constants: Lip = 1/2, Dini bound 0.125", [](std::string& detail) {
        FreeCoordinateRelation ex53(Alphabet(2), {3});
        double worst = 0.0;
        for (Symbol j = 1; j <= 2; ++j)
            for (std::size_t a = 1; a <= 2; ++a)
                worst = std::max(worst, std::abs(lipschitz_estimate(ex53, j, a, 6) - 0.5));
        FreeCoordinateRelation two(Alphabet(3), {1, 3});
        double other = 0.0;
        for (Symbol j = 1; j <= 3; ++j)
            for (std::size_t a = 1; a <= 9; ++a)
                other = std::max(other, lipschitz_estimate(two, j, a, 5));
        detail = "Lip defect " + format_double(worst) + ", second relation Lip " +
                 format_double(other);
        return worst <= 1e-12 && other < 1.0 && dini_bound(1.0, 2.0, 0.5) == 0.125;
    });

    criterion(9, "reproduce-example3 twice gives bit-identical outputs", [](std::string& detail) {
#ifndef HRCLI_PATH
        detail = "HRCLI_PATH not set";
        return false;
#else
        fs::path base = fs::temp_directory_path() / "hr_acceptance";
        fs::remove_all(base);
        fs::create_directories(base);
        for (const char* run : {"run1", "run2"}) {
            std::string cmd = std::string("\"") + HRCLI_PATH + "\" reproduce-example3 --out \"" +
                              (base / run).string() + "\" > /dev/null";
            if (std::system(cmd.c_str()) != 0) {
                detail = "cli run failed";
                return false;
            }
        }
        std::size_t compared = 0;
        for (const auto& entry : fs::directory_iterator(base / "run1")) {
            auto name = entry.path().filename();
            if (slurp(entry.path()) != slurp(base / "run2" / name)) {
                detail = "mismatch in " + name.string();
                return false;
            }
            ++compared;
        }
        fs::remove_all(base);
        detail = std::to_string(compared) + " files byte-identical";
        return compared > 0;
#endif
    });

    std::printf("%d of 9 criteria passed\n", 9 - g_failures);
    return g_failures;
}
