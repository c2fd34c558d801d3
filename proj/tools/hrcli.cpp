#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "hr/io.hpp"
#include "hr/quasi_invariance.hpp"
#include "hr/reference.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNoConverge = 3;

std::string beta_tag(double beta) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", beta);
    std::string s(buf);
    for (char& c : s)
        if (c == '.') c = 'p';
    return s;
}

hr::ExperimentConfig example3_config() {
    return hr::ExperimentConfig::from_json_text(R"({
        "d": 2,
        "free_set": [3],
        "potential": {"builtin": "quarter_square_first_coord"},
        "beta_list": [1, 10, 30],
        "cylinder_depth": 5,
        "iteration_steps": 9,
        "base_point": "|1"
    })");
}

struct SolveResult {
    hr::EigenResult separable; // eigenpair of L_{-beta V}
    hr::EigenResult general;   // eigenpair of the general-cocycle L
};

SolveResult solve_both(const hr::ExperimentConfig& cfg, double beta) {
    hr::FreeCoordinateRelation rel = cfg.relation();
    hr::Cocycle c = hr::Cocycle::separable(cfg.potential());
    hr::OperatorSpec sep{rel, hr::ModularParameters{beta, c},
                         hr::OperatorFlavor::HaarRuelleSeparable};
    hr::OperatorSpec gen{rel, hr::ModularParameters{beta, c},
                         hr::OperatorFlavor::HaarRuelleGeneral};
    SolveResult r;
    r.separable = hr::perron_pair(hr::build_matrix(sep, cfg.cylinder_depth),
                                  cfg.cylinder_depth, cfg.eigen_tol);
    r.general = hr::perron_pair(hr::build_matrix(gen, cfg.cylinder_depth),
                                cfg.cylinder_depth, cfg.eigen_tol);
    return r;
}

int cmd_eigen(const hr::ExperimentConfig& cfg, const fs::path& out, double tol) {
    fs::create_directories(out);
    bool ok = true;
    for (double beta : cfg.beta_list) {
        hr::OperatorSpec spec{cfg.relation(),
                              hr::ModularParameters{beta, hr::Cocycle::separable(cfg.potential())},
                              hr::OperatorFlavor::HaarRuelleSeparable};
        hr::EigenResult r = hr::perron_pair(hr::build_matrix(spec, cfg.cylinder_depth),
                                            cfg.cylinder_depth, cfg.eigen_tol);
        const double lambda = r.eigenvalue;
        const std::string tag = beta_tag(beta);
        hr::write_eigen_json(out / ("eigen_beta" + tag + ".json"), r, cfg.d, lambda);
        hr::write_measure_csv(out / ("measure_beta" + tag + ".csv"), cfg.alphabet(),
                              r.measure);
        std::cout << "beta=" << beta << " lambda=" << hr::format_double(lambda)
                  << " rho=" << hr::format_double(lambda * cfg.d)
                  << " residual=" << hr::format_double(r.residual)
                  << (r.primitive ? "" : " (non-primitive)") << "\n";
        if (r.residual > tol) ok = false;
    }
    return ok ? kExitOk : kExitVerifyFail;
}

int cmd_histogram(const hr::ExperimentConfig& cfg, const fs::path& out) {
    fs::create_directories(out);
    auto rows = hr::histogram(cfg.relation(), cfg.potential(), cfg.beta_list,
                              cfg.cylinder_depth, cfg.iteration_steps, cfg.x0());
    const std::size_t per_beta = rows.size() / cfg.beta_list.size();
    std::vector<std::string> csv_names;
    for (std::size_t b = 0; b < cfg.beta_list.size(); ++b) {
        std::vector<hr::HistogramRow> slice(rows.begin() + static_cast<long>(b * per_beta),
                                            rows.begin() + static_cast<long>((b + 1) * per_beta));
        const std::string tag = beta_tag(cfg.beta_list[b]);
        hr::write_histogram_csv(out / ("histogram_beta" + tag + ".csv"), slice);
        hr::write_histogram_bars(out / ("histogram_beta" + tag + ".txt"), slice);
        csv_names.push_back("histogram_beta" + tag + ".csv");
        double sum = 0.0;
        for (const auto& r : slice) sum += r.mass_ratio_iteration;
        std::cout << "beta=" << cfg.beta_list[b] << " rows=" << per_beta
                  << " mass_sum=" << hr::format_double(sum) << "\n";
    }
    hr::write_plot_script(out / "plot_histograms.py", csv_names);
    return kExitOk;
}

int cmd_verify(const hr::ExperimentConfig& cfg, const fs::path& out, double tol,
               const std::string& inject_point_mass) {
    fs::create_directories(out);
    hr::FreeCoordinateRelation rel = cfg.relation();
    hr::Cocycle c = hr::Cocycle::separable(cfg.potential());
    hr::QuasiInvarianceReport combined;
    combined.max_abs_residual = 0.0;
    bool ok = true;

    auto check_measure = [&](const hr::CylinderMeasure& m, double beta,
                             const std::string& label) {
        hr::ModularParameters params{beta, c};
        auto report = hr::run_pair_indicator_suite(m, rel, params);
        hr::OperatorSpec haar{rel, params, hr::OperatorFlavor::Haar};
        double fixed = hr::haar_fixed_point_residual(m, haar);

        auto mstar = hr::transform_measure(m, haar, true);
        auto back = hr::transform_measure(mstar, haar, false);
        double roundtrip = 0.0;
        for (std::size_t i = 0; i < m.masses.size(); ++i)
            roundtrip = std::max(roundtrip, std::abs(back.masses[i] - m.masses[i]));
        hr::OperatorSpec norm{rel, params, hr::OperatorFlavor::HaarNormalized};
        hr::Matrix hn = hr::build_matrix(norm, m.depth);
        auto dual = hn.apply_transpose(mstar.masses);
        double star_fixed = 0.0;
        for (std::size_t i = 0; i < mstar.masses.size(); ++i)
            star_fixed = std::max(star_fixed, std::abs(dual[i] - mstar.masses[i]));

        double worst = std::max({report.max_abs_residual, fixed, roundtrip, star_fixed});
        combined.tests_run += report.tests_run + 3;
        if (worst > combined.max_abs_residual) {
            combined.max_abs_residual = worst;
            combined.worst_test = label + ": " +
                (worst == report.max_abs_residual ? report.worst_test
                 : worst == fixed                 ? std::string("haar_fixed_point")
                 : worst == roundtrip             ? std::string("transform_roundtrip")
                                                  : std::string("normalized_dual_fixed_point"));
        }
        std::cout << label << " quasi_invariance=" << hr::format_double(report.max_abs_residual)
                  << " haar_fixed_point=" << hr::format_double(fixed)
                  << " transform_roundtrip=" << hr::format_double(roundtrip)
                  << " normalized_dual=" << hr::format_double(star_fixed) << "\n";
        if (worst > tol) ok = false;
    };

    for (double beta : cfg.beta_list) {
        if (!inject_point_mass.empty()) {
            hr::Cylinder w = hr::Cylinder::parse(inject_point_mass);
            hr::CylinderMeasure m{cfg.cylinder_depth,
                                  std::vector<double>(cfg.alphabet().num_words(cfg.cylinder_depth), 0.0)};
            m.masses[hr::word_index(cfg.alphabet(), w.word)] = 1.0;
            check_measure(m, beta, "beta=" + beta_tag(beta) + " injected_point_mass");
            continue;
        }
        SolveResult s = solve_both(cfg, beta);
        check_measure(s.separable.measure, beta, "beta=" + beta_tag(beta) + " M0_separable");
        check_measure(s.general.measure, beta, "beta=" + beta_tag(beta) + " M1_general");
        double l1 = 0.0;
        for (std::size_t i = 0; i < s.separable.measure.masses.size(); ++i)
            l1 += std::abs(s.separable.measure.masses[i] - s.general.measure.masses[i]);
        std::cout << "beta=" << beta << " |M0-M1|_1=" << hr::format_double(l1) << "\n";
    }
    hr::write_report_json(out / "verify_report.json", combined);
    return ok ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"transfer operators on the symbolic space: eigenmeasures, "
                 "histograms and quasi-invariance checks"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::string inject_point_mass;
    int threads = 0;
    double tolerance = -1.0;

    app.add_option("--config", config_path, "experiment config JSON");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--threads", threads, "OpenMP thread count");
    app.add_option("--tolerance", tolerance, "override the pass/fail tolerance");

    auto* eigen = app.add_subcommand("eigen", "Perron eigenvalue and eigenmeasure");
    auto* histo = app.add_subcommand("histogram", "cylinder histograms by ratio iteration");
    auto* verify = app.add_subcommand("verify", "quasi-invariance verification suite");
    verify->add_option("--inject-point-mass", inject_point_mass,
                       "replace the eigenmeasure by a point mass on this cylinder");
    auto* repro = app.add_subcommand(
        "reproduce-example3",
        "full beta in {1,10,30}, k=5, n=9 pipeline with the built-in config");
    for (auto* sub : {eigen, histo, verify, repro}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        hr::ExperimentConfig cfg;
        if (repro->parsed()) {
            cfg = example3_config();
        } else {
            if (config_path.empty()) {
                std::cerr << "error: --config is required\n";
                return kExitConfig;
            }
            cfg = hr::ExperimentConfig::from_json_file(config_path);
        }
        double vtol = tolerance > 0 ? tolerance : cfg.verify_tol;
        if (eigen->parsed())
            return cmd_eigen(cfg, out_dir, tolerance > 0 ? tolerance : 1e-9);
        if (histo->parsed()) return cmd_histogram(cfg, out_dir);
        if (verify->parsed()) return cmd_verify(cfg, out_dir, vtol, inject_point_mass);
        // reproduce-example3: the whole pipeline
        int rc = cmd_eigen(cfg, out_dir, 1e-9);
        int rh = cmd_histogram(cfg, out_dir);
        int rv = cmd_verify(cfg, out_dir, vtol, "");
        return rc != 0 ? rc : (rh != 0 ? rh : rv);
    } catch (const hr::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const hr::NonConvergence& e) {
        std::cerr << "numerical non-convergence: " << e.what() << "\n";
        return kExitNoConverge;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config/depth error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
