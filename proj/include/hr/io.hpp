#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "hr/eigensolver.hpp"
#include "hr/quasi_invariance.hpp"

// Experiment configuration and file output. All numeric output goes
// through one fixed "%.17g" formatter so identical runs produce
// byte-identical files.
namespace hr {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    int d = 2;
    std::vector<int> free_set;
    std::string potential_builtin;          // e.g. "quarter_square_first_coord"
    int potential_depth = 0;                // table form
    std::vector<std::pair<std::string, double>> potential_table;
    std::vector<double> beta_list;
    int cylinder_depth = 5;
    int iteration_steps = 9;
    std::string base_point = "|1";          // all-ones default
    double eigen_tol = 1e-13;
    double verify_tol = 1e-9;

    static ExperimentConfig from_json_file(const std::filesystem::path& p);
    static ExperimentConfig from_json_text(const std::string& text);

    Alphabet alphabet() const;
    FreeCoordinateRelation relation() const;
    Potential potential() const;
    Point x0() const;
    void validate() const; // throws ConfigError
};

std::string format_double(double v);

void write_measure_csv(const std::filesystem::path& p, const Alphabet& a,
                       const CylinderMeasure& m);
void write_histogram_csv(const std::filesystem::path& p,
                         const std::vector<HistogramRow>& rows);
void write_histogram_bars(const std::filesystem::path& p,
                          const std::vector<HistogramRow>& rows);
void write_plot_script(const std::filesystem::path& p,
                       const std::vector<std::string>& csv_names);
void write_report_json(const std::filesystem::path& p,
                       const QuasiInvarianceReport& report);
void write_eigen_json(const std::filesystem::path& p, const EigenResult& r,
                      int d, double lambda);

} // namespace hr
