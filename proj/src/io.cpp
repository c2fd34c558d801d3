#include "hr/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace hr {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream os(p, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + p.string());
    return os;
}

} // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::filesystem::path& p) {
    std::ifstream is(p);
    if (!is) throw ConfigError("cannot read config file: " + p.string());
    std::string text((std::istreambuf_iterator<char>(is)),
                     std::istreambuf_iterator<char>());
    return from_json_text(text);
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    ExperimentConfig c;
    try {
        c.d = j.at("d").get<int>();
        c.free_set = j.at("free_set").get<std::vector<int>>();
        const json& pot = j.at("potential");
        if (pot.contains("builtin")) {
            c.potential_builtin = pot.at("builtin").get<std::string>();
        } else {
            c.potential_depth = pot.at("depth").get<int>();
            for (auto it = pot.at("table").begin(); it != pot.at("table").end(); ++it)
                c.potential_table.emplace_back(it.key(), it.value().get<double>());
        }
        c.beta_list = j.at("beta_list").get<std::vector<double>>();
        c.cylinder_depth = j.at("cylinder_depth").get<int>();
        c.iteration_steps = j.value("iteration_steps", 9);
        c.base_point = j.value("base_point", std::string("|1"));
        if (j.contains("tolerances")) {
            c.eigen_tol = j["tolerances"].value("eigen", 1e-13);
            c.verify_tol = j["tolerances"].value("verify", 1e-9);
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config schema error: ") + e.what());
    }
    c.validate();
    return c;
}

Alphabet ExperimentConfig::alphabet() const { return Alphabet(d); }

FreeCoordinateRelation ExperimentConfig::relation() const {
    return FreeCoordinateRelation(alphabet(), free_set);
}

Potential ExperimentConfig::potential() const {
    Alphabet a = alphabet();
    if (!potential_builtin.empty()) {
        if (potential_builtin == "quarter_square_first_coord")
            return Potential::quarter_square_first_coord(a);
        if (potential_builtin == "zero") return Potential::zero(a);
        throw ConfigError("unknown builtin potential: " + potential_builtin);
    }
    std::vector<double> table(a.num_words(potential_depth), 0.0);
    for (const auto& [key, value] : potential_table) {
        Cylinder w = Cylinder::parse(key);
        if (static_cast<int>(w.depth()) != potential_depth)
            throw ConfigError("potential table word has wrong depth: " + key);
        table[word_index(a, w.word)] = value;
    }
    return Potential(a, potential_depth, std::move(table));
}

Point ExperimentConfig::x0() const { return Point::parse(base_point); }

void ExperimentConfig::validate() const {
    if (d < 2) throw ConfigError("d must be >= 2");
    if (cylinder_depth < 1) throw ConfigError("cylinder_depth must be >= 1");
    if (iteration_steps < 1) throw ConfigError("iteration_steps must be >= 1");
    if (beta_list.empty()) throw ConfigError("beta_list must be nonempty");
    for (int s : free_set)
        if (s < 1) throw ConfigError("free_set entries must be >= 1");
    if (!free_set.empty()) {
        int mx = *std::max_element(free_set.begin(), free_set.end());
        if (mx > cylinder_depth)
            throw ConfigError("free_set exceeds cylinder_depth");
    }
    try {
        Point p = x0();
        for (std::size_t k = 1; k <= p.horizon() + 1; ++k)
            if (p.coord(k) < 1 || p.coord(k) > d)
                throw ConfigError("base_point symbol out of range");
        Potential v = potential();
        if (v.depth() > cylinder_depth + 1)
            throw ConfigError("potential depth exceeds cylinder_depth + 1");
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("invalid config value: ") + e.what());
    }
}

void write_measure_csv(const std::filesystem::path& p, const Alphabet& a,
                       const CylinderMeasure& m) {
    auto os = open_out(p);
    os << "cylinder,value\n";
    auto cylinders = enumerate_cylinders(a, m.depth);
    for (std::size_t i = 0; i < cylinders.size(); ++i)
        os << '"' << cylinders[i].str() << "\"," << format_double(m.masses[i]) << '\n';
}

void write_histogram_csv(const std::filesystem::path& p,
                         const std::vector<HistogramRow>& rows) {
    auto os = open_out(p);
    const bool with_t = !rows.empty() && rows.front().t.has_value();
    os << (with_t ? "beta,cylinder,t,mass_ratio_iteration,mass_oracle,abs_diff\n"
                  : "beta,cylinder,mass_ratio_iteration,mass_oracle,abs_diff\n");
    for (const auto& r : rows) {
        os << format_double(r.beta) << ",\"" << r.cylinder.str() << "\",";
        if (with_t) os << format_double(*r.t) << ',';
        os << format_double(r.mass_ratio_iteration) << ','
           << format_double(r.mass_oracle) << ','
           << format_double(std::abs(r.mass_ratio_iteration - r.mass_oracle)) << '\n';
    }
}

void write_histogram_bars(const std::filesystem::path& p,
                          const std::vector<HistogramRow>& rows) {
    auto os = open_out(p);
    double maxmass = 0.0;
    for (const auto& r : rows) maxmass = std::max(maxmass, r.mass_ratio_iteration);
    for (const auto& r : rows) {
        int len = maxmass > 0.0
                      ? static_cast<int>(60.0 * r.mass_ratio_iteration / maxmass + 0.5)
                      : 0;
        os << (r.t ? format_double(*r.t) : r.cylinder.str()) << ' '
           << std::string(static_cast<std::size_t>(len), '#') << ' '
           << format_double(r.mass_ratio_iteration) << '\n';
    }
}

void write_plot_script(const std::filesystem::path& p,
                       const std::vector<std::string>& csv_names) {
    auto os = open_out(p);
    os << "#!/usr/bin/env python3\n"
          "import csv, sys\n"
          "import matplotlib\n"
          "matplotlib.use('Agg')\n"
          "import matplotlib.pyplot as plt\n\n"
          "files = [\n";
    for (const auto& name : csv_names) os << "    '" << name << "',\n";
    os << "]\n"
          "fig, axes = plt.subplots(1, len(files), figsize=(4 * len(files), 3))\n"
          "if len(files) == 1: axes = [axes]\n"
          "for ax, name in zip(axes, files):\n"
          "    with open(name) as fh:\n"
          "        rows = list(csv.DictReader(fh))\n"
          "    xs = [float(r['t']) if 't' in r else i for i, r in enumerate(rows)]\n"
          "    ys = [float(r['mass_ratio_iteration']) for r in rows]\n"
          "    ax.bar(xs, ys, width=0.8 / max(len(rows), 1))\n"
          "    ax.set_title('beta = ' + rows[0]['beta'])\n"
          "    ax.set_xlabel('t')\n"
          "fig.tight_layout()\n"
          "fig.savefig('histograms.png', dpi=150)\n"
          "print('wrote histograms.png')\n";
}

void write_report_json(const std::filesystem::path& p,
                       const QuasiInvarianceReport& report) {
    auto os = open_out(p);
    os << "{\n  \"max_abs_residual\": " << format_double(report.max_abs_residual)
       << ",\n  \"tests_run\": " << report.tests_run << ",\n  \"worst_test\": \""
       << report.worst_test << "\"\n}\n";
}

void write_eigen_json(const std::filesystem::path& p, const EigenResult& r, int d,
                      double lambda) {
    auto os = open_out(p);
    os << "{\n  \"rho\": " << format_double(r.eigenvalue)
       << ",\n  \"lambda\": " << format_double(lambda)
       << ",\n  \"d\": " << d
       << ",\n  \"residual\": " << format_double(r.residual)
       << ",\n  \"iterations\": " << r.iterations
       << ",\n  \"primitive\": " << (r.primitive ? "true" : "false") << "\n}\n";
}

} // namespace hr
