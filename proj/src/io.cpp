#include "ellpert/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ellpert::io {

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return {buf, end};
}

void write_field_csv(std::ostream& out, const DiskField& field) {
    out << "k,j,r,re,im\n";
    const int K = field.max_mode();
    for (int k = -K; k <= K; ++k) {
        for (int j = 0; j < field.grid().radial_count(); ++j) {
            const cplx c = field.coeff(k, j);
            out << k << ',' << j << ',' << format_double(field.grid().nodes()[j]) << ','
                << format_double(c.real()) << ',' << format_double(c.imag()) << '\n';
        }
    }
}

DiskField read_field_csv(std::istream& in, const GridPtr& grid) {
    std::string line;
    if (!std::getline(in, line) || line != "k,j,r,re,im") {
        throw std::runtime_error("field CSV must start with header k,j,r,re,im");
    }
    const int K = grid->max_mode();
    Eigen::MatrixXcd coeffs = Eigen::MatrixXcd::Zero(grid->radial_count(), grid->mode_count());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell[5];
        for (auto& c : cell) {
            if (!std::getline(row, c, ',')) throw std::runtime_error("malformed field CSV row: " + line);
        }
        const int k = std::stoi(cell[0]);
        const int j = std::stoi(cell[1]);
        if (k < -K || k > K || j < 0 || j >= grid->radial_count()) {
            throw std::runtime_error("field CSV row outside the grid: " + line);
        }
        coeffs(j, k + K) = {std::stod(cell[3]), std::stod(cell[4])};
    }
    return {grid, std::move(coeffs)};
}

void write_report_csv(std::ostream& out, const SeriesReport& report) {
    out << "n,norm_F,norm_DF,ratio,weighted_term\n";
    for (const TermRecord& r : report.terms) {
        out << r.n << ',' << format_double(r.norm_F) << ',' << format_double(r.norm_DF) << ','
            << format_double(r.ratio) << ',' << format_double(r.weighted_term) << '\n';
    }
}

nlohmann::json summary_json(const SeriesReport& report) {
    nlohmann::json j;
    j["stop_reason"] = to_string(report.stop_reason);
    j["terms_used"] = report.terms_used();
    j["tail_estimate"] = report.tail_estimate ? nlohmann::json(*report.tail_estimate) : nlohmann::json();
    j["residual"] = report.residual_norm;
    j["boundary_error"] = report.boundary_error;
    if (report.decay.available) {
        j["decay_exponent"] = report.decay.exponent;
    } else {
        j["decay_exponent"] = nullptr;
    }
    j["warnings"] = report.warnings;
    return j;
}

void write_solution_csv(std::ostream& out, const Solution& solution) {
    out << "r,theta,x,y,re,im\n";
    for (std::size_t i = 0; i < solution.sample_points.size(); ++i) {
        const PolarPoint& p = solution.sample_points[i];
        const auto& [w, v] = solution.physical_samples[i];
        out << format_double(p.r) << ',' << format_double(p.t) << ',' << format_double(w.real()) << ','
            << format_double(w.imag()) << ',' << format_double(v.real()) << ',' << format_double(v.imag())
            << '\n';
    }
}

void write_cartesian_csv(std::ostream& out, const validation::CartesianField& field) {
    out << "i,j,x,y,re,im,inside\n";
    for (int j = 0; j < field.n; ++j) {
        for (int i = 0; i < field.n; ++i) {
            const cplx v = field.values[field.index(i, j)];
            out << i << ',' << j << ',' << format_double(field.coord(i)) << ','
                << format_double(field.coord(j)) << ',' << format_double(v.real()) << ','
                << format_double(v.imag()) << ',' << (field.inside[field.index(i, j)] ? 1 : 0) << '\n';
        }
    }
}

}  // namespace ellpert::io
