#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ellpert/solver.hpp"
#include "ellpert/validation/fd_solve.hpp"

namespace ellpert::io {

/// `k,j,r,re,im`, one row per coefficient, modes ascending then nodes.
void write_field_csv(std::ostream& out, const DiskField& field);
/// Inverse of write_field_csv onto a grid of matching dimensions.
DiskField read_field_csv(std::istream& in, const GridPtr& grid);

/// `n,norm_F,norm_DF,ratio,weighted_term`.
void write_report_csv(std::ostream& out, const SeriesReport& report);

/// {stop_reason, terms_used, tail_estimate, residual, boundary_error, ...}.
nlohmann::json summary_json(const SeriesReport& report);

/// `r,theta,x,y,re,im` with (x, y) the forward-mapped point.
void write_solution_csv(std::ostream& out, const Solution& solution);

/// `i,j,x,y,re,im,inside`.
void write_cartesian_csv(std::ostream& out, const validation::CartesianField& field);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

}  // namespace ellpert::io
