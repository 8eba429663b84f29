#pragma once

#include <complex>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ellpert/grid.hpp"

namespace ellpert {

using cplx = std::complex<double>;

struct PolarPoint {
    double r;
    double t;
};

/// Complex function on the closed unit disk held as angular Fourier
/// coefficients c_k(r_j), |k| <= K, at the radial nodes of a PolarGrid.
///
/// Storage is column-per-mode: coeffs()(j, k + K). Operations that shift modes
/// past the band limit drop the shifted-out part.
class DiskField {
public:
    explicit DiskField(GridPtr grid);
    DiskField(GridPtr grid, Eigen::MatrixXcd coeffs);

    const PolarGrid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    const Eigen::MatrixXcd& coeffs() const { return coeffs_; }

    int max_mode() const { return grid_->max_mode(); }
    cplx coeff(int k, int j) const { return coeffs_(j, k + max_mode()); }
    auto mode(int k) const { return coeffs_.col(k + max_mode()); }

    /// Only mode 0 is nonzero and it is the same value at every node.
    bool is_constant() const;

    /// Value of mode k at rho = 1 from the radial interpolant.
    cplx trace_mode(int k) const;
    /// Field values on the unit circle at the grid's angles.
    std::vector<cplx> trace_values() const;
    /// Values at (node j, angle m), J x M.
    Eigen::MatrixXcd samples() const;

    DiskField operator+(const DiskField& other) const;
    DiskField operator-(const DiskField& other) const;
    DiskField operator*(cplx scale) const;
    friend DiskField operator*(cplx scale, const DiskField& f) { return f * scale; }

private:
    GridPtr grid_;
    Eigen::MatrixXcd coeffs_;
};

/// Throws std::invalid_argument when the two fields live on different grids.
void require_same_grid(const DiskField& a, const DiskField& b);

/// Discrete angular Fourier analysis of samples dimensioned (radial_count x angular_count).
DiskField analyze(const GridPtr& grid, const Eigen::MatrixXcd& samples);

/// Samples f(z) at the grid points and analyzes them.
DiskField sample_function(const GridPtr& grid, const std::function<cplx(cplx)>& f);

cplx evaluate(const DiskField& field, double r, double t);
/// sum_k c_k(r) e^{ikt} with barycentric radial interpolation; r must lie in [0, 1].
std::vector<cplx> synthesize(const DiskField& field, std::span<const PolarPoint> points);

/// (\int_D |f|^p dmu)^{1/p} on the grid quadrature, 1 < p < inf.
double lp_norm(const DiskField& field, double p);
/// Same norm restricted to the disk |z| <= radius, using an auxiliary Gauss rule.
double lp_norm_disk(const DiskField& field, double p, double radius);

/// (df, dbar f) by Chebyshev differentiation of each radial profile:
/// mode k of f feeds mode k-1 of df with (c' + k c / r)/2 and mode k+1 of
/// dbar f with (c' - k c / r)/2. Accuracy degrades near r = 0 for high modes.
std::pair<DiskField, DiskField> wirtinger_derivatives(const DiskField& field);

/// c'_k = conj(c_{-k}).
DiskField conj_field(const DiskField& field);

/// Pointwise product. Exact coefficient scaling when either factor is constant,
/// otherwise multiplication on the sample grid followed by analysis.
DiskField multiply(const DiskField& a, const DiskField& b);

/// Pointwise map over the sample grid followed by analysis.
DiskField map_samples(const DiskField& field, const std::function<cplx(cplx)>& f);

}  // namespace ellpert
