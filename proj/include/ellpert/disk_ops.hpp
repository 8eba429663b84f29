#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellpert/field.hpp"

namespace ellpert {

/// Angular Fourier coefficients h_k, |k| <= max_mode, of a datum on the unit circle.
struct BoundaryFunction {
    int max_mode = 0;
    std::vector<cplx> coeffs{cplx(0.0)};
    std::optional<double> holder_exponent_estimate;

    static BoundaryFunction from_modes(const std::map<int, cplx>& modes);

    cplx coeff(int k) const {
        return (k < -max_mode || k > max_mode) ? cplx(0.0) : coeffs[k + max_mode];
    }
    cplx operator()(double theta) const;
    /// h_{-k} == conj(h_k) within tol.
    bool is_real(double tol = 1e-14) const;
};

/// Least-squares fit of log max(|h_k|, |h_-k|) against log k over the upper
/// part of the nonzero spectrum: |h_k| ~ C k^{-exponent}.
struct DecayDiagnostic {
    bool available = false;
    double exponent = 0.0;
    int points = 0;
};
DecayDiagnostic decay_diagnostic(const BoundaryFunction& h);

enum class KernelId { GREEN_K, BEURLING_KD, KDBAR };
std::string to_string(KernelId id);
KernelId kernel_from_string(const std::string& name);

struct PoissonExtension {
    DiskField value;
    DiskField d;
    DiskField dbar;
};

/// Harmonic extension sum_{k>=0} h_k z^k + sum_{k<0} h_k zbar^{|k|} with its
/// Wirtinger derivatives in closed form. Throws if h is not band-limited to the grid.
PoissonExtension poisson_extend(const BoundaryFunction& h, const GridPtr& grid);

/// (1/pi) \int_D (1/(zeta - z) + zbar/(1 - zeta zbar)) phi(zeta) dmu.
/// Solves d dbar u = -d phi with zero trace; the trace is pinned to zero.
DiskField green_volume_K(const DiskField& phi);

/// Principal value (1/pi) \int_D phi(zeta) / (zeta - z)^2 dmu, i.e. d K[phi].
DiskField beurling_Kd(const DiskField& phi);

/// (1/pi) \int_D phi(zeta) / (1 - zeta zbar)^2 dmu - phi(z), i.e. dbar K[phi].
DiskField kdbar(const DiskField& phi);

DiskField apply_kernel(KernelId id, const DiskField& phi);

}  // namespace ellpert
