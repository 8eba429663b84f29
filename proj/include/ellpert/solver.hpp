#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellpert/canon.hpp"
#include "ellpert/conformal.hpp"
#include "ellpert/disk_ops.hpp"

namespace ellpert {

struct SolverConfig {
    int max_terms = 60;
    double tail_tol = 1e-10;
    /// Monitoring exponent; must exceed 2.
    double p_exponent = 2.2;
    int max_mode = 32;
    int radial_count = 48;
    /// Keep S_0..S_N in the solution, not just the last partial sum.
    bool keep_partial_sums = false;

    void validate() const;
};

enum class StopReason { TailConverged, TermVanished, MaxTerms, Diverging };
std::string to_string(StopReason reason);

struct TermRecord {
    int n = 0;
    double norm_F = 0.0;   ///< ||F_n||_p
    double norm_DF = 0.0;  ///< max(||dF_n||_p, ||dbar F_n||_p)
    double ratio = 0.0;    ///< norm_DF(n) / norm_DF(n-1); 0 for n = 0
    double weighted_term = 0.0;  ///< norm_F * t_norm^n
    double norm_F_l2 = 0.0;
    double norm_DF_l2 = 0.0;
};

struct SeriesReport {
    std::vector<TermRecord> terms;
    StopReason stop_reason = StopReason::MaxTerms;
    /// ||F_N||_p t^{N+1} / (1 - qbar t), qbar the max ratio over the last 5 terms;
    /// empty when qbar t >= 1.
    std::optional<double> tail_estimate;
    double residual_norm = 0.0;
    double boundary_error = 0.0;
    DecayDiagnostic decay;
    std::vector<std::string> warnings;

    int terms_used() const { return static_cast<int>(terms.size()); }
};

/// Stopping rules applied after each term n >= 1: two consecutive terms below
/// vanish_threshold, then ratio * t >= 1 for 10 consecutive terms, then the
/// tail estimate against tail_tol. Fed term records in order.
class StopMonitor {
public:
    StopMonitor(double t_norm, double vanish_threshold, double tail_tol);

    /// Returns the reason once a rule fires.
    std::optional<StopReason> observe(const TermRecord& rec);
    const std::optional<double>& tail_estimate() const { return tail_; }
    /// Filled when the diverging rule fires.
    const std::string& message() const { return message_; }

private:
    double t_;
    double vanish_threshold_;
    double tail_tol_;
    std::vector<double> ratios_;
    int vanish_run_ = 0;
    int diverging_run_ = 0;
    std::optional<double> tail_;
    std::string message_;
};

struct Solution {
    DiskField field;
    std::vector<DiskField> partial_sums;
    SeriesReport report;
    /// (omega(z_i), F(z_i)) over the nodes and the boundary circle.
    std::vector<std::pair<cplx, cplx>> physical_samples;
    std::vector<PolarPoint> sample_points;
};

struct StepResult {
    DiskField F;
    DiskField dF;
    DiskField dbarF;
};

/// One term of the series: W = Omega (alpha0 dF + beta0 conj(dbar F)),
/// returns (K[W], K_d[W], K_dbar[W]).
StepResult iterate_step(const CanonicalParams& params, const DiskField& omega_ratio,
                        const DiskField& F_prev, const DiskField& dF_prev, const DiskField& dbarF_prev);

Solution solve_series(const CanonicalParams& params, const BoundaryFunction& H,
                      const ConformalMapSeries& map, const SolverConfig& cfg);

/// ||d dbar S + t d(Omega d(T0 S))||_{L2(|z| <= radius)} with spectral derivatives.
double residual_M(const CanonicalParams& params, const DiskField& omega_ratio, const DiskField& S,
                  double radius = 0.9);

/// max_m |S(1, theta_m) - H(theta_m)| on the grid angles.
double boundary_error(const DiskField& S, const BoundaryFunction& H);

}  // namespace ellpert
