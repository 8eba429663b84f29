#include "ellpert/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ellpert {

namespace {

// Term counts as vanished below this fraction of ||F_0||_p.
constexpr double kVanishRelative = 1e-13;
constexpr int kVanishRun = 2;
constexpr int kRatioWindow = 5;
constexpr int kDivergingRun = 10;

DiskField frame_product(const DiskField& omega_ratio, const DiskField& w) {
    return multiply(w, omega_ratio);
}

}  // namespace

void SolverConfig::validate() const {
    if (max_terms < 1) throw std::invalid_argument("max_terms must be >= 1");
    if (!(tail_tol > 0.0)) throw std::invalid_argument("tail_tol must be positive");
    if (!(p_exponent > 2.0 && std::isfinite(p_exponent))) {
        throw std::invalid_argument("p_exponent must satisfy 2 < p < inf");
    }
    if (max_mode < 0 || radial_count < 4) throw std::invalid_argument("invalid grid size");
}

std::string to_string(StopReason reason) {
    switch (reason) {
        case StopReason::TailConverged: return "tail_converged";
        case StopReason::TermVanished: return "term_vanished";
        case StopReason::MaxTerms: return "max_terms";
        case StopReason::Diverging: return "diverging";
    }
    return "?";
}

StopMonitor::StopMonitor(double t_norm, double vanish_threshold, double tail_tol)
    : t_(t_norm), vanish_threshold_(vanish_threshold), tail_tol_(tail_tol) {}

std::optional<StopReason> StopMonitor::observe(const TermRecord& rec) {
    ratios_.push_back(rec.ratio);
    const bool vanished = rec.norm_F <= vanish_threshold_;
    vanish_run_ = vanished ? vanish_run_ + 1 : 0;
    if (vanish_run_ >= kVanishRun) return StopReason::TermVanished;

    diverging_run_ = (rec.ratio * t_ >= 1.0) ? diverging_run_ + 1 : 0;
    if (diverging_run_ >= kDivergingRun) {
        std::ostringstream msg;
        msg << "observed derivative-norm ratio times t_norm stayed >= 1 for " << kDivergingRun
            << " consecutive terms (last ratio " << rec.ratio << ", t_norm " << t_
            << "); the contraction regime is not reached at this discretisation";
        message_ = msg.str();
        tail_.reset();
        return StopReason::Diverging;
    }

    // A single vanished term may precede exact termination; wait for the run.
    if (vanished) return std::nullopt;
    const std::size_t window = std::min<std::size_t>(kRatioWindow, ratios_.size());
    const double qbar = *std::max_element(ratios_.end() - static_cast<std::ptrdiff_t>(window), ratios_.end());
    if (qbar * t_ >= 1.0) {
        tail_.reset();
        return std::nullopt;
    }
    tail_ = rec.norm_F * std::pow(t_, rec.n + 1) / (1.0 - qbar * t_);
    if (*tail_ < tail_tol_) return StopReason::TailConverged;
    return std::nullopt;
}

StepResult iterate_step(const CanonicalParams& params, const DiskField& omega_ratio,
                        const DiskField& F_prev, const DiskField& dF_prev, const DiskField& dbarF_prev) {
    require_same_grid(F_prev, dF_prev);
    require_same_grid(F_prev, dbarF_prev);
    require_same_grid(F_prev, omega_ratio);
    // d(T0 F) = alpha0 dF + beta0 conj(dbar F)
    DiskField w = dF_prev * params.alpha0;
    if (params.beta0 != 0.0) w = w + conj_field(dbarF_prev) * params.beta0;
    w = frame_product(omega_ratio, w);
    return {green_volume_K(w), beurling_Kd(w), kdbar(w)};
}

double residual_M(const CanonicalParams& params, const DiskField& omega_ratio, const DiskField& S,
                  double radius) {
    require_same_grid(S, omega_ratio);
    const auto [dS, dbarS] = wirtinger_derivatives(S);
    const DiskField laplace_part = wirtinger_derivatives(dbarS).first;
    DiskField residual = laplace_part;
    if (params.t_norm != 0.0) {
        DiskField inner = dS * params.alpha0;
        if (params.beta0 != 0.0) inner = inner + conj_field(dbarS) * params.beta0;
        const DiskField flux = frame_product(omega_ratio, inner);
        residual = residual + wirtinger_derivatives(flux).first * params.t_norm;
    }
    return lp_norm_disk(residual, 2.0, radius);
}

double boundary_error(const DiskField& S, const BoundaryFunction& H) {
    const std::vector<cplx> trace = S.trace_values();
    double worst = 0.0;
    for (std::size_t m = 0; m < trace.size(); ++m) {
        worst = std::max(worst, std::abs(trace[m] - H(S.grid().angle(static_cast<int>(m)))));
    }
    return worst;
}

Solution solve_series(const CanonicalParams& params, const BoundaryFunction& H,
                      const ConformalMapSeries& map, const SolverConfig& cfg) {
    cfg.validate();
    require_univalent(map);
    const GridPtr grid = make_grid(cfg.max_mode, cfg.radial_count);
    const DiskField omega = derivative_ratio(map, grid);
    const double t = params.t_norm;
    const double p = cfg.p_exponent;

    SeriesReport report;
    report.decay = decay_diagnostic(H);
    if (report.decay.available && report.decay.exponent <= 0.5) {
        std::ostringstream msg;
        msg << "boundary data Fourier decay exponent " << report.decay.exponent
            << " is at or below 1/2: the Hoelder condition alpha > 1/2 of the convergence result "
               "is likely violated";
        report.warnings.push_back(msg.str());
    }

    PoissonExtension ext = poisson_extend(H, grid);
    DiskField F = ext.value;
    DiskField dF = ext.d;
    DiskField dbarF = ext.dbar;
    DiskField S = F;

    std::vector<DiskField> partial_sums;
    if (cfg.keep_partial_sums) partial_sums.push_back(S);

    auto record = [&](int n) {
        TermRecord rec;
        rec.n = n;
        rec.norm_F = lp_norm(F, p);
        rec.norm_DF = std::max(lp_norm(dF, p), lp_norm(dbarF, p));
        const double prev = report.terms.empty() ? 0.0 : report.terms.back().norm_DF;
        rec.ratio = (n > 0 && prev > 0.0) ? rec.norm_DF / prev : 0.0;
        rec.weighted_term = rec.norm_F * std::pow(t, n);
        rec.norm_F_l2 = lp_norm(F, 2.0);
        rec.norm_DF_l2 = std::max(lp_norm(dF, 2.0), lp_norm(dbarF, 2.0));
        report.terms.push_back(rec);
        return rec;
    };

    const TermRecord first = record(0);
    const double vanish_threshold = kVanishRelative * first.norm_F;
    bool stopped = false;

    if (t == 0.0) {
        report.stop_reason = StopReason::TermVanished;
        stopped = true;
    }

    StopMonitor monitor(t, vanish_threshold, cfg.tail_tol);
    for (int n = 1; !stopped && n <= cfg.max_terms; ++n) {
        StepResult step = iterate_step(params, omega, F, dF, dbarF);
        F = std::move(step.F);
        dF = std::move(step.dF);
        dbarF = std::move(step.dbarF);
        S = S + F * std::pow(t, n);
        if (cfg.keep_partial_sums) partial_sums.push_back(S);

        if (const auto reason = monitor.observe(record(n))) {
            report.stop_reason = *reason;
            if (*reason == StopReason::Diverging) report.warnings.push_back(monitor.message());
            stopped = true;
        }
    }
    report.tail_estimate = monitor.tail_estimate();
    if (!stopped) report.stop_reason = StopReason::MaxTerms;

    if (report.stop_reason == StopReason::TermVanished) {
        const TermRecord& last = report.terms.back();
        report.tail_estimate = last.norm_F * std::pow(t, last.n + 1);
    }

    report.residual_norm = residual_M(params, omega, S);
    report.boundary_error = boundary_error(S, H);

    Solution sol{S, std::move(partial_sums), std::move(report), {}, {}};
    const Eigen::MatrixXcd values = S.samples();
    const std::vector<cplx> trace = S.trace_values();
    for (int j = 0; j <= grid->radial_count(); ++j) {
        const bool boundary = j == grid->radial_count();
        const double r = boundary ? 1.0 : grid->nodes()[j];
        for (int m = 0; m < grid->angular_count(); ++m) {
            const PolarPoint pt{r, grid->angle(m)};
            sol.sample_points.push_back(pt);
            sol.physical_samples.emplace_back(map(std::polar(pt.r, pt.t)),
                                              boundary ? trace[m] : values(j, m));
        }
    }
    return sol;
}

}  // namespace ellpert
