#pragma once

#include <complex>

namespace ellpert {

using cplx = std::complex<double>;

/// w -> alpha*w + beta*conj(w), an R-linear map of the complex plane.
class AffineConjOp {
public:
    constexpr AffineConjOp(cplx alpha, cplx beta) : alpha_(alpha), beta_(beta) {}

    cplx alpha() const { return alpha_; }
    cplx beta() const { return beta_; }

    cplx operator()(cplx w) const { return alpha_ * w + beta_ * std::conj(w); }

    /// Operator norm on C, attained on the unit circle.
    double norm() const { return std::abs(alpha_) + std::abs(beta_); }

    bool invertible() const;

    /// (|alpha|^2 - |beta|^2)^{-1} * T_{conj(alpha), -beta}; throws std::domain_error
    /// when |alpha| == |beta|.
    AffineConjOp inverse() const;

    AffineConjOp compose(const AffineConjOp& inner) const;

private:
    cplx alpha_;
    cplx beta_;
};

inline cplx affine_apply(const AffineConjOp& op, cplx w) { return op(w); }

/// Canonical coefficients of the strongly elliptic equation
///   d dbar g + tau d^2 g + sigma (tau d dbar + d^2) conj(g) = 0
/// together with the perturbation magnitude t_norm = ||T|| and the
/// normalised operator T0 = T_{alpha0, beta0}.
struct CanonicalParams {
    double tau = 0.0;
    double sigma = 0.0;
    double t_norm = 0.0;
    double alpha0 = 1.0;
    double beta0 = 0.0;

    AffineConjOp t0() const { return {alpha0, beta0}; }
    /// T = t_norm * T0.
    AffineConjOp perturbation() const { return {t_norm * alpha0, t_norm * beta0}; }
};

/// Validates 0 <= tau, sigma < 1 (std::invalid_argument otherwise). At
/// tau = sigma = 0 the normalised operator is taken to be the identity.
CanonicalParams canonical_params(double tau, double sigma);

}  // namespace ellpert
