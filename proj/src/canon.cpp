#include "ellpert/canon.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ellpert {

bool AffineConjOp::invertible() const {
    return std::abs(alpha_) != std::abs(beta_);
}

AffineConjOp AffineConjOp::inverse() const {
    const double det = std::norm(alpha_) - std::norm(beta_);
    if (det == 0.0) {
        throw std::domain_error("affine conjugation operator with |alpha| == |beta| is not invertible");
    }
    return {std::conj(alpha_) / det, -beta_ / det};
}

AffineConjOp AffineConjOp::compose(const AffineConjOp& inner) const {
    // a(A w + B w~) + b conj(A w + B w~) = (aA + b conj(B)) w + (aB + b conj(A)) w~
    return {alpha_ * inner.alpha_ + beta_ * std::conj(inner.beta_),
            alpha_ * inner.beta_ + beta_ * std::conj(inner.alpha_)};
}

CanonicalParams canonical_params(double tau, double sigma) {
    auto check = [](double v, const char* name) {
        if (!(v >= 0.0 && v < 1.0)) {
            throw std::invalid_argument(std::string(name) + " = " + std::to_string(v) +
                                        " is outside [0, 1): the system is not strongly elliptic "
                                        "(strong ellipticity requires 0 <= tau, sigma < 1)");
        }
    };
    check(tau, "tau");
    check(sigma, "sigma");

    CanonicalParams p;
    p.tau = tau;
    p.sigma = sigma;
    p.t_norm = (tau + sigma) / (1.0 + sigma * tau);
    if (tau + sigma > 0.0) {
        const double den = (tau + sigma) * (1.0 - sigma * tau);
        p.alpha0 = tau * (1.0 - sigma * sigma) / den;
        p.beta0 = sigma * (1.0 - tau * tau) / den;
    } else {
        p.alpha0 = 1.0;
        p.beta0 = 0.0;
    }
    return p;
}

}  // namespace ellpert
