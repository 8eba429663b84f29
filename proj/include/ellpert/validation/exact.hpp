#pragma once

#include <vector>

#include "ellpert/canon.hpp"
#include "ellpert/validation/bipoly.hpp"

namespace ellpert::validation {

enum class ExactFamily { LAME, SKEW };

/// LAME (tau = 0): f = phi(z) + conj(phi(z)) - sigma zbar phi'(z).
/// SKEW (sigma = 0, tau > 0): f = psi(zbar - z/tau).
/// poly_coeffs holds the generating polynomial, index = power.
struct ExactSolutionSpec {
    ExactFamily family = ExactFamily::LAME;
    std::vector<cplx> poly_coeffs;
    CanonicalParams params;
};

/// d dbar f + t_norm d^2(T0 f) on coefficients.
Bipoly apply_operator(const Bipoly& f, const CanonicalParams& params);

/// Builds f and checks that apply_operator(f) cancels to the zero polynomial
/// (relative 1e-12); throws std::invalid_argument on family constraint
/// violations and std::logic_error if the check fails.
Bipoly exact_polynomial(const ExactSolutionSpec& spec);

struct ExactSolution {
    Bipoly poly;
    DiskField field;
    BoundaryFunction trace;
};
ExactSolution exact_solution(const ExactSolutionSpec& spec, const GridPtr& grid);

}  // namespace ellpert::validation
