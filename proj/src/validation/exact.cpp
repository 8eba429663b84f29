#include "ellpert/validation/exact.hpp"

#include <stdexcept>

namespace ellpert::validation {

Bipoly apply_operator(const Bipoly& f, const CanonicalParams& params) {
    const Bipoly t0f = f * params.alpha0 + f.conj() * params.beta0;
    return f.dbar().d() + t0f.d().d() * params.t_norm;
}

Bipoly exact_polynomial(const ExactSolutionSpec& spec) {
    if (spec.poly_coeffs.empty()) throw std::invalid_argument("exact solution needs a generating polynomial");
    const CanonicalParams& p = spec.params;
    Bipoly f;
    if (spec.family == ExactFamily::LAME) {
        if (p.tau != 0.0) throw std::invalid_argument("LAME family requires tau = 0");
        const Bipoly phi = Bipoly::compose(spec.poly_coeffs, Bipoly::z());
        f = phi + phi.conj() - Bipoly::zbar() * phi.d() * p.sigma;
    } else {
        if (p.sigma != 0.0 || !(p.tau > 0.0)) {
            throw std::invalid_argument("SKEW family requires sigma = 0 and tau > 0");
        }
        const Bipoly w = Bipoly::zbar() - Bipoly::z() * (1.0 / p.tau);
        f = Bipoly::compose(spec.poly_coeffs, w);
    }
    const Bipoly residual = apply_operator(f, p);
    if (residual.max_abs_coeff() > 1e-12 * std::max(1.0, f.max_abs_coeff())) {
        throw std::logic_error("exact solution does not annihilate the operator");
    }
    return f;
}

ExactSolution exact_solution(const ExactSolutionSpec& spec, const GridPtr& grid) {
    Bipoly f = exact_polynomial(spec);
    DiskField field = to_field(f, grid);
    BoundaryFunction h = trace(f);
    return {std::move(f), std::move(field), std::move(h)};
}

}  // namespace ellpert::validation
