#include "ellpert/validation/holder.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ellpert::validation {

BoundaryFunction holder_boundary(double alpha, int modes, std::uint64_t seed) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
    if (modes < 1) throw std::invalid_argument("modes must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::map<int, cplx> coeffs;
    for (int j = 0; (1 << j) <= modes; ++j) {
        const int k = 1 << j;
        const cplx c = 0.5 * std::pow(2.0, -alpha * j) * std::polar(1.0, phase(rng));
        coeffs[k] = c;
        coeffs[-k] = std::conj(c);
    }
    BoundaryFunction h = BoundaryFunction::from_modes(coeffs);
    if (h.max_mode < modes) {
        h.coeffs.insert(h.coeffs.begin(), modes - h.max_mode, cplx(0.0));
        h.coeffs.insert(h.coeffs.end(), modes - h.max_mode, cplx(0.0));
        h.max_mode = modes;
    }
    const DecayDiagnostic decay = decay_diagnostic(h);
    if (decay.available) h.holder_exponent_estimate = decay.exponent;
    return h;
}

}  // namespace ellpert::validation
