#pragma once

#include <cstdint>

#include "ellpert/disk_ops.hpp"

namespace ellpert::validation {

/// Lacunary series H(theta) = sum_{2^j <= modes} 2^{-alpha j} cos(2^j theta + phi_j)
/// with seeded phases; C^alpha and no smoother. The decay estimate is stored
/// in holder_exponent_estimate.
BoundaryFunction holder_boundary(double alpha, int modes, std::uint64_t seed);

}  // namespace ellpert::validation
