#pragma once

#include <functional>

#include "ellpert/disk_ops.hpp"

namespace ellpert::validation {

struct BruteForceOptions {
    int angular = 256;  ///< trapezoid nodes in the direction around z
    int radial = 64;    ///< Gauss nodes along each ray
};

/// Direct quadrature of the defining area integral at an interior point z,
/// in polar coordinates centred at z so that rays run from z to the unit
/// circle. BEURLING_KD excludes the disk |zeta - z| < epsilon and
/// Richardson-extrapolates (eps, eps/2) assuming an O(eps^2) remainder;
/// KDBAR includes the -phi(z) term. Throws std::invalid_argument for |z| >= 1.
cplx bruteforce_kernel(KernelId kernel, const std::function<cplx(cplx)>& phi, cplx z,
                       double epsilon = 1e-2, const BruteForceOptions& opts = {});

cplx bruteforce_kernel(KernelId kernel, const DiskField& phi, cplx z, double epsilon = 1e-2,
                       const BruteForceOptions& opts = {});

}  // namespace ellpert::validation
