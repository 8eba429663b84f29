#pragma once

#include <cstdint>
#include <vector>

#include "ellpert/disk_ops.hpp"

namespace ellpert::validation {

struct OpnormEstimate {
    double value = 0.0;
    /// True for p != 2, where the value is the best ratio found, not the norm.
    bool lower_bound = false;
    int iterations = 0;
};

/// ||A phi||_p / ||phi||_p on the grid quadrature.
double norm_ratio(KernelId kernel, const DiskField& phi, double p);

/// p = 2: power iteration on A*A, the adjoint taken in the discrete
/// quadrature inner product, from `trials` random starts.
/// p != 2: best ratio over random band-limited fields, the kernel's
/// norm-attaining families and the p = 2 maximiser, each refined by the
/// nonlinear power ascent x <- J_p'(A* J_p(A x)); reported as a lower bound.
OpnormEstimate opnorm_estimate(KernelId kernel, double p, const GridPtr& grid, int trials,
                               std::uint64_t seed = 1);

}  // namespace ellpert::validation
