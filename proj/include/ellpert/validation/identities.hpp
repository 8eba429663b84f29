#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ellpert/disk_ops.hpp"

namespace ellpert::validation {

/// One closed-form kernel identity A[phi] = expected.
struct KernelIdentity {
    std::string name;
    KernelId kernel;
    std::function<cplx(cplx)> phi;
    std::function<cplx(cplx)> expected;
};

/// K[1], K[zbar], K[zeta], K_d[1], K_d[zbar], K_d[zeta], K_dbar[1], K_dbar[zeta]
/// and K_dbar[zeta exp(-|zeta|^2)].
std::vector<KernelIdentity> standard_identities();

struct IdentityCheck {
    std::string name;
    double fast_error = 0.0;    ///< max |fast - closed form|
    double oracle_error = 0.0;  ///< max |fast - brute force|
    bool pass = false;
};

struct IdentitySuiteOptions {
    int points = 10;
    double max_radius = 0.85;
    std::uint64_t seed = 7;
    double fast_tol = 1e-8;
    double oracle_tol = 1e-6;
};

/// Evaluates each identity at seeded random interior points.
std::vector<IdentityCheck> run_identity_suite(const GridPtr& grid, const IdentitySuiteOptions& opts = {});

/// Uniform points in |z| <= max_radius.
std::vector<cplx> random_disk_points(int count, double max_radius, std::uint64_t seed);

}  // namespace ellpert::validation
