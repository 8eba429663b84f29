#include "ellpert/validation/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ellpert/validation/bruteforce.hpp"

namespace ellpert::validation {

std::vector<KernelIdentity> standard_identities() {
    const auto one = [](cplx) { return cplx(1.0); };
    const auto zeta = [](cplx z) { return z; };
    const auto zetabar = [](cplx z) { return std::conj(z); };
    const auto zero = [](cplx) { return cplx(0.0); };
    const auto bump = [](cplx z) { return z * std::exp(-std::norm(z)); };
    using K = KernelId;
    return {
        {"K[1]=0", K::GREEN_K, one, zero},
        {"K[zbar]=0", K::GREEN_K, zetabar, zero},
        {"K[z]=1-|z|^2", K::GREEN_K, zeta, [](cplx z) { return cplx(1.0 - std::norm(z)); }},
        {"Kd[1]=0", K::BEURLING_KD, one, zero},
        {"Kd[zbar]=0", K::BEURLING_KD, zetabar, zero},
        {"Kd[z]=-zbar", K::BEURLING_KD, zeta, [](cplx z) { return -std::conj(z); }},
        {"Kdbar[1]=0", K::KDBAR, one, zero},
        {"Kdbar[z]=-z", K::KDBAR, zeta, [](cplx z) { return -z; }},
        {"Kdbar[c(r)e^it]=-phi", K::KDBAR, bump, [bump](cplx z) { return -bump(z); }},
    };
}

std::vector<cplx> random_disk_points(int count, double max_radius, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<cplx> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double r = max_radius * std::sqrt(u(rng));
        const double t = 2.0 * std::numbers::pi * u(rng);
        pts.push_back(std::polar(r, t));
    }
    return pts;
}

std::vector<IdentityCheck> run_identity_suite(const GridPtr& grid, const IdentitySuiteOptions& opts) {
    const std::vector<cplx> pts = random_disk_points(opts.points, opts.max_radius, opts.seed);
    std::vector<PolarPoint> polar;
    for (cplx z : pts) polar.push_back({std::abs(z), std::arg(z)});

    std::vector<IdentityCheck> out;
    for (const KernelIdentity& id : standard_identities()) {
        const DiskField phi = sample_function(grid, id.phi);
        const std::vector<cplx> fast = synthesize(apply_kernel(id.kernel, phi), polar);
        IdentityCheck check{id.name};
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const cplx brute = bruteforce_kernel(id.kernel, id.phi, pts[i]);
            check.fast_error = std::max(check.fast_error, std::abs(fast[i] - id.expected(pts[i])));
            check.oracle_error = std::max(check.oracle_error, std::abs(fast[i] - brute));
        }
        check.pass = check.fast_error <= opts.fast_tol && check.oracle_error <= opts.oracle_tol;
        out.push_back(check);
    }
    return out;
}

}  // namespace ellpert::validation
