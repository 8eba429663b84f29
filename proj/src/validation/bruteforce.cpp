#include "ellpert/validation/bruteforce.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ellpert::validation {

namespace {

// (1/pi) \int_{|zeta - z| > eps} phi(zeta) / (zeta - z)^2 dmu, rays parametrised
// logarithmically so that ds/s becomes a smooth measure.
cplx excluded_beurling(const std::function<cplx(cplx)>& phi, cplx z, double eps,
                       const BruteForceOptions& opts) {
    const GaussRule rule = gauss_legendre(opts.radial, 0.0, 1.0);
    const double dpsi = 2.0 * std::numbers::pi / opts.angular;
    const double inside = 1.0 - std::norm(z);
    cplx total = 0.0;
    for (int a = 0; a < opts.angular; ++a) {
        const cplx e = std::polar(1.0, a * dpsi);
        const double b = std::real(std::conj(z) * e);
        const double smax = -b + std::sqrt(b * b + inside);
        const double L = std::log(smax / eps);
        cplx ray = 0.0;
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            const double s = eps * std::exp(L * rule.x[i]);
            ray += rule.w[i] * phi(z + s * e);
        }
        total += ray * L * std::conj(e * e);
    }
    return total * dpsi / std::numbers::pi;
}

template <class Kernel>
cplx regular_integral(const std::function<cplx(cplx)>& phi, cplx z, const BruteForceOptions& opts,
                      Kernel&& kernel_times_s) {
    const GaussRule rule = gauss_legendre(opts.radial, 0.0, 1.0);
    const double dpsi = 2.0 * std::numbers::pi / opts.angular;
    const double inside = 1.0 - std::norm(z);
    cplx total = 0.0;
    for (int a = 0; a < opts.angular; ++a) {
        const cplx e = std::polar(1.0, a * dpsi);
        const double b = std::real(std::conj(z) * e);
        const double smax = -b + std::sqrt(b * b + inside);
        cplx ray = 0.0;
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            const double s = smax * rule.x[i];
            const cplx zeta = z + s * e;
            ray += rule.w[i] * kernel_times_s(zeta, s, e) * phi(zeta);
        }
        total += ray * smax;
    }
    return total * dpsi / std::numbers::pi;
}

}  // namespace

cplx bruteforce_kernel(KernelId kernel, const std::function<cplx(cplx)>& phi, cplx z, double epsilon,
                       const BruteForceOptions& opts) {
    if (!(std::abs(z) < 1.0)) throw std::invalid_argument("brute-force evaluation point must be interior");
    const cplx zb = std::conj(z);
    switch (kernel) {
        case KernelId::GREEN_K:
            // (1/(zeta - z)) s = conj(e) on the ray zeta = z + s e
            return regular_integral(phi, z, opts, [&](cplx zeta, double s, cplx e) {
                return std::conj(e) + zb * s / (1.0 - zeta * zb);
            });
        case KernelId::KDBAR: {
            const cplx integral = regular_integral(phi, z, opts, [&](cplx zeta, double s, cplx) {
                const cplx q = 1.0 - zeta * zb;
                return s / (q * q);
            });
            return integral - phi(z);
        }
        case KernelId::BEURLING_KD: {
            if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
            const double eps = std::min(epsilon, 0.25 * (1.0 - std::abs(z)));
            const cplx coarse = excluded_beurling(phi, z, eps, opts);
            const cplx fine = excluded_beurling(phi, z, 0.5 * eps, opts);
            return (4.0 * fine - coarse) / 3.0;
        }
    }
    throw std::invalid_argument("unknown kernel");
}

cplx bruteforce_kernel(KernelId kernel, const DiskField& phi, cplx z, double epsilon,
                       const BruteForceOptions& opts) {
    auto f = [&phi](cplx zeta) {
        const double r = std::min(std::abs(zeta), 1.0);
        return evaluate(phi, r, std::arg(zeta));
    };
    return bruteforce_kernel(kernel, f, z, epsilon, opts);
}

}  // namespace ellpert::validation
