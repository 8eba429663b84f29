#include "ellpert/validation/opnorm.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ellpert::validation {

namespace {

int mode_shift(KernelId kernel) {
    switch (kernel) {
        case KernelId::GREEN_K: return 1;
        case KernelId::BEURLING_KD: return 2;
        case KernelId::KDBAR: return 0;
    }
    return 0;
}

Eigen::VectorXd quadrature_scale(const PolarGrid& grid) {
    Eigen::VectorXd scale(grid.radial_count());
    for (int j = 0; j < grid.radial_count(); ++j) scale[j] = std::sqrt(2.0 * std::numbers::pi * grid.weights()[j]);
    return scale;
}

// Radial block of the kernel from input mode k to output mode k - shift.
// Coordinates are x_j = sqrt(2 pi w_j) c_j, where the quadrature inner
// product is the Euclidean one. `basis` has orthonormal columns spanning
// the resolved profiles rho^{|k| + 2m}, i.e. the polynomials in z, zbar of
// that mode whose squares the radial rule still integrates exactly.
// Arbitrary node vectors are not used: values spiking at the innermost
// nodes are not functions on the disk and the discrete operator can
// amplify them beyond the continuous norm.
struct Block {
    int k_in;
    int k_out;
    Eigen::MatrixXcd full;   ///< J x J, scaled
    Eigen::MatrixXcd basis;  ///< J x M, scaled, orthonormal columns
    Eigen::MatrixXcd restricted() const { return full * basis; }
};

std::vector<Block> scaled_blocks(KernelId kernel, const GridPtr& grid) {
    const int K = grid->max_mode();
    const int J = grid->radial_count();
    const int shift = mode_shift(kernel);
    const int max_degree = (J - 1) / 2;
    const Eigen::VectorXd scale = quadrature_scale(*grid);

    std::vector<Block> blocks;
    for (int k = -K; k <= K; ++k) {
        if (k - shift < -K || std::abs(k) > max_degree) continue;
        Eigen::MatrixXcd m(J, J);
        for (int j = 0; j < J; ++j) {
            Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(J, grid->mode_count());
            unit(j, k + K) = 1.0;
            const DiskField image = apply_kernel(kernel, DiskField(grid, std::move(unit)));
            m.col(j) = image.mode(k - shift);
        }
        m = scale.asDiagonal() * m * scale.cwiseInverse().asDiagonal();

        const int count = (max_degree - std::abs(k)) / 2 + 1;
        Eigen::MatrixXcd raw(J, count);
        for (int i = 0; i < count; ++i) {
            for (int j = 0; j < J; ++j) raw(j, i) = scale[j] * std::pow(grid->nodes()[j], std::abs(k) + 2 * i);
        }
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(raw);
        Eigen::MatrixXcd basis = qr.householderQ() * Eigen::MatrixXcd::Identity(J, count);
        blocks.push_back({k, k - shift, std::move(m), std::move(basis)});
    }
    return blocks;
}

// Field from per-block coordinates in the scaled basis.
DiskField field_from(const std::vector<Block>& blocks, const GridPtr& grid, const std::vector<Eigen::VectorXcd>& x) {
    const Eigen::VectorXd scale = quadrature_scale(*grid);
    Eigen::MatrixXcd coeffs = Eigen::MatrixXcd::Zero(grid->radial_count(), grid->mode_count());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        coeffs.col(blocks[b].k_in + grid->max_mode()) =
            scale.cwiseInverse().cast<cplx>().cwiseProduct(blocks[b].basis * x[b]);
    }
    return {grid, std::move(coeffs)};
}

// Orthogonal projection onto the resolved subspace, as basis coordinates.
std::vector<Eigen::VectorXcd> project(const std::vector<Block>& blocks, const DiskField& f) {
    const Eigen::VectorXd scale = quadrature_scale(f.grid());
    std::vector<Eigen::VectorXcd> x;
    for (const Block& b : blocks) {
        x.push_back(b.basis.adjoint() * scale.cast<cplx>().cwiseProduct(f.mode(b.k_in)));
    }
    return x;
}

// A* in the quadrature inner product, then projected onto the resolved subspace.
std::vector<Eigen::VectorXcd> adjoint_projected(const std::vector<Block>& blocks, const DiskField& y) {
    const Eigen::VectorXd scale = quadrature_scale(y.grid());
    std::vector<Eigen::VectorXcd> x;
    for (const Block& b : blocks) {
        const Eigen::VectorXcd scaled = scale.cast<cplx>().cwiseProduct(y.mode(b.k_out));
        x.push_back(b.restricted().adjoint() * scaled);
    }
    return x;
}

DiskField duality_map(const DiskField& f, double p) {
    return map_samples(f, [p](cplx v) {
        const double a = std::abs(v);
        return a == 0.0 ? cplx(0.0) : std::pow(a, p - 2.0) * v;
    });
}

std::vector<Eigen::VectorXcd> random_coords(const std::vector<Block>& blocks, int band, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    std::vector<Eigen::VectorXcd> x;
    for (const Block& b : blocks) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(b.basis.cols());
        if (std::abs(b.k_in) <= band) {
            for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = {normal(rng), normal(rng)};
        }
        x.push_back(std::move(v));
    }
    return x;
}

}  // namespace

double norm_ratio(KernelId kernel, const DiskField& phi, double p) {
    const double den = lp_norm(phi, p);
    if (den == 0.0) return 0.0;
    return lp_norm(apply_kernel(kernel, phi), p) / den;
}

OpnormEstimate opnorm_estimate(KernelId kernel, double p, const GridPtr& grid, int trials,
                               std::uint64_t seed) {
    if (!(p > 1.0 && std::isfinite(p))) throw std::invalid_argument("opnorm needs 1 < p < inf");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const std::vector<Block> blocks = scaled_blocks(kernel, grid);
    std::vector<Eigen::MatrixXcd> restricted;
    for (const Block& b : blocks) restricted.push_back(b.restricted());
    std::mt19937_64 rng(seed);

    const auto total_norm = [](const std::vector<Eigen::VectorXcd>& x) {
        double s = 0.0;
        for (const auto& v : x) s += v.squaredNorm();
        return std::sqrt(s);
    };

    // Power iteration on C^H C over the stacked block coordinates.
    OpnormEstimate l2;
    std::vector<Eigen::VectorXcd> best;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<Eigen::VectorXcd> x = random_coords(blocks, grid->max_mode(), rng);
        double n0 = total_norm(x);
        for (auto& v : x) v /= n0;
        double sigma = 0.0;
        int it = 0;
        for (; it < 5000; ++it) {
            double image2 = 0.0;
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                const Eigen::VectorXcd y = restricted[b] * x[b];
                image2 += y.squaredNorm();
                x[b] = restricted[b].adjoint() * y;
            }
            const double next = std::sqrt(image2);
            const double n = total_norm(x);
            if (n == 0.0) break;
            for (auto& v : x) v /= n;
            const bool settled = std::abs(next - sigma) <= 1e-15 * std::max(1.0, next);
            sigma = next;
            if (settled) break;
        }
        l2.iterations += it;
        if (sigma > l2.value) {
            l2.value = sigma;
            best = x;
        }
    }
    if (p == 2.0) return l2;

    // Lower bound for p != 2.
    OpnormEstimate out;
    out.lower_bound = true;
    std::vector<DiskField> seeds;
    for (int trial = 0; trial < trials; ++trial) {
        seeds.push_back(field_from(blocks, grid, random_coords(blocks, grid->max_mode() / 2, rng)));
    }
    if (!best.empty()) seeds.push_back(field_from(blocks, grid, best));
    if (kernel == KernelId::KDBAR && grid->max_mode() >= 1) {
        // Moment-free functions c(rho) e^{i theta}: K_dbar acts as -identity.
        seeds.push_back(sample_function(grid, [](cplx z) { return z; }));
    }

    const double q = p / (p - 1.0);
    for (DiskField x : seeds) {
        for (int it = 0; it < 25; ++it) {
            const double ratio = norm_ratio(kernel, x, p);
            if (ratio > out.value) out.value = ratio;
            ++out.iterations;
            const DiskField back = field_from(blocks, grid, adjoint_projected(blocks, duality_map(apply_kernel(kernel, x), p)));
            DiskField next = field_from(blocks, grid, project(blocks, duality_map(back, q)));
            const double n = lp_norm(next, p);
            if (!(n > 0.0) || !std::isfinite(n)) break;
            x = next * (1.0 / n);
        }
        out.value = std::max(out.value, norm_ratio(kernel, x, p));
    }
    return out;
}

}  // namespace ellpert::validation
