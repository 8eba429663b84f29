#include "ellpert/disk_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ellpert {

using Region = PolarGrid::Region;

namespace {

Eigen::VectorXcd apply_real(const Eigen::MatrixXd& a, const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out(a.rows());
    out.real() = a * v.real();
    out.imag() = a * v.imag();
    return out;
}

cplx moment_of(const Eigen::RowVectorXd& m, const Eigen::VectorXcd& v) {
    return {m.dot(v.real()), m.dot(v.imag())};
}

Eigen::VectorXd node_powers(const PolarGrid& grid, int power) {
    Eigen::VectorXd out(grid.radial_count());
    for (int j = 0; j < grid.radial_count(); ++j) out[j] = std::pow(grid.nodes()[j], power);
    return out;
}

// Minimal-norm correction making each radial interpolant vanish at rho = 1.
void pin_zero_trace(const PolarGrid& grid, Eigen::MatrixXcd& coeffs) {
    const Eigen::VectorXd row = grid.interpolation_row(1.0);
    const double norm2 = row.squaredNorm();
    for (Eigen::Index c = 0; c < coeffs.cols(); ++c) {
        const cplx trace = row.cast<cplx>().dot(coeffs.col(c));
        coeffs.col(c) -= (trace / norm2) * row.cast<cplx>();
    }
}

}  // namespace

BoundaryFunction BoundaryFunction::from_modes(const std::map<int, cplx>& modes) {
    int K = 0;
    for (const auto& [k, v] : modes) K = std::max(K, std::abs(k));
    BoundaryFunction h;
    h.max_mode = K;
    h.coeffs.assign(2 * K + 1, cplx(0.0));
    for (const auto& [k, v] : modes) h.coeffs[k + K] += v;
    return h;
}

cplx BoundaryFunction::operator()(double theta) const {
    cplx sum = 0.0;
    for (int k = -max_mode; k <= max_mode; ++k) sum += coeff(k) * std::polar(1.0, k * theta);
    return sum;
}

bool BoundaryFunction::is_real(double tol) const {
    for (int k = 0; k <= max_mode; ++k) {
        if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol) return false;
    }
    return true;
}

DecayDiagnostic decay_diagnostic(const BoundaryFunction& h) {
    std::vector<std::pair<double, double>> pts;
    double peak = 0.0;
    for (int k = 1; k <= h.max_mode; ++k) {
        peak = std::max({peak, std::abs(h.coeff(k)), std::abs(h.coeff(-k))});
    }
    if (peak == 0.0) return {};
    for (int k = 1; k <= h.max_mode; ++k) {
        const double a = std::max(std::abs(h.coeff(k)), std::abs(h.coeff(-k)));
        if (a > 1e-13 * peak) pts.emplace_back(std::log(k), std::log(a));
    }
    if (pts.size() < 3) return {};
    // Tail: k >= k_max / 8 when that still leaves three points.
    const double cut = pts.back().first - std::log(8.0);
    std::vector<std::pair<double, double>> tail;
    for (const auto& p : pts) {
        if (p.first >= cut - 1e-12) tail.push_back(p);
    }
    if (tail.size() < 3) tail = pts;

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(tail.size());
    for (const auto& [x, y] : tail) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double den = n * sxx - sx * sx;
    if (den <= 0.0) return {};
    return {true, -(n * sxy - sx * sy) / den, static_cast<int>(tail.size())};
}

std::string to_string(KernelId id) {
    switch (id) {
        case KernelId::GREEN_K: return "GREEN_K";
        case KernelId::BEURLING_KD: return "BEURLING_KD";
        case KernelId::KDBAR: return "KDBAR";
    }
    return "?";
}

KernelId kernel_from_string(const std::string& name) {
    if (name == "GREEN_K") return KernelId::GREEN_K;
    if (name == "BEURLING_KD") return KernelId::BEURLING_KD;
    if (name == "KDBAR") return KernelId::KDBAR;
    throw std::invalid_argument("unknown kernel '" + name + "'");
}

PoissonExtension poisson_extend(const BoundaryFunction& h, const GridPtr& grid) {
    const int K = grid->max_mode();
    if (h.max_mode > K) {
        for (int k = K + 1; k <= h.max_mode; ++k) {
            if (h.coeff(k) != cplx(0.0) || h.coeff(-k) != cplx(0.0)) {
                throw std::invalid_argument("boundary data is not band-limited to the grid");
            }
        }
    }
    const int J = grid->radial_count();
    Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(J, 2 * K + 1);
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(J, 2 * K + 1);
    Eigen::MatrixXcd dbar = Eigen::MatrixXcd::Zero(J, 2 * K + 1);
    for (int k = -K; k <= K; ++k) {
        const cplx hk = h.coeff(k);
        if (hk == cplx(0.0)) continue;
        const int a = std::abs(k);
        for (int j = 0; j < J; ++j) {
            const double r = grid->nodes()[j];
            f(j, k + K) = hk * std::pow(r, a);
            if (k >= 1) d(j, k - 1 + K) = static_cast<double>(a) * hk * std::pow(r, a - 1);
            if (k <= -1) dbar(j, k + 1 + K) = static_cast<double>(a) * hk * std::pow(r, a - 1);
        }
    }
    return {DiskField(grid, std::move(f)), DiskField(grid, std::move(d)), DiskField(grid, std::move(dbar))};
}

// Mode k of phi feeds mode k-1:
//   k >= 1: 2 r^{k-1} \int_r^1 c rho^{1-k}
//   k <= 0: -2 r^{k-1} \int_0^r c rho^{1-k} + 2 r^{1-k} \int_0^1 c rho^{1-k}
DiskField green_volume_K(const DiskField& phi) {
    const PolarGrid& grid = phi.grid();
    const int K = grid.max_mode();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(grid.radial_count(), grid.mode_count());
    for (int k = -K + 1; k <= K; ++k) {
        const Eigen::VectorXcd c = phi.mode(k);
        if (c.isZero(0.0)) continue;
        Eigen::VectorXcd v;
        if (k >= 1) {
            v = 2.0 * apply_real(grid.split_integral(Region::Outer, k - 1, 1 - k), c);
        } else {
            const int a = 1 - k;
            v = -2.0 * apply_real(grid.split_integral(Region::Inner, k - 1, a), c);
            v += (2.0 * moment_of(grid.moment(a), c)) * node_powers(grid, a).cast<cplx>();
        }
        out.col(k - 1 + K) = v;
    }
    pin_zero_trace(grid, out);
    return {phi.grid_ptr(), std::move(out)};
}

// Mode k of phi feeds mode k-2:
//   -c(r) + { k >= 2: 2(k-1) r^{k-2} \int_r^1 c rho^{1-k};  k = 1: 0;
//             k <= 0: 2(1-k) r^{k-2} \int_0^r c rho^{1-k} }
// The local -c(r) term is what the p.v. over shrinking disks adds to the
// radially split integral.
DiskField beurling_Kd(const DiskField& phi) {
    const PolarGrid& grid = phi.grid();
    const int K = grid.max_mode();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(grid.radial_count(), grid.mode_count());
    for (int k = -K + 2; k <= K; ++k) {
        const Eigen::VectorXcd c = phi.mode(k);
        if (c.isZero(0.0)) continue;
        Eigen::VectorXcd v = -c;
        if (k >= 2) {
            v += (2.0 * (k - 1)) * apply_real(grid.split_integral(Region::Outer, k - 2, 1 - k), c);
        } else if (k <= 0) {
            v += (2.0 * (1 - k)) * apply_real(grid.split_integral(Region::Inner, k - 2, 1 - k), c);
        }
        out.col(k - 2 + K) = v;
    }
    return {phi.grid_ptr(), std::move(out)};
}

// Mode k of phi feeds mode k: -c(r) + [k <= 0] 2(1-k) r^{-k} \int_0^1 c rho^{1-k}.
DiskField kdbar(const DiskField& phi) {
    const PolarGrid& grid = phi.grid();
    const int K = grid.max_mode();
    Eigen::MatrixXcd out = -phi.coeffs();
    for (int k = -K; k <= 0; ++k) {
        const Eigen::VectorXcd c = phi.mode(k);
        if (c.isZero(0.0)) continue;
        const cplx mom = moment_of(grid.moment(1 - k), c);
        out.col(k + K) += (2.0 * (1 - k) * mom) * node_powers(grid, -k).cast<cplx>();
    }
    return {phi.grid_ptr(), std::move(out)};
}

DiskField apply_kernel(KernelId id, const DiskField& phi) {
    switch (id) {
        case KernelId::GREEN_K: return green_volume_K(phi);
        case KernelId::BEURLING_KD: return beurling_Kd(phi);
        case KernelId::KDBAR: return kdbar(phi);
    }
    throw std::invalid_argument("unknown kernel");
}

}  // namespace ellpert
