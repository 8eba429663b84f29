#include "ellpert/validation/fd_solve.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

namespace ellpert::validation {

namespace {

// Depths of the two interpolation points beyond the node, in units of h.
constexpr double kInnerFirst = 2.5;
constexpr double kInnerSecond = 4.0;

// Lagrange weights on offsets -1, 0, 1 at u in [-1/2, 1/2].
std::array<double, 3> quadratic_weights(double u) {
    return {0.5 * u * (u - 1.0), 1.0 - u * u, 0.5 * u * (u + 1.0)};
}

}  // namespace

CartesianField fd_solve(const CanonicalParams& params, const ConformalMapSeries& map,
                        const BoundaryFunction& H, int n) {
    if (n < 32) throw std::invalid_argument("fd_solve needs n >= 32");
    require_univalent(map);

    CartesianField field;
    field.n = n;
    field.values.assign(static_cast<std::size_t>(n) * n, cplx(0.0));
    field.inside.assign(static_cast<std::size_t>(n) * n, 0);
    const double h = field.spacing();

    std::vector<int> unknown(static_cast<std::size_t>(n) * n, -1);
    int count = 0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (std::norm(field.point(i, j)) < 1.0 - 1e-12) {
                field.inside[field.index(i, j)] = 1;
                unknown[field.index(i, j)] = count++;
            }
        }
    }
    auto is_inside = [&](int i, int j) {
        return i >= 0 && j >= 0 && i < n && j < n && field.inside[field.index(i, j)];
    };

    std::vector<Eigen::Triplet<double>> triplets;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(2 * count);
    const double t = params.t_norm;
    const double a0 = params.alpha0;
    const double b0 = params.beta0;
    const double h2 = h * h;
    const cplx I(0.0, 1.0);

    auto emit = [&](int row, int col, cplx a, cplx b) {
        // a F + b conj(F) = (a + b) u + i (a - b) v
        const cplx plus = a + b;
        const cplx minus = a - b;
        triplets.emplace_back(2 * row, 2 * col, plus.real());
        triplets.emplace_back(2 * row, 2 * col + 1, -minus.imag());
        triplets.emplace_back(2 * row + 1, 2 * col, plus.imag());
        triplets.emplace_back(2 * row + 1, 2 * col + 1, minus.real());
    };

    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (!is_inside(i, j)) continue;
            const int row = unknown[field.index(i, j)];
            bool interior = true;
            for (int dj = -1; dj <= 1 && interior; ++dj) {
                for (int di = -1; di <= 1; ++di) {
                    if (!is_inside(i + di, j + dj)) {
                        interior = false;
                        break;
                    }
                }
            }

            if (interior) {
                const cplx z = field.point(i, j);
                const cplx omega = map.frame_ratio(z);
                const cplx omega_d = map.frame_ratio_d(z);
                // d^2 = (xx - 2i xy - yy)/4, d = (x - i y)/2
                const cplx c2 = t * omega;
                const cplx c1 = t * omega_d;
                std::array<cplx, 9> w2{};   // stencil weights of d^2
                std::array<cplx, 9> w1{};   // stencil weights of d
                std::array<cplx, 9> lap{};  // stencil weights of d dbar
                auto at = [](int di, int dj) { return (dj + 1) * 3 + (di + 1); };
                // d dbar = Laplacian / 4
                lap[at(0, 0)] = -1.0 / h2;
                lap[at(1, 0)] = lap[at(-1, 0)] = lap[at(0, 1)] = lap[at(0, -1)] = 0.25 / h2;
                // xx
                w2[at(1, 0)] += 0.25 / h2;
                w2[at(-1, 0)] += 0.25 / h2;
                w2[at(0, 0)] += -0.5 / h2;
                // -yy
                w2[at(0, 1)] -= 0.25 / h2;
                w2[at(0, -1)] -= 0.25 / h2;
                w2[at(0, 0)] -= -0.5 / h2;
                // -2i xy, four-corner cross
                const cplx xy = -2.0 * I * 0.25 / (4.0 * h2);
                w2[at(1, 1)] += xy;
                w2[at(-1, -1)] += xy;
                w2[at(1, -1)] -= xy;
                w2[at(-1, 1)] -= xy;
                w1[at(1, 0)] += 0.5 / (2.0 * h);
                w1[at(-1, 0)] -= 0.5 / (2.0 * h);
                w1[at(0, 1)] += -I * 0.5 / (2.0 * h);
                w1[at(0, -1)] -= -I * 0.5 / (2.0 * h);

                for (int dj = -1; dj <= 1; ++dj) {
                    for (int di = -1; di <= 1; ++di) {
                        const int s = at(di, dj);
                        const cplx a = lap[s] + a0 * (c2 * w2[s] + c1 * w1[s]);
                        const cplx b = b0 * (c2 * w2[s] + c1 * w1[s]);
                        if (a == cplx(0.0) && b == cplx(0.0)) continue;
                        emit(row, unknown[field.index(i + di, j + dj)], a, b);
                    }
                }
                continue;
            }

            // Dirichlet row: quadratic in the distance s from the circle along
            // the ray, through s = 0 (H), s1 and s2. The inner points sit far
            // enough in that their 3x3 interpolation blocks are inside the disk.
            const cplx z = field.point(i, j);
            const double rho = std::abs(z);
            const double s0 = 1.0 - rho;
            const double s1 = s0 + kInnerFirst * h;
            const double s2 = s0 + kInnerSecond * h;
            const double L0 = (s0 - s1) * (s0 - s2) / (s1 * s2);
            const double L1 = s0 * (s0 - s2) / (s1 * (s1 - s2));
            const double L2 = s0 * (s0 - s1) / (s2 * (s2 - s1));
            emit(row, row, 1.0, 0.0);
            const cplx unit = z / rho;
            cplx boundary = L0 * H(std::arg(z));
            for (auto [weight, depth] : {std::pair{L1, s1}, std::pair{L2, s2}}) {
                const cplx q = unit * (1.0 - depth);
                const double fx = (q.real() + 1.0) / h;
                const double fy = (q.imag() + 1.0) / h;
                const int ic = static_cast<int>(std::lround(fx));
                const int jc = static_cast<int>(std::lround(fy));
                const auto wx = quadratic_weights(fx - ic);
                const auto wy = quadratic_weights(fy - jc);
                for (int dj = -1; dj <= 1; ++dj) {
                    for (int di = -1; di <= 1; ++di) {
                        if (!is_inside(ic + di, jc + dj)) {
                            throw std::logic_error("boundary interpolation block leaves the disk");
                        }
                        emit(row, unknown[field.index(ic + di, jc + dj)], -weight * wx[di + 1] * wy[dj + 1], 0.0);
                    }
                }
            }
            rhs[2 * row] = boundary.real();
            rhs[2 * row + 1] = boundary.imag();
        }
    }

    Eigen::SparseMatrix<double> A(2 * count, 2 * count);
    A.setFromTriplets(triplets.begin(), triplets.end());
    A.makeCompressed();
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success) {
        throw std::runtime_error("finite-difference system is singular (loss of ellipticity?)");
    }
    const Eigen::VectorXd sol = lu.solve(rhs);
    if (lu.info() != Eigen::Success) throw std::runtime_error("finite-difference solve failed");

    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const int u = unknown[field.index(i, j)];
            if (u >= 0) field.values[field.index(i, j)] = {sol[2 * u], sol[2 * u + 1]};
        }
    }
    return field;
}

Discrepancy compare(const CartesianField& field, const std::function<cplx(cplx)>& reference,
                    double radius) {
    Discrepancy out;
    double sum = 0.0;
    for (int j = 0; j < field.n; ++j) {
        for (int i = 0; i < field.n; ++i) {
            if (!field.inside[field.index(i, j)]) continue;
            const cplx z = field.point(i, j);
            if (std::abs(z) > radius) continue;
            const double e = std::abs(field.values[field.index(i, j)] - reference(z));
            out.max = std::max(out.max, e);
            sum += e;
            ++out.count;
        }
    }
    out.mean = out.count ? sum / out.count : 0.0;
    return out;
}

}  // namespace ellpert::validation
