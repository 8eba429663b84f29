#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

namespace ellpert {

/// Gauss-Legendre rule on [a, b].
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};
GaussRule gauss_legendre(int n, double a, double b);

/// Discretisation of the closed unit disk: angular modes |k| <= max_mode on
/// angular_count equispaced angles, times radial_count Chebyshev (first kind)
/// nodes mapped into (0, 1).
///
/// Radial profiles are represented by their values at the nodes and
/// interpolated barycentrically; the node set never contains 0 or 1.
class PolarGrid {
public:
    /// Throws std::invalid_argument unless max_mode >= 0 and radial_count >= 4.
    static std::shared_ptr<const PolarGrid> make(int max_mode, int radial_count);

    int max_mode() const { return max_mode_; }
    int mode_count() const { return 2 * max_mode_ + 1; }
    int radial_count() const { return static_cast<int>(nodes_.size()); }
    int angular_count() const { return angular_count_; }

    std::span<const double> nodes() const { return nodes_; }
    /// Weights for \int_0^1 g(rho) rho drho, exact for polynomial g of degree <= radial_count - 1.
    std::span<const double> weights() const { return weights_; }
    double angle(int m) const;
    int exactness_degree() const { return radial_count() - 1; }

    /// Row l_j(r) of the radial interpolant, r in [0, 1].
    Eigen::VectorXd interpolation_row(double r) const;
    /// d/drho on radial node values.
    const Eigen::MatrixXd& diff_matrix() const { return diff_; }

    bool same_as(const PolarGrid& other) const {
        return this == &other ||
               (max_mode_ == other.max_mode_ && radial_count() == other.radial_count());
    }

    enum class Region { Inner, Outer };

    /// Matrix A with (A c)_i = r_i^p * \int c(rho) rho^q drho over [0, r_i]
    /// (Inner) or [r_i, 1] (Outer), c being the radial interpolant of the node
    /// values. Inner requires q >= 0. Cached per (region, p, q).
    const Eigen::MatrixXd& split_integral(Region region, int p, int q) const;

    /// Row vector m with m . c = \int_0^1 c(rho) rho^q drho, q >= 0. Cached.
    const Eigen::RowVectorXd& moment(int q) const;

    PolarGrid(int max_mode, int radial_count);

private:
    Eigen::MatrixXd build_split(Region region, int p, int q) const;

    int max_mode_;
    int angular_count_;
    std::vector<double> nodes_;
    std::vector<double> bary_;
    std::vector<double> weights_;
    Eigen::MatrixXd diff_;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::tuple<int, int, int>, std::unique_ptr<Eigen::MatrixXd>> split_cache_;
    mutable std::map<int, std::unique_ptr<Eigen::RowVectorXd>> moment_cache_;
};

using GridPtr = std::shared_ptr<const PolarGrid>;

inline GridPtr make_grid(int max_mode, int radial_count) {
    return PolarGrid::make(max_mode, radial_count);
}

}  // namespace ellpert
