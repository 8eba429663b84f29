#include "ellpert/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ellpert {

namespace {

// e^{-2 pi i n / M}, n = 0..M-1
std::vector<cplx> roots_of_unity(int count) {
    std::vector<cplx> roots(count);
    for (int n = 0; n < count; ++n) {
        roots[n] = std::polar(1.0, -2.0 * std::numbers::pi * n / count);
    }
    return roots;
}

int wrap(long v, int m) {
    long r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

Eigen::MatrixXcd synthesize_rows(const Eigen::MatrixXcd& modes, int max_mode, int angular) {
    // modes: rows x (2K+1) -> rows x M
    const auto roots = roots_of_unity(angular);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(modes.rows(), angular);
    for (int m = 0; m < angular; ++m) {
        for (int k = -max_mode; k <= max_mode; ++k) {
            const cplx phase = std::conj(roots[wrap(static_cast<long>(k) * m, angular)]);
            out.col(m) += phase * modes.col(k + max_mode);
        }
    }
    return out;
}

}  // namespace

DiskField::DiskField(GridPtr grid)
    : grid_(std::move(grid)),
      coeffs_(Eigen::MatrixXcd::Zero(grid_->radial_count(), grid_->mode_count())) {}

DiskField::DiskField(GridPtr grid, Eigen::MatrixXcd coeffs)
    : grid_(std::move(grid)), coeffs_(std::move(coeffs)) {
    if (coeffs_.rows() != grid_->radial_count() || coeffs_.cols() != grid_->mode_count()) {
        throw std::invalid_argument("coefficient array does not match the grid dimensions");
    }
}

bool DiskField::is_constant() const {
    const int K = max_mode();
    for (int c = 0; c < coeffs_.cols(); ++c) {
        for (int j = 0; j < coeffs_.rows(); ++j) {
            if (c == K) {
                if (coeffs_(j, c) != coeffs_(0, c)) return false;
            } else if (coeffs_(j, c) != cplx(0.0)) {
                return false;
            }
        }
    }
    return true;
}

cplx DiskField::trace_mode(int k) const {
    const Eigen::VectorXd row = grid_->interpolation_row(1.0);
    return row.cast<cplx>().dot(mode(k));
}

std::vector<cplx> DiskField::trace_values() const {
    const Eigen::VectorXd row = grid_->interpolation_row(1.0);
    Eigen::RowVectorXcd trace = row.transpose().cast<cplx>() * coeffs_;
    Eigen::MatrixXcd values = synthesize_rows(trace, max_mode(), grid_->angular_count());
    return {values.data(), values.data() + values.size()};
}

Eigen::MatrixXcd DiskField::samples() const {
    return synthesize_rows(coeffs_, max_mode(), grid_->angular_count());
}

DiskField DiskField::operator+(const DiskField& other) const {
    require_same_grid(*this, other);
    return {grid_, coeffs_ + other.coeffs_};
}

DiskField DiskField::operator-(const DiskField& other) const {
    require_same_grid(*this, other);
    return {grid_, coeffs_ - other.coeffs_};
}

DiskField DiskField::operator*(cplx scale) const {
    return {grid_, coeffs_ * scale};
}

void require_same_grid(const DiskField& a, const DiskField& b) {
    if (!a.grid().same_as(b.grid())) {
        throw std::invalid_argument("fields live on different grids");
    }
}

DiskField analyze(const GridPtr& grid, const Eigen::MatrixXcd& samples) {
    const int J = grid->radial_count();
    const int M = grid->angular_count();
    const int K = grid->max_mode();
    if (samples.rows() != J || samples.cols() != M) {
        throw std::invalid_argument("sample array must be radial_count x angular_count");
    }
    const auto roots = roots_of_unity(M);
    Eigen::MatrixXcd coeffs = Eigen::MatrixXcd::Zero(J, 2 * K + 1);
    for (int k = -K; k <= K; ++k) {
        for (int m = 0; m < M; ++m) {
            coeffs.col(k + K) += roots[wrap(static_cast<long>(k) * m, M)] * samples.col(m);
        }
    }
    coeffs /= static_cast<double>(M);
    return {grid, std::move(coeffs)};
}

DiskField sample_function(const GridPtr& grid, const std::function<cplx(cplx)>& f) {
    const int J = grid->radial_count();
    const int M = grid->angular_count();
    Eigen::MatrixXcd samples(J, M);
    for (int j = 0; j < J; ++j) {
        for (int m = 0; m < M; ++m) {
            samples(j, m) = f(std::polar(grid->nodes()[j], grid->angle(m)));
        }
    }
    return analyze(grid, samples);
}

cplx evaluate(const DiskField& field, double r, double t) {
    const PolarPoint p{r, t};
    return synthesize(field, std::span(&p, 1)).front();
}

std::vector<cplx> synthesize(const DiskField& field, std::span<const PolarPoint> points) {
    const int K = field.max_mode();
    std::vector<cplx> out;
    out.reserve(points.size());
    for (const PolarPoint& p : points) {
        if (!(p.r >= 0.0 && p.r <= 1.0)) {
            throw std::invalid_argument("synthesis radius outside [0, 1]");
        }
        const Eigen::RowVectorXcd radial =
            field.grid().interpolation_row(p.r).transpose().cast<cplx>() * field.coeffs();
        cplx sum = 0.0;
        for (int k = -K; k <= K; ++k) {
            sum += radial[k + K] * std::polar(1.0, k * p.t);
        }
        out.push_back(sum);
    }
    return out;
}

double lp_norm(const DiskField& field, double p) {
    if (!(p > 1.0 && std::isfinite(p))) throw std::invalid_argument("lp_norm needs 1 < p < inf");
    const Eigen::MatrixXcd values = field.samples();
    const auto w = field.grid().weights();
    const double dtheta = 2.0 * std::numbers::pi / field.grid().angular_count();
    double total = 0.0;
    for (int j = 0; j < values.rows(); ++j) {
        double ring = 0.0;
        for (int m = 0; m < values.cols(); ++m) ring += std::pow(std::abs(values(j, m)), p);
        total += w[j] * ring * dtheta;
    }
    return std::pow(total, 1.0 / p);
}

double lp_norm_disk(const DiskField& field, double p, double radius) {
    if (!(p > 1.0 && std::isfinite(p))) throw std::invalid_argument("lp_norm needs 1 < p < inf");
    if (!(radius > 0.0 && radius <= 1.0)) throw std::invalid_argument("radius must lie in (0, 1]");
    const PolarGrid& grid = field.grid();
    const GaussRule rule = gauss_legendre(grid.radial_count() + 8, 0.0, radius);
    Eigen::MatrixXcd modes(rule.x.size(), grid.mode_count());
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
        modes.row(i) = grid.interpolation_row(rule.x[i]).transpose().cast<cplx>() * field.coeffs();
    }
    const Eigen::MatrixXcd values = synthesize_rows(modes, grid.max_mode(), grid.angular_count());
    const double dtheta = 2.0 * std::numbers::pi / grid.angular_count();
    double total = 0.0;
    for (int i = 0; i < values.rows(); ++i) {
        double ring = 0.0;
        for (int m = 0; m < values.cols(); ++m) ring += std::pow(std::abs(values(i, m)), p);
        total += rule.w[i] * rule.x[i] * ring * dtheta;
    }
    return std::pow(total, 1.0 / p);
}

std::pair<DiskField, DiskField> wirtinger_derivatives(const DiskField& field) {
    const PolarGrid& grid = field.grid();
    const int K = grid.max_mode();
    const int J = grid.radial_count();
    const Eigen::MatrixXcd radial = grid.diff_matrix().cast<cplx>() * field.coeffs();
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(J, 2 * K + 1);
    Eigen::MatrixXcd dbar = Eigen::MatrixXcd::Zero(J, 2 * K + 1);
    const auto r = grid.nodes();
    for (int k = -K; k <= K; ++k) {
        for (int j = 0; j < J; ++j) {
            const cplx c = field.coeff(k, j);
            const cplx dc = radial(j, k + K);
            const cplx angular = static_cast<double>(k) * c / r[j];
            if (k - 1 >= -K) d(j, k - 1 + K) = 0.5 * (dc + angular);
            if (k + 1 <= K) dbar(j, k + 1 + K) = 0.5 * (dc - angular);
        }
    }
    return {DiskField(field.grid_ptr(), std::move(d)), DiskField(field.grid_ptr(), std::move(dbar))};
}

DiskField conj_field(const DiskField& field) {
    const int K = field.max_mode();
    Eigen::MatrixXcd out(field.coeffs().rows(), field.coeffs().cols());
    for (int k = -K; k <= K; ++k) {
        out.col(k + K) = field.mode(-k).conjugate();
    }
    return {field.grid_ptr(), std::move(out)};
}

DiskField multiply(const DiskField& a, const DiskField& b) {
    require_same_grid(a, b);
    if (b.is_constant()) return a * b.coeff(0, 0);
    if (a.is_constant()) return b * a.coeff(0, 0);
    const Eigen::MatrixXcd product = a.samples().cwiseProduct(b.samples());
    return analyze(a.grid_ptr(), product);
}

DiskField map_samples(const DiskField& field, const std::function<cplx(cplx)>& f) {
    Eigen::MatrixXcd values = field.samples();
    for (Eigen::Index i = 0; i < values.size(); ++i) values.data()[i] = f(values.data()[i]);
    return analyze(field.grid_ptr(), values);
}

}  // namespace ellpert
