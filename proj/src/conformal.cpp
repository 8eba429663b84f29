#include "ellpert/conformal.hpp"

#include <stdexcept>
#include <string>

namespace ellpert {

ConformalMapSeries::ConformalMapSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2 || coeffs_[1] == cplx(0.0)) {
        throw std::invalid_argument("conformal map needs a nonzero linear coefficient a_1");
    }
    while (coeffs_.size() > 2 && coeffs_.back() == cplx(0.0)) coeffs_.pop_back();
    double tail = 0.0;
    for (std::size_t m = 2; m < coeffs_.size(); ++m) tail += m * std::abs(coeffs_[m]);
    margin_ = std::abs(coeffs_[1]) - tail;
}

ConformalMapSeries ConformalMapSeries::identity() { return ConformalMapSeries({0.0, 1.0}); }

ConformalMapSeries ConformalMapSeries::affine(cplx a, cplx b) { return ConformalMapSeries({b, a}); }

ConformalMapSeries ConformalMapSeries::monomial(cplx c, int m) {
    if (m < 2) throw std::invalid_argument("monomial perturbation needs power m >= 2");
    std::vector<cplx> coeffs(m + 1, cplx(0.0));
    coeffs[1] = 1.0;
    coeffs[m] = c;
    return ConformalMapSeries(std::move(coeffs));
}

bool ConformalMapSeries::is_affine() const { return coeffs_.size() == 2; }

cplx ConformalMapSeries::operator()(cplx z) const {
    cplx sum = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) sum = sum * z + *it;
    return sum;
}

cplx ConformalMapSeries::derivative(cplx z) const {
    cplx sum = 0.0;
    for (std::size_t m = coeffs_.size() - 1; m >= 1; --m) sum = sum * z + static_cast<double>(m) * coeffs_[m];
    return sum;
}

cplx ConformalMapSeries::second_derivative(cplx z) const {
    cplx sum = 0.0;
    for (std::size_t m = coeffs_.size() - 1; m >= 2; --m) {
        sum = sum * z + static_cast<double>(m * (m - 1)) * coeffs_[m];
    }
    return sum;
}

cplx ConformalMapSeries::frame_ratio(cplx z) const {
    const cplx d = derivative(z);
    return std::conj(d) / d;
}

cplx ConformalMapSeries::frame_ratio_d(cplx z) const {
    const cplx d = derivative(z);
    return -std::conj(d) * second_derivative(z) / (d * d);
}

void require_univalent(const ConformalMapSeries& map) {
    if (!(map.univalence_margin() > 0.0)) {
        throw std::invalid_argument(
            "conformal map fails the univalence check |a_1| > sum_{m>=2} m|a_m| (margin " +
            std::to_string(map.univalence_margin()) + ")");
    }
}

DiskField derivative_ratio(const ConformalMapSeries& map, const GridPtr& grid) {
    require_univalent(map);
    if (map.is_affine()) {
        Eigen::MatrixXcd coeffs = Eigen::MatrixXcd::Zero(grid->radial_count(), grid->mode_count());
        const cplx a = map.coeffs()[1];
        coeffs.col(grid->max_mode()).setConstant(std::conj(a) / a);
        return {grid, std::move(coeffs)};
    }
    return sample_function(grid, [&](cplx z) { return map.frame_ratio(z); });
}

std::vector<cplx> pushforward(const ConformalMapSeries& map, std::span<const PolarPoint> points) {
    std::vector<cplx> out;
    out.reserve(points.size());
    for (const PolarPoint& p : points) out.push_back(map(std::polar(p.r, p.t)));
    return out;
}

}  // namespace ellpert
