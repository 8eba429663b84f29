#pragma once

#include <span>
#include <vector>

#include "ellpert/field.hpp"

namespace ellpert {

/// omega(z) = sum_m a_m z^m mapping the unit disk onto the target domain.
class ConformalMapSeries {
public:
    /// Requires a_1 != 0 (std::invalid_argument otherwise).
    explicit ConformalMapSeries(std::vector<cplx> coeffs);

    static ConformalMapSeries identity();
    static ConformalMapSeries affine(cplx a, cplx b = 0.0);
    /// z + c z^m.
    static ConformalMapSeries monomial(cplx c, int m);

    std::span<const cplx> coeffs() const { return coeffs_; }

    /// |a_1| - sum_{m>=2} m |a_m|; positive guarantees omega' != 0 and
    /// injectivity on the closed disk.
    double univalence_margin() const { return margin_; }
    bool is_affine() const;

    cplx operator()(cplx z) const;
    cplx derivative(cplx z) const;
    cplx second_derivative(cplx z) const;

    /// Omega = conj(omega') / omega'.
    cplx frame_ratio(cplx z) const;
    /// d Omega = -conj(omega') omega'' / omega'^2.
    cplx frame_ratio_d(cplx z) const;

private:
    std::vector<cplx> coeffs_;
    double margin_;
};

/// Throws std::invalid_argument when the univalence margin is not positive.
void require_univalent(const ConformalMapSeries& map);

/// Omega on the grid. Affine maps give an exactly constant field.
DiskField derivative_ratio(const ConformalMapSeries& map, const GridPtr& grid);

std::vector<cplx> pushforward(const ConformalMapSeries& map, std::span<const PolarPoint> points);

}  // namespace ellpert
