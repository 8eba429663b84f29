#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ellpert/canon.hpp"
#include "ellpert/conformal.hpp"
#include "ellpert/disk_ops.hpp"

namespace ellpert::validation {

/// Values on the n x n lattice over [-1, 1]^2; only nodes with |z| < 1 carry data.
struct CartesianField {
    int n = 0;
    std::vector<cplx> values;
    std::vector<unsigned char> inside;

    double spacing() const { return 2.0 / (n - 1); }
    double coord(int i) const { return -1.0 + spacing() * i; }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * n + i; }
    cplx point(int i, int j) const { return {coord(i), coord(j)}; }
};

/// Second-order finite differences for d dbar F + t d(Omega d(T0 F)) = 0 on
/// the disk, written as Omega d^2(T0 F) + (d Omega) d(T0 F). Nodes whose
/// 3x3 neighbourhood leaves the disk take Dirichlet values from a quadratic
/// along the ray: H on the circle plus two points 2.5h and 4h further in,
/// each biquadratic on a 3x3 block of interior nodes. Solved by sparse LU.
/// Requires n >= 32; throws std::runtime_error on a singular system.
CartesianField fd_solve(const CanonicalParams& params, const ConformalMapSeries& map,
                        const BoundaryFunction& H, int n);

struct Discrepancy {
    double max = 0.0;
    double mean = 0.0;
    int count = 0;
};

/// Compares inside nodes with |z| <= radius against a reference function.
Discrepancy compare(const CartesianField& field, const std::function<cplx(cplx)>& reference,
                    double radius = 1.0);

}  // namespace ellpert::validation
