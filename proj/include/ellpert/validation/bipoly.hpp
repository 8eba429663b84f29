#pragma once

#include <complex>
#include <map>
#include <span>
#include <utility>

#include "ellpert/disk_ops.hpp"
#include "ellpert/field.hpp"

namespace ellpert::validation {

/// Polynomial sum c_ab z^a zbar^b with exact Wirtinger calculus on coefficients.
class Bipoly {
public:
    using Key = std::pair<int, int>;

    Bipoly() = default;
    static Bipoly constant(cplx c);
    static Bipoly monomial(int a, int b, cplx c = 1.0);
    static Bipoly z() { return monomial(1, 0); }
    static Bipoly zbar() { return monomial(0, 1); }
    /// sum_n coeffs[n] w^n.
    static Bipoly compose(std::span<const cplx> coeffs, const Bipoly& w);

    const std::map<Key, cplx>& terms() const { return terms_; }

    Bipoly operator+(const Bipoly& o) const;
    Bipoly operator-(const Bipoly& o) const;
    Bipoly operator*(const Bipoly& o) const;
    Bipoly operator*(cplx s) const;

    Bipoly d() const;
    Bipoly dbar() const;
    Bipoly conj() const;

    cplx operator()(cplx z) const;
    double max_abs_coeff() const;
    /// Largest a + b with a nonzero coefficient; -1 for the zero polynomial.
    int degree() const;
    /// Largest |a - b|, the angular band it occupies.
    int band() const;

private:
    void add(Key k, cplx c);
    std::map<Key, cplx> terms_;
};

/// Mode-exact field: z^a zbar^b contributes r^{a+b} to mode a - b.
DiskField to_field(const Bipoly& p, const GridPtr& grid);
/// Trace on |z| = 1: z^a zbar^b -> e^{i(a-b) theta}.
BoundaryFunction trace(const Bipoly& p);

}  // namespace ellpert::validation
