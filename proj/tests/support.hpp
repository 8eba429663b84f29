#pragma once

#include <cmath>
#include <random>

#include "ellpert/field.hpp"
#include "ellpert/validation/bipoly.hpp"

namespace testsupport {

using ellpert::cplx;

inline double max_diff(const ellpert::DiskField& a, const ellpert::DiskField& b) {
    return (a.samples() - b.samples()).cwiseAbs().maxCoeff();
}

// Random polynomial in z, zbar with |a - b| <= band and a + b <= degree.
inline ellpert::validation::Bipoly random_bipoly(std::mt19937_64& rng, int band, int degree, int terms = 6) {
    std::uniform_int_distribution<int> deg(0, degree);
    std::normal_distribution<double> g;
    ellpert::validation::Bipoly p;
    for (int i = 0; i < terms; ++i) {
        int a = deg(rng), b = deg(rng);
        while (a + b > degree || std::abs(a - b) > band) {
            a = deg(rng);
            b = deg(rng);
        }
        p = p + ellpert::validation::Bipoly::monomial(a, b, cplx(g(rng), g(rng)));
    }
    return p;
}

}  // namespace testsupport
