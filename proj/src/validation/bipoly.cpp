#include "ellpert/validation/bipoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace ellpert::validation {

Bipoly Bipoly::constant(cplx c) { return monomial(0, 0, c); }

Bipoly Bipoly::monomial(int a, int b, cplx c) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative monomial power");
    Bipoly p;
    p.add({a, b}, c);
    return p;
}

Bipoly Bipoly::compose(std::span<const cplx> coeffs, const Bipoly& w) {
    Bipoly out;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * w + constant(*it);
    return out;
}

void Bipoly::add(Key k, cplx c) {
    if (c == cplx(0.0)) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == cplx(0.0)) terms_.erase(it);
    }
}

Bipoly Bipoly::operator+(const Bipoly& o) const {
    Bipoly out = *this;
    for (const auto& [k, c] : o.terms_) out.add(k, c);
    return out;
}

Bipoly Bipoly::operator-(const Bipoly& o) const { return *this + o * -1.0; }

Bipoly Bipoly::operator*(const Bipoly& o) const {
    Bipoly out;
    for (const auto& [k1, c1] : terms_) {
        for (const auto& [k2, c2] : o.terms_) {
            out.add({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
        }
    }
    return out;
}

Bipoly Bipoly::operator*(cplx s) const {
    Bipoly out;
    for (const auto& [k, c] : terms_) out.add(k, c * s);
    return out;
}

Bipoly Bipoly::d() const {
    Bipoly out;
    for (const auto& [k, c] : terms_) {
        if (k.first > 0) out.add({k.first - 1, k.second}, c * static_cast<double>(k.first));
    }
    return out;
}

Bipoly Bipoly::dbar() const {
    Bipoly out;
    for (const auto& [k, c] : terms_) {
        if (k.second > 0) out.add({k.first, k.second - 1}, c * static_cast<double>(k.second));
    }
    return out;
}

Bipoly Bipoly::conj() const {
    Bipoly out;
    for (const auto& [k, c] : terms_) out.add({k.second, k.first}, std::conj(c));
    return out;
}

cplx Bipoly::operator()(cplx z) const {
    cplx sum = 0.0;
    const cplx zb = std::conj(z);
    for (const auto& [k, c] : terms_) sum += c * std::pow(z, k.first) * std::pow(zb, k.second);
    return sum;
}

double Bipoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

int Bipoly::degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

int Bipoly::band() const {
    int b = 0;
    for (const auto& [k, c] : terms_) b = std::max(b, std::abs(k.first - k.second));
    return b;
}

DiskField to_field(const Bipoly& p, const GridPtr& grid) {
    const int K = grid->max_mode();
    if (p.band() > K) throw std::invalid_argument("polynomial exceeds the grid band limit");
    Eigen::MatrixXcd coeffs = Eigen::MatrixXcd::Zero(grid->radial_count(), grid->mode_count());
    for (const auto& [k, c] : p.terms()) {
        const int mode = k.first - k.second;
        for (int j = 0; j < grid->radial_count(); ++j) {
            coeffs(j, mode + K) += c * std::pow(grid->nodes()[j], k.first + k.second);
        }
    }
    return {grid, std::move(coeffs)};
}

BoundaryFunction trace(const Bipoly& p) {
    std::map<int, cplx> modes;
    for (const auto& [k, c] : p.terms()) modes[k.first - k.second] += c;
    return BoundaryFunction::from_modes(modes);
}

}  // namespace ellpert::validation
