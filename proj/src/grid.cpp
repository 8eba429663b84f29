#include "ellpert/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gsl/gsl_integration.h>

namespace ellpert {

namespace {

// Nodes/weights on [-1, 1], memoised per order.
const GaussRule& reference_rule(int n) {
    static std::mutex mutex;
    static std::map<int, GaussRule> rules;
    std::lock_guard lock(mutex);
    auto it = rules.find(n);
    if (it != rules.end()) return it->second;
    GaussRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(n);
    for (int i = 0; i < n; ++i) {
        gsl_integration_glfixed_point(-1.0, 1.0, i, &rule.x[i], &rule.w[i], table);
    }
    gsl_integration_glfixed_table_free(table);
    return rules.emplace(n, std::move(rule)).first->second;
}

int next_pow2(int v) {
    int p = 1;
    while (p < v) p <<= 1;
    return p;
}

}  // namespace

GaussRule gauss_legendre(int n, double a, double b) {
    const GaussRule& ref = reference_rule(n);
    GaussRule out;
    out.x.resize(n);
    out.w.resize(n);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    for (int i = 0; i < n; ++i) {
        out.x[i] = mid + half * ref.x[i];
        out.w[i] = half * ref.w[i];
    }
    return out;
}

std::shared_ptr<const PolarGrid> PolarGrid::make(int max_mode, int radial_count) {
    if (max_mode < 0) throw std::invalid_argument("max_mode must be >= 0");
    if (radial_count < 4) throw std::invalid_argument("radial_count must be >= 4");
    return std::make_shared<const PolarGrid>(max_mode, radial_count);
}

PolarGrid::PolarGrid(int max_mode, int radial_count)
    : max_mode_(max_mode), angular_count_(next_pow2(2 * max_mode + 2)) {
    const int n = radial_count;
    nodes_.resize(n);
    bary_.resize(n);
    for (int j = 0; j < n; ++j) {
        const double theta = (2.0 * j + 1.0) * std::numbers::pi / (2.0 * n);
        nodes_[j] = 0.5 * (1.0 - std::cos(theta));
        bary_[j] = ((j % 2) ? -1.0 : 1.0) * std::sin(theta);
    }

    diff_ = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        double diag = 0.0;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double d = (bary_[j] / bary_[i]) / (nodes_[i] - nodes_[j]);
            diff_(i, j) = d;
            diag -= d;
        }
        diff_(i, i) = diag;
    }

    weights_.assign(n, 0.0);
    const GaussRule rule = gauss_legendre(n / 2 + 2, 0.0, 1.0);
    for (std::size_t m = 0; m < rule.x.size(); ++m) {
        const Eigen::VectorXd row = interpolation_row(rule.x[m]);
        for (int j = 0; j < n; ++j) weights_[j] += rule.w[m] * rule.x[m] * row[j];
    }
}

double PolarGrid::angle(int m) const {
    return 2.0 * std::numbers::pi * m / angular_count_;
}

Eigen::VectorXd PolarGrid::interpolation_row(double r) const {
    const int n = radial_count();
    Eigen::VectorXd row = Eigen::VectorXd::Zero(n);
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
        const double diff = r - nodes_[j];
        if (diff == 0.0) {
            row.setZero();
            row[j] = 1.0;
            return row;
        }
        row[j] = bary_[j] / diff;
        total += row[j];
    }
    return row / total;
}

const Eigen::MatrixXd& PolarGrid::split_integral(Region region, int p, int q) const {
    if (region == Region::Inner && q < 0) {
        throw std::invalid_argument("inner split integral needs a nonnegative rho exponent");
    }
    const auto key = std::make_tuple(region == Region::Inner ? 0 : 1, p, q);
    {
        std::lock_guard lock(cache_mutex_);
        auto it = split_cache_.find(key);
        if (it != split_cache_.end()) return *it->second;
    }
    auto built = std::make_unique<Eigen::MatrixXd>(build_split(region, p, q));
    std::lock_guard lock(cache_mutex_);
    auto [it, inserted] = split_cache_.emplace(key, std::move(built));
    return *it->second;
}

Eigen::MatrixXd PolarGrid::build_split(Region region, int p, int q) const {
    const int n = radial_count();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);

    auto accumulate = [&](int i, const GaussRule& rule, auto&& kernel) {
        for (std::size_t m = 0; m < rule.x.size(); ++m) {
            const double k = kernel(rule.x[m]) * rule.w[m];
            if (k == 0.0) continue;
            out.row(i) += k * interpolation_row(rule.x[m]).transpose();
        }
    };

    for (int i = 0; i < n; ++i) {
        const double r = nodes_[i];
        if (region == Region::Inner) {
            // c(rho) (rho/r)^q is a polynomial, so one rule is exact.
            const GaussRule rule = gauss_legendre((n + q) / 2 + 2, 0.0, r);
            const double scale = std::pow(r, p + q);
            accumulate(i, rule, [&](double rho) { return std::pow(rho / r, q) * scale; });
            continue;
        }
        // Outer: kernel (r/rho)^p rho^{p+q} has a pole at rho = 0 and, for
        // large p, a boundary layer of width ~ r/p next to rho = r.
        const int order = n / 2 + 12;
        const double step = p > 0 ? std::min(1.0, 2.0 / p) : 1.0;
        double a = r;
        while (a < 1.0) {
            const double b = std::min(a * (1.0 + step), 1.0);
            if (p > 0 && std::pow(r / a, p) * std::max(1.0, std::pow(a, p + q)) < 1e-20) break;
            const GaussRule rule = gauss_legendre(order, a, b);
            accumulate(i, rule,
                       [&](double rho) { return std::pow(r / rho, p) * std::pow(rho, p + q); });
            a = b;
        }
    }
    return out;
}

const Eigen::RowVectorXd& PolarGrid::moment(int q) const {
    if (q < 0) throw std::invalid_argument("moment exponent must be >= 0");
    {
        std::lock_guard lock(cache_mutex_);
        auto it = moment_cache_.find(q);
        if (it != moment_cache_.end()) return *it->second;
    }
    const int n = radial_count();
    auto built = std::make_unique<Eigen::RowVectorXd>(Eigen::RowVectorXd::Zero(n));
    const GaussRule rule = gauss_legendre((n + q) / 2 + 2, 0.0, 1.0);
    for (std::size_t m = 0; m < rule.x.size(); ++m) {
        *built += rule.w[m] * std::pow(rule.x[m], q) * interpolation_row(rule.x[m]).transpose();
    }
    std::lock_guard lock(cache_mutex_);
    auto [it, inserted] = moment_cache_.emplace(q, std::move(built));
    return *it->second;
}

}  // namespace ellpert
