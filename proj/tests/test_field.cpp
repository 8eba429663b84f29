#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ellpert/field.hpp"
#include "support.hpp"

using namespace ellpert;
using ellpert::validation::Bipoly;
using testsupport::max_diff;

constexpr double kPi = std::numbers::pi;

TEST_CASE("grid construction") {
    const auto g = make_grid(8, 16);
    CHECK(g->mode_count() == 17);
    CHECK(g->radial_count() == 16);
    CHECK(g->angular_count() >= 17);
    for (int j = 0; j < 16; ++j) {
        CHECK(g->nodes()[j] > 0.0);
        CHECK(g->nodes()[j] < 1.0);
        CHECK(g->weights()[j] > 0.0);
        if (j > 0) CHECK(g->nodes()[j] > g->nodes()[j - 1]);
    }
    const auto g0 = make_grid(0, 4);
    CHECK(g0->mode_count() == 1);
    CHECK(g0->radial_count() == 4);
    CHECK_THROWS_AS(make_grid(-1, 8), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(4, 3), std::invalid_argument);
}

TEST_CASE("radial quadrature exactness") {
    const auto g = make_grid(4, 24);
    for (int m = 0; m <= g->exactness_degree(); ++m) {
        double s = 0.0;
        for (int j = 0; j < g->radial_count(); ++j) s += g->weights()[j] * std::pow(g->nodes()[j], m);
        CHECK(std::abs(s - 1.0 / (m + 2)) <= 1e-12);
    }
}

TEST_CASE("gauss rule integrates polynomials") {
    const auto r = gauss_legendre(5, -1.0, 2.0);
    double s = 0.0;
    for (int i = 0; i < 5; ++i) s += r.w[i] * std::pow(r.x[i], 9);
    CHECK(s == doctest::Approx((std::pow(2.0, 10) - 1.0) / 10.0).epsilon(1e-13));
}

TEST_CASE("split integrals against closed forms") {
    const auto g = make_grid(4, 32);
    Eigen::VectorXd c(g->radial_count());
    for (int j = 0; j < g->radial_count(); ++j) c[j] = std::pow(g->nodes()[j], 3);
    // inner: r^p int_0^r rho^{3+q} = r^{p+q+4}/(q+4); outer with q = -4 gives -r^p log r
    const Eigen::VectorXd inner = g->split_integral(PolarGrid::Region::Inner, -2, 1) * c;
    const Eigen::VectorXd outer = g->split_integral(PolarGrid::Region::Outer, 5, -4) * c;
    for (int j = 0; j < g->radial_count(); ++j) {
        const double r = g->nodes()[j];
        CHECK(std::abs(inner[j] - std::pow(r, 3) / 5.0) < 1e-13);
        CHECK(std::abs(outer[j] - -std::pow(r, 5) * std::log(r)) < 1e-12);
    }
    CHECK(std::abs(g->moment(2) * c - 1.0 / 6.0) < 1e-14);
}

TEST_CASE("analysis of single modes") {
    const auto g = make_grid(8, 16);
    const DiskField f = sample_function(g, [](cplx z) { return std::abs(z) > 0 ? z / std::abs(z) : cplx(1.0); });
    for (int k = -8; k <= 8; ++k) {
        for (int j = 0; j < 16; ++j) CHECK(std::abs(f.coeff(k, j) - (k == 1 ? 1.0 : 0.0)) <= 1e-13);
    }
    const DiskField r2 = sample_function(g, [](cplx z) { return cplx(std::norm(z)); });
    for (int k = -8; k <= 8; ++k) {
        for (int j = 0; j < 16; ++j) {
            const double want = k == 0 ? std::pow(g->nodes()[j], 2) : 0.0;
            CHECK(std::abs(r2.coeff(k, j) - want) <= 1e-13);
        }
    }
}

TEST_CASE("synthesis at points") {
    const auto g = make_grid(8, 16);
    const DiskField z = sample_function(g, [](cplx w) { return w; });
    const DiskField zb2 = sample_function(g, [](cplx w) { return std::conj(w * w); });
    const DiskField seven = sample_function(g, [](cplx) { return cplx(7.0); });
    const std::vector<PolarPoint> pts{{0.5, 0.0}, {1.0, kPi / 2}, {0.0, 1.0}, {0.83, -2.0}};
    CHECK(std::abs(synthesize(z, pts)[0] - 0.5) < 1e-14);
    CHECK(std::abs(synthesize(zb2, pts)[1] + 1.0) < 1e-13);
    for (cplx v : synthesize(seven, pts)) CHECK(std::abs(v - 7.0) < 1e-13);
    CHECK_THROWS_AS(synthesize(z, std::vector<PolarPoint>{{1.01, 0.0}}), std::invalid_argument);
}

TEST_CASE("analyze then synthesize is exact on band-limited polynomials") {
    const auto g = make_grid(8, 16);
    const auto f = [](cplx z) { return z * z * z + 2.0 * std::conj(z); };
    const DiskField F = sample_function(g, f);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double err = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double r = u(rng), t = 2 * kPi * u(rng);
        err = std::max(err, std::abs(evaluate(F, r, t) - f(std::polar(r, t))));
    }
    CHECK(err <= 1e-12);
}

TEST_CASE("innermost node coefficients vanish like r^|k|") {
    const auto g = make_grid(12, 32);
    const DiskField F = sample_function(g, [](cplx z) { return std::exp(z) * std::cos(std::conj(z)); });
    const double r1 = g->nodes()[0];
    for (int k = -12; k <= 12; ++k) {
        if (k == 0) continue;
        CHECK(std::abs(F.coeff(k, 0)) <= 2.0 * std::pow(r1, std::abs(k)) + 1e-14);
    }
}

TEST_CASE("lp norms of simple fields") {
    const auto g = make_grid(8, 24);
    const DiskField one = sample_function(g, [](cplx) { return cplx(1.0); });
    const DiskField z = sample_function(g, [](cplx w) { return w; });
    CHECK(lp_norm(one, 2.0) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
    CHECK(lp_norm(z, 2.0) == doctest::Approx(std::sqrt(kPi / 2)).epsilon(1e-13));
    CHECK(lp_norm(z, 4.0) == doctest::Approx(std::pow(kPi / 3, 0.25)).epsilon(1e-13));
    CHECK(lp_norm_disk(z, 2.0, 0.5) == doctest::Approx(std::sqrt(kPi / 2) * 0.25).epsilon(1e-13));
    CHECK_THROWS_AS(lp_norm(z, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(lp_norm(z, INFINITY), std::invalid_argument);
}

TEST_CASE("Parseval and homogeneity") {
    const auto g = make_grid(10, 24);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const DiskField f = validation::to_field(testsupport::random_bipoly(rng, 10, 12), g);
        double s = 0.0;
        for (int k = -10; k <= 10; ++k) {
            for (int j = 0; j < g->radial_count(); ++j) s += g->weights()[j] * std::norm(f.coeff(k, j));
        }
        const double l2 = lp_norm(f, 2.0);
        CHECK(std::abs(l2 * l2 - 2 * kPi * s) <= 1e-10 * std::max(1.0, l2 * l2));
        const cplx lambda(-1.7, 0.4);
        for (double p : {1.5, 2.0, 3.3}) {
            CHECK(std::abs(lp_norm(lambda * f, p) - std::abs(lambda) * lp_norm(f, p)) <=
                  1e-12 * lp_norm(lambda * f, p));
        }
    }
}

TEST_CASE("Wirtinger derivatives of monomials") {
    const auto g = make_grid(8, 24);
    const auto field = [&](auto fn) { return sample_function(g, fn); };
    {
        auto [d, db] = wirtinger_derivatives(field([](cplx z) { return z * z; }));
        CHECK(max_diff(d, field([](cplx z) { return 2.0 * z; })) <= 1e-10);
        CHECK(max_diff(db, field([](cplx) { return cplx(0.0); })) <= 1e-10);
    }
    {
        auto [d, db] = wirtinger_derivatives(field([](cplx z) { return cplx(std::norm(z)); }));
        CHECK(max_diff(d, field([](cplx z) { return std::conj(z); })) <= 1e-10);
        CHECK(max_diff(db, field([](cplx z) { return z; })) <= 1e-10);
    }
    {
        auto [d, db] = wirtinger_derivatives(field([](cplx z) { return std::conj(z); }));
        CHECK(max_diff(d, field([](cplx) { return cplx(0.0); })) <= 1e-10);
        CHECK(max_diff(db, field([](cplx) { return cplx(1.0); })) <= 1e-10);
    }
}

TEST_CASE("Wirtinger derivatives match symbolic differentiation") {
    const int K = 12;
    const auto g = make_grid(K, 32);
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const Bipoly p = testsupport::random_bipoly(rng, K - 2, K - 2);
        auto [d, db] = wirtinger_derivatives(validation::to_field(p, g));
        const double scale = std::max(1.0, p.max_abs_coeff());
        CHECK(max_diff(d, validation::to_field(p.d(), g)) <= 1e-9 * scale);
        CHECK(max_diff(db, validation::to_field(p.dbar(), g)) <= 1e-9 * scale);
    }
}

TEST_CASE("conjugation") {
    const auto g = make_grid(6, 12);
    const DiskField z = sample_function(g, [](cplx w) { return w; });
    const DiskField cz = conj_field(z);
    CHECK(max_diff(cz, sample_function(g, [](cplx w) { return std::conj(w); })) < 1e-15);
    const DiskField c = sample_function(g, [](cplx) { return cplx(1.0, 1.0); });
    CHECK(std::abs(evaluate(conj_field(c), 0.3, 0.2) - cplx(1.0, -1.0)) < 1e-14);

    std::mt19937_64 rng(4);
    const DiskField f = validation::to_field(testsupport::random_bipoly(rng, 6, 8), g);
    CHECK((conj_field(conj_field(f)).coeffs() - f.coeffs()).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("products") {
    const auto g = make_grid(8, 16);
    const DiskField z = sample_function(g, [](cplx w) { return w; });
    const DiskField zb = conj_field(z);
    CHECK(max_diff(multiply(z, zb), sample_function(g, [](cplx w) { return cplx(std::norm(w)); })) < 1e-14);
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(g->radial_count(), 2 * g->max_mode() + 1);
    c.col(g->max_mode()).setConstant(2.0);
    const DiskField two(g, c);
    CHECK(two.is_constant());
    CHECK(multiply(two, z).coeffs() == (z * 2.0).coeffs());
    CHECK_THROWS_AS(require_same_grid(z, sample_function(make_grid(8, 20), [](cplx w) { return w; })),
                    std::invalid_argument);
}

TEST_CASE("trace of a field") {
    const auto g = make_grid(4, 16);
    const DiskField f = sample_function(g, [](cplx z) { return z * z + 3.0 * std::conj(z); });
    CHECK(std::abs(f.trace_mode(2) - 1.0) < 1e-13);
    CHECK(std::abs(f.trace_mode(-1) - 3.0) < 1e-13);
    const auto tv = f.trace_values();
    for (int m = 0; m < g->angular_count(); ++m) {
        const cplx e = std::polar(1.0, g->angle(m));
        CHECK(std::abs(tv[m] - (e * e + 3.0 * std::conj(e))) < 1e-12);
    }
}
