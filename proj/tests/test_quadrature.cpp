#include <doctest.h>

#include <cmath>
#include <random>

#include "lameball/quadrature.hpp"

using namespace lameball;

namespace {
std::mt19937 rng(7);
}

TEST_CASE("grid construction") {
    const SphereGrid g0 = build_grid(0);
    CHECK(g0.size() == 1);
    CHECK(g0.weights[0] == doctest::Approx(4.0 * M_PI).epsilon(1e-14));

    const SphereGrid g4 = build_grid(4);
    CHECK(g4.size() == 45);
    CHECK(g4.exactness_degree == 8);
    double total = 0.0;
    for (double w : g4.weights) {
        CHECK(w > 0.0);
        total += w;
    }
    CHECK(total == doctest::Approx(4.0 * M_PI).epsilon(1e-14));

    CHECK_THROWS_AS(build_grid(-1), std::domain_error);
}

TEST_CASE("exactness: gram matrix of Y up to the band limit") {
    const int L = 4;
    const SphereGrid grid = build_grid(L);
    for (int l1 = 0; l1 <= L; ++l1)
        for (int m1 = -l1; m1 <= l1; ++m1)
            for (int l2 = l1; l2 <= L; ++l2)
                for (int m2 = -l2; m2 <= l2; ++m2) {
                    double ip = 0.0;
                    for (std::size_t i = 0; i < grid.size(); ++i) {
                        const UnitVector eta(grid.nodes[i]);
                        ip += grid.weights[i] * eval_scalar_harmonic({l1, m1}, eta) *
                              eval_scalar_harmonic({l2, m2}, eta);
                    }
                    const double expected = (l1 == l2 && m1 == m2) ? 1.0 : 0.0;
                    CHECK(std::abs(ip - expected) < 1e-12);
                }
}

TEST_CASE("Y_{1,0}^2 on the minimal grid") {
    const SphereGrid grid = build_grid(1);
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double y = eval_scalar_harmonic({1, 0}, UnitVector(grid.nodes[i]));
        v[i] = y * y;
    }
    CHECK(integrate(grid, v) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("integrate: moments") {
    const SphereGrid grid = build_grid(3);
    std::vector<double> ones(grid.size(), 1.0), z(grid.size()), z2(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        z[i] = grid.nodes[i].z();
        z2[i] = z[i] * z[i];
    }
    CHECK(integrate(grid, ones) == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
    CHECK(std::abs(integrate(grid, z)) < 1e-14);
    CHECK(integrate(grid, z2) == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-12));

    std::vector<double> bad(grid.size() + 1, 0.0);
    CHECK_THROWS_AS(integrate(grid, bad), std::invalid_argument);
}

TEST_CASE("lp norms") {
    const SphereGrid grid = build_grid(4);
    FieldSamples constant(grid.size(), Vec3(0, 0, 1));
    CHECK(lp_norm(grid, constant, 2.0) ==
          doctest::Approx(std::sqrt(4.0 * M_PI)).epsilon(1e-13));
    CHECK(lp_norm(grid, constant, std::numeric_limits<double>::infinity()) ==
          doctest::Approx(1.0));

    FieldSamples radial(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) radial[i] = grid.nodes[i];
    CHECK(lp_norm(grid, radial, 2.0) ==
          doctest::Approx(std::sqrt(4.0 * M_PI)).epsilon(1e-13));

    CHECK_THROWS_AS(lp_norm(grid, constant, 0.5), std::domain_error);
}

TEST_CASE("refinement stability for non-polynomial integrands") {
    // |f|^3 of a band-limited field is not a polynomial; compare L and 2L grids
    auto field_at = [](const Vec3& eta) {
        return Vec3(eval_scalar_harmonic({2, 1}, UnitVector(eta)), 0.3,
                    eval_scalar_harmonic({1, 0}, UnitVector(eta)));
    };
    auto norm_on = [&](int L) {
        const SphereGrid grid = build_grid(L);
        FieldSamples f(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) f[i] = field_at(grid.nodes[i]);
        return lp_norm(grid, f, 3.0);
    };
    CHECK(std::abs(norm_on(24) - norm_on(48)) < 1e-8);
}
