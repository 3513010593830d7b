#include <doctest.h>

#include <cmath>
#include <random>

#include "lameball/quadrature.hpp"
#include "lameball/vsh.hpp"

using namespace lameball;

namespace {

std::mt19937 rng(11);

Vec3 random_unit() {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        Vec3 v(u(rng), u(rng), u(rng));
        const double n = v.norm();
        if (n > 0.1 && n < 1.0) return v / n;
    }
}

const double kY10 = std::sqrt(3.0 / (4.0 * M_PI));

} // namespace

TEST_CASE("closed forms at low degree") {
    const UnitVector eta(random_unit());
    // E+_{0,0} = eta / (2 sqrt(pi))
    CHECK((eval_vsh(VshFamily::Plus, {0, 0}, eta) - eta.v / (2.0 * std::sqrt(M_PI))).norm() <
          1e-14);
    // E-_{1,0} is the constant field sqrt(3/4pi) e3
    CHECK((eval_vsh(VshFamily::Minus, {1, 0}, eta) - Vec3(0, 0, kY10)).norm() < 1e-13);
    // E0_{1,0} at e1
    CHECK((eval_vsh(VshFamily::Zero, {1, 0}, UnitVector(1, 0, 0)) - Vec3(0, -kY10, 0)).norm() <
          1e-14);
}

TEST_CASE("norm constants") {
    CHECK(vsh_norm_sq(VshFamily::Plus, 1) == doctest::Approx(6.0));
    CHECK(vsh_norm_sq(VshFamily::Minus, 1) == doctest::Approx(3.0));
    CHECK(vsh_norm_sq(VshFamily::Zero, 1) == doctest::Approx(2.0));
    CHECK(vsh_norm_sq(VshFamily::Plus, 0) == doctest::Approx(1.0));
}

TEST_CASE("Minus/Zero at degree 0 are hard errors") {
    const UnitVector eta(0, 0, 1);
    CHECK_THROWS_AS(eval_vsh(VshFamily::Minus, {0, 0}, eta), std::domain_error);
    CHECK_THROWS_AS(eval_vsh(VshFamily::Zero, {0, 0}, eta), std::domain_error);
    CHECK_THROWS_AS(vsh_norm_sq(VshFamily::Minus, 0), std::domain_error);
}

TEST_CASE("restriction of harmonic polynomials to the sphere") {
    for (int trial = 0; trial < 20; ++trial) {
        const UnitVector eta(random_unit());
        std::uniform_int_distribution<int> dl(1, 10);
        const int l = dl(rng);
        std::uniform_int_distribution<int> dm(-l, l);
        const HarmonicIndex idx(l, dm(rng));
        const double y = eval_scalar_harmonic(idx, eta);
        const Vec3 grad = eval_solid_gradient(idx, eta.v);

        CHECK((grad - eval_vsh(VshFamily::Minus, idx, eta)).norm() < 1e-12);
        CHECK(((2 * l + 1) * y * eta.v - grad - eval_vsh(VshFamily::Plus, idx, eta)).norm() <
              1e-12);
        CHECK((eta.v.cross(grad) - eval_vsh(VshFamily::Zero, idx, eta)).norm() < 1e-12);
    }
}

TEST_CASE("E0 is tangent") {
    for (int trial = 0; trial < 20; ++trial) {
        const UnitVector eta(random_unit());
        std::uniform_int_distribution<int> dl(1, 15);
        const int l = dl(rng);
        std::uniform_int_distribution<int> dm(-l, l);
        CHECK(std::abs(eval_vsh(VshFamily::Zero, {l, dm(rng)}, eta).dot(eta.v)) < 1e-12);
    }
}

TEST_CASE("gram property at moderate band limit") {
    const int L = 5;
    const SphereGrid grid = build_grid(L + 1);
    struct Id {
        VshFamily f;
        int l, m;
    };
    std::vector<Id> basis;
    for (VshFamily f : {VshFamily::Plus, VshFamily::Minus, VshFamily::Zero}) {
        const int l0 = (f == VshFamily::Plus) ? 0 : 1;
        for (int l = l0; l <= L; ++l)
            for (int m = -l; m <= l; ++m) basis.push_back({f, l, m});
    }
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
        const Id a = basis[pick(rng)], b = basis[pick(rng)];
        double ip = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const UnitVector eta(grid.nodes[i]);
            ip += grid.weights[i] * eval_vsh(a.f, {a.l, a.m}, eta)
                                        .dot(eval_vsh(b.f, {b.l, b.m}, eta));
        }
        const bool same = (a.f == b.f && a.l == b.l && a.m == b.m);
        const double expected = same ? vsh_norm_sq(a.f, a.l) : 0.0;
        CHECK(std::abs(ip - expected) < 1e-10);
    }
}
