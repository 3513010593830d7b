#include <doctest.h>

#include <cmath>
#include <random>

#include "lameball/elastic.hpp"

using namespace lameball;

namespace {

std::mt19937 rng(31);

Vec3 random_interior(double radius) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        Vec3 v(u(rng), u(rng), u(rng));
        if (v.norm() < 1.0) return radius * v;
    }
}

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

TEST_CASE("parameter eligibility and derived constants") {
    CHECK_THROWS_AS(LameParameters(0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(LameParameters(0.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(LameParameters(-2.0, 1.0), std::domain_error);
    CHECK_NOTHROW(LameParameters(-1.9, 1.0));

    const LameParameters p(1.0, 1.0);
    CHECK(p.tau() == doctest::Approx(2.0));
    CHECK(p.alpha() == doctest::Approx(0.75));
    CHECK(p.beta() == doctest::Approx(0.25));

    // alpha stays in (0, 1) across the eligible range
    for (double lambda : {-1.99, -1.0, 0.0, 5.0, 1e4}) {
        const LameParameters q(lambda, 1.0);
        CHECK(q.alpha() > 0.0);
        CHECK(q.alpha() < 1.0);
    }
}

TEST_CASE("mode constants alpha_l and beta_l") {
    const LameParameters p(1.0, 1.0);   // tau = 2
    CHECK(alpha_ell(1, p) == doctest::Approx(-1.0));
    CHECK(beta_ell(1, p) == doctest::Approx(-2.0));

    // lambda = -mu means tau = 0 and beta_l vanishes identically
    const LameParameters fluid(-1.0, 1.0);
    for (int l = 0; l <= kMaxDegree; ++l)
        CHECK(std::abs(beta_ell(l, fluid)) < 1e-15);

    // closed form beta_l = -tau (l+1)(2l+3) / (2 (l (tau+2) + 1))
    const LameParameters q(3.0, 2.0);
    for (int l = 0; l <= kMaxDegree; ++l) {
        const double tau = q.tau();
        const double expect =
            -tau * (l + 1.0) * (2.0 * l + 3.0) / (2.0 * (l * (tau + 2.0) + 1.0));
        CHECK(beta_ell(l, q) == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("basis solutions restrict to the basis fields on the sphere") {
    const LameParameters p(2.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const Vec3 eta = random_unit();
        std::uniform_int_distribution<int> dl(1, 8);
        const int l = dl(rng);
        std::uniform_int_distribution<int> dm(-l, l);
        const HarmonicIndex idx(l, dm(rng));
        for (VshFamily f : {VshFamily::Plus, VshFamily::Minus, VshFamily::Zero}) {
            const Vec3 u = eval_basis_solution(f, idx, p, eta);
            const Vec3 e = eval_vsh(f, idx, UnitVector(eta));
            CHECK((u - e).norm() < 1e-12);
        }
    }
}

TEST_CASE("Plus mode at degree 1 for lambda = mu = 1") {
    // alpha_1 = -1, so u = 3(Y x - (|x|^2 - 1) grad Y) - grad Y with
    // Y = sqrt(3/4pi) x3:  u = sqrt(3/4pi) [3 x3 x - (3|x|^2 - 2) e3]
    const LameParameters p(1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const Vec3 x = random_interior(0.95);
        const Vec3 u = eval_basis_solution(VshFamily::Plus, {1, 0}, p, x);
        const Vec3 expect =
            kY10 * (3.0 * x.z() * x - (3.0 * x.squaredNorm() - 2.0) * Vec3(0, 0, 1));
        CHECK((u - expect).norm() < 1e-13);
    }
}

TEST_CASE("solve/eval round trip on the boundary") {
    const int L = 3;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    VshExpansion bd(L);
    for (VshFamily f : {VshFamily::Plus, VshFamily::Minus, VshFamily::Zero}) {
        const int l0 = (f == VshFamily::Plus) ? 0 : 1;
        for (int l = l0; l <= L; ++l)
            for (int m = -l; m <= l; ++m) bd.at(f, l, m) = u(rng);
    }
    const ElasticSolution sol = solve_dirichlet(bd, LameParameters(2.0, 1.0));
    for (int trial = 0; trial < 20; ++trial) {
        const Vec3 eta = random_unit();
        CHECK((eval_solution(sol, eta) - synthesize(bd, UnitVector(eta))).norm() < 1e-12);
    }
    CHECK_THROWS_AS(eval_solution(sol, Vec3(1.5, 0, 0)), std::domain_error);
}

TEST_CASE("harmonic Poisson kernel") {
    const InteriorPoint origin(0, 0, 0);
    const UnitVector e3(0, 0, 1);
    CHECK(harmonic_poisson_kernel(origin, e3) == doctest::Approx(1.0 / (4.0 * M_PI)));

    // unit mass over the sphere at any interior point
    const SphereGrid grid = build_grid(30);
    const InteriorPoint x(0.3, -0.2, 0.5);
    double mass = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        mass += grid.weights[i] * harmonic_poisson_kernel(x, UnitVector(grid.nodes[i]));
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("poisson_extend matches the kernel integral") {
    ScalarExpansion g(2);
    g.at(0, 0) = 0.7;
    g.at(1, 0) = -1.2;
    g.at(2, 1) = 0.4;
    const SphereGrid grid = build_grid(30);
    const Vec3 x(0.25, 0.1, -0.4);
    double by_kernel = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const UnitVector eta(grid.nodes[i]);
        by_kernel += grid.weights[i] * harmonic_poisson_kernel(InteriorPoint(x), eta) *
                     synthesize_scalar(g, eta);
    }
    CHECK(poisson_extend(g, x) == doctest::Approx(by_kernel).epsilon(1e-10));

    // and the gradient against finite differences of the extension
    const double h = 1e-5;
    const Vec3 grad = poisson_gradient(g, x);
    for (int i = 0; i < 3; ++i) {
        Vec3 e = Vec3::Zero();
        e[i] = h;
        const double fd = (poisson_extend(g, x + e) - poisson_extend(g, x - e)) / (2.0 * h);
        CHECK(grad[i] == doctest::Approx(fd).epsilon(1e-8));
    }
}

TEST_CASE("poisson_hessian: symmetry, trace, finite differences") {
    const InteriorPoint x(0.2, -0.35, 0.4);
    const UnitVector eta(random_unit());
    const Mat3 H = poisson_hessian(x, eta);
    CHECK((H - H.transpose()).norm() < 1e-14);
    CHECK(std::abs(H.trace()) < 1e-12);

    const double h = 1e-4;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Vec3 ei = Vec3::Zero(), ej = Vec3::Zero();
            ei[i] = h;
            ej[j] = h;
            const double fd =
                (harmonic_poisson_kernel(InteriorPoint(x.v + ei + ej), eta) -
                 harmonic_poisson_kernel(InteriorPoint(x.v + ei - ej), eta) -
                 harmonic_poisson_kernel(InteriorPoint(x.v - ei + ej), eta) +
                 harmonic_poisson_kernel(InteriorPoint(x.v - ei - ej), eta)) /
                (4.0 * h * h);
            CHECK(H(i, j) == doctest::Approx(fd).epsilon(1e-5));
        }

    // closed form at the center: (1/4pi)(15 eta eta^T - 5 I)
    const Mat3 H0 = poisson_hessian(InteriorPoint(0, 0, 0), eta);
    const Mat3 expect =
        (15.0 * eta.v * eta.v.transpose() - 5.0 * Mat3::Identity()) / (4.0 * M_PI);
    CHECK((H0 - expect).norm() < 1e-13);
}

TEST_CASE("elastic kernel structure") {
    const UnitVector eta(random_unit());
    const InteriorPoint x(0.3, 0.1, -0.2);

    // beta = 0 collapses the kernel to P I
    const LameParameters fluid(-1.0, 1.0);
    const Mat3 K0 = elastic_kernel(x, eta, fluid);
    const double P = harmonic_poisson_kernel(x, eta);
    CHECK((K0 - P * Mat3::Identity()).norm() < 1e-12);

    const LameParameters p(1.0, 1.0);
    const Mat3 K = elastic_kernel(x, eta, p);
    CHECK((K - K.transpose()).norm() < 1e-10);
    CHECK(K.trace() == doctest::Approx(3.0 * P).epsilon(1e-9));

    // closed form at the center
    const Mat3 Kc = elastic_kernel(InteriorPoint(0, 0, 0), eta, p);
    const Mat3 expect =
        Mat3::Identity() / (4.0 * M_PI) +
        p.beta() / (2.0 - p.alpha()) *
            (15.0 * eta.v * eta.v.transpose() - 5.0 * Mat3::Identity()) / (4.0 * M_PI);
    CHECK((Kc - expect).norm() < 1e-10);
}

TEST_CASE("kernel oracle agrees with the spectral solution") {
    const int L = 3;
    VshExpansion bd(L);
    bd.at(VshFamily::Plus, 2, 1) = 1.0;
    bd.at(VshFamily::Minus, 1, 0) = -0.5;
    bd.at(VshFamily::Zero, 3, -2) = 0.8;
    const LameParameters p(2.0, 1.0);
    const ElasticSolution sol = solve_dirichlet(bd, p);

    const SphereGrid grid = build_grid(24);
    const FieldSamples f = synthesize_on_grid(bd, grid);
    for (int trial = 0; trial < 5; ++trial) {
        const InteriorPoint x(random_interior(0.7));
        const Vec3 via_kernel = elastic_poisson_apply(grid, f, x, p);
        CHECK((via_kernel - eval_solution(sol, x.v)).norm() < 1e-5);
    }
    CHECK_THROWS_AS(elastic_poisson_apply(grid, f, InteriorPoint(0.95, 0, 0), p),
                    std::invalid_argument);
}

TEST_CASE("h_plus representation matches the mode solutions") {
    const LameParameters p(1.0, 1.0);
    ScalarExpansion g(3);
    g.at(0, 0) = 1.0;
    g.at(1, -1) = 0.6;
    g.at(3, 2) = -0.9;
    // boundary field L_+ g solved spectrally
    const ElasticSolution sol = solve_dirichlet(op_L_plus(g), p);
    for (int trial = 0; trial < 10; ++trial) {
        const Vec3 x = random_interior(0.97);
        CHECK((h_plus_representation(g, p, x) - eval_solution(sol, x)).norm() < 1e-11);
    }
}

TEST_CASE("finite-difference residual on polynomial fields") {
    const LameParameters p(1.0, 1.0);
    // u = (x1^2, 0, 0): mu lap u + (lambda + mu) grad div u = (2mu + 2(lambda+mu), 0, 0)
    const VectorField quad = [](const Vec3& x) { return Vec3(x.x() * x.x(), 0.0, 0.0); };
    const Vec3 r = lame_residual(quad, p, InteriorPoint(0.2, 0.1, -0.3));
    CHECK((r - Vec3(6.0, 0.0, 0.0)).norm() < 1e-8);

    // mode solutions have vanishing residual
    const VectorField mode = [&](const Vec3& x) {
        return eval_basis_solution(VshFamily::Plus, {2, 1}, p, x);
    };
    CHECK(lame_residual(mode, p, InteriorPoint(0.4, -0.2, 0.1)).norm() < 1e-8);

    CHECK_THROWS_AS(lame_residual(quad, p, InteriorPoint(0.999, 0, 0)),
                    std::invalid_argument);
}

TEST_CASE("div and curl by finite differences") {
    const VectorField linear = [](const Vec3& x) { return x; };
    const auto [div1, curl1] = div_curl(linear, InteriorPoint(0.1, 0.2, 0.3));
    CHECK(div1 == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(curl1.norm() < 1e-10);

    const VectorField rot = [](const Vec3& x) { return Vec3(-x.y(), x.x(), 0.0); };
    const auto [div2, curl2] = div_curl(rot, InteriorPoint(0.1, 0.2, 0.3));
    CHECK(std::abs(div2) < 1e-10);
    CHECK((curl2 - Vec3(0, 0, 2)).norm() < 1e-10);
}
