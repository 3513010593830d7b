#include "lameball/elastic.hpp"

#include <cmath>

namespace lameball {

double alpha_ell(int degree, const LameParameters& params) {
    const double tau = params.tau();
    return -((degree + 3) * tau + 2.0) / (2.0 * (degree * (tau + 2.0) + 1.0));
}

double beta_ell(int degree, const LameParameters& params) {
    return (2.0 * degree + 1.0) * alpha_ell(degree, params) + 1.0;
}

Vec3 eval_basis_solution(VshFamily family, const HarmonicIndex& idx,
                         const LameParameters& params, const Vec3& x) {
    require_compatible(family, idx.degree);
    if (x.norm() > 1.0 + 1e-12)
        throw std::domain_error("eval_basis_solution: point outside the closed ball");
    const Vec3 grad = eval_solid_gradient(idx, x);
    switch (family) {
        case VshFamily::Plus: {
            const int l = idx.degree;
            const double y = eval_solid_harmonic(idx, x);
            const double al = alpha_ell(l, params);
            return (2 * l + 1) * (y * x + al * (x.squaredNorm() - 1.0) * grad) - grad;
        }
        case VshFamily::Minus:
            return grad;
        default:
            return x.cross(grad);
    }
}

ElasticSolution solve_dirichlet(const VshExpansion& boundary, const LameParameters& params) {
    return ElasticSolution{params, boundary};
}

Vec3 eval_solution(const ElasticSolution& sol, const Vec3& x) {
    if (x.norm() > 1.0 + 1e-12)
        throw std::domain_error("eval_solution: point outside the closed ball");
    const VshExpansion& b = sol.boundary;
    Vec3 acc = Vec3::Zero();
    for (VshFamily fam : {VshFamily::Plus, VshFamily::Minus, VshFamily::Zero}) {
        const int l0 = (fam == VshFamily::Plus) ? 0 : 1;
        for (int l = l0; l <= b.band_limit; ++l)
            for (int m = -l; m <= l; ++m) {
                const double a = b.at(fam, l, m);
                if (a != 0.0) acc += a * eval_basis_solution(fam, {l, m}, sol.params, x);
            }
    }
    return acc;
}

double harmonic_poisson_kernel(const InteriorPoint& x, const UnitVector& eta) {
    const double d = (x.v - eta.v).norm();
    return (1.0 - x.v.squaredNorm()) / (4.0 * M_PI * d * d * d);
}

double poisson_extend(const ScalarExpansion& g, const Vec3& x) {
    double acc = 0.0;
    for (int l = 0; l <= g.band_limit; ++l)
        for (int m = -l; m <= l; ++m) {
            const double a = g.at(l, m);
            if (a != 0.0) acc += a * eval_solid_harmonic({l, m}, x);
        }
    return acc;
}

Vec3 poisson_gradient(const ScalarExpansion& g, const Vec3& x) {
    Vec3 acc = Vec3::Zero();
    for (int l = 1; l <= g.band_limit; ++l)
        for (int m = -l; m <= l; ++m) {
            const double a = g.at(l, m);
            if (a != 0.0) acc += a * eval_solid_gradient({l, m}, x);
        }
    return acc;
}

Mat3 poisson_hessian(const InteriorPoint& x, const UnitVector& eta) {
    // Direct second differentiation of (1 - |x|^2)/|x - eta|^3:
    //   4pi H_ij = -2 d_ij / d^3 + 6 (x_i (x_j - eta_j) + x_j (x_i - eta_i)) / d^5
    //              - 3 s d_ij / d^5 + 15 s (x_i - eta_i)(x_j - eta_j) / d^7,
    // with s = 1 - |x|^2, d = |x - eta|.  Symmetric, trace-free.
    const Vec3 r = x.v - eta.v;
    const double d2 = r.squaredNorm();
    const double d = std::sqrt(d2);
    const double d3 = d * d2, d5 = d3 * d2, d7 = d5 * d2;
    const double s = 1.0 - x.v.squaredNorm();

    Mat3 h = -2.0 / d3 * Mat3::Identity();
    h += 6.0 / d5 * (x.v * r.transpose() + r * x.v.transpose());
    h -= 3.0 * s / d5 * Mat3::Identity();
    h += 15.0 * s / d7 * (r * r.transpose());
    return h / (4.0 * M_PI);
}

namespace {

const std::vector<double>& gl_cache(int n, bool weights) {
    static std::vector<double> t8, w8, t16, w16, t32, w32;
    if (t8.empty()) {
        gauss_legendre(8, 0.0, 1.0, t8, w8);
        gauss_legendre(16, 0.0, 1.0, t16, w16);
        gauss_legendre(32, 0.0, 1.0, t32, w32);
    }
    switch (n) {
        case 8: return weights ? w8 : t8;
        case 16: return weights ? w16 : t16;
        default: return weights ? w32 : t32;
    }
}

Mat3 phi_hessian(const InteriorPoint& x, const UnitVector& eta, double alpha) {
    // Int_0^1 (Hess P)(t x, eta) t^{1-alpha} dt.  t^{1-alpha} has an
    // endpoint derivative singularity that defeats a single Gauss rule, so
    // the interval is split into dyadic panels [2^-k-1, 2^-k] graded toward
    // t = 0; on each panel the integrand is analytic and a short rule is
    // exact to rounding.  Panel order doubles until successive totals agree
    // to 1e-10 relative.  The tail below 2^-44 contributes O(2^-44).
    constexpr int kDepth = 44;
    Mat3 prev = Mat3::Zero();
    for (int n = 8; n <= 32; n *= 2) {
        const std::vector<double>& tn = gl_cache(n, false);
        const std::vector<double>& wn = gl_cache(n, true);
        Mat3 acc = Mat3::Zero();
        double hi = 1.0;
        for (int k = 0; k < kDepth; ++k, hi *= 0.5) {
            const double lo = 0.5 * hi, len = hi - lo;
            for (int i = 0; i < n; ++i) {
                const double t = lo + len * tn[i];
                acc += len * wn[i] * std::pow(t, 1.0 - alpha) *
                       poisson_hessian(InteriorPoint(t * x.v), eta);
            }
        }
        if (n > 8) {
            const double scale = std::max(acc.norm(), 1.0);
            if ((acc - prev).norm() < 1e-10 * scale) return acc;
        }
        prev = acc;
    }
    throw std::runtime_error("elastic_kernel: t-integral did not converge");
}

} // namespace

Mat3 elastic_kernel(const InteriorPoint& x, const UnitVector& eta,
                    const LameParameters& params) {
    Mat3 k = harmonic_poisson_kernel(x, eta) * Mat3::Identity();
    const double beta = params.beta();
    if (beta != 0.0)
        k += beta * (1.0 - x.v.squaredNorm()) * phi_hessian(x, eta, params.alpha());
    return k;
}

Vec3 elastic_poisson_apply(const SphereGrid& grid, const FieldSamples& f,
                           const InteriorPoint& x, const LameParameters& params) {
    if (f.size() != grid.size())
        throw std::invalid_argument("elastic_poisson_apply: sample count does not match grid");
    if (x.v.norm() > 0.9)
        throw std::invalid_argument(
            "elastic_poisson_apply: |x| > 0.9 under-resolves the kernel; use solve_dirichlet");
    Vec3 acc = Vec3::Zero();
    for (std::size_t i = 0; i < grid.size(); ++i)
        acc += grid.weights[i] *
               (elastic_kernel(x, UnitVector(grid.nodes[i]), params) * f[i]);
    return acc;
}

Vec3 h_plus_representation(const ScalarExpansion& g, const LameParameters& params,
                           const Vec3& x) {
    const double pg = poisson_extend(g, x);
    const Vec3 grad = poisson_gradient(g, x);
    const double r2 = x.squaredNorm();
    // harmonic part P(L_+ g) in closed form
    const Vec3 harmonic = (2.0 * x.dot(grad) + pg) * x - r2 * grad;

    std::vector<double> beta(g.band_limit + 1);
    for (int l = 0; l <= g.band_limit; ++l) beta[l] = beta_ell(l, params);
    const ScalarExpansion gb = apply_zonal_multiplier(g, beta);
    return harmonic + (r2 - 1.0) * poisson_gradient(gb, x);
}

namespace {

// 4th-order central first derivative of a scalar functional along axis i.
template <typename Fn>
auto d1(Fn&& fn, const Vec3& x, int i, double h) {
    Vec3 e = Vec3::Zero();
    e[i] = h;
    return (-fn(x + 2 * e) + 8.0 * fn(x + e) - 8.0 * fn(x - e) + fn(x - 2 * e)) / (12.0 * h);
}

template <typename Fn>
auto d2(Fn&& fn, const Vec3& x, int i, double h) {
    Vec3 e = Vec3::Zero();
    e[i] = h;
    return (-fn(x + 2 * e) + 16.0 * fn(x + e) - 30.0 * fn(x) + 16.0 * fn(x - e) -
            fn(x - 2 * e)) /
           (12.0 * h * h);
}

void check_stencil(const Vec3& x, double h) {
    if (h <= 0.0) throw std::invalid_argument("finite differences: step must be positive");
    if (x.norm() + 2.0 * h >= 1.0)
        throw std::invalid_argument("finite differences: stencil reaches the boundary; reduce h");
}

} // namespace

Vec3 lame_residual(const VectorField& field, const LameParameters& params,
                   const InteriorPoint& x, double h) {
    check_stencil(x.v, 2.0 * h);
    Vec3 lap = Vec3::Zero();
    for (int i = 0; i < 3; ++i) lap += d2(field, x.v, i, h);

    auto div = [&](const Vec3& y) {
        double acc = 0.0;
        for (int j = 0; j < 3; ++j)
            acc += d1([&](const Vec3& z) { return field(z)[j]; }, y, j, h);
        return acc;
    };
    Vec3 grad_div;
    for (int i = 0; i < 3; ++i) grad_div[i] = d1(div, x.v, i, h);

    return params.mu * lap + (params.lambda + params.mu) * grad_div;
}

std::pair<double, Vec3> div_curl(const VectorField& field, const InteriorPoint& x, double h) {
    check_stencil(x.v, h);
    Mat3 jac; // jac(i, j) = d u_i / d x_j
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            jac(i, j) = d1([&](const Vec3& z) { return field(z)[i]; }, x.v, j, h);
    const double div = jac.trace();
    const Vec3 curl(jac(2, 1) - jac(1, 2), jac(0, 2) - jac(2, 0), jac(1, 0) - jac(0, 1));
    return {div, curl};
}

} // namespace lameball
