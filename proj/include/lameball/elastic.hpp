#pragma once

#include <functional>

#include "lameball/decomposition.hpp"

namespace lameball {

/// Lame constants (lambda, mu) with the derived quantities used by the
/// per-mode solutions and the elastic Poisson kernel.  Eligible when
/// mu > 0 and 2 mu + lambda > 0, which forces alpha in (0, 1).
struct LameParameters {
    double lambda;
    double mu;

    LameParameters(double lambda_, double mu_) : lambda(lambda_), mu(mu_) {
        if (mu <= 0.0)
            throw std::domain_error("LameParameters: requires mu > 0");
        if (2.0 * mu + lambda <= 0.0)
            throw std::domain_error("LameParameters: requires 2*mu + lambda > 0");
    }

    double tau() const { return (lambda + mu) / mu; }
    double alpha() const { return (lambda + 2.0 * mu) / (lambda + 3.0 * mu); }
    double beta() const { return (lambda + mu) / (2.0 * lambda + 6.0 * mu); }
};

/// alpha_l = -((l+3) tau + 2) / (2 (l (tau+2) + 1)); the interior correction
/// weight of the Plus-family mode solutions.
double alpha_ell(int degree, const LameParameters& params);

/// beta_l = (2l+1) alpha_l + 1 = -tau (l+1)(2l+3) / (2 (l (tau+2) + 1));
/// grows linearly in l, identically 0 when lambda = -mu.
double beta_ell(int degree, const LameParameters& params);

/// The exact solution of the Lame Dirichlet problem with boundary value
/// E^#_{l,m} (with solid harmonic Y = r^l Y_{l,m}(x/r)):
///   Plus:  (2l+1)(Y(x) x + alpha_l (|x|^2 - 1) grad Y(x)) - grad Y(x)
///   Minus: grad Y(x)
///   Zero:  x cross grad Y(x)
Vec3 eval_basis_solution(VshFamily family, const HarmonicIndex& idx,
                         const LameParameters& params, const Vec3& x);

/// Interior displacement field: coefficient-weighted sum of the mode
/// solutions; restriction to |x| = 1 reproduces synthesize(boundary).
struct ElasticSolution {
    LameParameters params;
    VshExpansion boundary;
};

ElasticSolution solve_dirichlet(const VshExpansion& boundary, const LameParameters& params);

/// Pointwise evaluation; |x| <= 1 required.
Vec3 eval_solution(const ElasticSolution& sol, const Vec3& x);

/// P(x, eta) = (1/4pi) (1 - |x|^2) / |x - eta|^3.
double harmonic_poisson_kernel(const InteriorPoint& x, const UnitVector& eta);

/// Harmonic extension Pg(x) = sum a_{l,m} r^l Y_{l,m}(x/r); exact for
/// band-limited g, valid on the closed ball.
double poisson_extend(const ScalarExpansion& g, const Vec3& x);

/// grad(Pg)(x), summed termwise over solid-harmonic gradients.
Vec3 poisson_gradient(const ScalarExpansion& g, const Vec3& x);

/// Hessian of the Poisson kernel in x; symmetric and trace-free.
Mat3 poisson_hessian(const InteriorPoint& x, const UnitVector& eta);

/// Matrix-valued elastic Poisson kernel
///   P_e(x,eta) = P(x,eta) I + beta (1 - |x|^2) Hess Phi(x,eta),
/// with Hess Phi = Int_0^1 (Hess P)(t x, eta) t^{1-alpha} dt evaluated by
/// adaptive Gauss-Legendre quadrature (refined until 1e-10 relative,
/// at most 512 nodes).
Mat3 elastic_kernel(const InteriorPoint& x, const UnitVector& eta,
                    const LameParameters& params);

/// Int_S P_e(x,eta) f(eta) dsigma(eta) by grid quadrature; an independent
/// oracle for solve_dirichlet.  Restricted to |x| <= 0.9 — the kernel peak
/// near the boundary outruns fixed grids; use the spectral route there.
Vec3 elastic_poisson_apply(const SphereGrid& grid, const FieldSamples& f,
                           const InteriorPoint& x, const LameParameters& params);

/// u(x) = P(L_+ g)(x) + (|x|^2 - 1) grad(P(M_{beta_l} g))(x), with the
/// harmonic part via the closed form [2 x.grad(Pg) + Pg] x - |x|^2 grad(Pg).
Vec3 h_plus_representation(const ScalarExpansion& g, const LameParameters& params,
                           const Vec3& x);

using VectorField = std::function<Vec3(const Vec3&)>;

/// Central-difference approximation (4th order, step h) of
/// mu Lap u + (lambda + mu) grad div u.  Needs x at distance > 2h from S.
Vec3 lame_residual(const VectorField& field, const LameParameters& params,
                   const InteriorPoint& x, double h = 1e-3);

/// Central-difference divergence and curl at x; same stencil constraint.
std::pair<double, Vec3> div_curl(const VectorField& field, const InteriorPoint& x,
                                 double h = 1e-4);

} // namespace lameball
