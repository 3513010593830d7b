#pragma once

#include <span>
#include <vector>

#include "lameball/sphharm.hpp"

namespace lameball {

/// Quadrature nodes and weights on the unit sphere.  Weights carry the
/// unnormalized surface measure: they sum to 4*pi.  Products of spherical
/// harmonics of total degree <= exactness_degree integrate exactly.
struct SphereGrid {
    std::vector<Vec3> nodes;
    std::vector<double> weights;
    int exactness_degree = 0;

    std::size_t size() const { return nodes.size(); }
};

/// Per-node vector samples of a boundary field; length matches the grid.
using FieldSamples = std::vector<Vec3>;

/// Gauss-Legendre in cos(theta) (L+1 nodes) times uniform azimuth
/// (2L+1 nodes); exactness degree 2L.
SphereGrid build_grid(int band_limit);

/// Gauss-Legendre nodes/weights on [a, b].
void gauss_legendre(int n, double a, double b,
                    std::vector<double>& nodes, std::vector<double>& weights);

double integrate(const SphereGrid& grid, std::span<const double> values);

/// (Int |f|^p dsigma)^{1/p}; p may be infinity (node max, a lower bound of
/// the true sup).
double lp_norm(const SphereGrid& grid, const FieldSamples& f, double p);
double lp_norm(const SphereGrid& grid, std::span<const double> f, double p);

} // namespace lameball
