#pragma once

#include "lameball/elastic.hpp"

namespace lameball {

/// L^p norms of u on concentric spheres, sampled at an increasing list of
/// radii in [0, 1).
struct RadialProfile {
    std::vector<double> radii;
    std::vector<double> values;
};

/// (Int_S |u(r w)|^p dsigma(w))^{1/p} on the given grid.
double sphere_norm(const ElasticSolution& sol, double r, double p, const SphereGrid& grid);

/// max over the radius list of sphere_norm — a lower bound of the Hardy-norm
/// sup; for band-limited data the profile is polynomial in r, so a dense
/// list near 1 suffices.
double hardy_norm(const ElasticSolution& sol, double p, std::span<const double> radii);

RadialProfile radial_profile(const ElasticSolution& sol, double p,
                             std::span<const double> radii, const SphereGrid& grid);

/// ||u(r .) - f||_p on the grid; the radial Fatou deviation.
double boundary_deviation(const ElasticSolution& sol, const FieldSamples& f, double r,
                          double p, const SphereGrid& grid);

/// {1 - 2^-k : k = 1..count}, the default geometric approach to the boundary.
std::vector<double> default_radii(int count = 12);

} // namespace lameball
