#include "lameball/hardy.hpp"

#include <cmath>

namespace lameball {

namespace {

FieldSamples sample_sphere(const ElasticSolution& sol, double r, const SphereGrid& grid) {
    FieldSamples out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        out[i] = eval_solution(sol, r * grid.nodes[i]);
    return out;
}

} // namespace

double sphere_norm(const ElasticSolution& sol, double r, double p, const SphereGrid& grid) {
    if (r < 0.0 || r >= 1.0) throw std::domain_error("sphere_norm: radius must be in [0, 1)");
    return lp_norm(grid, sample_sphere(sol, r, grid), p);
}

double hardy_norm(const ElasticSolution& sol, double p, std::span<const double> radii) {
    if (radii.empty()) throw std::invalid_argument("hardy_norm: empty radius list");
    const SphereGrid grid = build_grid(sol.boundary.band_limit + 4);
    double mx = 0.0, prev = -1.0;
    for (double r : radii) {
        if (r <= prev) throw std::invalid_argument("hardy_norm: radii must be increasing");
        prev = r;
        mx = std::max(mx, sphere_norm(sol, r, p, grid));
    }
    return mx;
}

RadialProfile radial_profile(const ElasticSolution& sol, double p,
                             std::span<const double> radii, const SphereGrid& grid) {
    RadialProfile out;
    double prev = -1.0;
    for (double r : radii) {
        if (r <= prev) throw std::invalid_argument("radial_profile: radii must be increasing");
        prev = r;
        out.radii.push_back(r);
        out.values.push_back(sphere_norm(sol, r, p, grid));
    }
    return out;
}

double boundary_deviation(const ElasticSolution& sol, const FieldSamples& f, double r,
                          double p, const SphereGrid& grid) {
    if (f.size() != grid.size())
        throw std::invalid_argument("boundary_deviation: sample count does not match grid");
    FieldSamples diff = sample_sphere(sol, r, grid);
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= f[i];
    return lp_norm(grid, diff, p);
}

std::vector<double> default_radii(int count) {
    std::vector<double> out;
    for (int k = 1; k <= count; ++k) out.push_back(1.0 - std::pow(2.0, -k));
    return out;
}

} // namespace lameball
