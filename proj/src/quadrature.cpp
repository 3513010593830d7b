#include "lameball/quadrature.hpp"

#include <cmath>
#include <limits>

namespace lameball {

void gauss_legendre(int n, double a, double b,
                    std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    const int mid = (n + 1) / 2;
    for (int i = 0; i < mid; ++i) {
        // Newton from the Chebyshev-like initial guess
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        nodes[i] = x;
        weights[i] = w;
        nodes[n - 1 - i] = -x;
        weights[n - 1 - i] = w;
    }
    // map [-1,1] -> [a,b]
    const double half = 0.5 * (b - a), midpt = 0.5 * (a + b);
    for (int i = 0; i < n; ++i) {
        nodes[i] = midpt + half * nodes[i];
        weights[i] *= half;
    }
}

SphereGrid build_grid(int band_limit) {
    if (band_limit < 0) throw std::domain_error("build_grid: band limit must be >= 0");
    const int n_theta = band_limit + 1;
    const int n_phi = 2 * band_limit + 1;

    std::vector<double> ct, wt;
    gauss_legendre(n_theta, -1.0, 1.0, ct, wt);

    SphereGrid grid;
    grid.exactness_degree = 2 * band_limit;
    grid.nodes.reserve(static_cast<std::size_t>(n_theta) * n_phi);
    grid.weights.reserve(grid.nodes.capacity());
    const double wphi = 2.0 * M_PI / n_phi;
    for (int i = 0; i < n_theta; ++i) {
        const double z = ct[i];
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        for (int j = 0; j < n_phi; ++j) {
            const double phi = wphi * j;
            grid.nodes.emplace_back(s * std::cos(phi), s * std::sin(phi), z);
            grid.weights.push_back(wt[i] * wphi);
        }
    }
    return grid;
}

double integrate(const SphereGrid& grid, std::span<const double> values) {
    if (values.size() != grid.size())
        throw std::invalid_argument("integrate: sample count does not match grid");
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) acc += grid.weights[i] * values[i];
    return acc;
}

namespace {

template <typename Abs>
double lp_norm_impl(const SphereGrid& grid, std::size_t n, double p, Abs mag) {
    if (n != grid.size())
        throw std::invalid_argument("lp_norm: sample count does not match grid");
    if (std::isinf(p)) {
        double mx = 0.0;
        for (std::size_t i = 0; i < n; ++i) mx = std::max(mx, mag(i));
        return mx;
    }
    if (p < 1.0) throw std::domain_error("lp_norm: p must be >= 1 or infinity");
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += grid.weights[i] * std::pow(mag(i), p);
    return std::pow(acc, 1.0 / p);
}

} // namespace

double lp_norm(const SphereGrid& grid, const FieldSamples& f, double p) {
    return lp_norm_impl(grid, f.size(), p, [&](std::size_t i) { return f[i].norm(); });
}

double lp_norm(const SphereGrid& grid, std::span<const double> f, double p) {
    return lp_norm_impl(grid, f.size(), p, [&](std::size_t i) { return std::abs(f[i]); });
}

} // namespace lameball
