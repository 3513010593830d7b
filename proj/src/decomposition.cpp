#include "lameball/decomposition.hpp"

#include <cmath>

namespace lameball {

namespace {

constexpr VshFamily kFamilies[] = {VshFamily::Plus, VshFamily::Minus, VshFamily::Zero};

template <typename Fn>
void for_each_index(int L, VshFamily f, Fn&& fn) {
    const int l0 = (f == VshFamily::Plus) ? 0 : 1;
    for (int l = l0; l <= L; ++l)
        for (int m = -l; m <= l; ++m) fn(l, m);
}

} // namespace

double VshExpansion::energy(VshFamily f) const {
    double acc = 0.0;
    for_each_index(band_limit, f, [&](int l, int m) {
        const double a = at(f, l, m);
        acc += a * a * vsh_norm_sq(f, l);
    });
    return acc;
}

ScalarExpansion analyze_scalar(const SphereGrid& grid, std::span<const double> samples, int L) {
    if (grid.exactness_degree < 2 * L)
        throw std::invalid_argument("analyze_scalar: grid exactness below 2L");
    if (samples.size() != grid.size())
        throw std::invalid_argument("analyze_scalar: sample count does not match grid");
    ScalarExpansion out(L);
    for (int l = 0; l <= L; ++l)
        for (int m = -l; m <= l; ++m) {
            double acc = 0.0;
            for (std::size_t i = 0; i < grid.size(); ++i)
                acc += grid.weights[i] * samples[i] *
                       eval_scalar_harmonic({l, m}, UnitVector(grid.nodes[i]));
            out.at(l, m) = acc;
        }
    return out;
}

VshExpansion analyze_field(const SphereGrid& grid, const FieldSamples& f, int L) {
    if (grid.exactness_degree < 2 * (L + 1))
        throw std::invalid_argument("analyze_field: grid exactness below 2(L+1)");
    if (f.size() != grid.size())
        throw std::invalid_argument("analyze_field: sample count does not match grid");
    VshExpansion out(L);
    for (VshFamily fam : kFamilies)
        for_each_index(L, fam, [&](int l, int m) {
            double acc = 0.0;
            for (std::size_t i = 0; i < grid.size(); ++i)
                acc += grid.weights[i] *
                       f[i].dot(eval_vsh(fam, {l, m}, UnitVector(grid.nodes[i])));
            out.at(fam, l, m) = acc / vsh_norm_sq(fam, l);
        });
    return out;
}

double synthesize_scalar(const ScalarExpansion& g, const UnitVector& eta) {
    double acc = 0.0;
    for (int l = 0; l <= g.band_limit; ++l)
        for (int m = -l; m <= l; ++m) {
            const double a = g.at(l, m);
            if (a != 0.0) acc += a * eval_scalar_harmonic({l, m}, eta);
        }
    return acc;
}

Vec3 synthesize(const VshExpansion& e, const UnitVector& eta) {
    Vec3 acc = Vec3::Zero();
    for (VshFamily fam : kFamilies)
        for_each_index(e.band_limit, fam, [&](int l, int m) {
            const double a = e.at(fam, l, m);
            if (a != 0.0) acc += a * eval_vsh(fam, {l, m}, eta);
        });
    return acc;
}

FieldSamples synthesize_on_grid(const VshExpansion& e, const SphereGrid& grid) {
    FieldSamples out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        out[i] = synthesize(e, UnitVector(grid.nodes[i]));
    return out;
}

VshExpansion project(const VshExpansion& e, VshFamily family) {
    VshExpansion out(e.band_limit);
    for_each_index(e.band_limit, family,
                   [&](int l, int m) { out.at(family, l, m) = e.at(family, l, m); });
    return out;
}

ScalarExpansion apply_zonal_multiplier(const ScalarExpansion& g, std::span<const double> beta) {
    if (beta.size() < static_cast<std::size_t>(g.band_limit) + 1)
        throw std::invalid_argument("apply_zonal_multiplier: sequence shorter than band limit");
    ScalarExpansion out(g.band_limit);
    for (int l = 0; l <= g.band_limit; ++l)
        for (int m = -l; m <= l; ++m) out.at(l, m) = beta[l] * g.at(l, m);
    return out;
}

VshExpansion op_L_minus(const ScalarExpansion& g) {
    VshExpansion out(g.band_limit);
    for (int l = 1; l <= g.band_limit; ++l)
        for (int m = -l; m <= l; ++m) out.at(VshFamily::Minus, l, m) = g.at(l, m);
    return out;
}

VshExpansion op_L_zero(const ScalarExpansion& g) {
    VshExpansion out(g.band_limit);
    for (int l = 1; l <= g.band_limit; ++l)
        for (int m = -l; m <= l; ++m) out.at(VshFamily::Zero, l, m) = g.at(l, m);
    return out;
}

VshExpansion op_L_plus(const ScalarExpansion& g) {
    VshExpansion out(g.band_limit);
    for (int l = 0; l <= g.band_limit; ++l)
        for (int m = -l; m <= l; ++m) out.at(VshFamily::Plus, l, m) = g.at(l, m);
    return out;
}

ScalarExpansion potential_of(const VshExpansion& e, VshFamily family) {
    for (VshFamily fam : kFamilies) {
        if (fam == family) continue;
        bool clean = true;
        for_each_index(e.band_limit, fam, [&](int l, int m) {
            if (e.at(fam, l, m) != 0.0) clean = false;
        });
        if (!clean)
            throw std::domain_error("potential_of: expansion has coefficients outside the requested family");
    }
    ScalarExpansion g(e.band_limit);
    for_each_index(e.band_limit, family,
                   [&](int l, int m) { g.at(l, m) = e.at(family, l, m); });
    return g;
}

} // namespace lameball
