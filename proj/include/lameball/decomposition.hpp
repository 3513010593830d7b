#pragma once

#include <vector>

#include "lameball/quadrature.hpp"
#include "lameball/vsh.hpp"

namespace lameball {

/// Band-limited scalar expansion f = sum a_{l,m} Y_{l,m}, 0 <= l <= L.
/// Dense storage of (L+1)^2 coefficients, index l^2 + l + m.
struct ScalarExpansion {
    int band_limit = 0;
    std::vector<double> coeff;

    explicit ScalarExpansion(int L)
        : band_limit(L), coeff(static_cast<std::size_t>(L + 1) * (L + 1), 0.0) {
        if (L < 0) throw std::domain_error("ScalarExpansion: band limit must be >= 0");
    }
    double& at(int l, int m) { return coeff[index(l, m)]; }
    double at(int l, int m) const { return coeff[index(l, m)]; }

    std::size_t index(int l, int m) const {
        if (l < 0 || l > band_limit || std::abs(m) > l)
            throw std::domain_error("ScalarExpansion: index out of range");
        return static_cast<std::size_t>(l) * l + l + m;
    }
};

/// Band-limited vector expansion in the E^+/E^-/E^0 basis.  Minus and Zero
/// coefficients start at l = 1.
struct VshExpansion {
    int band_limit = 0;
    std::vector<double> plus;    // (L+1)^2 entries
    std::vector<double> minus;   // (L+1)^2 - 1 entries, l >= 1
    std::vector<double> zero;    // (L+1)^2 - 1 entries, l >= 1

    explicit VshExpansion(int L)
        : band_limit(L),
          plus(static_cast<std::size_t>(L + 1) * (L + 1), 0.0),
          minus(plus.size() - 1, 0.0),
          zero(plus.size() - 1, 0.0) {
        if (L < 0) throw std::domain_error("VshExpansion: band limit must be >= 0");
    }

    double& at(VshFamily f, int l, int m) {
        return storage(f)[index(f, l, m)];
    }
    double at(VshFamily f, int l, int m) const {
        return const_cast<VshExpansion*>(this)->storage(f)[index(f, l, m)];
    }

    /// Sum over all families of a^2 * vsh_norm_sq — the squared L2 norm of
    /// the synthesized field (Parseval).
    double energy(VshFamily f) const;

private:
    std::vector<double>& storage(VshFamily f) {
        switch (f) {
            case VshFamily::Plus: return plus;
            case VshFamily::Minus: return minus;
            default: return zero;
        }
    }
    std::size_t index(VshFamily f, int l, int m) const {
        require_compatible(f, l);
        if (l > band_limit || std::abs(m) > l)
            throw std::domain_error("VshExpansion: index out of range");
        const std::size_t dense = static_cast<std::size_t>(l) * l + l + m;
        return f == VshFamily::Plus ? dense : dense - 1;
    }
};

/// a_{l,m} = Int f Y_{l,m} dsigma by quadrature; exact for band-limited f.
/// Requires grid exactness >= 2L.
ScalarExpansion analyze_scalar(const SphereGrid& grid, std::span<const double> samples, int L);

/// a^#_{l,m} = <f, E^#_{l,m}> / vsh_norm_sq(#, l).  Requires grid exactness
/// >= 2(L+1) because the Plus family at degree l has componentwise degree l+1.
VshExpansion analyze_field(const SphereGrid& grid, const FieldSamples& f, int L);

double synthesize_scalar(const ScalarExpansion& g, const UnitVector& eta);
Vec3 synthesize(const VshExpansion& e, const UnitVector& eta);

FieldSamples synthesize_on_grid(const VshExpansion& e, const SphereGrid& grid);

/// Zero all coefficients outside the requested family; idempotent.
VshExpansion project(const VshExpansion& e, VshFamily family);

/// Coefficientwise scaling by beta_l (zonal multiplier).
ScalarExpansion apply_zonal_multiplier(const ScalarExpansion& g, std::span<const double> beta);

/// L_- g = (M_l g) eta + grad_sigma g: carries Y_{l,m} to E^-_{l,m}, kills constants.
VshExpansion op_L_minus(const ScalarExpansion& g);
/// L_0 g = eta x grad_sigma g: carries Y_{l,m} to E^0_{l,m}, kills constants.
VshExpansion op_L_zero(const ScalarExpansion& g);
/// L_+ g = (M_{l+1} g) eta - grad_sigma g: carries Y_{l,m} to E^+_{l,m}; injective.
VshExpansion op_L_plus(const ScalarExpansion& g);

/// Inverse of op_L_# on a single-family expansion.  For Minus/Zero the l=0
/// scalar coefficient is fixed to 0 (the kernel of those operators is the
/// constants).  Mixed-family input is a domain error.
ScalarExpansion potential_of(const VshExpansion& e, VshFamily family);

} // namespace lameball
