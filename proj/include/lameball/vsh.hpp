#pragma once

#include "lameball/sphharm.hpp"

namespace lameball {

/// The three vector spherical harmonic families.  Minus and Zero are empty
/// at degree 0; requesting them there is a hard error.
enum class VshFamily { Plus, Minus, Zero };

inline const char* family_name(VshFamily f) {
    switch (f) {
        case VshFamily::Plus: return "+";
        case VshFamily::Minus: return "-";
        default: return "0";
    }
}

void require_compatible(VshFamily family, int degree);

/// E^+_{l,m} = (l+1) Y eta - grad_sigma Y
/// E^-_{l,m} = l Y eta + grad_sigma Y        (l >= 1)
/// E^0_{l,m} = eta x grad_sigma Y            (l >= 1)
/// Not pre-normalized; squared L2 norms are vsh_norm_sq below.
Vec3 eval_vsh(VshFamily family, const HarmonicIndex& idx, const UnitVector& eta);

/// (l+1)(2l+1) for Plus, l(2l+1) for Minus, l(l+1) for Zero.
double vsh_norm_sq(VshFamily family, int degree);

} // namespace lameball
