#include "lameball/vsh.hpp"

namespace lameball {

void require_compatible(VshFamily family, int degree) {
    if (degree < 0) throw std::domain_error("vsh: degree must be >= 0");
    if (degree == 0 && family != VshFamily::Plus)
        throw std::domain_error("vsh: Minus and Zero families are empty at degree 0");
}

Vec3 eval_vsh(VshFamily family, const HarmonicIndex& idx, const UnitVector& eta) {
    require_compatible(family, idx.degree);
    const double y = eval_scalar_harmonic(idx, eta);
    const Vec3 gs = eval_surface_gradient(idx, eta);
    const int l = idx.degree;
    switch (family) {
        case VshFamily::Plus: return (l + 1) * y * eta.v - gs;
        case VshFamily::Minus: return l * y * eta.v + gs;
        default: return eta.v.cross(gs);
    }
}

double vsh_norm_sq(VshFamily family, int degree) {
    require_compatible(family, degree);
    const double l = degree;
    switch (family) {
        case VshFamily::Plus: return (l + 1) * (2 * l + 1);
        case VshFamily::Minus: return l * (2 * l + 1);
        default: return l * (l + 1);
    }
}

} // namespace lameball
