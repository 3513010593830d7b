#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace lameball {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Degree/order index of a real spherical harmonic Y_{l,m}, |m| <= l.
struct HarmonicIndex {
    int degree = 0;
    int order = 0;

    HarmonicIndex() = default;
    HarmonicIndex(int l, int m) : degree(l), order(m) {
        if (l < 0 || std::abs(m) > l)
            throw std::domain_error("HarmonicIndex: need l >= 0 and |m| <= l");
    }
};

/// A point on the unit sphere; norm checked to 1e-12 at construction.
struct UnitVector {
    Vec3 v;

    explicit UnitVector(const Vec3& u) : v(u) {
        if (std::abs(u.norm() - 1.0) > 1e-12)
            throw std::domain_error("UnitVector: norm differs from 1 by more than 1e-12");
    }
    UnitVector(double x, double y, double z) : UnitVector(Vec3(x, y, z)) {}
    operator const Vec3&() const { return v; }
};

/// A point strictly inside the unit ball.
struct InteriorPoint {
    Vec3 v;

    explicit InteriorPoint(const Vec3& x) : v(x) {
        if (x.norm() >= 1.0)
            throw std::domain_error("InteriorPoint: |x| must be < 1");
    }
    InteriorPoint(double x, double y, double z) : InteriorPoint(Vec3(x, y, z)) {}
    operator const Vec3&() const { return v; }
};

// Real fully-normalized basis: Int_S Y_{l,m} Y_{l',m'} dsigma = delta,
// against the unnormalized surface measure (total mass 4*pi).
// m > 0 are cosine harmonics, m < 0 sine harmonics, no Condon-Shortley phase.
// Recurrence-stable up to degree kMaxDegree.
inline constexpr int kMaxDegree = 50;

/// Y_{l,m}(eta) on the sphere.
double eval_scalar_harmonic(const HarmonicIndex& idx, const UnitVector& eta);

/// Solid harmonic r^l Y_{l,m}(x/r), a homogeneous harmonic polynomial;
/// well defined at x = 0.
double eval_solid_harmonic(const HarmonicIndex& idx, const Vec3& x);

/// Cartesian gradient of the solid harmonic (homogeneous of degree l-1).
Vec3 eval_solid_gradient(const HarmonicIndex& idx, const Vec3& x);

/// Spherical (surface) gradient grad_sigma Y_{l,m}(eta); tangent to S.
Vec3 eval_surface_gradient(const HarmonicIndex& idx, const UnitVector& eta);

} // namespace lameball
