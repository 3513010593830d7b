#include "lameball/sphharm.hpp"

#include <cmath>

namespace lameball {

namespace {

// Solid harmonics separate as r^l Y_{l,m}(x/r) = N_{l,m} * W_{l,|m|}(z, r^2) * T_m(x,y)
// with T_m = Re or Im of (x+iy)^|m| and W_{l,m}(z, q) = r^{l-m} d^m/du^m P_l(u) at u = z/r,
// a polynomial in z and q = r^2.  Everything below evaluates these polynomials and
// their partials by the three-term Legendre recurrence, so there is no division by r
// and no pole trouble on the z-axis.

struct Sep {
    double w;   // W_{l,m}
    double wz;  // dW/dz
    double wq;  // dW/d(r^2)
};

Sep eval_w(int l, int m, double z, double q) {
    // sectoral seed W_{m,m} = (2m-1)!!
    double wmm = 1.0;
    for (int k = 3; k <= 2 * m - 1; k += 2) wmm *= k;

    Sep prev{wmm, 0.0, 0.0};
    if (l == m) return prev;

    Sep cur{(2 * m + 1) * z * wmm, (2 * m + 1) * wmm, 0.0};
    for (int n = m + 2; n <= l; ++n) {
        const double a = 2 * n - 1, b = n - 1 + m, inv = 1.0 / (n - m);
        Sep next;
        next.w = (a * z * cur.w - b * q * prev.w) * inv;
        next.wz = (a * (cur.w + z * cur.wz) - b * q * prev.wz) * inv;
        next.wq = (a * z * cur.wq - b * (prev.w + q * prev.wq)) * inv;
        prev = cur;
        cur = next;
    }
    return cur;
}

double normalization(int l, int m) {
    // sqrt((2 - delta_{m0}) (2l+1)/(4 pi) (l-m)!/(l+m)!), computed as a product
    // to avoid large factorials.
    double ratio = 1.0;
    for (int k = l - m + 1; k <= l + m; ++k) ratio /= k;
    double n = std::sqrt((2 * l + 1) / (4.0 * M_PI) * ratio);
    return (m == 0) ? n : std::sqrt(2.0) * n;
}

// T_m and T_{m-1} where T is A (cosine, m >= 0) or B (sine, m < 0);
// A_k + i B_k = (x + i y)^k.
struct Trig {
    double t;      // T_m
    double am1;    // A_{m-1}
    double bm1;    // B_{m-1}
    bool cosine;
};

Trig eval_trig(int m_signed, double x, double y) {
    const int m = std::abs(m_signed);
    double a = 1.0, b = 0.0;       // (x+iy)^0
    double am1 = 0.0, bm1 = 0.0;
    for (int k = 1; k <= m; ++k) {
        am1 = a;
        bm1 = b;
        const double an = a * x - b * y;
        b = a * y + b * x;
        a = an;
    }
    Trig tr;
    tr.cosine = (m_signed >= 0);
    tr.t = tr.cosine ? a : b;
    tr.am1 = am1;
    tr.bm1 = bm1;
    return tr;
}

void check_degree(int l) {
    if (l > kMaxDegree)
        throw std::domain_error("spherical harmonic degree exceeds supported maximum (50)");
}

} // namespace

double eval_solid_harmonic(const HarmonicIndex& idx, const Vec3& x) {
    check_degree(idx.degree);
    const int l = idx.degree, m = std::abs(idx.order);
    const double q = x.squaredNorm();
    const Sep s = eval_w(l, m, x.z(), q);
    const Trig tr = eval_trig(idx.order, x.x(), x.y());
    return normalization(l, m) * s.w * tr.t;
}

Vec3 eval_solid_gradient(const HarmonicIndex& idx, const Vec3& x) {
    check_degree(idx.degree);
    const int l = idx.degree, m = std::abs(idx.order);
    if (l == 0) return Vec3::Zero();
    const double q = x.squaredNorm();
    const Sep s = eval_w(l, m, x.z(), q);
    const Trig tr = eval_trig(idx.order, x.x(), x.y());
    const double n = normalization(l, m);

    // d/dx (x+iy)^m = m (x+iy)^{m-1}: cosine part m*A_{m-1}, etc.
    double tx, ty;
    if (tr.cosine) {
        tx = m * tr.am1;
        ty = -m * tr.bm1;
    } else {
        tx = m * tr.bm1;
        ty = m * tr.am1;
    }
    Vec3 g;
    g.x() = n * (2.0 * x.x() * s.wq * tr.t + s.w * tx);
    g.y() = n * (2.0 * x.y() * s.wq * tr.t + s.w * ty);
    g.z() = n * ((s.wz + 2.0 * x.z() * s.wq) * tr.t);
    return g;
}

double eval_scalar_harmonic(const HarmonicIndex& idx, const UnitVector& eta) {
    return eval_solid_harmonic(idx, eta.v);
}

Vec3 eval_surface_gradient(const HarmonicIndex& idx, const UnitVector& eta) {
    // grad Y(x) = r^{l-1} (l Y(x') x' + grad_sigma Y(x')) restricted to r = 1
    const double y = eval_scalar_harmonic(idx, eta);
    return eval_solid_gradient(idx, eta.v) - idx.degree * y * eta.v;
}

} // namespace lameball
