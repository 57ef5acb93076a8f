#include "isogeo/core.hpp"

#include <cmath>

namespace isogeo {

double i_distance(const Point3& p, const Point3& q) {
    const double dx = q.x - p.x;
    const double dy = q.y - p.y;
    return std::sqrt(dx * dx + dy * dy);
}

Point3 apply_motion(const IsoMotion& m, const Point3& p) {
    const double c = std::cos(m.c2);
    const double s = std::sin(m.c2);
    return {m.c1 + p.x * c - p.y * s,
            m.c3 + p.x * s + p.y * c,
            m.c4 + m.c5 * p.x + m.c6 * p.y + p.z};
}

IsoMotion compose_motions(const IsoMotion& m1, const IsoMotion& m2) {
    const double c = std::cos(m1.c2);
    const double s = std::sin(m1.c2);
    const double cb = std::cos(m2.c2);
    const double sb = std::sin(m2.c2);

    IsoMotion r;
    r.c2 = m1.c2 + m2.c2;
    // top view: rotate m2's translation by m1's angle, then translate.
    r.c1 = m1.c1 + m2.c1 * c - m2.c3 * s;
    r.c3 = m1.c3 + m2.c1 * s + m2.c3 * c;
    // z row: the shear of m1 acts on the already-moved top view.
    r.c4 = m1.c4 + m2.c4 + m1.c5 * m2.c1 + m1.c6 * m2.c3;
    r.c5 = m2.c5 + m1.c5 * cb + m1.c6 * sb;
    r.c6 = m2.c6 - m1.c5 * sb + m1.c6 * cb;
    return r;
}

IsoMotion invert_motion(const IsoMotion& m) {
    const double c = std::cos(m.c2);
    const double s = std::sin(m.c2);
    // rotate the shear coefficients forward: st = R(c2) * (c5, c6)
    const double st1 = m.c5 * c - m.c6 * s;
    const double st2 = m.c5 * s + m.c6 * c;

    IsoMotion r;
    r.c2 = -m.c2;
    r.c1 = -(m.c1 * c + m.c3 * s);
    r.c3 = -(-m.c1 * s + m.c3 * c);
    r.c4 = -m.c4 + st1 * m.c1 + st2 * m.c3;
    r.c5 = -st1;
    r.c6 = -st2;
    return r;
}

double icircle_curvature(const PlanarCurve& curve, double x0) {
    if (!curve.domain.contains(x0))
        throw DomainError("icircle_curvature: x0 outside curve domain");
    return curve.f2(x0);
}

} // namespace isogeo
