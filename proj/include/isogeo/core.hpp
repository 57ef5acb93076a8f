#ifndef ISOGEO_CORE_HPP
#define ISOGEO_CORE_HPP

#include <functional>

#include "isogeo/errors.hpp"

// The ambient space is the simply isotropic 3-space: distances are measured
// in the top view (x, y) only, and z is the isotropic (degenerate) direction.

namespace isogeo {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool empty() const { return !(lo < hi); }
    double length() const { return hi - lo; }
    bool contains(double u) const { return u >= lo && u <= hi; }
};

// i-distance: sqrt((qx-px)^2 + (qy-py)^2). Vanishes along z-parallel lines.
double i_distance(const Point3& p, const Point3& q);

// Isotropic congruence transformation (i-motion), normal form:
//   x' = c1 + x cos c2 - y sin c2
//   y' = c3 + x sin c2 + y cos c2
//   z' = c4 + c5 x + c6 y + z
// c2 is an angle in radians and is not reduced mod 2*pi.
struct IsoMotion {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;
    double c5 = 0.0;
    double c6 = 0.0;

    static IsoMotion identity() { return {}; }
    static IsoMotion rotation(double angle) { return {0.0, angle, 0.0, 0.0, 0.0, 0.0}; }
    static IsoMotion translation(double dx, double dy, double dz) {
        return {dx, 0.0, dy, dz, 0.0, 0.0};
    }
};

Point3 apply_motion(const IsoMotion& m, const Point3& p);

// Composition: apply_motion(compose_motions(m1, m2), p) acts as m2 first,
// then m1.
IsoMotion compose_motions(const IsoMotion& m1, const IsoMotion& m2);

// Closed-form inverse, so that composing with it yields the identity action.
IsoMotion invert_motion(const IsoMotion& m);

// Planar curve z = f(x) in an isotropic plane, with analytic second
// derivative; the i-curvature of such a graph is f''(x).
struct PlanarCurve {
    std::function<double(double)> f;
    std::function<double(double)> f2; // second derivative
    Interval domain;
};

double icircle_curvature(const PlanarCurve& curve, double x0);

// i-sphere of parabolic type: z = (A/2)(x^2 + y^2) + B x + C y + D, A != 0.
// From the Euclidean perspective, a paraboloid of revolution with z-parallel
// axis.
struct ParabolicSphere {
    double A = 1.0;
    double B = 0.0;
    double C = 0.0;
    double D = 0.0;
};

} // namespace isogeo

#endif
