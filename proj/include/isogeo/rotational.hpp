#ifndef ISOGEO_ROTATIONAL_HPP
#define ISOGEO_ROTATIONAL_HPP

#include <functional>
#include <span>

#include "isogeo/surface.hpp"

namespace isogeo {

// Planar generating curve (u, 0, g(u)) with analytic g' and g'' on a
// validity interval with u_lo > 0. Construction enforces the regularity
// requirement dg/du != 0 by sign-checking g' at Chebyshev-spaced probes;
// a sign change (or a non-finite value) rejects the profile.
class Profile {
public:
    enum class Provenance { ClosedForm, Integrated, Sampled };

    using Fn = std::function<double(double)>;

    Profile(Fn g, Fn g1, Fn g2, Interval interval,
            Provenance tag = Provenance::ClosedForm, int probe_count = 257);

    // Sampled profile: strictly increasing u, at least 5 samples.
    // Derivatives by second-order finite differences on the sample grid;
    // between nodes, piecewise cubic Hermite interpolation.
    static Profile from_samples(std::span<const double> u,
                                std::span<const double> g);

    double g(double u) const;
    double g1(double u) const; // dg/du
    double g2(double u) const; // d2g/du2

    const Interval& interval() const { return interval_; }
    Provenance provenance() const { return tag_; }

    // Copy restricted to a subinterval (same callbacks, narrower domain).
    Profile restricted(Interval sub) const;

private:
    Fn g_;
    Fn g1_;
    Fn g2_;
    Interval interval_;
    Provenance tag_;

    void check(double u) const;
    void validate(int probe_count) const;
};

enum class Orientation {
    XZ, // profile in the xz-plane: (u cos v, u sin v, g(u))
    YZ  // profile in the yz-plane: (-u sin v, u cos v, g(u))
};

struct RotationalSurface {
    Profile profile;
    Orientation orientation;
    ParamSurface chart;
};

// Default full turn in v, sampled half-open by the tessellator.
RotationalSurface make_rotational(const Profile& p,
                                  Orientation orientation = Orientation::XZ,
                                  double v_min = 0.0,
                                  double v_max = 2.0 * kPi);

// Closed-form curvature pair on a rotational chart:
// K = g'(u) g''(u) / u,  H = g'(u)/u + g''(u).
CurvaturePair rotational_curvatures(const Profile& p, double u);

// The two chart orientations induce the same first fundamental form
// (E = 1, F = 0, G = u^2); verified at sampled points within 1e-12.
bool isometry_check(const Profile& p, int samples = 100);

} // namespace isogeo

#endif
