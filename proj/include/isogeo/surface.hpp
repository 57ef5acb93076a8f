#ifndef ISOGEO_SURFACE_HPP
#define ISOGEO_SURFACE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "isogeo/core.hpp"
#include "isogeo/errors.hpp"

namespace isogeo {

// Position and first/second partial derivatives of a chart at one point.
struct Jet2 {
    Point3 p;   // X(u,v)
    Point3 pu;  // X_u
    Point3 pv;  // X_v
    Point3 puu; // X_uu
    Point3 puv; // X_uv
    Point3 pvv; // X_vv
};

struct SurfaceDomain {
    double u_min = 0.0;
    double u_max = 1.0;
    double v_min = 0.0;
    double v_max = 1.0;

    bool contains(double u, double v) const {
        return u >= u_min && u <= u_max && v >= v_min && v <= v_max;
    }
};

enum class DerivativeMode { Analytic, FiniteDifference };

// A chart (u,v) -> (x,y,z) over a rectangle. Immutable after construction
// and freely shareable across threads. Charts marked periodic_v are sampled
// half-open in v by the tessellator (no duplicate seam vertices).
class ParamSurface {
public:
    using JetFn = std::function<Jet2(double, double)>;
    using PosFn = std::function<Point3(double, double)>;

    ParamSurface(JetFn jet, SurfaceDomain domain, bool periodic_v = false);

    // Position-only chart; derivatives come from central differences with
    // the given step.
    static ParamSurface from_position(PosFn pos, SurfaceDomain domain,
                                      double fd_step = 1e-3,
                                      bool periodic_v = false);

    Jet2 jet(double u, double v) const { return jet_(u, v); }
    Point3 position(double u, double v) const { return jet_(u, v).p; }

    const SurfaceDomain& domain() const { return domain_; }
    DerivativeMode derivative_mode() const { return mode_; }
    bool periodic_v() const { return periodic_v_; }

private:
    JetFn jet_;
    SurfaceDomain domain_;
    DerivativeMode mode_ = DerivativeMode::Analytic;
    bool periodic_v_ = false;
};

// Coefficients of the two fundamental forms. E, F, G come from the induced
// (top-view) metric; L, M, N from the second derivatives with respect to the
// isotropic normal (0,0,1) after removing the top-view-tangential part.
struct FundamentalForms {
    double E = 0.0, F = 0.0, G = 0.0;
    double L = 0.0, M = 0.0, N = 0.0;
};

// H convention switch. Paper keeps H = (EN - 2FM + GL)/(EG - F^2), which on
// rotational charts gives H = g'/u + g''; Half is the Sachs normalization
// (half of that).
enum class MeanMode { Paper, Half };

struct CurvatureConvention {
    MeanMode mean_mode = MeanMode::Paper;
};

struct CurvaturePair {
    double K = 0.0; // relative (isotropic Gaussian) curvature
    double H = 0.0; // isotropic mean curvature
};

struct CurvatureSample {
    double u = 0.0;
    double v = 0.0;
    double K = 0.0;
    double H = 0.0;
    double jac = 0.0; // det d(K,H)/d(u,v), finite-difference estimate
};

// Top view must be nonsingular at the point: |det d(x,y)/d(u,v)| > 1e-10,
// otherwise AdmissibilityError.
FundamentalForms forms_from_jet(const Jet2& jet);
FundamentalForms fundamental_forms(const ParamSurface& s, double u, double v);

// K = (LN - M^2)/(EG - F^2); H per convention. EG - F^2 <= 0 is an error.
CurvaturePair curvatures(const FundamentalForms& ff,
                         CurvatureConvention conv = {});

CurvaturePair curvatures_at(const ParamSurface& s, double u, double v,
                            CurvatureConvention conv = {});

// Central-difference estimate of det [[K_u, K_v], [H_u, H_v]].
// h <= 0 selects the default step 1e-4 * max(1, |u|).
double weingarten_jacobian(const ParamSurface& s, double u, double v,
                           double h = 0.0, CurvatureConvention conv = {});

// Variant with independent u and v steps (used by the verification suites,
// where a wider v step suppresses roundoff in the v-derivatives of
// v-independent curvature fields).
double weingarten_jacobian_steps(const ParamSurface& s, double u, double v,
                                 double hu, double hv,
                                 CurvatureConvention conv = {});

CurvatureSample curvature_sample(const ParamSurface& s, double u, double v,
                                 CurvatureConvention conv = {});

// The image chart of s under an i-motion; derivatives transform by the
// motion's linear part, so the result stays analytic when s is.
ParamSurface transform_surface(const IsoMotion& m, const ParamSurface& s);

// Graph chart (u,v) -> (u, v, f(u,v)) with analytic partials of f.
ParamSurface graph_surface(std::function<double(double, double)> f,
                           std::function<double(double, double)> fu,
                           std::function<double(double, double)> fv,
                           std::function<double(double, double)> fuu,
                           std::function<double(double, double)> fuv,
                           std::function<double(double, double)> fvv,
                           SurfaceDomain domain);

// Graph chart of an i-sphere of parabolic type. A = 0 is rejected.
ParamSurface parabolic_sphere_surface(const ParabolicSphere& s,
                                      SurfaceDomain domain = {-1.0, 1.0, -1.0,
                                                              1.0});

// --- positional-grid oracle -------------------------------------------------
//
// Fundamental forms recovered purely from position samples on a uniform
// grid, second-order central differences. Independent of the analytic jet
// path; used to cross-check it.

struct PointGrid {
    std::vector<Point3> pts; // row-major, u-major: pts[i * nv + j]
    std::size_t nu = 0;
    std::size_t nv = 0;
    double u0 = 0.0;
    double v0 = 0.0;
    double hu = 0.0;
    double hv = 0.0;

    const Point3& at(std::size_t i, std::size_t j) const {
        return pts[i * nv + j];
    }
};

PointGrid sample_grid(const ParamSurface& s, double u0, double v0,
                      std::size_t nu, std::size_t nv, double hu, double hv);

// Interior nodes only; boundary nodes raise StencilError.
FundamentalForms fd_oracle_forms(const PointGrid& grid, std::size_t i,
                                 std::size_t j);

} // namespace isogeo

#endif
