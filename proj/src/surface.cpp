#include "isogeo/surface.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace isogeo {

namespace {

constexpr double kAdmissibilityThreshold = 1e-10;

Point3 sub(const Point3& a, const Point3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

Point3 add(const Point3& a, const Point3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

Point3 scale(const Point3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }

std::string point_tag(double u, double v) {
    return " at (u,v)=(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

ParamSurface::ParamSurface(JetFn jet, SurfaceDomain domain, bool periodic_v)
    : jet_(std::move(jet)), domain_(domain), periodic_v_(periodic_v) {}

ParamSurface ParamSurface::from_position(PosFn pos, SurfaceDomain domain,
                                         double fd_step, bool periodic_v) {
    if (!(fd_step > 0.0))
        throw DomainError("from_position: fd_step must be positive");
    auto jet = [pos, h = fd_step](double u, double v) {
        Jet2 j;
        const Point3 c = pos(u, v);
        const Point3 up = pos(u + h, v);
        const Point3 um = pos(u - h, v);
        const Point3 vp = pos(u, v + h);
        const Point3 vm = pos(u, v - h);
        const Point3 pp = pos(u + h, v + h);
        const Point3 pm = pos(u + h, v - h);
        const Point3 mp = pos(u - h, v + h);
        const Point3 mm = pos(u - h, v - h);

        j.p = c;
        j.pu = scale(sub(up, um), 1.0 / (2.0 * h));
        j.pv = scale(sub(vp, vm), 1.0 / (2.0 * h));
        j.puu = scale(add(sub(up, scale(c, 2.0)), um), 1.0 / (h * h));
        j.pvv = scale(add(sub(vp, scale(c, 2.0)), vm), 1.0 / (h * h));
        j.puv = scale(sub(add(pp, mm), add(pm, mp)), 1.0 / (4.0 * h * h));
        return j;
    };
    ParamSurface s(std::move(jet), domain, periodic_v);
    s.mode_ = DerivativeMode::FiniteDifference;
    return s;
}

FundamentalForms forms_from_jet(const Jet2& jet) {
    const double det = jet.pu.x * jet.pv.y - jet.pv.x * jet.pu.y;
    if (!(std::abs(det) > kAdmissibilityThreshold))
        throw AdmissibilityError("singular top view: |det d(x,y)/d(u,v)| <= 1e-10");

    FundamentalForms ff;
    ff.E = jet.pu.x * jet.pu.x + jet.pu.y * jet.pu.y;
    ff.F = jet.pu.x * jet.pv.x + jet.pu.y * jet.pv.y;
    ff.G = jet.pv.x * jet.pv.x + jet.pv.y * jet.pv.y;

    // Second-form coefficient: z-component of the second partial after
    // removing its top-view-tangential projection onto (X_u, X_v).
    auto normal_coeff = [&](const Point3& d2) {
        const double alpha = (d2.x * jet.pv.y - d2.y * jet.pv.x) / det;
        const double beta = (d2.y * jet.pu.x - d2.x * jet.pu.y) / det;
        return d2.z - alpha * jet.pu.z - beta * jet.pv.z;
    };
    ff.L = normal_coeff(jet.puu);
    ff.M = normal_coeff(jet.puv);
    ff.N = normal_coeff(jet.pvv);
    return ff;
}

FundamentalForms fundamental_forms(const ParamSurface& s, double u, double v) {
    try {
        return forms_from_jet(s.jet(u, v));
    } catch (const AdmissibilityError& e) {
        throw AdmissibilityError(e.what() + point_tag(u, v));
    }
}

CurvaturePair curvatures(const FundamentalForms& ff, CurvatureConvention conv) {
    const double W = ff.E * ff.G - ff.F * ff.F;
    if (!(W > 0.0))
        throw AdmissibilityError("degenerate induced metric: EG - F^2 <= 0");
    CurvaturePair c;
    c.K = (ff.L * ff.N - ff.M * ff.M) / W;
    c.H = (ff.E * ff.N - 2.0 * ff.F * ff.M + ff.G * ff.L) / W;
    if (conv.mean_mode == MeanMode::Half)
        c.H *= 0.5;
    return c;
}

CurvaturePair curvatures_at(const ParamSurface& s, double u, double v,
                            CurvatureConvention conv) {
    return curvatures(fundamental_forms(s, u, v), conv);
}

double weingarten_jacobian_steps(const ParamSurface& s, double u, double v,
                                 double hu, double hv,
                                 CurvatureConvention conv) {
    if (!(hu > 0.0) || !(hv > 0.0))
        throw DomainError("weingarten_jacobian: step must be positive");
    const CurvaturePair up = curvatures_at(s, u + hu, v, conv);
    const CurvaturePair um = curvatures_at(s, u - hu, v, conv);
    const CurvaturePair vp = curvatures_at(s, u, v + hv, conv);
    const CurvaturePair vm = curvatures_at(s, u, v - hv, conv);
    const double Ku = (up.K - um.K) / (2.0 * hu);
    const double Hu = (up.H - um.H) / (2.0 * hu);
    const double Kv = (vp.K - vm.K) / (2.0 * hv);
    const double Hv = (vp.H - vm.H) / (2.0 * hv);
    return Ku * Hv - Kv * Hu;
}

double weingarten_jacobian(const ParamSurface& s, double u, double v, double h,
                           CurvatureConvention conv) {
    if (h <= 0.0)
        h = 1e-4 * std::max(1.0, std::abs(u));
    return weingarten_jacobian_steps(s, u, v, h, h, conv);
}

CurvatureSample curvature_sample(const ParamSurface& s, double u, double v,
                                 CurvatureConvention conv) {
    const CurvaturePair c = curvatures_at(s, u, v, conv);
    CurvatureSample out;
    out.u = u;
    out.v = v;
    out.K = c.K;
    out.H = c.H;
    out.jac = weingarten_jacobian(s, u, v, 0.0, conv);
    return out;
}

ParamSurface transform_surface(const IsoMotion& m, const ParamSurface& s) {
    const double c = std::cos(m.c2);
    const double sn = std::sin(m.c2);
    // Linear part of the motion; applies to every derivative of the chart.
    auto lin = [c, sn, &m](const Point3& p) {
        return Point3{p.x * c - p.y * sn, p.x * sn + p.y * c,
                      m.c5 * p.x + m.c6 * p.y + p.z};
    };
    auto jet = [base = s, lin, m](double u, double v) {
        const Jet2 j = base.jet(u, v);
        Jet2 out;
        out.p = apply_motion(m, j.p);
        out.pu = lin(j.pu);
        out.pv = lin(j.pv);
        out.puu = lin(j.puu);
        out.puv = lin(j.puv);
        out.pvv = lin(j.pvv);
        return out;
    };
    return ParamSurface(jet, s.domain(), s.periodic_v());
}

ParamSurface graph_surface(std::function<double(double, double)> f,
                           std::function<double(double, double)> fu,
                           std::function<double(double, double)> fv,
                           std::function<double(double, double)> fuu,
                           std::function<double(double, double)> fuv,
                           std::function<double(double, double)> fvv,
                           SurfaceDomain domain) {
    auto jet = [=](double u, double v) {
        Jet2 j;
        j.p = {u, v, f(u, v)};
        j.pu = {1.0, 0.0, fu(u, v)};
        j.pv = {0.0, 1.0, fv(u, v)};
        j.puu = {0.0, 0.0, fuu(u, v)};
        j.puv = {0.0, 0.0, fuv(u, v)};
        j.pvv = {0.0, 0.0, fvv(u, v)};
        return j;
    };
    return ParamSurface(jet, domain);
}

ParamSurface parabolic_sphere_surface(const ParabolicSphere& s,
                                      SurfaceDomain domain) {
    if (s.A == 0.0)
        throw DomainError("parabolic sphere requires A != 0 (A = 0 is a plane)");
    const double A = s.A, B = s.B, C = s.C, D = s.D;
    return graph_surface(
        [=](double u, double v) {
            return 0.5 * A * (u * u + v * v) + B * u + C * v + D;
        },
        [=](double u, double) { return A * u + B; },
        [=](double, double v) { return A * v + C; },
        [=](double, double) { return A; }, [](double, double) { return 0.0; },
        [=](double, double) { return A; }, domain);
}

PointGrid sample_grid(const ParamSurface& s, double u0, double v0,
                      std::size_t nu, std::size_t nv, double hu, double hv) {
    if (nu < 3 || nv < 3)
        throw DomainError("sample_grid: need at least a 3x3 grid");
    if (!(hu > 0.0) || !(hv > 0.0))
        throw DomainError("sample_grid: steps must be positive");
    PointGrid g;
    g.nu = nu;
    g.nv = nv;
    g.u0 = u0;
    g.v0 = v0;
    g.hu = hu;
    g.hv = hv;
    g.pts.reserve(nu * nv);
    for (std::size_t i = 0; i < nu; ++i)
        for (std::size_t j = 0; j < nv; ++j)
            g.pts.push_back(s.position(u0 + double(i) * hu, v0 + double(j) * hv));
    return g;
}

FundamentalForms fd_oracle_forms(const PointGrid& grid, std::size_t i,
                                 std::size_t j) {
    if (i == 0 || j == 0 || i + 1 >= grid.nu || j + 1 >= grid.nv)
        throw StencilError("fd_oracle_forms: node on grid boundary");

    const Point3& c = grid.at(i, j);
    const Point3& up = grid.at(i + 1, j);
    const Point3& um = grid.at(i - 1, j);
    const Point3& vp = grid.at(i, j + 1);
    const Point3& vm = grid.at(i, j - 1);
    const Point3& pp = grid.at(i + 1, j + 1);
    const Point3& pm = grid.at(i + 1, j - 1);
    const Point3& mp = grid.at(i - 1, j + 1);
    const Point3& mm = grid.at(i - 1, j - 1);

    Jet2 jfd;
    jfd.p = c;
    jfd.pu = scale(sub(up, um), 1.0 / (2.0 * grid.hu));
    jfd.pv = scale(sub(vp, vm), 1.0 / (2.0 * grid.hv));
    jfd.puu = scale(add(sub(up, scale(c, 2.0)), um), 1.0 / (grid.hu * grid.hu));
    jfd.pvv = scale(add(sub(vp, scale(c, 2.0)), vm), 1.0 / (grid.hv * grid.hv));
    jfd.puv =
        scale(sub(add(pp, mm), add(pm, mp)), 1.0 / (4.0 * grid.hu * grid.hv));
    return forms_from_jet(jfd);
}

} // namespace isogeo
