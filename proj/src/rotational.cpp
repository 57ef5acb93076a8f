#include "isogeo/rotational.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <vector>

#include "isogeo/errors.hpp"

namespace isogeo {

namespace {

std::string bad_u(double u, const Interval& iv) {
    std::ostringstream os;
    os << "profile parameter u=" << u << " outside validity interval ["
       << iv.lo << ", " << iv.hi << "]";
    return os.str();
}

} // namespace

Profile::Profile(Fn g, Fn g1, Fn g2, Interval interval, Provenance tag,
                 int probe_count)
    : g_(std::move(g)),
      g1_(std::move(g1)),
      g2_(std::move(g2)),
      interval_(interval),
      tag_(tag) {
    if (!(interval_.lo > 0.0) || interval_.empty())
        throw DomainError("profile interval must satisfy 0 < lo < hi");
    validate(probe_count);
}

void Profile::validate(int probe_count) const {
    if (probe_count < 2) probe_count = 2;
    const double mid = 0.5 * (interval_.lo + interval_.hi);
    const double rad = 0.5 * (interval_.hi - interval_.lo);
    int sign = 0;
    for (int k = 0; k < probe_count; ++k) {
        const double theta = kPi * k / (probe_count - 1);
        const double u = mid + rad * std::cos(theta);
        const double gv = g_(u);
        const double dv = g1_(u);
        const double sv = g2_(u);
        if (!std::isfinite(gv) || !std::isfinite(dv) || !std::isfinite(sv)) {
            std::ostringstream os;
            os << "profile evaluates non-finite at u=" << u;
            throw NonFiniteError(os.str());
        }
        const int s = dv > 0.0 ? 1 : (dv < 0.0 ? -1 : 0);
        if (s == 0 || (sign != 0 && s != sign)) {
            std::ostringstream os;
            os << "profile slope dg/du vanishes or changes sign near u=" << u;
            throw AdmissibilityError(os.str());
        }
        sign = s;
    }
}

void Profile::check(double u) const {
    if (!interval_.contains(u)) throw DomainError(bad_u(u, interval_));
}

double Profile::g(double u) const {
    check(u);
    return g_(u);
}

double Profile::g1(double u) const {
    check(u);
    return g1_(u);
}

double Profile::g2(double u) const {
    check(u);
    return g2_(u);
}

Profile Profile::restricted(Interval sub) const {
    if (sub.lo < interval_.lo || sub.hi > interval_.hi)
        throw DomainError("restriction exceeds profile interval");
    return Profile(g_, g1_, g2_, sub, tag_);
}

Profile Profile::from_samples(std::span<const double> u,
                              std::span<const double> g) {
    if (u.size() != g.size())
        throw DomainError("sample arrays differ in length");
    if (u.size() < 5)
        throw DomainError("sampled profile needs at least 5 samples");
    for (std::size_t i = 1; i < u.size(); ++i)
        if (!(u[i] > u[i - 1]))
            throw DomainError("sample abscissae must be strictly increasing");
    if (!(u.front() > 0.0))
        throw DomainError("sampled profile requires u > 0");

    // Node derivatives by second-order differences on the nonuniform grid:
    // d = dg/du (central, one-sided at the ends), s = d2g/du2 (parabola
    // through each node triple). g interpolates (g, d) by cubic Hermite;
    // g' and g'' come from the (d, s) Hermite so that correlated stencil
    // errors cancel in the derivative instead of being divided by h.
    struct Data {
        std::vector<double> u, g, d, s;

        std::size_t segment(double x) const {
            auto it = std::upper_bound(u.begin(), u.end(), x);
            std::size_t i = it == u.begin() ? 0 : std::size_t(it - u.begin()) - 1;
            if (i + 2 > u.size()) i = u.size() - 2;
            return i;
        }

        double hermite(const std::vector<double>& y,
                       const std::vector<double>& dy, double x,
                       int deriv) const {
            const std::size_t i = segment(x);
            const double h = u[i + 1] - u[i];
            const double t = (x - u[i]) / h;
            const double t2 = t * t;
            if (deriv == 0) {
                const double t3 = t2 * t;
                return (2 * t3 - 3 * t2 + 1) * y[i] +
                       (t3 - 2 * t2 + t) * h * dy[i] +
                       (-2 * t3 + 3 * t2) * y[i + 1] + (t3 - t2) * h * dy[i + 1];
            }
            return (6 * t2 - 6 * t) * (y[i] - y[i + 1]) / h +
                   (3 * t2 - 4 * t + 1) * dy[i] + (3 * t2 - 2 * t) * dy[i + 1];
        }
    };
    auto data = std::make_shared<Data>();
    data->u.assign(u.begin(), u.end());
    data->g.assign(g.begin(), g.end());

    const std::size_t n = u.size();
    data->d.resize(n);
    data->s.resize(n);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h1 = u[i] - u[i - 1];
        const double h2 = u[i + 1] - u[i];
        data->d[i] = -h2 / (h1 * (h1 + h2)) * g[i - 1] +
                     (h2 - h1) / (h1 * h2) * g[i] +
                     h1 / (h2 * (h1 + h2)) * g[i + 1];
    }
    {
        const double h1 = u[1] - u[0];
        const double h2 = u[2] - u[1];
        data->d[0] = -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * g[0] +
                     (h1 + h2) / (h1 * h2) * g[1] -
                     h1 / (h2 * (h1 + h2)) * g[2];
        const double k1 = u[n - 1] - u[n - 2];
        const double k2 = u[n - 2] - u[n - 3];
        data->d[n - 1] = (2.0 * k1 + k2) / (k1 * (k1 + k2)) * g[n - 1] -
                         (k1 + k2) / (k1 * k2) * g[n - 2] +
                         k1 / (k2 * (k1 + k2)) * g[n - 3];
    }
    auto parabola_s = [&u, &g](std::size_t a, std::size_t b, std::size_t c) {
        return 2.0 * (g[a] / ((u[a] - u[b]) * (u[a] - u[c])) +
                      g[b] / ((u[b] - u[a]) * (u[b] - u[c])) +
                      g[c] / ((u[c] - u[a]) * (u[c] - u[b])));
    };
    for (std::size_t i = 1; i + 1 < n; ++i)
        data->s[i] = parabola_s(i - 1, i, i + 1);
    data->s[0] = parabola_s(0, 1, 2);
    data->s[n - 1] = parabola_s(n - 3, n - 2, n - 1);

    return Profile(
        [data](double x) { return data->hermite(data->g, data->d, x, 0); },
        [data](double x) { return data->hermite(data->d, data->s, x, 0); },
        [data](double x) { return data->hermite(data->d, data->s, x, 1); },
        Interval{u.front(), u.back()}, Provenance::Sampled);
}

RotationalSurface make_rotational(const Profile& p, Orientation orientation,
                                  double v_min, double v_max) {
    const Interval iv = p.interval();
    SurfaceDomain dom{iv.lo, iv.hi, v_min, v_max};
    auto jet = [p, orientation](double u, double v) {
        const double g1 = p.g1(u);
        const double g2 = p.g2(u);
        const double c = std::cos(v), s = std::sin(v);
        Jet2 j;
        if (orientation == Orientation::XZ) {
            j.p = {u * c, u * s, p.g(u)};
            j.pu = {c, s, g1};
            j.pv = {-u * s, u * c, 0.0};
            j.puu = {0.0, 0.0, g2};
            j.puv = {-s, c, 0.0};
            j.pvv = {-u * c, -u * s, 0.0};
        } else {
            j.p = {-u * s, u * c, p.g(u)};
            j.pu = {-s, c, g1};
            j.pv = {-u * c, -u * s, 0.0};
            j.puu = {0.0, 0.0, g2};
            j.puv = {-c, -s, 0.0};
            j.pvv = {u * s, -u * c, 0.0};
        }
        return j;
    };
    return RotationalSurface{p, orientation,
                             ParamSurface(std::move(jet), dom, true)};
}

CurvaturePair rotational_curvatures(const Profile& p, double u) {
    if (!p.interval().contains(u)) throw DomainError(bad_u(u, p.interval()));
    const double g1 = p.g1(u);
    const double g2 = p.g2(u);
    return CurvaturePair{g1 * g2 / u, g1 / u + g2};
}

bool isometry_check(const Profile& p, int samples) {
    const RotationalSurface a = make_rotational(p, Orientation::XZ);
    const RotationalSurface b = make_rotational(p, Orientation::YZ);
    const Interval iv = p.interval();
    const double span = iv.length();
    for (int i = 0; i < samples; ++i) {
        const double u = iv.lo + span * (i + 0.5) / samples;
        const double v = 2.0 * kPi * ((7 * i) % samples + 0.5) / samples;
        const FundamentalForms fa = fundamental_forms(a.chart, u, v);
        const FundamentalForms fb = fundamental_forms(b.chart, u, v);
        if (std::abs(fa.E - fb.E) > 1e-12 || std::abs(fa.F - fb.F) > 1e-12 ||
            std::abs(fa.G - fb.G) > 1e-12)
            return false;
    }
    return true;
}

} // namespace isogeo
