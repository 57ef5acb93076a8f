#include "isogeo/lw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <vector>

#include "isogeo/errors.hpp"
#include "isogeo/quadrature.hpp"

namespace isogeo {

namespace {

constexpr double kEdgeShrink = 1e-6; // relative pull-back from singular edges
constexpr double kZeroLo = 1e-6;     // stand-in for the open end at u = 0
constexpr double kSpan = 10.0;       // length cap for unbounded intervals

double branch_sign(LWBranch b) { return b == LWBranch::Plus ? 1.0 : -1.0; }

void require_finite(std::initializer_list<double> xs) {
    for (double x : xs)
        if (!std::isfinite(x)) throw DomainError("parameters must be finite");
}

struct Native {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
};

// Positivity region of C + a u^2 over u > 0.
Native native_domain(double a, double C) {
    Native n;
    if (a > 0.0) {
        if (C < 0.0) n.lo = std::sqrt(-C / a);
    } else {
        if (C <= 0.0)
            throw DomainError(
                "empty domain: C + (m0^2+n0) u^2 < 0 for all u > 0");
        n.hi = std::sqrt(C / -a);
    }
    return n;
}

// g' vanishes at u* = sqrt(C / -n0) on the branch opposing m0's sign;
// keep the wider sub-piece, then pull back from singular/root edges.
Interval finalize_interval(Native n, double m0, double n0, double C,
                           double sigma) {
    if (n0 != 0.0 && sigma * m0 < 0.0) {
        const double q = C / -n0;
        if (q > 0.0) {
            const double root = std::sqrt(q);
            if (root > n.lo && root < n.hi) {
                if (root - n.lo >= n.hi - root)
                    n.hi = root;
                else
                    n.lo = root;
            }
        }
    }
    const double lo = n.lo == 0.0 ? kZeroLo : n.lo * (1.0 + kEdgeShrink);
    const double hi = std::isinf(n.hi) ? lo + kSpan : n.hi * (1.0 - kEdgeShrink);
    if (!(lo < hi)) throw DomainError("admissible interval collapses");
    return Interval{lo, hi};
}

// Antiderivative of sqrt(C + a u^2) for a > 0; the log argument is a sum
// of nonnegative terms for u > 0, so no cancellation.
double sqrt_antiderivative(double a, double C, double u) {
    const double r = std::sqrt(a);
    const double s = std::sqrt(C + a * u * u);
    return 0.5 * u * s + C / (2.0 * r) * std::log(r * u + s);
}

LWCase make_branch_case(CaseTag tag, double m0, double n0, double C,
                        LWBranch branch) {
    require_finite({m0, n0, C});
    if (m0 == 0.0)
        throw OutOfScopeError("m0 = 0 is the constant-curvature family");
    if (C == 0.0)
        throw DomainError(
            "C = 0 reduces to case II or a degenerate linear branch");
    const double a = m0 * m0 + n0;
    const double sigma = branch_sign(branch);
    const Interval iv = finalize_interval(native_domain(a, C), m0, n0, C, sigma);

    auto g1 = [m0, a, C, sigma](double u) {
        return m0 * u + sigma * std::sqrt(C + a * u * u);
    };
    auto g2 = [m0, a, C, sigma](double u) {
        return m0 + sigma * a * u / std::sqrt(C + a * u * u);
    };

    Profile::Fn g;
    if (a > 0.0) {
        g = [m0, a, C, sigma](double u) {
            return 0.5 * m0 * u * u + sigma * sqrt_antiderivative(a, C, u);
        };
    } else {
        // Bounded domain: no elementary log form with real sqrt(a);
        // quadrature of g' anchored at the interval midpoint.
        const double u_ref = 0.5 * (iv.lo + iv.hi);
        const double g_ref = 0.5 * m0 * u_ref * u_ref;
        g = [g1, u_ref, g_ref](double u) {
            return g_ref + adaptive_simpson(g1, u_ref, u);
        };
    }

    LWParams params{m0, n0, C, branch};
    return LWCase{tag, iv, Profile(std::move(g), g1, g2, iv), params};
}

} // namespace

Classification classify(double m0, double n0) {
    if (m0 == 0.0)
        throw OutOfScopeError("m0 = 0 is the constant-curvature family");
    if (n0 == 0.0) return {{CaseTag::I}, ""};
    if (n0 == -m0 * m0)
        return {{CaseTag::II},
                "case III degenerates here (m0^2 + n0 = 0) and is excluded"};
    if (m0 * m0 + n0 > 0.0) return {{CaseTag::III}, ""};
    return {{},
            "no real branch: empty domain for C < 0; C > 0 gives a bounded "
            "domain (III-bounded)"};
}

LWCase lw_case_i(double m0, double C, LWBranch branch) {
    return make_branch_case(CaseTag::I, m0, 0.0, C, branch);
}

LWCase lw_case_ii(double m0, double c3) {
    require_finite({m0, c3});
    if (m0 == 0.0)
        throw OutOfScopeError("m0 = 0 is the constant-curvature family");
    const Interval iv{kZeroLo, kZeroLo + kSpan};
    auto g = [m0, c3](double u) { return 0.5 * m0 * u * u + c3; };
    auto g1 = [m0](double u) { return m0 * u; };
    auto g2 = [m0](double) { return m0; };
    LWParams params{m0, -m0 * m0, 0.0, LWBranch::Plus};
    return LWCase{CaseTag::II, iv, Profile(g, g1, g2, iv), params};
}

LWCase lw_case_iii(double m0, double n0, double C, LWBranch branch) {
    if (n0 == 0.0)
        throw DomainError("n0 = 0 belongs to case I");
    if (n0 == -m0 * m0)
        throw DomainError("n0 = -m0^2 belongs to case II");
    return make_branch_case(CaseTag::III, m0, n0, C, branch);
}

Profile profile_case_i(double m0, double C, LWBranch branch) {
    return lw_case_i(m0, C, branch).profile;
}

Profile profile_case_ii(double m0, double c3) {
    return lw_case_ii(m0, c3).profile;
}

Profile profile_case_iii(double m0, double n0, double C, LWBranch branch) {
    return lw_case_iii(m0, n0, C, branch).profile;
}

double ode_residual(const Profile& p, double m0, double n0, double u) {
    const double g1 = p.g1(u);
    const double g2 = p.g2(u);
    return g2 * (g1 - m0 * u) - m0 * g1 - n0 * u;
}

namespace {

// Integration nodes with exact slope data; evaluation by piecewise cubic
// Hermite on (g, g') for g and on (g', g'') for g' and g''.
struct NodeTable {
    std::vector<double> u, g, p, f;

    std::size_t segment(double x) const {
        auto it = std::upper_bound(u.begin(), u.end(), x);
        std::size_t i = it == u.begin() ? 0 : std::size_t(it - u.begin()) - 1;
        if (i + 2 > u.size()) i = u.size() - 2;
        return i;
    }

    double hermite(const std::vector<double>& y, const std::vector<double>& d,
                   double x, int deriv) const {
        const std::size_t i = segment(x);
        const double h = u[i + 1] - u[i];
        const double t = (x - u[i]) / h;
        const double t2 = t * t;
        switch (deriv) {
            case 0: {
                const double t3 = t2 * t;
                return (2 * t3 - 3 * t2 + 1) * y[i] +
                       (t3 - 2 * t2 + t) * h * d[i] +
                       (-2 * t3 + 3 * t2) * y[i + 1] + (t3 - t2) * h * d[i + 1];
            }
            default:
                return (6 * t2 - 6 * t) * (y[i] - y[i + 1]) / h +
                       (3 * t2 - 4 * t + 1) * d[i] + (3 * t2 - 2 * t) * d[i + 1];
        }
    }
};

} // namespace

IntegrationResult integrate_profile(double m0, double n0, double u0, double g0,
                                    double g0p, double u_end, double step,
                                    double eps_sing) {
    require_finite({m0, n0, u0, g0, g0p, u_end, step});
    if (m0 == 0.0)
        throw OutOfScopeError("m0 = 0 is the constant-curvature family");
    if (!(u0 > 0.0) || !(u_end > 0.0))
        throw DomainError("integration abscissae must be positive");
    if (!(step > 0.0)) throw DomainError("step must be positive");
    if (u_end == u0) throw DomainError("u_end coincides with u0");

    const double gap0 = g0p - m0 * u0;
    // Trip on proximity or on crossing: a fixed step can jump the locus
    // without ever entering the proximity band.
    auto near_locus = [m0, eps_sing, gap0](double u, double p) {
        const double gap = p - m0 * u;
        return std::abs(gap) <= eps_sing * std::max(1.0, std::abs(m0 * u)) ||
               gap * gap0 < 0.0;
    };
    if (std::abs(gap0) <= eps_sing * std::max(1.0, std::abs(m0 * u0)))
        throw SingularBranchError(
            "initial data lie on the singular locus g' = m0 u");

    auto f = [m0, n0](double u, double p) {
        return (m0 * p + n0 * u) / (p - m0 * u);
    };

    const double dir = u_end > u0 ? 1.0 : -1.0;
    const double span = std::abs(u_end - u0);
    const long nsteps = static_cast<long>(std::ceil(span / step - 1e-12));
    if (nsteps > 50'000'000) throw DomainError("step too small for the span");

    auto table = std::make_shared<NodeTable>();
    table->u.push_back(u0);
    table->g.push_back(g0);
    table->p.push_back(g0p);
    table->f.push_back(f(u0, g0p));

    double u = u0, g = g0, p = g0p;
    bool halted = false;
    for (long i = 0; i < nsteps && !halted; ++i) {
        const double u_next =
            i + 1 == nsteps ? u_end : u0 + dir * step * double(i + 1);
        const double h = u_next - u;

        const double k1g = p, k1p = f(u, p);
        const double um = u + 0.5 * h;
        const double p2 = p + 0.5 * h * k1p;
        if (near_locus(um, p2)) { halted = true; break; }
        const double k2g = p2, k2p = f(um, p2);
        const double p3 = p + 0.5 * h * k2p;
        if (near_locus(um, p3)) { halted = true; break; }
        const double k3g = p3, k3p = f(um, p3);
        const double p4 = p + h * k3p;
        if (near_locus(u_next, p4)) { halted = true; break; }
        const double k4g = p4, k4p = f(u_next, p4);

        g += h / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
        p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        u = u_next;
        if (!std::isfinite(g) || !std::isfinite(p))
            throw NonFiniteError("integration overflowed");
        if (near_locus(u, p)) { halted = true; break; }

        table->u.push_back(u);
        table->g.push_back(g);
        table->p.push_back(p);
        table->f.push_back(f(u, p));
    }

    if (table->u.size() < 2)
        throw SingularBranchError(
            "singular locus g' = m0 u hit before the first full step");

    if (dir < 0.0) {
        std::reverse(table->u.begin(), table->u.end());
        std::reverse(table->g.begin(), table->g.end());
        std::reverse(table->p.begin(), table->p.end());
        std::reverse(table->f.begin(), table->f.end());
    }

    const Interval iv{table->u.front(), table->u.back()};
    Profile prof(
        [table](double x) { return table->hermite(table->g, table->p, x, 0); },
        [table](double x) { return table->hermite(table->p, table->f, x, 0); },
        [table](double x) { return table->hermite(table->p, table->f, x, 1); },
        iv, Profile::Provenance::Integrated);
    const double u_stop = dir > 0.0 ? table->u.back() : table->u.front();
    return IntegrationResult{
        std::move(prof),
        halted ? IntegrationStatus::HaltedSingular : IntegrationStatus::Complete,
        u_stop};
}

LWCase hk_ratio_profile(double ratio, double C, LWBranch branch) {
    require_finite({ratio, C});
    if (ratio == 0.0) throw DomainError("ratio must be nonzero");
    return lw_case_i(1.0 / ratio, C, branch);
}

} // namespace isogeo
