#ifndef ISOGEO_LW_HPP
#define ISOGEO_LW_HPP

#include <string>
#include <vector>

#include "isogeo/rotational.hpp"

namespace isogeo {

// Linear Weingarten relation K = m0*H + n0 on rotational charts, reduced
// to the profile ODE  g''(g' - m0 u) - m0 g' = n0 u.  Solutions carry a
// branch sign s in g'(u) = m0 u + s*sqrt(C + (m0^2 + n0) u^2).

enum class LWBranch { Plus, Minus };

struct LWParams {
    double m0 = 0.0;
    double n0 = 0.0;
    double C = 0.0; // integration constant; != 0 for cases I/III
    LWBranch branch = LWBranch::Plus;
};

enum class CaseTag { I, II, III };

struct Classification {
    std::vector<CaseTag> tags;
    std::string diagnostic; // empty when the tag set tells the whole story
};

// Case split driven by (m0, n0) alone:
//   n0 = 0            -> {I}
//   n0 = -m0^2        -> {II}   (case III degenerates, noted in diagnostic)
//   otherwise, a > 0  -> {III}  where a = m0^2 + n0
//   otherwise (a < 0) -> {}     (C < 0 empty; C > 0 bounded, "III-bounded")
// m0 = 0 is the constant-curvature family and is out of scope.
Classification classify(double m0, double n0);

struct LWCase {
    CaseTag tag;
    Interval interval; // admissible u after singular-edge and root clipping
    Profile profile;
    LWParams params;
};

// n0 = 0.  g'(u) = m0 u + s*sqrt(C + m0^2 u^2), closed-form g.
LWCase lw_case_i(double m0, double C, LWBranch branch);

// The singular-locus solution g' = m0 u: an isotropic sphere of parabolic
// type, g(u) = (m0/2) u^2 + c3, with constant (K, H) = (m0^2, 2 m0).
LWCase lw_case_ii(double m0, double c3);

// n0 not in {0, -m0^2}.  Closed-form g for a = m0^2 + n0 > 0; for a < 0
// the domain is bounded and g is evaluated by adaptive quadrature of g'.
LWCase lw_case_iii(double m0, double n0, double C, LWBranch branch);

// Spec'd profile views of the cases above.
Profile profile_case_i(double m0, double C, LWBranch branch);
Profile profile_case_ii(double m0, double c3);
Profile profile_case_iii(double m0, double n0, double C, LWBranch branch);

// g''(u) (g'(u) - m0 u) - m0 g'(u) - n0 u; zero on exact solutions.
double ode_residual(const Profile& p, double m0, double n0, double u);

enum class IntegrationStatus { Complete, HaltedSingular };

struct IntegrationResult {
    Profile profile; // provenance Integrated; interval covers the nodes kept
    IntegrationStatus status;
    double u_stop; // last abscissa reached
};

// Classical fixed-step RK4 on g'' = (m0 g' + n0 u)/(g' - m0 u) from
// (u0, g0, g0p) toward u_end.  Halts with a partial profile when the
// singular locus g' = m0 u is approached within eps_sing (relative).
IntegrationResult integrate_profile(double m0, double n0, double u0,
                                    double g0, double g0p, double u_end,
                                    double step, double eps_sing = 1e-8);

// Surfaces with H/K = ratio (constant): case I with m0 = 1/ratio.
LWCase hk_ratio_profile(double ratio, double C = 1.0,
                        LWBranch branch = LWBranch::Plus);

} // namespace isogeo

#endif
