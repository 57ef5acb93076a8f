#ifndef ISOGEO_VERIFY_HPP
#define ISOGEO_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "isogeo/lw.hpp"

namespace isogeo {

struct CheckResult {
    std::string name;
    double max_dev = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string detail; // worst parameter point or extra context
};

struct VerifyTols {
    double residual = 1e-8;       // ODE residual, analytic profiles
    double residual_exact = 1e-14; // case II residual in floats
    double residual_fd = 1e-5;    // ODE residual, sampled (FD) profiles
    double identity = 1e-8;       // |K - m0 H - n0|
    double antiderivative = 1e-9; // closed-form g vs quadrature, spread
    double ratio = 1e-9;          // |H/K - ratio|
    double jacobian = 1e-6;       // Weingarten FD jacobian
    double distance = 1e-12;      // i-distance under motions
    double curvature = 1e-5;      // FD-pipeline (K,H) under motions
    double integrator = 1e-6;     // RK4 vs closed form at step 1e-3
};

// Parameter sweep m0 in {+-2, +-1, +-0.5}, C in {+-0.25, +-1, +-4}, both
// branches: case I plus every valid case III combination for
// n0 in {3, -0.5} (the latter exercises the bounded a < 0 family).
std::vector<LWCase> lw_sweep_cases();

// Case II sweep: same m0 set, c3 in {0, 7}.
std::vector<LWCase> lw_sweep_case_ii();

// Degree <= 5 polynomial profiles on [0.5, 2] with sign-definite slope,
// rejection-sampled from coefficients uniform in [-2, 2].
std::vector<Profile> random_sign_definite_polynomials(std::uint64_t seed,
                                                      int count);

std::vector<CheckResult> residual_suite(const VerifyTols& t = {});
std::vector<CheckResult> jacobian_suite(std::uint64_t seed,
                                        const VerifyTols& t = {});
std::vector<CheckResult> invariance_suite(std::uint64_t seed,
                                          const VerifyTols& t = {});
std::vector<CheckResult> integrator_suite(const VerifyTols& t = {});

bool all_pass(const std::vector<CheckResult>& results);

} // namespace isogeo

#endif
