#include <cmath>

#include "impl.hpp"

// Reference kernels. Operation order here is the contract: the SIMD
// variants replay it lane-wise, so keep expressions in this exact shape.

namespace isogeo::kernels::detail {

void scalar_lw_gprime(const double* u, double* out, std::size_t n, double m0,
                      double a, double C, double sigma) {
    for (std::size_t i = 0; i < n; ++i) {
        const double r = C + (a * u[i]) * u[i];
        out[i] = m0 * u[i] + sigma * std::sqrt(r);
    }
}

void scalar_lw_gsecond(const double* u, double* out, std::size_t n, double m0,
                       double a, double C, double sigma) {
    const double sa = sigma * a;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = C + (a * u[i]) * u[i];
        out[i] = m0 + (sa * u[i]) / std::sqrt(r);
    }
}

void scalar_rot_curvature_pair(const double* u, const double* g1,
                               const double* g2, double* K, double* H,
                               std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        K[i] = (g1[i] * g2[i]) / u[i];
        H[i] = g1[i] / u[i] + g2[i];
    }
}

void scalar_lw_residual(const double* u, const double* g1, const double* g2,
                        double* out, std::size_t n, double m0, double n0) {
    for (std::size_t i = 0; i < n; ++i) {
        const double t = g2[i] * (g1[i] - m0 * u[i]) - m0 * g1[i];
        out[i] = t - n0 * u[i];
    }
}

void scalar_lw_gap(const double* K, const double* H, double* out,
                   std::size_t n, double m0, double n0) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (K[i] - m0 * H[i]) - n0;
}

void scalar_planar_distance(const double* ax, const double* ay,
                            const double* bx, const double* by, double* out,
                            std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = ax[i] - bx[i];
        const double dy = ay[i] - by[i];
        out[i] = std::sqrt(dx * dx + dy * dy);
    }
}

} // namespace isogeo::kernels::detail
