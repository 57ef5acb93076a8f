#include "impl.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace isogeo::kernels::detail {

namespace {
constexpr std::size_t W = 2;
}

void neon_lw_gprime(const double* u, double* out, std::size_t n, double m0,
                    double a, double C, double sigma) {
    const float64x2_t va = vdupq_n_f64(a);
    const float64x2_t vC = vdupq_n_f64(C);
    const float64x2_t vm0 = vdupq_n_f64(m0);
    const float64x2_t vs = vdupq_n_f64(sigma);
    std::size_t i = 0;
    for (; i + W <= n; i += W) {
        const float64x2_t vu = vld1q_f64(u + i);
        const float64x2_t r = vaddq_f64(vC, vmulq_f64(vmulq_f64(va, vu), vu));
        const float64x2_t y =
            vaddq_f64(vmulq_f64(vm0, vu), vmulq_f64(vs, vsqrtq_f64(r)));
        vst1q_f64(out + i, y);
    }
    scalar_lw_gprime(u + i, out + i, n - i, m0, a, C, sigma);
}

void neon_lw_gsecond(const double* u, double* out, std::size_t n, double m0,
                     double a, double C, double sigma) {
    const double sa = sigma * a;
    const float64x2_t va = vdupq_n_f64(a);
    const float64x2_t vC = vdupq_n_f64(C);
    const float64x2_t vm0 = vdupq_n_f64(m0);
    const float64x2_t vsa = vdupq_n_f64(sa);
    std::size_t i = 0;
    for (; i + W <= n; i += W) {
        const float64x2_t vu = vld1q_f64(u + i);
        const float64x2_t r = vaddq_f64(vC, vmulq_f64(vmulq_f64(va, vu), vu));
        const float64x2_t y =
            vaddq_f64(vm0, vdivq_f64(vmulq_f64(vsa, vu), vsqrtq_f64(r)));
        vst1q_f64(out + i, y);
    }
    scalar_lw_gsecond(u + i, out + i, n - i, m0, a, C, sigma);
}

void neon_rot_curvature_pair(const double* u, const double* g1,
                             const double* g2, double* K, double* H,
                             std::size_t n) {
    std::size_t i = 0;
    for (; i + W <= n; i += W) {
        const float64x2_t vu = vld1q_f64(u + i);
        const float64x2_t v1 = vld1q_f64(g1 + i);
        const float64x2_t v2 = vld1q_f64(g2 + i);
        vst1q_f64(K + i, vdivq_f64(vmulq_f64(v1, v2), vu));
        vst1q_f64(H + i, vaddq_f64(vdivq_f64(v1, vu), v2));
    }
    scalar_rot_curvature_pair(u + i, g1 + i, g2 + i, K + i, H + i, n - i);
}

void neon_lw_residual(const double* u, const double* g1, const double* g2,
                      double* out, std::size_t n, double m0, double n0) {
    const float64x2_t vm0 = vdupq_n_f64(m0);
    const float64x2_t vn0 = vdupq_n_f64(n0);
    std::size_t i = 0;
    for (; i + W <= n; i += W) {
        const float64x2_t vu = vld1q_f64(u + i);
        const float64x2_t v1 = vld1q_f64(g1 + i);
        const float64x2_t v2 = vld1q_f64(g2 + i);
        const float64x2_t t =
            vsubq_f64(vmulq_f64(v2, vsubq_f64(v1, vmulq_f64(vm0, vu))),
                      vmulq_f64(vm0, v1));
        vst1q_f64(out + i, vsubq_f64(t, vmulq_f64(vn0, vu)));
    }
    scalar_lw_residual(u + i, g1 + i, g2 + i, out + i, n - i, m0, n0);
}

void neon_lw_gap(const double* K, const double* H, double* out, std::size_t n,
                 double m0, double n0) {
    const float64x2_t vm0 = vdupq_n_f64(m0);
    const float64x2_t vn0 = vdupq_n_f64(n0);
    std::size_t i = 0;
    for (; i + W <= n; i += W) {
        const float64x2_t vK = vld1q_f64(K + i);
        const float64x2_t vH = vld1q_f64(H + i);
        vst1q_f64(out + i,
                  vsubq_f64(vsubq_f64(vK, vmulq_f64(vm0, vH)), vn0));
    }
    scalar_lw_gap(K + i, H + i, out + i, n - i, m0, n0);
}

void neon_planar_distance(const double* ax, const double* ay, const double* bx,
                          const double* by, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + W <= n; i += W) {
        const float64x2_t dx = vsubq_f64(vld1q_f64(ax + i), vld1q_f64(bx + i));
        const float64x2_t dy = vsubq_f64(vld1q_f64(ay + i), vld1q_f64(by + i));
        const float64x2_t y =
            vsqrtq_f64(vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy)));
        vst1q_f64(out + i, y);
    }
    scalar_planar_distance(ax + i, ay + i, bx + i, by + i, out + i, n - i);
}

} // namespace isogeo::kernels::detail

#endif
