#include "impl.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace isogeo::kernels::detail {

bool avx2_supported() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {
constexpr std::size_t W = 4;
}

void avx2_lw_gprime(const double* u, double* out, std::size_t n, double m0,
                    double a, double C, double sigma) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vC = _mm256_set1_pd(C);
    const __m256d vm0 = _mm256_set1_pd(m0);
    const __m256d vs = _mm256_set1_pd(sigma);
    std::size_t i = 0;
    for (; i + W <= n; i += W) {
        const __m256d vu = _mm256_loadu_pd(u + i);
        const __m256d r =
            _mm256_add_pd(vC, _mm256_mul_pd(_mm256_mul_pd(va, vu), vu));
        const __m256d y = _mm256_add_pd(_mm256_mul_pd(vm0, vu),
                                        _mm256_mul_pd(vs, _mm256_sqrt_pd(r)));
        _mm256_storeu_pd(out + i, y);
    }
    scalar_lw_gprime(u + i, out + i, n - i, m0, a, C, sigma);
}

void avx2_lw_gsecond(const double* u, double* out, std::size_t n, double m0,
                     double a, double C, double sigma) {
    const double sa = sigma * a;
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vC = _mm256_set1_pd(C);
    const __m256d vm0 = _mm256_set1_pd(m0);
    const __m256d vsa = _mm256_set1_pd(sa);
    std::size_t i = 0;
    for (; i + W <= n; i += W) {
        const __m256d vu = _mm256_loadu_pd(u + i);
        const __m256d r =
            _mm256_add_pd(vC, _mm256_mul_pd(_mm256_mul_pd(va, vu), vu));
        const __m256d y = _mm256_add_pd(
            vm0, _mm256_div_pd(_mm256_mul_pd(vsa, vu), _mm256_sqrt_pd(r)));
        _mm256_storeu_pd(out + i, y);
    }
    scalar_lw_gsecond(u + i, out + i, n - i, m0, a, C, sigma);
}

void avx2_rot_curvature_pair(const double* u, const double* g1,
                             const double* g2, double* K, double* H,
                             std::size_t n) {
    std::size_t i = 0;
    for (; i + W <= n; i += W) {
        const __m256d vu = _mm256_loadu_pd(u + i);
        const __m256d v1 = _mm256_loadu_pd(g1 + i);
        const __m256d v2 = _mm256_loadu_pd(g2 + i);
        _mm256_storeu_pd(K + i, _mm256_div_pd(_mm256_mul_pd(v1, v2), vu));
        _mm256_storeu_pd(H + i, _mm256_add_pd(_mm256_div_pd(v1, vu), v2));
    }
    scalar_rot_curvature_pair(u + i, g1 + i, g2 + i, K + i, H + i, n - i);
}

void avx2_lw_residual(const double* u, const double* g1, const double* g2,
                      double* out, std::size_t n, double m0, double n0) {
    const __m256d vm0 = _mm256_set1_pd(m0);
    const __m256d vn0 = _mm256_set1_pd(n0);
    std::size_t i = 0;
    for (; i + W <= n; i += W) {
        const __m256d vu = _mm256_loadu_pd(u + i);
        const __m256d v1 = _mm256_loadu_pd(g1 + i);
        const __m256d v2 = _mm256_loadu_pd(g2 + i);
        const __m256d t = _mm256_sub_pd(
            _mm256_mul_pd(v2, _mm256_sub_pd(v1, _mm256_mul_pd(vm0, vu))),
            _mm256_mul_pd(vm0, v1));
        _mm256_storeu_pd(out + i, _mm256_sub_pd(t, _mm256_mul_pd(vn0, vu)));
    }
    scalar_lw_residual(u + i, g1 + i, g2 + i, out + i, n - i, m0, n0);
}

void avx2_lw_gap(const double* K, const double* H, double* out, std::size_t n,
                 double m0, double n0) {
    const __m256d vm0 = _mm256_set1_pd(m0);
    const __m256d vn0 = _mm256_set1_pd(n0);
    std::size_t i = 0;
    for (; i + W <= n; i += W) {
        const __m256d vK = _mm256_loadu_pd(K + i);
        const __m256d vH = _mm256_loadu_pd(H + i);
        const __m256d y =
            _mm256_sub_pd(_mm256_sub_pd(vK, _mm256_mul_pd(vm0, vH)), vn0);
        _mm256_storeu_pd(out + i, y);
    }
    scalar_lw_gap(K + i, H + i, out + i, n - i, m0, n0);
}

void avx2_planar_distance(const double* ax, const double* ay, const double* bx,
                          const double* by, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + W <= n; i += W) {
        const __m256d dx =
            _mm256_sub_pd(_mm256_loadu_pd(ax + i), _mm256_loadu_pd(bx + i));
        const __m256d dy =
            _mm256_sub_pd(_mm256_loadu_pd(ay + i), _mm256_loadu_pd(by + i));
        const __m256d y = _mm256_sqrt_pd(
            _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
        _mm256_storeu_pd(out + i, y);
    }
    scalar_planar_distance(ax + i, ay + i, bx + i, by + i, out + i, n - i);
}

} // namespace isogeo::kernels::detail

#endif
