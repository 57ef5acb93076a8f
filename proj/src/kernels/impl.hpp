#ifndef ISOGEO_KERNELS_IMPL_HPP
#define ISOGEO_KERNELS_IMPL_HPP

#include <cstddef>

// Per-backend entry points; each TU is compiled with the matching ISA
// flags and self-guards on architecture macros.

namespace isogeo::kernels::detail {

#define ISOGEO_KERNEL_DECLS(prefix)                                          \
    void prefix##_lw_gprime(const double* u, double* out, std::size_t n,     \
                            double m0, double a, double C, double sigma);    \
    void prefix##_lw_gsecond(const double* u, double* out, std::size_t n,    \
                             double m0, double a, double C, double sigma);   \
    void prefix##_rot_curvature_pair(const double* u, const double* g1,      \
                                     const double* g2, double* K, double* H, \
                                     std::size_t n);                         \
    void prefix##_lw_residual(const double* u, const double* g1,             \
                              const double* g2, double* out, std::size_t n,  \
                              double m0, double n0);                         \
    void prefix##_lw_gap(const double* K, const double* H, double* out,      \
                         std::size_t n, double m0, double n0);               \
    void prefix##_planar_distance(const double* ax, const double* ay,        \
                                  const double* bx, const double* by,        \
                                  double* out, std::size_t n)

ISOGEO_KERNEL_DECLS(scalar);

#if defined(__x86_64__) || defined(_M_X64)
ISOGEO_KERNEL_DECLS(avx2);
bool avx2_supported();
#endif

#if defined(__aarch64__)
ISOGEO_KERNEL_DECLS(neon);
#endif

#undef ISOGEO_KERNEL_DECLS

} // namespace isogeo::kernels::detail

#endif
