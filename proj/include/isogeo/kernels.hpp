#ifndef ISOGEO_KERNELS_HPP
#define ISOGEO_KERNELS_HPP

#include <cstddef>

namespace isogeo::kernels {

// Batched sweep kernels with a scalar reference implementation and SIMD
// variants selected at runtime. All variants perform the same IEEE
// operations in the same order (builds disable FP contraction), so
// results are bitwise identical across backends; unit tests assert this.
// The ISOGEO_KERNELS environment variable (scalar | avx2 | neon) pins the
// initial backend when that backend is available on the host.

enum class Backend { Scalar, Avx2, Neon };

Backend active_backend();
bool backend_available(Backend b);
void set_backend(Backend b); // throws DomainError when unavailable
const char* backend_name(Backend b);

// out[i] = m0*u[i] + sigma*sqrt(C + a*u[i]^2)
void lw_gprime(const double* u, double* out, std::size_t n, double m0,
               double a, double C, double sigma);

// out[i] = m0 + sigma*a*u[i]/sqrt(C + a*u[i]^2)
void lw_gsecond(const double* u, double* out, std::size_t n, double m0,
                double a, double C, double sigma);

// K[i] = g1[i]*g2[i]/u[i],  H[i] = g1[i]/u[i] + g2[i]
void rot_curvature_pair(const double* u, const double* g1, const double* g2,
                        double* K, double* H, std::size_t n);

// out[i] = g2[i]*(g1[i] - m0*u[i]) - m0*g1[i] - n0*u[i]
void lw_residual(const double* u, const double* g1, const double* g2,
                 double* out, std::size_t n, double m0, double n0);

// out[i] = K[i] - m0*H[i] - n0
void lw_gap(const double* K, const double* H, double* out, std::size_t n,
            double m0, double n0);

// out[i] = sqrt((ax[i]-bx[i])^2 + (ay[i]-by[i])^2)
void planar_distance(const double* ax, const double* ay, const double* bx,
                     const double* by, double* out, std::size_t n);

} // namespace isogeo::kernels

#endif
