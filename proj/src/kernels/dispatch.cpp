#include "isogeo/kernels.hpp"

#include <cstdlib>
#include <string>

#include "impl.hpp"
#include "isogeo/errors.hpp"

namespace isogeo::kernels {

namespace {

using namespace detail;

Backend pick_initial() {
    Backend best = Backend::Scalar;
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) best = Backend::Avx2;
#elif defined(__aarch64__)
    best = Backend::Neon;
#endif
    if (const char* env = std::getenv("ISOGEO_KERNELS")) {
        const std::string want(env);
        if (want == "scalar") return Backend::Scalar;
        if (want == "avx2" && backend_available(Backend::Avx2))
            return Backend::Avx2;
        if (want == "neon" && backend_available(Backend::Neon))
            return Backend::Neon;
        // unknown or unavailable request: keep the detected default
    }
    return best;
}

Backend& state() {
    static Backend b = pick_initial();
    return b;
}

} // namespace

Backend active_backend() { return state(); }

bool backend_available(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return avx2_supported();
#else
            return false;
#endif
        case Backend::Neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

void set_backend(Backend b) {
    if (!backend_available(b))
        throw DomainError(std::string("kernel backend unavailable: ") +
                          backend_name(b));
    state() = b;
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

#if defined(__x86_64__) || defined(_M_X64)
#define ISOGEO_DISPATCH(call)                      \
    switch (state()) {                             \
        case Backend::Avx2: avx2_##call; return;   \
        default: scalar_##call; return;            \
    }
#elif defined(__aarch64__)
#define ISOGEO_DISPATCH(call)                      \
    switch (state()) {                             \
        case Backend::Neon: neon_##call; return;   \
        default: scalar_##call; return;            \
    }
#else
#define ISOGEO_DISPATCH(call) scalar_##call; return;
#endif

void lw_gprime(const double* u, double* out, std::size_t n, double m0,
               double a, double C, double sigma) {
    ISOGEO_DISPATCH(lw_gprime(u, out, n, m0, a, C, sigma))
}

void lw_gsecond(const double* u, double* out, std::size_t n, double m0,
                double a, double C, double sigma) {
    ISOGEO_DISPATCH(lw_gsecond(u, out, n, m0, a, C, sigma))
}

void rot_curvature_pair(const double* u, const double* g1, const double* g2,
                        double* K, double* H, std::size_t n) {
    ISOGEO_DISPATCH(rot_curvature_pair(u, g1, g2, K, H, n))
}

void lw_residual(const double* u, const double* g1, const double* g2,
                 double* out, std::size_t n, double m0, double n0) {
    ISOGEO_DISPATCH(lw_residual(u, g1, g2, out, n, m0, n0))
}

void lw_gap(const double* K, const double* H, double* out, std::size_t n,
            double m0, double n0) {
    ISOGEO_DISPATCH(lw_gap(K, H, out, n, m0, n0))
}

void planar_distance(const double* ax, const double* ay, const double* bx,
                     const double* by, double* out, std::size_t n) {
    ISOGEO_DISPATCH(planar_distance(ax, ay, bx, by, out, n))
}

#undef ISOGEO_DISPATCH

} // namespace isogeo::kernels
