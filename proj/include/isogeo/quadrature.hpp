#ifndef ISOGEO_QUADRATURE_HPP
#define ISOGEO_QUADRATURE_HPP

#include <functional>

namespace isogeo {

// Adaptive Simpson integration with Richardson correction. Throws
// NonFiniteError when the integrand produces a non-finite value.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12, int max_depth = 40);

} // namespace isogeo

#endif
