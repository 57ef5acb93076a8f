#ifndef ISOGEO_ERRORS_HPP
#define ISOGEO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isogeo {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised where the tangent plane is isotropic (singular top view) or the
// induced metric degenerates (EG - F^2 <= 0).
struct AdmissibilityError : Error {
    using Error::Error;
};

// Raised for invalid parameters, empty domains, or out-of-domain evaluation.
struct DomainError : Error {
    using Error::Error;
};

// Raised when a finite-difference stencil would leave the sample grid.
struct StencilError : Error {
    using Error::Error;
};

// Raised when an ODE initial condition sits on the singular locus g' = m0*u.
struct SingularBranchError : Error {
    using Error::Error;
};

// Raised when an integration state overflows or turns NaN.
struct NonFiniteError : Error {
    using Error::Error;
};

// Raised for parameter families the toolkit deliberately does not cover
// (the m0 = 0 constant-curvature family).
struct OutOfScopeError : Error {
    using Error::Error;
};

} // namespace isogeo

#endif
