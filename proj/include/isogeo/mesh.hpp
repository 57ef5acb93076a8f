#ifndef ISOGEO_MESH_HPP
#define ISOGEO_MESH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "isogeo/surface.hpp"

namespace isogeo {

// Triangle mesh over a (nu, nv) parameter grid, u-major storage order,
// with per-vertex parameter and curvature attributes.
struct Mesh {
    std::size_t nu = 0, nv = 0;
    std::vector<Point3> vertices;
    std::vector<double> u, v, K, H;
    std::vector<std::array<std::uint32_t, 3>> triangles;

    std::size_t index(std::size_t i, std::size_t j) const { return i * nv + j; }
};

// Uniform grid sampling: u closed over its interval; v half-open when the
// chart is v-periodic (no duplicate seam vertices), closed otherwise.
// Each grid quad splits into two triangles wound counterclockwise as seen
// from +z. AdmissibilityError reports the offending (u, v).
Mesh tessellate(const ParamSurface& s, std::size_t nu, std::size_t nv,
                CurvatureConvention conv = {});

// Wavefront subset: `v x y z` lines in vertex order, then 1-based
// `f i j k` lines; fixed decimal precision; LF newlines.
std::string write_obj(const Mesh& m, int precision = 9);

// Header `u,v,x,y,z,K,H`, one row per vertex in storage order.
std::string write_curvature_csv(const Mesh& m, int precision = 9);

void save_file(const std::string& path, const std::string& bytes);

} // namespace isogeo

#endif
