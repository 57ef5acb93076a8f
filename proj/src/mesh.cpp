#include "isogeo/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "isogeo/errors.hpp"

namespace isogeo {

namespace {

double grid_closed(double lo, double hi, std::size_t i, std::size_t n) {
    // Exact endpoints keep shared corners bitwise stable across resolutions.
    if (i == 0) return lo;
    if (i + 1 == n) return hi;
    return lo + double(i) * ((hi - lo) / double(n - 1));
}

double grid_v(double lo, double hi, std::size_t j, std::size_t n,
              bool periodic) {
    if (!periodic) return grid_closed(lo, hi, j, n);
    return lo + double(j) * ((hi - lo) / double(n));
}

void append_number(std::string& out, double x, int precision) {
    if (!std::isfinite(x)) throw NonFiniteError("refusing to write non-finite value");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, x);
    out += buf;
}

} // namespace

Mesh tessellate(const ParamSurface& s, std::size_t nu, std::size_t nv,
                CurvatureConvention conv) {
    if (nu < 2 || nv < 2) throw DomainError("grid needs nu >= 2 and nv >= 2");
    const SurfaceDomain dom = s.domain();
    if (!(dom.u_min < dom.u_max) || !(dom.v_min < dom.v_max))
        throw DomainError("empty domain");

    Mesh m;
    m.nu = nu;
    m.nv = nv;
    m.vertices.reserve(nu * nv);
    m.u.reserve(nu * nv);
    m.v.reserve(nu * nv);
    m.K.reserve(nu * nv);
    m.H.reserve(nu * nv);

    for (std::size_t i = 0; i < nu; ++i) {
        const double uu = grid_closed(dom.u_min, dom.u_max, i, nu);
        for (std::size_t j = 0; j < nv; ++j) {
            const double vv = grid_v(dom.v_min, dom.v_max, j, nv, s.periodic_v());
            Jet2 jet = s.jet(uu, vv);
            CurvaturePair c;
            try {
                c = curvatures(forms_from_jet(jet), conv);
            } catch (const AdmissibilityError& e) {
                std::ostringstream os;
                os << e.what() << " at (u=" << uu << ", v=" << vv << ")";
                throw AdmissibilityError(os.str());
            }
            m.vertices.push_back(jet.p);
            m.u.push_back(uu);
            m.v.push_back(vv);
            m.K.push_back(c.K);
            m.H.push_back(c.H);
        }
    }

    m.triangles.reserve(2 * (nu - 1) * (nv - 1));
    for (std::size_t i = 0; i + 1 < nu; ++i)
        for (std::size_t j = 0; j + 1 < nv; ++j) {
            const auto a = std::uint32_t(m.index(i, j));
            const auto b = std::uint32_t(m.index(i + 1, j));
            const auto c = std::uint32_t(m.index(i + 1, j + 1));
            const auto d = std::uint32_t(m.index(i, j + 1));
            m.triangles.push_back({a, b, c});
            m.triangles.push_back({a, c, d});
        }
    return m;
}

std::string write_obj(const Mesh& m, int precision) {
    std::string out;
    out.reserve(m.vertices.size() * (std::size_t(precision) * 3 + 16) +
                m.triangles.size() * 24);
    for (const Point3& p : m.vertices) {
        out += "v ";
        append_number(out, p.x, precision);
        out += ' ';
        append_number(out, p.y, precision);
        out += ' ';
        append_number(out, p.z, precision);
        out += '\n';
    }
    char buf[64];
    for (const auto& t : m.triangles) {
        std::snprintf(buf, sizeof buf, "f %u %u %u\n", t[0] + 1, t[1] + 1,
                      t[2] + 1);
        out += buf;
    }
    return out;
}

std::string write_curvature_csv(const Mesh& m, int precision) {
    std::string out = "u,v,x,y,z,K,H\n";
    out.reserve(out.size() +
                m.vertices.size() * (std::size_t(precision) * 7 + 24));
    for (std::size_t k = 0; k < m.vertices.size(); ++k) {
        const double row[7] = {m.u[k],          m.v[k],          m.vertices[k].x,
                               m.vertices[k].y, m.vertices[k].z, m.K[k],
                               m.H[k]};
        for (int f = 0; f < 7; ++f) {
            if (f) out += ',';
            append_number(out, row[f], precision);
        }
        out += '\n';
    }
    return out;
}

void save_file(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open for writing: " + path);
    f.write(bytes.data(), std::streamsize(bytes.size()));
    if (!f) throw Error("write failed: " + path);
}

} // namespace isogeo
