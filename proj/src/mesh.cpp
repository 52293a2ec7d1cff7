#include "klein/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace klein {

namespace {

using Vec = TorusPoint;

Rational rat(long long n, long long d = 1)
{
    Rational r(static_cast<long>(n), static_cast<long>(d));
    r.canonicalize();
    return r;
}

Rational frac(const Rational& r)
{
    return reduce_point({r, Rational(0)})[0];
}

Rational cross(const Vec& a, const Vec& b)
{
    Rational c = a[0] * b[1] - a[1] * b[0];
    c.canonicalize();
    return c;
}

Vec combine(const Rational& x, const Vec& a, const Rational& y, const Vec& b)
{
    Vec out{x * a[0] + y * b[0], x * a[1] + y * b[1]};
    out[0].canonicalize();
    out[1].canonicalize();
    return out;
}

long long lcm_of_dens(const std::vector<Rational>& xs)
{
    long long l = 1;
    for (const auto& x : xs) l = std::lcm(l, x.get_den().get_si());
    return l;
}

// Basis of the lattice generated by Z^2 and the translations in g.
std::pair<Vec, Vec> translation_lattice(const DeckGroup& g)
{
    std::vector<Vec> gens{{rat(1), rat(0)}, {rat(0), rat(1)}};
    for (const auto& e : g.elements)
        if (e.a == IntMatrix::identity(2) && !e.is_identity()) gens.push_back(e.t);
    std::vector<Rational> entries;
    for (const auto& v : gens) entries.insert(entries.end(), v.begin(), v.end());
    const long long den = lcm_of_dens(entries);

    IntMatrix m(2, gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c)
        for (int r = 0; r < 2; ++r) m(r, c) = Rational(gens[c][r] * rat(den)).get_num().get_si();
    // Column span of M = U^-1 diag(d1, d2) Z^2.
    const SmithForm s = smith_normal_form(m);
    const long long du = determinant(s.u);
    const IntMatrix u_inv{{du * s.u(1, 1), -du * s.u(0, 1)}, {-du * s.u(1, 0), du * s.u(0, 0)}};
    const Vec l1{rat(u_inv(0, 0) * s.d(0, 0), den), rat(u_inv(1, 0) * s.d(0, 0), den)};
    const Vec l2{rat(u_inv(0, 1) * s.d(1, 1), den), rat(u_inv(1, 1) * s.d(1, 1), den)};
    return {l1, l2};
}

// Primitive integer vector spanning the kernel of a rank-one 2x2 matrix.
Vec kernel_direction(const IntMatrix& k)
{
    long long x = k(0, 1), y = -k(0, 0);
    if (x == 0 && y == 0) {
        x = k(1, 1);
        y = -k(1, 0);
    }
    const long long g = std::gcd(x, y);
    return {rat(x / g), rat(y / g)};
}

// Generator of the intersection of the lattice (l1, l2) with the line R d.
Vec lattice_on_line(const Vec& l1, const Vec& l2, const Vec& d)
{
    const Rational c1 = cross(l1, d), c2 = cross(l2, d);
    const long long den = lcm_of_dens({c1, c2});
    const long long n1 = Rational(c1 * rat(den)).get_num().get_si();
    const long long n2 = Rational(c2 * rat(den)).get_num().get_si();
    const long long g = std::gcd(n1, n2);
    Vec v = combine(rat(n2 / g), l1, rat(-n1 / g), l2);
    if (v[0] < 0 || (v[0] == 0 && v[1] < 0)) v = combine(rat(-1), v, rat(0), v);
    return v;
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x + 0.0);
    return buf;
}

nlohmann::json exact(const Vec& v)
{
    return nlohmann::json::array({to_string(v[0]), to_string(v[1])});
}

}  // namespace

FundamentalDomain fundamental_domain(const DeckGroup& g)
{
    const SurfaceReport report = classify(g);
    if (!report.free) throw PreconditionError("not a free action: " + report.fixed_locus.describe());

    const auto [l1, l2] = translation_lattice(g);
    FundamentalDomain d;
    d.type = report.classification;
    d.origin = {rat(0), rat(0)};
    if (report.orientable) {
        d.edge_u = l1;
        d.edge_v = l2;
        d.side_map = "translation by " + to_string(l1);
    } else {
        // The quotient of the plane is a glide-reflection group: the lattice is
        // spanned by a on the reflection axis and b on the reversed line, and
        // the glide moves half a step along a.
        const auto glide = std::find_if(g.elements.begin(), g.elements.end(), [](const auto& e) { return e.det() == -1; });
        const IntMatrix& m = glide->a;
        if (!(m * m == IntMatrix::identity(2))) throw std::logic_error("orientation-reversing element is not an involution");
        IntMatrix plus = m, minus = m;
        plus(0, 0) -= 1;
        plus(1, 1) -= 1;
        minus(0, 0) += 1;
        minus(1, 1) += 1;
        const Vec a = lattice_on_line(l1, l2, kernel_direction(plus));
        const Vec b = lattice_on_line(l1, l2, kernel_direction(minus));
        if (abs(cross(a, b)) != abs(cross(l1, l2))) throw std::logic_error("translation lattice is not adapted to the glide");
        const Rational det = cross(a, b);
        const Rational ta = cross(glide->t, b) / det;
        const Rational tb = cross(a, glide->t) / det;
        if (frac(ta) != Rational(1, 2)) throw std::logic_error("glide does not move half a lattice step");
        Rational beta = frac(tb) / 2;
        beta.canonicalize();
        d.origin = combine(beta, b, rat(0), a);
        d.edge_u = combine(Rational(1, 2), a, rat(0), b);
        d.edge_v = b;
        d.u_sides_reversed = true;
        d.side_map = glide->to_string();
    }
    if (abs(cross(d.edge_u, d.edge_v)) * rat(static_cast<long long>(g.order())) != 1)
        throw std::logic_error("fundamental domain has the wrong area");
    return d;
}

Mesh build_mesh(const DeckGroup& g, int resolution, bool immersion)
{
    if (resolution < 1) throw PreconditionError("resolution must be a positive integer");
    const FundamentalDomain d = fundamental_domain(g);
    const std::size_t n = static_cast<std::size_t>(resolution);
    const double two_pi = 2 * std::numbers::pi;

    Mesh mesh;
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= n; ++i) {
            const Rational s = rat(static_cast<long long>(i), resolution);
            const Rational r = rat(static_cast<long long>(j), resolution);
            if (!immersion) {
                const Vec p = combine(s, d.edge_u, r, d.edge_v);
                mesh.vertices.push_back({Rational(p[0] + d.origin[0]).get_d(), Rational(p[1] + d.origin[1]).get_d(), 0.0});
                continue;
            }
            const double u = two_pi * s.get_d(), v = two_pi * r.get_d();
            if (d.type == SurfaceType::klein_bottle) {
                // Figure-eight immersion: (u + 2 pi, v) and (u, -v) coincide,
                // matching the reversed side pairing.
                const double radius = 2 + std::cos(u / 2) * std::sin(v) - std::sin(u / 2) * std::sin(2 * v);
                mesh.vertices.push_back({radius * std::cos(u), radius * std::sin(u),
                                         std::sin(u / 2) * std::sin(v) + std::cos(u / 2) * std::sin(2 * v)});
            } else {
                const double radius = 2 + std::cos(v);
                mesh.vertices.push_back({radius * std::cos(u), radius * std::sin(u), std::sin(v)});
            }
            mesh.colors.push_back({s.get_d(), r.get_d(), 0.5});
        }
    auto vid = [n](std::size_t i, std::size_t j) { return j * (n + 1) + i; };
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            mesh.faces.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
            mesh.faces.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
        }

    // Boundary edges: bottom k, right n+k, top 2n+k, left 3n+k, each from the
    // lower to the higher parameter.
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t k = 0; k < n; ++k) edges.push_back({vid(k, 0), vid(k + 1, 0)});
    for (std::size_t k = 0; k < n; ++k) edges.push_back({vid(n, k), vid(n, k + 1)});
    for (std::size_t k = 0; k < n; ++k) edges.push_back({vid(k, n), vid(k + 1, n)});
    for (std::size_t k = 0; k < n; ++k) edges.push_back({vid(0, k), vid(0, k + 1)});
    nlohmann::json pairs = nlohmann::json::array();
    for (std::size_t k = 0; k < n; ++k) pairs.push_back({{"edge", k}, {"partner", 2 * n + k}, {"reversed", false}});
    for (std::size_t k = 0; k < n; ++k)
        pairs.push_back({{"edge", 3 * n + k},
                         {"partner", n + (d.u_sides_reversed ? n - 1 - k : k)},
                         {"reversed", d.u_sides_reversed}});

    mesh.gluing = {
        {"classification", to_string(d.type)},
        {"group_order", g.order()},
        {"resolution", resolution},
        {"vertices", mesh.vertices.size()},
        {"faces", mesh.faces.size()},
        {"domain", {{"origin", exact(d.origin)}, {"edge_u", exact(d.edge_u)}, {"edge_v", exact(d.edge_v)}}},
        {"boundary_edges", edges},
        {"side_pairs",
         nlohmann::json::array(
             {{{"sides", {"left", "right"}},
               {"orientation", d.u_sides_reversed ? "reversed" : "preserved"},
               {"map", d.side_map}},
              {{"sides", {"bottom", "top"}}, {"orientation", "preserved"}, {"map", "translation by " + to_string(d.edge_v)}}})},
        {"edge_pairs", pairs},
        {"orientation_reversing_pairs", d.u_sides_reversed ? 1 : 0},
    };
    return mesh;
}

std::string obj_text(const Mesh& m)
{
    std::string out = "# fundamental domain, " + m.gluing.value("classification", std::string("?")) + ", " +
                      std::to_string(m.faces.size()) + " triangles\n";
    for (std::size_t k = 0; k < m.vertices.size(); ++k) {
        const auto& v = m.vertices[k];
        out += "v " + fmt(v[0]) + " " + fmt(v[1]) + " " + fmt(v[2]);
        if (!m.colors.empty()) out += " " + fmt(m.colors[k][0]) + " " + fmt(m.colors[k][1]) + " " + fmt(m.colors[k][2]);
        out += "\n";
    }
    for (const auto& f : m.faces)
        out += "f " + std::to_string(f[0] + 1) + " " + std::to_string(f[1] + 1) + " " + std::to_string(f[2] + 1) + "\n";
    return out;
}

MeshFiles export_mesh(const DeckGroup& g, int resolution, const std::string& path, bool immersion)
{
    const Mesh m = build_mesh(g, resolution, immersion);
    std::filesystem::path sidecar(path);
    sidecar.replace_extension(".gluing.json");
    MeshFiles files{path, sidecar.string()};

    std::ofstream geo(files.geometry, std::ios::binary);
    if (!geo) throw std::runtime_error("cannot open " + files.geometry + " for writing");
    geo << obj_text(m);
    std::ofstream glue(files.gluing, std::ios::binary);
    if (!glue) throw std::runtime_error("cannot open " + files.gluing + " for writing");
    glue << m.gluing.dump(2) << "\n";
    if (!geo.flush() || !glue.flush()) throw std::runtime_error("write failed for " + files.geometry);
    return files;
}

}  // namespace klein
