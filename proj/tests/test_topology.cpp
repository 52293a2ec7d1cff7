#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "klein/mesh.hpp"
#include "klein/smith.hpp"
#include "klein/topology.hpp"

using namespace klein;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols)
{
    std::uniform_int_distribution<long long> entry(-6, 6);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
    return m;
}

bool is_unimodular(const IntMatrix& m)
{
    const long long d = determinant(m);
    return d == 1 || d == -1;
}

TorusAutomorphism aff(IntMatrix a, Rational t0, Rational t1)
{
    t0.canonicalize();
    t1.canonicalize();
    return TorusAutomorphism::make(a, {t0, t1});
}

// Number of fixed points on the torus counted on an explicit grid, written
// without the library's grid search.
std::size_t count_on_grid(const TorusAutomorphism& f, long long g)
{
    std::size_t n = 0;
    for (long long i = 0; i < g; ++i)
        for (long long j = 0; j < g; ++j) {
            TorusPoint q{Rational(static_cast<long>(i), static_cast<long>(g)), Rational(static_cast<long>(j), static_cast<long>(g))};
            q[0].canonicalize();
            q[1].canonicalize();
            n += f.apply(q) == reduce_point(q);
        }
    return n;
}

}  // namespace

TEST_SUITE("topology")
{
    TEST_CASE("Smith normal form of small matrices")
    {
        const auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
        CHECK(s.diagonal() == std::vector<long long>{1, 6});
        CHECK(smith_normal_form(IntMatrix{{-2, 4}}).diagonal() == std::vector<long long>{2});
        CHECK(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}).rank() == 0);
        CHECK(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).diagonal() ==
              std::vector<long long>{2, 6, 12});
    }

    TEST_CASE("U M V = D on random matrices")
    {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
            const IntMatrix m = random_matrix(rng, rows, cols);
            const auto s = smith_normal_form(m);
            CHECK(s.u * m * s.v == s.d);
            CHECK(is_unimodular(s.u));
            CHECK(is_unimodular(s.v));
            const auto d = s.diagonal();
            for (std::size_t k = 0; k < d.size(); ++k) {
                CHECK(d[k] >= 0);
                if (k + 1 < d.size() && d[k] != 0) CHECK(d[k + 1] % d[k] == 0);
                if (d[k] == 0 && k + 1 < d.size()) CHECK(d[k + 1] == 0);
            }
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c)
                    if (r != c) CHECK(s.d(r, c) == 0);
            if (rows == cols) {
                long long prod = 1;
                for (long long x : d) prod *= x;
                CHECK(prod == std::abs(determinant(m)));
            }
        }
    }

    TEST_CASE("overflow is reported")
    {
        const long long big = 1LL << 62;
        CHECK_THROWS_AS(IntMatrix({{big, big}}) * IntMatrix({{2}, {2}}), std::overflow_error);
    }

    TEST_CASE("cokernels")
    {
        CHECK(cokernel_of_relations(IntMatrix{{2, 0}, {0, 0}}).to_string() == "Z+Z/2");
        CHECK(cokernel_of_relations(IntMatrix{{1, 0}, {0, 1}}).to_string() == "0");
        CHECK(cokernel_of_relations(IntMatrix{{2, 0}, {0, 3}}) == AbelianGroup{0, {6}});
        CHECK(cokernel_of_relations(IntMatrix(1, 3)) == AbelianGroup{3, {}});
    }

    TEST_CASE("automorphisms")
    {
        const auto f = parse_automorphism("0,1,1,0", "1/4,1/4");
        CHECK(f.det() == -1);
        CHECK(compose(f, f) == parse_automorphism("1,0,0,1", "1/2,1/2"));
        CHECK(compose(f, inverse(f)).is_identity());
        CHECK_THROWS_AS(parse_automorphism("2,0,0,1", "0,0"), PreconditionError);
        CHECK_THROWS_AS(parse_automorphism("1,0,0", "0,0"), PreconditionError);
        CHECK_THROWS_AS(parse_automorphism("1,0,0,1", "1/0,0"), PreconditionError);
    }

    TEST_CASE("group generation")
    {
        CHECK(preset_group(Preset::bc).order() == 4);
        CHECK(preset_group(Preset::wz).order() == 2);
        CHECK(preset_group(Preset::j_only).order() == 2);
        const auto rot = aff(IntMatrix{{0, -1}, {1, 0}}, 0, 0);
        CHECK(generate_group({rot}, 1).order() == 4);
        const auto hex = aff(IntMatrix{{0, -1}, {1, 1}}, 0, 0);
        CHECK(generate_group({hex}, 1).order() == 6);
        CHECK_THROWS_AS(generate_group({aff(IntMatrix{{2, 1}, {1, 1}}, 0, 0)}, 2), PreconditionError);
        CHECK_THROWS_AS(generate_group({aff(IntMatrix::identity(2), Rational(1, 5), 0)}, 4), PreconditionError);
        const auto g = generate_group({rot}, 1);
        CHECK(g.elements.front().is_identity());
        for (const auto& a : g.elements)
            for (const auto& b : g.elements) CHECK(g.index_of(compose(a, b)) < g.order());
    }

    TEST_CASE("fixed loci")
    {
        const auto none = fixed_points(aff(IntMatrix{{1, 0}, {0, -1}}, Rational(1, 2), 0));
        CHECK(none.kind == FixedLocus::Kind::empty);
        CHECK(none.describe() == "no fixed points");
        const auto circles = fixed_points(aff(IntMatrix{{1, 0}, {0, -1}}, 0, 0));
        CHECK(circles.kind == FixedLocus::Kind::circles);
        CHECK(circles.points.size() == 2);
        const auto pts = fixed_points(aff(IntMatrix{{-1, 0}, {0, -1}}, 0, 0));
        CHECK(pts.kind == FixedLocus::Kind::points);
        CHECK(pts.points.size() == 4);
        CHECK(fixed_points(TorusAutomorphism::identity()).kind == FixedLocus::Kind::everything);
    }

    TEST_CASE("isolated fixed points: count is |det(A - I)|")
    {
        std::mt19937_64 rng(42);
        int tested = 0;
        for (int trial = 0; trial < 300 && tested < 40; ++trial) {
            const auto f = random_automorphism(rng);
            const IntMatrix& a = f.a;
            const long long d = (a(0, 0) - 1) * (a(1, 1) - 1) - a(0, 1) * a(1, 0);
            if (d == 0) continue;
            ++tested;
            const auto locus = fixed_points(f);
            CHECK(locus.points.size() == static_cast<std::size_t>(std::abs(d)));
            CHECK(count_on_grid(f, oracle_grid(f)) == locus.points.size());
            for (const auto& p : locus.points) CHECK(f.apply(p) == reduce_point(p));
        }
        CHECK(tested == 40);
    }

    TEST_CASE("grid search is identical on both paths")
    {
        std::mt19937_64 rng(43);
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = random_automorphism(rng);
            const long long g = oracle_grid(f);
            CHECK(grid_fixed_points(f, g, Execution::serial) == grid_fixed_points(f, g, Execution::parallel));
        }
    }

    TEST_CASE("preset classifications")
    {
        const auto bc = classify(preset_group(Preset::bc));
        CHECK(bc.free);
        CHECK(bc.order == 4);
        CHECK(bc.euler == 0);
        CHECK_FALSE(bc.orientable);
        CHECK(bc.h1 == AbelianGroup{1, {2}});
        CHECK(bc.classification == SurfaceType::klein_bottle);
        CHECK(bc.summary() == "free, order 4, χ=0, non-orientable, H₁ = ℤ⊕ℤ/2: KLEIN BOTTLE");

        const auto wz = classify(preset_group(Preset::wz));
        CHECK(wz.classification == SurfaceType::klein_bottle);
        CHECK(wz.order == 2);

        const auto un = classify(preset_group(Preset::untwisted));
        CHECK_FALSE(un.free);
        CHECK(un.classification == SurfaceType::not_free);
        CHECK(un.fixed_locus.describe() == "fixed circles at φ ∈ {0, 1/2}");
        CHECK_THROWS_AS(h1_of_quotient(preset_group(Preset::untwisted)), PreconditionError);

        const auto j = classify(preset_group(Preset::j_only));
        CHECK(j.classification == SurfaceType::torus);
        CHECK(j.h1 == AbelianGroup{2, {}});
    }

    TEST_CASE("presets by name")
    {
        CHECK(parse_preset("j-only") == Preset::j_only);
        CHECK(to_string(Preset::bc) == "bc");
        CHECK_THROWS_AS(parse_preset("thm"), PreconditionError);
    }

    TEST_CASE("the identity battery passes")
    {
        std::mt19937_64 rng(44);
        for (const auto& c : verify_topology(rng, 50)) {
            INFO(c.id << ": " << c.witness);
            CHECK(c.pass);
        }
    }
}

TEST_SUITE("mesh")
{
    TEST_CASE("domain sizes")
    {
        for (Preset p : {Preset::bc, Preset::wz, Preset::j_only}) {
            const auto g = preset_group(p);
            const auto d = fundamental_domain(g);
            Rational area = d.edge_u[0] * d.edge_v[1] - d.edge_u[1] * d.edge_v[0];
            area.canonicalize();
            CHECK(abs(area) * static_cast<long>(g.order()) == 1);
        }
        const auto wz = fundamental_domain(preset_group(Preset::wz));
        CHECK(wz.type == SurfaceType::klein_bottle);
        CHECK(wz.u_sides_reversed);
        CHECK(to_string(wz.edge_u) == "(1/2, 0)");
        CHECK_THROWS_AS(fundamental_domain(preset_group(Preset::untwisted)), PreconditionError);
    }

    TEST_CASE("mesh counts and gluing")
    {
        const auto m = build_mesh(preset_group(Preset::wz), 32);
        CHECK(m.faces.size() == 2048);
        CHECK(m.vertices.size() == 33u * 33u);
        CHECK(m.gluing["orientation_reversing_pairs"] == 1);
        CHECK(m.gluing["classification"] == "KleinBottle");
        CHECK(m.gluing["edge_pairs"].size() == 64);
        CHECK(m.gluing["boundary_edges"].size() == 128);

        const auto t = build_mesh(generate_group({}, 1), 4);
        CHECK(t.gluing["classification"] == "Torus");
        CHECK(t.gluing["orientation_reversing_pairs"] == 0);

        const auto one = build_mesh(preset_group(Preset::j_only), 1, true);
        CHECK(one.faces.size() == 2);
        CHECK(one.colors.size() == 4);
        CHECK_THROWS_AS(build_mesh(preset_group(Preset::wz), 0), PreconditionError);
    }

    TEST_CASE("reversed edge pairs glue matching vertices")
    {
        const int n = 6;
        const auto g = preset_group(Preset::wz);
        const auto m = build_mesh(g, n);
        const auto d = fundamental_domain(g);
        for (const auto& pair : m.gluing["edge_pairs"]) {
            const auto e = m.gluing["boundary_edges"][pair["edge"].get<std::size_t>()];
            const auto f = m.gluing["boundary_edges"][pair["partner"].get<std::size_t>()];
            // Planar vertices: map the edge's start by the side map and compare
            // with the matching end of the partner, modulo Z^2.
            const std::size_t a = e[0].get<std::size_t>();
            const std::size_t b = pair["reversed"].get<bool>() ? f[1].get<std::size_t>() : f[0].get<std::size_t>();
            const auto& va = m.vertices[a];
            const auto& vb = m.vertices[b];
            if (pair["edge"].get<std::size_t>() < static_cast<std::size_t>(n)) {
                CHECK(vb[0] - va[0] == doctest::Approx(d.edge_v[0].get_d()));
                CHECK(vb[1] - va[1] == doctest::Approx(d.edge_v[1].get_d()));
            } else {
                const auto& glide = g.elements[1];
                const double x = glide.a(0, 0) * va[0] + glide.a(0, 1) * va[1] + glide.t[0].get_d();
                const double y = glide.a(1, 0) * va[0] + glide.a(1, 1) * va[1] + glide.t[1].get_d();
                const double dx = x - vb[0], dy = y - vb[1];
                CHECK(std::abs(dx - std::round(dx)) < 1e-12);
                CHECK(std::abs(dy - std::round(dy)) < 1e-12);
            }
        }
    }

    TEST_CASE("export writes both files")
    {
        const auto dir = std::filesystem::temp_directory_path() / "klein_mesh_test";
        std::filesystem::create_directories(dir);
        const auto files = export_mesh(preset_group(Preset::bc), 3, (dir / "k.obj").string());
        CHECK(files.gluing == (dir / "k.gluing.json").string());
        std::ifstream obj(files.geometry);
        std::stringstream text;
        text << obj.rdbuf();
        std::size_t faces = 0, vertices = 0;
        std::string line;
        while (std::getline(text, line)) {
            faces += line.rfind("f ", 0) == 0;
            vertices += line.rfind("v ", 0) == 0;
        }
        CHECK(faces == 18);
        CHECK(vertices == 16);
        CHECK(std::filesystem::exists(files.gluing));
        CHECK_THROWS_AS(export_mesh(preset_group(Preset::bc), 3, "/nonexistent/dir/k.obj"), std::runtime_error);
        std::filesystem::remove_all(dir);
    }
}
