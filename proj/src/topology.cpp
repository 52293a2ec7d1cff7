#include "klein/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace klein {

namespace {

Rational rat(long long n, long long d = 1)
{
    Rational r(static_cast<long>(n), static_cast<long>(d));
    r.canonicalize();
    return r;
}

Rational frac(const Rational& r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    Rational out = r - Rational(q);
    out.canonicalize();
    return out;
}

bool is_integer(const Rational& r)
{
    return r.get_den() == 1;
}

long long den_of(const Rational& r)
{
    return r.get_den().get_si();
}

IntMatrix minus_identity(const IntMatrix& a)
{
    IntMatrix m = a;
    m(0, 0) -= 1;
    m(1, 1) -= 1;
    return m;
}

TorusPoint mat_apply(const IntMatrix& a, const TorusPoint& p)
{
    TorusPoint out{rat(a(0, 0)) * p[0] + rat(a(0, 1)) * p[1], rat(a(1, 0)) * p[0] + rat(a(1, 1)) * p[1]};
    out[0].canonicalize();
    out[1].canonicalize();
    return out;
}

// A^k = I for some k <= 12 (the orders of torsion elements of GL2(Z) are
// 1, 2, 3, 4 and 6).
bool has_finite_order(const IntMatrix& a)
{
    IntMatrix p = a;
    for (int k = 1; k <= 12; ++k) {
        if (p == IntMatrix::identity(2)) return true;
        p = p * a;
    }
    return false;
}

using ElementKey = std::tuple<long long, long long, long long, long long, Rational, Rational>;

ElementKey key_of(const TorusAutomorphism& f)
{
    return {f.a(0, 0), f.a(0, 1), f.a(1, 0), f.a(1, 1), f.t[0], f.t[1]};
}

std::array<long long, 2> normalize_direction(long long x, long long y)
{
    const long long g = std::gcd(x, y);
    x /= g;
    y /= g;
    if (x < 0 || (x == 0 && y < 0)) {
        x = -x;
        y = -y;
    }
    return {x, y};
}

std::string pretty_group(const AbelianGroup& g)
{
    std::vector<std::string> parts;
    if (g.rank == 1) parts.push_back("ℤ");
    else if (g.rank == 2) parts.push_back("ℤ²");
    else if (g.rank > 2) parts.push_back("ℤ^" + std::to_string(g.rank));
    for (long long t : g.torsion) parts.push_back("ℤ/" + std::to_string(t));
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) out += "⊕" + parts[k];
    return out;
}

}  // namespace

TorusPoint reduce_point(const TorusPoint& p)
{
    return {frac(p[0]), frac(p[1])};
}

std::string to_string(const TorusPoint& p)
{
    return "(" + to_string(p[0]) + ", " + to_string(p[1]) + ")";
}

TorusAutomorphism TorusAutomorphism::make(const IntMatrix& a, const TorusPoint& t)
{
    if (a.rows() != 2 || a.cols() != 2) throw PreconditionError("torus automorphism needs a 2x2 matrix");
    const long long d = determinant(a);
    if (d != 1 && d != -1)
        throw PreconditionError("matrix " + a.to_string() + " has determinant " + std::to_string(d) + ", not +-1");
    return {a, reduce_point(t)};
}

long long TorusAutomorphism::det() const
{
    return determinant(a);
}

bool TorusAutomorphism::is_identity() const
{
    return a == IntMatrix::identity(2) && t[0] == 0 && t[1] == 0;
}

TorusPoint TorusAutomorphism::apply(const TorusPoint& p) const
{
    const TorusPoint q = mat_apply(a, p);
    return reduce_point({q[0] + t[0], q[1] + t[1]});
}

std::string TorusAutomorphism::to_string() const
{
    return "A=" + a.to_string() + " t=" + klein::to_string(t);
}

TorusAutomorphism compose(const TorusAutomorphism& f, const TorusAutomorphism& g)
{
    const TorusPoint at = mat_apply(f.a, g.t);
    return {f.a * g.a, reduce_point({at[0] + f.t[0], at[1] + f.t[1]})};
}

TorusAutomorphism inverse(const TorusAutomorphism& f)
{
    // A^-1 = adj(A) / det A with det A = +-1.
    const long long d = f.det();
    IntMatrix inv{{d * f.a(1, 1), -d * f.a(0, 1)}, {-d * f.a(1, 0), d * f.a(0, 0)}};
    const TorusPoint it = mat_apply(inv, f.t);
    return {inv, reduce_point({-it[0], -it[1]})};
}

TorusAutomorphism parse_automorphism(const std::string& matrix, const std::string& translation)
{
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(item);
        return out;
    };
    const auto m = split(matrix);
    const auto t = split(translation);
    if (m.size() != 4) throw PreconditionError("matrix must be four comma-separated integers, got '" + matrix + "'");
    if (t.size() != 2) throw PreconditionError("translation must be two comma-separated rationals, got '" + translation + "'");
    IntMatrix a(2, 2);
    try {
        for (int k = 0; k < 4; ++k) {
            std::size_t used = 0;
            a(k / 2, k % 2) = std::stoll(m[k], &used);
            if (m[k].find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(m[k]);
        }
    } catch (const std::logic_error&) {
        throw PreconditionError("matrix entries must be integers, got '" + matrix + "'");
    }
    TorusPoint tp;
    for (int k = 0; k < 2; ++k) {
        std::string s = t[k];
        s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
        try {
            tp[k] = Rational(s);
        } catch (const std::invalid_argument&) {
            throw PreconditionError("translation entries must be rationals p/q, got '" + translation + "'");
        }
        if (tp[k].get_den() == 0) throw PreconditionError("zero denominator in '" + translation + "'");
        tp[k].canonicalize();
    }
    return TorusAutomorphism::make(a, tp);
}

std::size_t DeckGroup::index_of(const TorusAutomorphism& f) const
{
    const auto it = std::find(elements.begin(), elements.end(), f);
    return static_cast<std::size_t>(it - elements.begin());
}

DeckGroup generate_group(const std::vector<TorusAutomorphism>& gens, int bound)
{
    if (bound < 1) throw PreconditionError("closure bound must be positive");
    for (const auto& g : gens) {
        if (den_of(g.t[0]) > bound || den_of(g.t[1]) > bound)
            throw PreconditionError("translation " + to_string(g.t) + " has denominator above the bound " +
                                    std::to_string(bound));
        if (!has_finite_order(g.a)) throw PreconditionError("group too large or infinite");
    }
    const std::size_t cap = 12 * static_cast<std::size_t>(bound) * static_cast<std::size_t>(bound);
    DeckGroup g;
    g.generators = gens;
    g.elements.push_back(TorusAutomorphism::identity());
    std::map<ElementKey, std::size_t> seen{{key_of(g.elements[0]), 0}};
    // Right multiplication by the generators reaches the whole group; finite
    // order makes inverses redundant.
    for (std::size_t k = 0; k < g.elements.size(); ++k)
        for (const auto& s : gens) {
            TorusAutomorphism p = compose(g.elements[k], s);
            if (seen.emplace(key_of(p), g.elements.size()).second) {
                g.elements.push_back(std::move(p));
                if (g.elements.size() > cap) throw PreconditionError("group too large or infinite");
            }
        }
    return g;
}

bool FixedLocus::contains(const TorusPoint& p) const
{
    switch (kind) {
    case Kind::empty:
        return false;
    case Kind::everything:
        return true;
    case Kind::points: {
        const TorusPoint r = reduce_point(p);
        return std::find(points.begin(), points.end(), r) != points.end();
    }
    case Kind::circles:
        // p - b lies on the circle s * d iff d2 (p-b)_1 - d1 (p-b)_2 is an
        // integer (d primitive).
        for (const auto& b : points) {
            const Rational c = rat(direction[1]) * (p[0] - b[0]) - rat(direction[0]) * (p[1] - b[1]);
            Rational cc = c;
            cc.canonicalize();
            if (is_integer(cc)) return true;
        }
        return false;
    }
    return false;
}

std::string FixedLocus::describe() const
{
    auto join = [](const std::vector<std::string>& items) {
        std::string out;
        for (std::size_t k = 0; k < items.size(); ++k) out += (k ? ", " : "") + items[k];
        return out;
    };
    switch (kind) {
    case Kind::empty:
        return "no fixed points";
    case Kind::everything:
        return "every point is fixed";
    case Kind::points: {
        std::vector<std::string> items;
        for (const auto& p : points) items.push_back(to_string(p));
        return std::to_string(points.size()) + (points.size() == 1 ? " fixed point " : " fixed points ") + "{" +
               join(items) + "}";
    }
    case Kind::circles: {
        const bool horizontal = direction == std::array<long long, 2>{1, 0};
        const bool vertical = direction == std::array<long long, 2>{0, 1};
        std::vector<std::string> items;
        for (const auto& p : points)
            items.push_back(horizontal ? to_string(p[1]) : vertical ? to_string(p[0]) : to_string(p));
        const std::string noun = points.size() == 1 ? "fixed circle" : "fixed circles";
        if (horizontal || vertical) {
            const std::string var = horizontal ? "φ" : "θ";
            if (points.size() == 1) return noun + " at " + var + " = " + items[0];
            return noun + " at " + var + " ∈ {" + join(items) + "}";
        }
        return noun + " through {" + join(items) + "} in direction (" + std::to_string(direction[0]) + ", " +
               std::to_string(direction[1]) + ")";
    }
    }
    return "";
}

FixedLocus fixed_points(const TorusAutomorphism& m)
{
    // (A - I) x = -t mod Z^2. With U (A - I) V = D and x = V y this becomes
    // D y = -U t mod Z^2, since U and V permute Z^2.
    const SmithForm s = smith_normal_form(minus_identity(m.a));
    const TorusPoint ut = mat_apply(s.u, m.t);
    const TorusPoint c{-ut[0], -ut[1]};
    const long long d0 = s.d(0, 0), d1 = s.d(1, 1);

    FixedLocus out;
    if (d0 == 0) {
        // A = I: translation by t.
        out.kind = (m.t[0] == 0 && m.t[1] == 0) ? FixedLocus::Kind::everything : FixedLocus::Kind::empty;
        return out;
    }
    if (d1 == 0) {
        if (!is_integer(c[1])) return out;
        out.kind = FixedLocus::Kind::circles;
        out.direction = normalize_direction(s.v(0, 1), s.v(1, 1));
        for (long long k = 0; k < d0; ++k) {
            Rational y0 = (c[0] + rat(k)) / rat(d0);
            y0.canonicalize();
            TorusPoint b = reduce_point(mat_apply(s.v, {y0, Rational(0)}));
            // Slide the base point to the axis the circle runs along.
            if (out.direction == std::array<long long, 2>{1, 0}) b[0] = 0;
            if (out.direction == std::array<long long, 2>{0, 1}) b[1] = 0;
            out.points.push_back(b);
        }
    } else {
        out.kind = FixedLocus::Kind::points;
        for (long long k0 = 0; k0 < d0; ++k0)
            for (long long k1 = 0; k1 < d1; ++k1) {
                Rational u0 = (c[0] + rat(k0)) / rat(d0), u1 = (c[1] + rat(k1)) / rat(d1);
                u0.canonicalize();
                u1.canonicalize();
                out.points.push_back(reduce_point(mat_apply(s.v, {u0, u1})));
            }
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

std::vector<TorusPoint> grid_fixed_points(const TorusAutomorphism& m, long long grid, Execution exec)
{
    if (grid < 1) throw PreconditionError("grid size must be positive");
    long long gt[2];
    for (int k = 0; k < 2; ++k) {
        if (grid % den_of(m.t[k])) throw PreconditionError("grid must be a multiple of the translation denominators");
        gt[k] = Rational(m.t[k] * rat(grid)).get_num().get_si();
    }
    const IntMatrix b = minus_identity(m.a);
    using Cell = std::pair<long long, long long>;
    const auto cells = collect_chunks<Cell>(
        static_cast<std::size_t>(grid),
        [&](std::size_t i, std::vector<Cell>& out) {
            const long long x = static_cast<long long>(i);
            for (long long y = 0; y < grid; ++y) {
                // G ((A - I) p + t) for p = (x, y) / G.
                const long long r0 = b(0, 0) * x + b(0, 1) * y + gt[0];
                const long long r1 = b(1, 0) * x + b(1, 1) * y + gt[1];
                if (r0 % grid == 0 && r1 % grid == 0) out.emplace_back(x, y);
            }
        },
        exec);
    std::vector<TorusPoint> out;
    out.reserve(cells.size());
    for (const auto& [x, y] : cells) {
        out.push_back({rat(x, grid), rat(y, grid)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long oracle_grid(const TorusAutomorphism& m)
{
    const long long l = std::lcm(den_of(m.t[0]), den_of(m.t[1]));
    const IntMatrix b = minus_identity(m.a);
    const long long det = std::llabs(determinant(b));
    if (det != 0) return l * det;
    // Rank one: A - I = v r^T with r primitive; the circles r.x = const have
    // offsets with denominator dividing l * gcd(v).
    const long long g = std::gcd(std::gcd(b(0, 0), b(0, 1)), std::gcd(b(1, 0), b(1, 1)));
    return l * std::max(g, 1LL);
}

std::string to_string(SurfaceType t)
{
    switch (t) {
    case SurfaceType::torus:
        return "Torus";
    case SurfaceType::klein_bottle:
        return "KleinBottle";
    case SurfaceType::not_free:
        return "NotFreeAction";
    }
    return "?";
}

std::string SurfaceReport::summary() const
{
    if (!free) return "NOT FREE: " + fixed_locus.describe();
    std::ostringstream os;
    os << "free, order " << order << ", χ=" << euler.value_or(0) << ", " << (orientable ? "orientable" : "non-orientable");
    if (h1) os << ", H₁ = " << pretty_group(*h1);
    os << ": " << (classification == SurfaceType::torus ? "TORUS" : "KLEIN BOTTLE");
    return os.str();
}

SurfaceReport classify(const DeckGroup& g)
{
    SurfaceReport r;
    r.order = g.order();
    for (const auto& e : g.elements) {
        r.orientable = r.orientable && e.det() == 1;
        if (!r.free || e.is_identity()) continue;
        FixedLocus locus = fixed_points(e);
        if (!locus.is_empty()) {
            r.free = false;
            r.fixed_element = e;
            r.fixed_locus = std::move(locus);
        }
    }
    if (!r.free) {
        r.classification = SurfaceType::not_free;
        return r;
    }
    // A free quotient of T^2 is covered order-to-one by T^2.
    r.euler = 0;
    r.h1 = h1_of_quotient(g);
    r.classification = r.orientable ? SurfaceType::torus : SurfaceType::klein_bottle;
    return r;
}

AbelianGroup h1_of_quotient(const DeckGroup& g)
{
    for (const auto& e : g.elements)
        if (!e.is_identity() && !fixed_points(e).is_empty())
            throw PreconditionError("H1 of the quotient needs a free action; " + e.to_string() + " has " +
                                    fixed_points(e).describe());
    // Columns: e1, e2, then the lift g_k (translation part in [0,1)^2) of
    // each element k.
    const std::size_t n = g.order();
    std::vector<std::vector<long long>> rows;
    for (const auto& e : g.elements)
        for (int i = 0; i < 2; ++i) {
            // g e_i g^-1 = A e_i, abelianized: (A - I) e_i = 0.
            std::vector<long long> row(2 + n, 0);
            row[0] = e.a(0, i) - (i == 0);
            row[1] = e.a(1, i) - (i == 1);
            rows.push_back(std::move(row));
        }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            // g_k g_l = T_v g_m with v = t_k + A_k t_l - t_m in Z^2.
            const auto& a = g.elements[k];
            const auto& b = g.elements[l];
            const std::size_t m = g.index_of(compose(a, b));
            const TorusPoint at = mat_apply(a.a, b.t);
            std::vector<long long> row(2 + n, 0);
            for (int i = 0; i < 2; ++i) {
                Rational v = a.t[i] + at[i] - g.elements[m].t[i];
                v.canonicalize();
                row[i] = -v.get_num().get_si();
            }
            row[2 + k] += 1;
            row[2 + l] += 1;
            row[2 + m] -= 1;
            rows.push_back(std::move(row));
        }
    IntMatrix rel(rows.size(), 2 + n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < 2 + n; ++c) rel(r, c) = rows[r][c];
    return cokernel_of_relations(rel);
}

std::string to_string(Preset p)
{
    switch (p) {
    case Preset::bc:
        return "bc";
    case Preset::wz:
        return "wz";
    case Preset::untwisted:
        return "untwisted";
    case Preset::j_only:
        return "j-only";
    }
    return "?";
}

Preset parse_preset(const std::string& name)
{
    for (Preset p : {Preset::bc, Preset::wz, Preset::untwisted, Preset::j_only})
        if (to_string(p) == name) return p;
    throw PreconditionError("unknown preset '" + name + "' (expected bc, wz, untwisted, j-only or custom)");
}

DeckGroup preset_group(Preset p)
{
    const IntMatrix swap{{0, 1}, {1, 0}};
    const IntMatrix reflect{{1, 0}, {0, -1}};
    switch (p) {
    case Preset::bc:
        return generate_group({TorusAutomorphism::make(swap, {Rational(1, 4), Rational(1, 4)})}, 4);
    case Preset::wz:
        return generate_group({TorusAutomorphism::make(reflect, {Rational(1, 2), Rational(0)})}, 2);
    case Preset::untwisted:
        return generate_group({TorusAutomorphism::make(reflect, {Rational(0), Rational(0)})}, 1);
    case Preset::j_only:
        return generate_group({TorusAutomorphism::make(IntMatrix::identity(2), {Rational(1, 2), Rational(1, 2)})}, 2);
    }
    throw PreconditionError("unknown preset");
}

TorusAutomorphism random_automorphism(std::mt19937_64& rng)
{
    static const auto matrices = [] {
        std::vector<IntMatrix> all, with_fixed_direction;
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b)
                for (int c = -2; c <= 2; ++c)
                    for (int d = -2; d <= 2; ++d) {
                        const int det = a * d - b * c;
                        if (det != 1 && det != -1) continue;
                        const IntMatrix m{{a, b}, {c, d}};
                        all.push_back(m);
                        if ((a - 1) * (d - 1) - b * c == 0) with_fixed_direction.push_back(m);
                    }
        return std::pair{all, with_fixed_direction};
    }();
    // Half the draws have eigenvalue 1, where fixed circles can occur.
    const auto& pool = std::uniform_int_distribution<int>(0, 1)(rng) ? matrices.first : matrices.second;
    const IntMatrix& a = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    TorusPoint t;
    for (auto& x : t) {
        const int den = std::uniform_int_distribution<int>(1, 8)(rng);
        x = Rational(std::uniform_int_distribution<int>(0, den - 1)(rng), den);
        x.canonicalize();
    }
    return TorusAutomorphism::make(a, t);
}

std::vector<IdentityCheck> verify_topology(std::mt19937_64& rng, int samples)
{
    const AbelianGroup klein_h1{1, {2}};
    const AbelianGroup torus_h1{2, {}};
    std::vector<IdentityCheck> out;

    const SurfaceReport bc = classify(preset_group(Preset::bc));
    const SurfaceReport wz = classify(preset_group(Preset::wz));
    auto is_klein = [&](const SurfaceReport& r, std::size_t order, auto check) {
        check(r.free, "free: " + r.summary());
        check(r.order == order, "order " + std::to_string(r.order));
        check(r.euler == 0, "euler characteristic");
        check(!r.orientable, "orientation");
        check(r.h1 == klein_h1, "H1 = " + (r.h1 ? r.h1->to_string() : std::string("none")));
        check(r.classification == SurfaceType::klein_bottle, to_string(r.classification));
    };
    out.push_back(run_identity_check("topology.bc.klein", "T^2 / <tau_bc, J> is a Klein bottle", [&](auto check) {
        is_klein(bc, 4, check);
        const DeckGroup g = preset_group(Preset::bc);
        const auto tau = g.generators[0];
        const auto j = TorusAutomorphism::make(IntMatrix::identity(2), {Rational(1, 2), Rational(1, 2)});
        check(compose(tau, tau) == j, "tau^2 = J");
    }));
    out.push_back(run_identity_check("topology.wz.klein", "T^2 / <tau_wz> is a Klein bottle",
                                     [&](auto check) { is_klein(wz, 2, check); }));
    out.push_back(run_identity_check("topology.bc-wz.same-report", "the two quotients agree up to group order", [&](auto check) {
        SurfaceReport a = bc, b = wz;
        a.order = b.order = 0;
        check(a.summary() == b.summary(), a.summary() + " vs " + b.summary());
    }));
    out.push_back(run_identity_check("topology.untwisted.not-free", "(theta, -phi) fixes the circles phi = 0, 1/2",
                                     [&](auto check) {
                                         const SurfaceReport r = classify(preset_group(Preset::untwisted));
                                         check(!r.free && r.classification == SurfaceType::not_free, r.summary());
                                         check(r.fixed_locus.kind == FixedLocus::Kind::circles &&
                                                   r.fixed_locus.direction == std::array<long long, 2>{1, 0},
                                               r.fixed_locus.describe());
                                         check(r.fixed_locus.points ==
                                                   std::vector<TorusPoint>{{Rational(0), Rational(0)},
                                                                           {Rational(0), Rational(1, 2)}},
                                               r.fixed_locus.describe());
                                     }));
    out.push_back(run_identity_check("topology.j-only.torus", "T^2 / <J> is a torus", [&](auto check) {
        const SurfaceReport r = classify(preset_group(Preset::j_only));
        check(r.free && r.orientable && r.order == 2, r.summary());
        check(r.h1 == torus_h1 && r.classification == SurfaceType::torus, r.summary());
    }));

    std::vector<TorusAutomorphism> sample;
    for (int k = 0; k < samples; ++k) sample.push_back(random_automorphism(rng));
    out.push_back(run_identity_check("topology.fixed-points.oracle", "Smith normal form fixed loci match a grid search",
                                     [&](auto check) {
                                         for (const auto& m : sample) {
                                             const FixedLocus locus = fixed_points(m);
                                             const long long grid = oracle_grid(m);
                                             const auto brute = grid_fixed_points(m, grid);
                                             bool ok = true;
                                             for (const auto& p : brute) ok = ok && locus.contains(p);
                                             if (locus.kind == FixedLocus::Kind::points)
                                                 ok = ok && brute == locus.points;
                                             else if (locus.kind == FixedLocus::Kind::empty)
                                                 ok = ok && brute.empty();
                                             else {
                                                 // Every grid point on the locus must have been found.
                                                 std::size_t on_locus = 0;
                                                 for (long long x = 0; x < grid; ++x)
                                                     for (long long y = 0; y < grid; ++y)
                                                         on_locus += locus.contains({rat(x, grid), rat(y, grid)});
                                                 ok = ok && on_locus == brute.size();
                                             }
                                             check(ok, m.to_string() + ": " + locus.describe());
                                         }
                                     }));
    out.push_back(run_identity_check("topology.h1.orientability",
                                     "free quotients: H1 = Z^2 iff orientable, Z + Z/2 iff not", [&](auto check) {
                                         std::vector<DeckGroup> groups;
                                         for (Preset p : {Preset::bc, Preset::wz, Preset::j_only})
                                             groups.push_back(preset_group(p));
                                         groups.push_back(generate_group({}, 1));
                                         for (const auto& m : sample) {
                                             try {
                                                 DeckGroup g = generate_group({m}, 8);
                                                 if (g.order() <= 24) groups.push_back(std::move(g));
                                             } catch (const PreconditionError&) {
                                             }
                                         }
                                         for (const auto& g : groups) {
                                             const SurfaceReport r = classify(g);
                                             if (!r.free) continue;
                                             check(r.h1 == (r.orientable ? torus_h1 : klein_h1),
                                                   g.generators.empty() ? "trivial group" : g.generators[0].to_string());
                                         }
                                     }));
    return out;
}

}  // namespace klein
