#include "klein/representations.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace klein {

namespace {

Matrix swap_matrix()
{
    return Matrix{{0, 1}, {1, 0}};
}

void require_nonzero(const Cyclotomic& v, const char* name)
{
    if (v.is_zero()) throw PreconditionError(std::string("parameter ") + name + " must be nonzero");
}

/// Basis of {T : T r1(g) = r2(g) T for g in s, X, Y}, as matrices.
std::vector<Matrix> intertwiner_space(const Representation& r1, const Representation& r2)
{
    const std::size_t d1 = r1.dimension();
    const std::size_t d2 = r2.dimension();
    // T is d2 x d1; unknown t(i,k) sits at column i * d1 + k.
    const std::array<std::pair<const Matrix*, const Matrix*>, 3> gens{
        {{&r1.s, &r2.s}, {&r1.x, &r2.x}, {&r1.y, &r2.y}}};
    Matrix system(3 * d2 * d1, d2 * d1);
    std::size_t row = 0;
    for (const auto& [a, b] : gens) {
        for (std::size_t i = 0; i < d2; ++i)
            for (std::size_t j = 0; j < d1; ++j, ++row) {
                // (T a)(i,j) - (b T)(i,j)
                for (std::size_t k = 0; k < d1; ++k) system(row, i * d1 + k) += (*a)(k, j);
                for (std::size_t k = 0; k < d2; ++k) system(row, k * d1 + j) -= (*b)(i, k);
            }
    }
    std::vector<Matrix> out;
    for (const auto& v : nullspace(system)) {
        Matrix t(d2, d1);
        for (std::size_t i = 0; i < d2; ++i)
            for (std::size_t k = 0; k < d1; ++k) t(i, k) = v[i * d1 + k];
        out.push_back(std::move(t));
    }
    return out;
}

int field_conductor(const Representation& rep)
{
    int n = 4;
    for (const Matrix* m : {&rep.s, &rep.x, &rep.y})
        for (std::size_t r = 0; r < m->rows(); ++r)
            for (std::size_t c = 0; c < m->cols(); ++c) n = std::lcm(n, (*m)(r, c).conductor());
    return n;
}

std::string exponent_pair(const std::pair<int, int>& p)
{
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace

std::string BCharacter::to_string() const
{
    return "(w=" + w.to_string() + ", z=" + z.to_string() + ")";
}

std::string Representation::label() const
{
    switch (family) {
    case Family::twisted_simple: return "M(w=" + params[0].to_string() + ", z=" + params[1].to_string() + ")";
    case Family::untwisted_simple: return "M'(w=" + params[0].to_string() + ", z=" + params[1].to_string() + ")";
    case Family::untwisted_character:
        return "C(w=" + params[0].to_string() + ", delta=" + params[1].to_string() + ", eps=" + params[2].to_string() +
               ")";
    case Family::induced:
        return "Ind(w=" + params[0].to_string() + ", z=" + params[1].to_string() + ", " + to_string(flavor) + ")";
    case Family::custom: return "custom";
    }
    return "?";
}

Representation make_twisted_simple(const Cyclotomic& w, const Cyclotomic& z)
{
    require_nonzero(w, "w");
    require_nonzero(z, "z");
    return {Flavor::twisted, Family::twisted_simple, swap_matrix(), Matrix::diagonal({z, z.inverse()}),
            Matrix::diagonal({w, -w}), {w, z}};
}

Representation make_untwisted_simple(const Cyclotomic& w, const Cyclotomic& z)
{
    require_nonzero(w, "w");
    require_nonzero(z, "z");
    if (z == Cyclotomic(1) || z == Cyclotomic(-1))
        throw PreconditionError("reducible: use character constructor (z = +-1 splits into characters eps = +-1)");
    return {Flavor::untwisted, Family::untwisted_simple, swap_matrix(), Matrix::diagonal({z, z.inverse()}),
            Matrix::diagonal({w, w}), {w, z}};
}

Representation make_untwisted_character(const Cyclotomic& w, int delta, int eps)
{
    require_nonzero(w, "w");
    if ((delta != 1 && delta != -1) || (eps != 1 && eps != -1))
        throw PreconditionError("character signs delta and eps must be +1 or -1");
    return {Flavor::untwisted, Family::untwisted_character, Matrix{{eps}}, Matrix{{delta}}, Matrix{{w}},
            {w, delta, eps}};
}

Matrix image(const Representation& rep, const GroupElement& g)
{
    Matrix out = rep.x.pow(g.m);
    if (g.eps) out = out * rep.s;
    if (g.n) out = out * rep.y.pow(g.n);
    if (structure_cocycle(rep.flavor, {0, g.eps, 0}, {0, 0, g.n}) == Phase::minus_one()) out = -out;
    return out;
}

Matrix evaluate(const Representation& rep, const AlgebraElement& a)
{
    if (a.flavor() != rep.flavor)
        throw PreconditionError("flavor mismatch: " + to_string(rep.flavor) + " module, " + to_string(a.flavor()) +
                                " element");
    Matrix out(rep.dimension(), rep.dimension());
    for (const auto& [g, c] : a.terms()) out += image(rep, g) * c;
    return out;
}

std::vector<RelationCheck> check_relations(const Representation& rep)
{
    const Matrix& s = rep.s;
    const Matrix& x = rep.x;
    const Matrix& y = rep.y;
    const std::size_t d = rep.dimension();
    std::vector<RelationCheck> out;
    auto add = [&](std::string name, std::string relation, const Matrix& residual) {
        out.push_back({std::move(name), std::move(relation), residual.is_zero(), residual.to_string()});
    };
    for (const auto& [name, m] : {std::pair{"s", &s}, {"X", &x}, {"Y", &y}}) {
        const bool ok = m->rows() == d && m->cols() == d && !m->determinant().is_zero();
        out.push_back({std::string("invertible-") + name, std::string("det ") + name + " != 0", ok,
                       ok ? "0" : "singular"});
    }
    if (!out[0].holds || !out[1].holds || !out[2].holds) return out;
    const Matrix xi = x.inverse();
    add("involution", "s^2 - 1", s * s - Matrix::identity(d));
    if (rep.flavor == Flavor::twisted)
        add("anticommute-sY", "sY + Ys", s * y + y * s);
    else
        add("commute-sY", "sY - Ys", s * y - y * s);
    add("dihedral-sX", "sX - X^-1 s", s * x - xi * s);
    add("commute-XY", "XY - YX", x * y - y * x);
    return out;
}

bool relations_hold(const Representation& rep)
{
    const auto checks = check_relations(rep);
    return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& r) { return r.holds; });
}

HomomorphismReport check_homomorphism(const Representation& rep, int window)
{
    const auto elems = window_elements(window);
    std::map<GroupElement, Matrix> cache;
    for (const auto& g : elems) cache.emplace(g, image(rep, g));
    auto rho = [&](const GroupElement& g) {
        auto it = cache.find(g);
        if (it == cache.end()) it = cache.emplace(g, image(rep, g)).first;
        return it->second;
    };
    HomomorphismReport out;
    for (const auto& g : elems)
        for (const auto& h : elems) {
            ++out.pairs_checked;
            Matrix rhs = rho(multiply(g, h));
            if (structure_cocycle(rep.flavor, g, h) == Phase::minus_one()) rhs = -rhs;
            if (!(cache.at(g) * cache.at(h) == rhs)) {
                out.pass = false;
                out.witness = std::array<GroupElement, 2>{g, h};
                return out;
            }
        }
    return out;
}

bool OneDimensionalSolution::admits(const Cyclotomic& s, const Cyclotomic& x, const Cyclotomic& y) const
{
    if (s.is_zero() || x.is_zero() || y.is_zero()) return false;
    const Cyclotomic b = commutator_bicharacter(Cocycle::custom("structure",
                                                                [f = flavor](const GroupElement& g, const GroupElement& h) {
                                                                    return structure_cocycle(f, g, h);
                                                                }),
                                                kGenS, kGenY)
                             .to_scalar();
    return s * s == Cyclotomic(1) && s * x == x.inverse() * s && s * y == b * y * s;
}

OneDimensionalSolution solve_one_dimensional(Flavor f)
{
    OneDimensionalSolution out;
    out.flavor = f;
    const Cocycle mu = Cocycle::custom(
        "structure", [f](const GroupElement& g, const GroupElement& h) { return structure_cocycle(f, g, h); });
    // In a 1-dimensional module N_s N_Y = b N_Y N_s becomes s y = b y s.
    const Phase b = commutator_bicharacter(mu, kGenS, kGenY);

    out.derivation.push_back("s^2 = 1  =>  s in {1, -1}");
    out.derivation.push_back("s x - x^-1 s = s (x - x^-1) = 0 with s != 0  =>  x^2 = 1  =>  x in {1, -1}");
    const Cyclotomic coeff = Cyclotomic(1) - b.to_scalar();
    if (coeff.is_zero()) {
        out.derivation.push_back("s y - y s = 0 holds for every y");
        out.satisfiable = true;
        out.family = "(w, delta, eps): Y -> w != 0, X -> delta in {1, -1}, s -> eps in {1, -1}";
    } else {
        out.witness_equation = coeff.to_string() + "ys = 0";
        out.derivation.push_back("s y - (" + b.to_string() + ") y s = " + out.witness_equation);
        out.derivation.push_back("y != 0  =>  s = 0, contradicting s^2 = 1");
        out.satisfiable = false;
    }
    return out;
}

std::vector<BCharacter> restrict_to_B(const Representation& rep)
{
    const std::size_t d = rep.dimension();
    if (d > 2) throw std::domain_error("restrict_to_B supports dimension at most 2");
    if (rep.x.is_diagonal() && rep.y.is_diagonal()) {
        std::vector<BCharacter> out;
        for (std::size_t k = 0; k < d; ++k) out.push_back({rep.y(k, k), rep.x(k, k)});
        return out;
    }
    // Diagonalize whichever of X, Y is not scalar; the other acts on its eigenlines.
    const bool use_x = !rep.x.is_diagonal() || !(rep.x(0, 0) == rep.x(1, 1));
    const Matrix& m = use_x ? rep.x : rep.y;
    const Matrix& other = use_x ? rep.y : rep.x;
    const Cyclotomic tr = m.trace();
    const Cyclotomic disc = tr * tr - Cyclotomic(4) * m.determinant();
    if (disc.is_zero()) throw std::domain_error("X and Y have no common eigenbasis");
    const auto root = exact_sqrt(disc, field_conductor(rep));
    if (!root) throw std::domain_error("eigenvalues of the B-action do not lie in the coefficient field");

    struct Line {
        std::size_t lead;
        BCharacter chi;
    };
    std::vector<Line> lines;
    for (const Cyclotomic& lambda : {(tr + *root) / Cyclotomic(2), (tr - *root) / Cyclotomic(2)}) {
        const auto basis = nullspace(m - Matrix::identity(2) * lambda);
        if (basis.size() != 1) throw std::domain_error("X and Y have no common eigenbasis");
        const auto& v = basis[0];
        const std::size_t lead = v[0].is_zero() ? 1 : 0;
        const Cyclotomic mu = (other(lead, 0) * v[0] + other(lead, 1) * v[1]) / v[lead];
        for (std::size_t r = 0; r < 2; ++r)
            if (!(other(r, 0) * v[0] + other(r, 1) * v[1] == mu * v[r]))
                throw std::domain_error("X and Y have no common eigenbasis");
        lines.push_back({lead, use_x ? BCharacter{mu, lambda} : BCharacter{lambda, mu}});
    }
    if (lines[1].lead < lines[0].lead) std::swap(lines[0], lines[1]);
    return {lines[0].chi, lines[1].chi};
}

Representation induce_from_character(Flavor f, const BCharacter& chi)
{
    require_nonzero(chi.w, "w");
    require_nonzero(chi.z, "z");
    // Basis e_j = N_{s^j} (x) 1. Any N_g with g = (m, eps, n) factors as
    // N_g = kappa^-1 N_{s^eps} N_b with b = s^eps g in B and
    // kappa = mu(s^eps, b); N_b acts on the character by z^m_b w^n_b.
    const std::array<AlgebraElement, 2> basis{AlgebraElement::unit(f), AlgebraElement::basis(f, kGenS)};
    auto act = [&](const GroupElement& gen) {
        Matrix out(2, 2);
        const AlgebraElement a = AlgebraElement::basis(f, gen);
        for (std::size_t j = 0; j < 2; ++j) {
            const AlgebraElement prod = a * basis[j];
            for (const auto& [g, c] : prod.terms()) {
                const GroupElement se{0, g.eps, 0};
                const GroupElement b = multiply(se, g);
                const Phase kappa = structure_cocycle(f, se, b);
                out(static_cast<std::size_t>(g.eps), j) +=
                    c * kappa.inverse().to_scalar() * chi.z.pow(b.m) * chi.w.pow(b.n);
            }
        }
        return out;
    };
    Representation rep{f, Family::induced, act(kGenS), act(kGenX), act(kGenY), {chi.w, chi.z}};
    return rep;
}

BCharacter partner_character(Flavor f, const BCharacter& chi)
{
    return {f == Flavor::twisted ? -chi.w : chi.w, chi.z.inverse()};
}

std::size_t commutant_dimension(const Representation& rep)
{
    return intertwiner_space(rep, rep).size();
}

std::optional<Matrix> find_intertwiner(const Representation& r1, const Representation& r2)
{
    if (r1.flavor != r2.flavor) throw PreconditionError("find_intertwiner: flavor mismatch");
    if (r1.dimension() != r2.dimension()) throw PreconditionError("find_intertwiner: dimension mismatch");
    const auto space = intertwiner_space(r1, r2);
    if (space.empty()) return std::nullopt;
    std::vector<Matrix> candidates = space;
    Matrix weighted(r1.dimension(), r1.dimension());
    for (std::size_t k = 0; k < space.size(); ++k) weighted += space[k] * Cyclotomic(static_cast<long>(k + 1));
    candidates.push_back(weighted);
    for (const auto& t : candidates)
        if (!t.determinant().is_zero()) return t;
    return std::nullopt;
}

std::size_t CensusReport::simples() const
{
    std::size_t n = 0;
    for (const auto& [d, c] : count_by_dimension) n += static_cast<std::size_t>(c);
    return n;
}

bool CensusReport::pass() const
{
    return sum_of_squares == expected && relations_ok && quotient_ok && commutants_ok && restrictions_ok &&
           non_isomorphic_ok && failures.empty();
}

std::string CensusReport::summary() const
{
    std::ostringstream os;
    bool first = true;
    const bool single = count_by_dimension.size() == 1;
    for (const auto& [d, c] : count_by_dimension) {
        if (!first) os << " + ";
        first = false;
        os << c << (single ? " simples" : "") << " × dim " << d;
    }
    os << ", " << sum_of_squares << " = " << expected << " " << (pass() ? "✓" : "✗");
    return os.str();
}

CensusReport finite_census(int modulus, Flavor f, Execution exec)
{
    if (modulus % 2) throw PreconditionError("cocycle does not descend: census modulus must be even");
    if (modulus < 2 || modulus > 12) throw PreconditionError("census modulus must lie in [2, 12]");
    const int n = modulus;
    const int conductor = std::lcm(n, 4);
    auto root = [&](int k) { return Cyclotomic::root_of_unity(conductor, static_cast<long long>(k) * (conductor / n)); };
    auto partner = [&](std::pair<int, int> c) {
        const int a = f == Flavor::twisted ? (c.first + n / 2) % n : c.first;
        return std::pair<int, int>{a, (n - c.second) % n};
    };

    std::vector<CensusOrbit> orbits;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const std::pair<int, int> c{a, b};
            const auto p = partner(c);
            if (p < c) continue;
            CensusOrbit o;
            o.characters.push_back(c);
            if (p != c) o.characters.push_back(p);
            orbits.push_back(std::move(o));
        }

    struct OrbitResult {
        CensusOrbit orbit;
        std::vector<Representation> simples;
        bool relations_ok = true;
        bool quotient_ok = true;
        bool commutants_ok = true;
        bool restrictions_ok = true;
        std::vector<std::string> failures;
    };

    const Matrix id2 = Matrix::identity(2);
    auto results = collect_chunks<OrbitResult>(
        orbits.size(),
        [&](std::size_t k, std::vector<OrbitResult>& out) {
            OrbitResult r;
            r.orbit = orbits[k];
            const auto [a, b] = r.orbit.characters[0];
            const Cyclotomic w = root(a);
            const Cyclotomic z = root(b);
            if (r.orbit.characters.size() == 2) {
                r.simples.push_back(f == Flavor::twisted ? make_twisted_simple(w, z) : make_untwisted_simple(w, z));
            } else if (f == Flavor::untwisted) {
                const int delta = b == 0 ? 1 : -1;
                r.simples.push_back(make_untwisted_character(w, delta, 1));
                r.simples.push_back(make_untwisted_character(w, delta, -1));
            } else {
                r.failures.push_back("twisted involution fixes " + exponent_pair(r.orbit.characters[0]));
            }
            std::set<std::pair<int, int>> expected_chars(r.orbit.characters.begin(), r.orbit.characters.end());
            for (const auto& rep : r.simples) {
                const std::string tag = rep.label();
                r.orbit.dimensions.push_back(static_cast<int>(rep.dimension()));
                if (!relations_hold(rep)) {
                    r.relations_ok = false;
                    r.failures.push_back(tag + ": defining relations fail");
                }
                const Matrix id = Matrix::identity(rep.dimension());
                if (!(rep.x.pow(n) == id) || !(rep.y.pow(n) == id)) {
                    r.quotient_ok = false;
                    r.failures.push_back(tag + ": X^N or Y^N is not the identity");
                }
                if (commutant_dimension(rep) != 1) {
                    r.commutants_ok = false;
                    r.failures.push_back(tag + ": commutant dimension is not 1");
                }
                std::set<std::pair<int, int>> seen;
                for (const auto& chi : restrict_to_B(rep)) {
                    bool matched = false;
                    for (const auto& c : expected_chars)
                        if (chi.w == root(c.first) && chi.z == root(c.second)) {
                            seen.insert(c);
                            matched = true;
                        }
                    if (!matched) seen.insert({-1, -1});
                }
                if (seen != expected_chars) {
                    r.restrictions_ok = false;
                    r.failures.push_back(tag + ": restriction to B differs from the orbit");
                }
            }
            out.push_back(std::move(r));
        },
        exec);

    CensusReport report;
    report.modulus = n;
    report.flavor = f;
    report.expected = finite_dimension(n);
    std::vector<const Representation*> simples;
    for (auto& r : results) {
        report.relations_ok = report.relations_ok && r.relations_ok;
        report.quotient_ok = report.quotient_ok && r.quotient_ok;
        report.commutants_ok = report.commutants_ok && r.commutants_ok;
        report.restrictions_ok = report.restrictions_ok && r.restrictions_ok;
        report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
        for (const auto& rep : r.simples) {
            const int d = static_cast<int>(rep.dimension());
            ++report.count_by_dimension[d];
            report.sum_of_squares += static_cast<long long>(d) * d;
            simples.push_back(&rep);
        }
        report.orbits.push_back(r.orbit);
    }

    // Distinct simples of equal dimension must admit no invertible intertwiner.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const std::size_t count = simples.size();
    for (std::size_t i = 0; i < count; ++i) {
        if (n <= 4) {
            for (std::size_t j = i + 1; j < count; ++j) pairs.emplace_back(i, j);
        } else {
            for (std::size_t j : {i + 1, (7 * i + 3) % count})
                if (j > i && j < count) pairs.emplace_back(i, j);
        }
    }
    std::erase_if(pairs, [&](const auto& p) { return simples[p.first]->dimension() != simples[p.second]->dimension(); });
    auto bad = collect_chunks<std::string>(
        pairs.size(),
        [&](std::size_t k, std::vector<std::string>& out) {
            const auto& [i, j] = pairs[k];
            if (find_intertwiner(*simples[i], *simples[j]))
                out.push_back(simples[i]->label() + " is isomorphic to " + simples[j]->label());
        },
        exec);
    report.intertwiner_pairs = pairs.size();
    if (!bad.empty()) {
        report.non_isomorphic_ok = false;
        report.failures.insert(report.failures.end(), bad.begin(), bad.end());
    }
    return report;
}

}  // namespace klein
