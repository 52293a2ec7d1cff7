#include "klein/spectrum.hpp"

#include <algorithm>
#include <numeric>

namespace klein {

namespace {

HomogeneousTriple random_triple(std::mt19937_64& rng)
{
    return {random_gaussian(rng), random_gaussian(rng), random_gaussian(rng)};
}

BCPair random_bc(std::mt19937_64& rng)
{
    return {random_gaussian(rng), random_gaussian(rng)};
}

AnglePoint random_angle(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> den_pick(0, 3);
    static constexpr int dens[] = {4, 8, 12, 24};
    const int den = dens[den_pick(rng)];
    std::uniform_int_distribution<int> num(0, den - 1);
    Rational a(num(rng), den), b(num(rng), den);
    a.canonicalize();
    b.canonicalize();
    return make_angle(a, b);
}

HomogeneousTriple normalized(const HomogeneousTriple& t)
{
    const Cyclotomic inv = t.a1.inverse();
    return {Cyclotomic(1), t.a2 * inv, t.a3 * inv};
}

bool same_triple(const HomogeneousTriple& a, const HomogeneousTriple& b)
{
    return a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3;
}

// Every sampled angle has denominator dividing 24.
constexpr int kAngleField = 24;

WZPoint wz_of_angle(const AnglePoint& p)
{
    return {turn_to_scalar(p.theta, kAngleField), turn_to_scalar(p.phi, kAngleField)};
}

}  // namespace

std::string HomogeneousTriple::to_string() const
{
    return "(" + a1.to_string() + " : " + a2.to_string() + " : " + a3.to_string() + ")";
}

HomogeneousTriple make_triple(const Cyclotomic& a1, const Cyclotomic& a2, const Cyclotomic& a3)
{
    if (a1.is_zero() || a2.is_zero() || a3.is_zero())
        throw PreconditionError("homogeneous coordinates must be nonzero");
    return {a1, a2, a3};
}

bool triples_equivalent(const HomogeneousTriple& t1, const HomogeneousTriple& t2)
{
    const Cyclotomic lambda = t2.a1 / t1.a1;
    if (!(t2.a2 == lambda * t1.a2)) return false;
    const Cyclotomic l3 = lambda * t1.a3;
    return t2.a3 == l3 || t2.a3 == -l3;
}

std::string BCPair::to_string() const
{
    return "(b=" + b.to_string() + ", c=" + c.to_string() + ")";
}

bool j_equivalent(const BCPair& p, const BCPair& q)
{
    return q == p || q == j_action(p);
}

BCPair j_action(const BCPair& p)
{
    return {-p.b, -p.c};
}

std::string WZPoint::to_string() const
{
    return "(w=" + w.to_string() + ", z=" + z.to_string() + ")";
}

BCPair to_bc(const HomogeneousTriple& t)
{
    const Cyclotomic inv = t.a3.inverse();
    return {t.a1 * inv, t.a2 * inv};
}

HomogeneousTriple from_bc(const BCPair& p)
{
    return make_triple(p.b, p.c, Cyclotomic(1));
}

WZPoint bc_to_wz(const BCPair& p)
{
    return {p.b * p.c, p.b / p.c};
}

BCPair wz_to_bc(const WZPoint& p, int field_conductor)
{
    if (p.w.is_zero() || p.z.is_zero()) throw PreconditionError("w and z must be nonzero");
    const auto b = exact_sqrt(p.w * p.z, field_conductor);
    if (!b)
        throw PreconditionError("wz = " + (p.w * p.z).to_string() +
                                " has no square root in the working field; use angle coordinates");
    return {*b, p.w / *b};
}

HomogeneousTriple s_action_homogeneous(const HomogeneousTriple& t)
{
    return {t.a2, t.a1, -Cyclotomic::i() * t.a3};
}

BCPair tau_bc(const BCPair& p)
{
    const Cyclotomic i = Cyclotomic::i();
    return {i * p.c, i * p.b};
}

WZPoint tau_wz(const WZPoint& p)
{
    return {-p.w, p.z.inverse()};
}

WZPoint untwisted_involution(const WZPoint& p)
{
    return {p.w, p.z.inverse()};
}

std::string AnglePoint::to_string() const
{
    return "(theta=" + klein::to_string(theta) + ", phi=" + klein::to_string(phi) + ")";
}

Rational reduce_turn(const Rational& r)
{
    const Integer floor = r.get_num() / r.get_den() - ((r.get_num() % r.get_den() < 0) ? 1 : 0);
    Rational out = r - Rational(floor);
    out.canonicalize();
    return out;
}

AnglePoint make_angle(const Rational& theta, const Rational& phi)
{
    return {reduce_turn(theta), reduce_turn(phi)};
}

Cyclotomic turn_to_scalar(const Rational& r, int field_conductor)
{
    const Rational t = reduce_turn(r);
    if (t.get_den() > 360) throw PreconditionError("angle denominator too large for an exact root of unity");
    const int den = static_cast<int>(t.get_den().get_si());
    const int n = std::lcm(den, std::max(field_conductor, 1));
    return Cyclotomic::root_of_unity(n, t.get_num().get_si() * (n / den));
}

AnglePoint tau_wz_angle(const AnglePoint& p)
{
    return make_angle(p.theta + Rational(1, 2), -p.phi);
}

AnglePoint tau_bc_angle(const AnglePoint& p)
{
    return make_angle(p.phi + Rational(1, 4), p.theta + Rational(1, 4));
}

AnglePoint bc_to_wz_angle(const AnglePoint& p)
{
    return make_angle(p.theta + p.phi, p.theta - p.phi);
}

AnglePoint wz_to_bc_angle(const AnglePoint& p)
{
    return make_angle((p.theta + p.phi) / 2, (p.theta - p.phi) / 2);
}

bool TorusDatum::in_kernel(const HomogeneousTriple& t) const
{
    // Close the normalized generators under multiplication; the group is finite
    // because each normalized generator has finite order here.
    std::vector<HomogeneousTriple> group{{Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)}};
    for (std::size_t k = 0; k < group.size() && group.size() < 64; ++k)
        for (const auto& g : kernel_generators) {
            const auto n = normalized(g);
            const HomogeneousTriple p{group[k].a1 * n.a1, group[k].a2 * n.a2, group[k].a3 * n.a3};
            bool seen = false;
            for (const auto& h : group) seen = seen || same_triple(h, p);
            if (!seen) group.push_back(p);
        }
    const auto nt = normalized(t);
    for (const auto& h : group)
        if (same_triple(h, nt)) return true;
    return false;
}

TorusDatum depth_zero_datum(long long q)
{
    const ResidueData k(q);
    return {"depth-zero",
            {{Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)}, {Cyclotomic(1), Cyclotomic(1), Cyclotomic(-1)}},
            chi4(k, {1, 0}).to_scalar()};
}

TorusDatum comparison_datum()
{
    return {"comparison",
            {{Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)}, {Cyclotomic(1), Cyclotomic(1), Cyclotomic(-1)}},
            kChi0({1, 0}).to_scalar()};
}

std::vector<IdentityCheck> comparison_map_check(std::mt19937_64& rng, int samples)
{
    const TorusDatum d0 = depth_zero_datum();
    const TorusDatum d1 = comparison_datum();
    std::vector<IdentityCheck> out;

    out.push_back(run_identity_check("coords.compare.kernel", "kernel generators of each datum lie in the other's kernel",
                            [&](auto check) {
                                for (const auto& g : d0.kernel_generators) check(d1.in_kernel(g), g.to_string());
                                for (const auto& g : d1.kernel_generators) check(d0.in_kernel(g), g.to_string());
                            }));
    out.push_back(run_identity_check("coords.compare.action", "s acts by (a1:a2:a3) -> (a2:a1:-i a3) in both data",
                            [&](auto check) {
                                const Cyclotomic minus_i = -Cyclotomic::i();
                                check(d0.twist == minus_i, "depth-zero twist " + d0.twist.to_string());
                                check(d1.twist == minus_i, "comparison twist " + d1.twist.to_string());
                            }));
    out.push_back(run_identity_check("coords.compare.orbits", "s-orbits of random classes agree in both data", [&](auto check) {
        for (int k = 0; k < samples; ++k) {
            const auto t = random_triple(rng);
            const auto a = d0.act(t);
            const auto b = d1.act(t);
            check(triples_equivalent(a, b) && triples_equivalent(d0.act(a), t) && triples_equivalent(d1.act(b), t) &&
                      triples_equivalent(a, s_action_homogeneous(t)),
                  t.to_string());
        }
    }));
    out.push_back(run_identity_check("coords.compare.chi0-squared", "chi0^2 has coordinates (1:1:-1), a kernel class",
                            [&](auto check) {
                                const Cyclotomic c = kChi0.pow(2)({1, 0}).to_scalar();
                                const HomogeneousTriple t{Cyclotomic(1), Cyclotomic(1), c};
                                check(c == Cyclotomic(-1), "chi0^2(pi_F) = " + c.to_string());
                                check(d0.in_kernel(t) && d1.in_kernel(t), t.to_string());
                            }));
    return out;
}

std::vector<IdentityCheck> verify_coordinates(std::mt19937_64& rng, int samples, int free_samples)
{
    const HomogeneousTriple one{Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)};
    std::vector<IdentityCheck> out;

    out.push_back(run_identity_check("coords.kernel", "(a,a,a) ~ (b,b,-b) ~ (1,1,1)", [&](auto check) {
        for (int k = 0; k < samples; ++k) {
            const Cyclotomic a = random_gaussian(rng);
            const Cyclotomic b = random_gaussian(rng);
            check(triples_equivalent(one, {a, a, a}), "a = " + a.to_string());
            check(triples_equivalent(one, {b, b, -b}), "b = " + b.to_string());
        }
    }));
    out.push_back(run_identity_check("coords.to-bc.well-defined", "equivalent triples have J-equivalent (b,c)",
                            [&](auto check) {
                                for (int k = 0; k < samples; ++k) {
                                    const auto t = random_triple(rng);
                                    const Cyclotomic l = random_gaussian(rng);
                                    const HomogeneousTriple u{l * t.a1, l * t.a2, l * t.a3};
                                    const HomogeneousTriple v{l * t.a1, l * t.a2, -l * t.a3};
                                    check(j_equivalent(to_bc(t), to_bc(u)) && j_equivalent(to_bc(t), to_bc(v)),
                                          t.to_string());
                                }
                            }));
    out.push_back(run_identity_check("coords.to-bc.bijective", "from_bc inverts to_bc on J-classes", [&](auto check) {
        for (int k = 0; k < samples; ++k) {
            const auto t = random_triple(rng);
            const auto p = random_bc(rng);
            check(triples_equivalent(from_bc(to_bc(t)), t), t.to_string());
            check(to_bc(from_bc(p)) == p, p.to_string());
            check(triples_equivalent(from_bc(j_action(p)), from_bc(p)), p.to_string());
        }
    }));
    out.push_back(run_identity_check("coords.square", "to_bc(s t) ~ tau_bc(to_bc t) and bc_to_wz o tau_bc = tau_wz o bc_to_wz",
                            [&](auto check) {
                                for (int k = 0; k < samples; ++k) {
                                    const auto t = random_triple(rng);
                                    const auto p = to_bc(t);
                                    check(j_equivalent(to_bc(s_action_homogeneous(t)), tau_bc(p)), t.to_string());
                                    check(bc_to_wz(tau_bc(p)) == tau_wz(bc_to_wz(p)), p.to_string());
                                    check(triples_equivalent(s_action_homogeneous(s_action_homogeneous(t)), t),
                                          t.to_string());
                                }
                            }));
    out.push_back(run_identity_check("coords.tau-bc.square", "tau_bc^2 = J", [&](auto check) {
        for (int k = 0; k < samples; ++k) {
            const auto p = random_bc(rng);
            check(tau_bc(tau_bc(p)) == j_action(p), p.to_string());
            const WZPoint w = bc_to_wz(p);
            check(tau_wz(tau_wz(w)) == w, w.to_string());
        }
    }));
    out.push_back(run_identity_check("coords.tau.free", "tau_wz and tau_bc have no fixed classes", [&](auto check) {
        for (int k = 0; k < free_samples; ++k) {
            const auto p = random_bc(rng);
            const WZPoint w = bc_to_wz(p);
            check(!(tau_wz(w) == w) && !j_equivalent(tau_bc(p), p), p.to_string());
        }
    }));
    out.push_back(run_identity_check("coords.untwisted.fixed-locus", "(w, 1/z) = (w, z) exactly when z = +-1",
                            [&](auto check) {
                                for (int k = 0; k < samples; ++k) {
                                    const WZPoint w{random_gaussian(rng), random_gaussian(rng)};
                                    const bool fixed = untwisted_involution(w) == w;
                                    check(fixed == (w.z == Cyclotomic(1) || w.z == Cyclotomic(-1)), w.to_string());
                                }
                                for (int z : {1, -1}) check(untwisted_involution({3, z}) == WZPoint{3, z}, "z = +-1");
                            }));
    out.push_back(run_identity_check("coords.angles", "angle forms of tau_wz, tau_bc and bc_to_wz match the exact maps",
                            [&](auto check) {
                                for (int k = 0; k < samples; ++k) {
                                    const auto a = random_angle(rng);
                                    const BCPair p{turn_to_scalar(a.theta, kAngleField), turn_to_scalar(a.phi, kAngleField)};
                                    const auto ta = tau_bc_angle(a);
                                    check(tau_bc(p) == BCPair{turn_to_scalar(ta.theta, kAngleField), turn_to_scalar(ta.phi, kAngleField)},
                                          a.to_string());
                                    check(tau_wz(wz_of_angle(a)) == wz_of_angle(tau_wz_angle(a)), a.to_string());
                                    check(bc_to_wz(p) == wz_of_angle(bc_to_wz_angle(a)), a.to_string());
                                }
                            }));
    out.push_back(run_identity_check("coords.wz-to-bc.round-trip", "bc_to_wz o wz_to_bc = id on angle points",
                            [&](auto check) {
                                for (int k = 0; k < samples; ++k) {
                                    const auto a = random_angle(rng);
                                    check(bc_to_wz_angle(wz_to_bc_angle(a)) == a, a.to_string());
                                    const WZPoint w = wz_of_angle(a);
                                    check(bc_to_wz(wz_to_bc(w, 2 * kAngleField)) == w, w.to_string());
                                }
                            }));
    return out;
}

}  // namespace klein
