#include "klein/localfield.hpp"

#include <sstream>

namespace klein {

namespace {

template <class Fn>
void for_each_element(const ResidueData& k, int bound, Fn&& fn)
{
    for (long long v = -bound; v <= bound; ++v)
        for (long long t = 0; t < k.units(); ++t) fn(DepthZeroElement{v, t});
}

}  // namespace

bool is_prime_power(long long q)
{
    if (q < 2) return false;
    long long p = 2;
    while (p * p <= q && q % p) ++p;
    if (q % p) p = q;
    while (q % p == 0) q /= p;
    return q == 1;
}

ResidueData::ResidueData(long long q) : q_(q)
{
    if (!is_prime_power(q)) throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
    if ((q - 1) % 4)
        throw PreconditionError("q = " + std::to_string(q) + " violates the precondition 4 | q-1 (q-1 = " +
                                std::to_string(q - 1) + ")");
    if (q > 10007) throw PreconditionError("q = " + std::to_string(q) + " is too large for exhaustive checks");
}

long long ResidueData::reduce(long long t) const
{
    const long long r = t % units();
    return r < 0 ? r + units() : r;
}

std::string DepthZeroElement::to_string() const
{
    return "(v=" + std::to_string(v) + ",t=" + std::to_string(t) + ")";
}

std::string M0Element::to_string() const
{
    return "x" + x.to_string() + " y" + y.to_string() + " z" + z.to_string();
}

DepthZeroElement norm(const ResidueData& k, const TameExtensionSpec& ext, const DepthZeroElement& e)
{
    return {e.v * ext.uniformizer_norm.v, k.reduce(ext.degree * e.t + e.v * ext.uniformizer_norm.t)};
}

DepthZeroElement conjugate_product_norm(const ResidueData& k, int degree)
{
    // pi_E^d = u pi_F with u = -1 (d = 2) or -zeta (d = 4).
    long long u_t = 0;
    if (degree == 2)
        u_t = k.minus_one_exponent();
    else if (degree == 4)
        u_t = k.minus_one_exponent() + 1;
    else if (degree != 1)
        throw PreconditionError("unsupported extension degree " + std::to_string(degree));
    // prod_{j<d} xi^j pi_E = xi^(d(d-1)/2) pi_E^d, xi = zeta^((q-1)/d).
    const long long xi = k.units() / degree;
    const long long t = xi * (static_cast<long long>(degree) * (degree - 1) / 2) + u_t;
    return {1, k.reduce(t)};
}

bool in_m0(const ResidueData& k, const M0Element& m)
{
    const auto nx = norm(k, kE2, m.x);
    const auto ny = norm(k, kE2, m.y);
    const auto nz = norm(k, kE4, m.z);
    return nx.v + ny.v + nz.v == 0 && k.reduce(nx.t + ny.t + nz.t) == 0;
}

std::vector<M0Element> enumerate_m0(const ResidueData& k, int bound, Execution exec)
{
    if (bound < 0) throw PreconditionError("valuation bound must be non-negative");
    const long long units = k.units();
    return collect_chunks<M0Element>(
        static_cast<std::size_t>(units),
        [&](std::size_t tx, std::vector<M0Element>& out) {
            for (long long vx = -bound; vx <= bound; ++vx)
                for (long long ty = 0; ty < units; ++ty)
                    for (long long vy = -bound; vy <= bound; ++vy) {
                        const long long vz = -vx - vy;
                        if (vz < -bound || vz > bound) continue;
                        for (long long tz = 0; tz < units; ++tz) {
                            const M0Element m{{vx, static_cast<long long>(tx)}, {vy, ty}, {vz, tz}};
                            if (in_m0(k, m)) out.push_back(m);
                        }
                    }
        },
        exec);
}

Phase sigma0(const ResidueData& k, const M0Element& m)
{
    if (!in_m0(k, m)) throw PreconditionError("sigma0: " + m.to_string() + " is not in M0");
    return kEta(norm(k, kE2, m.y));
}

Phase chi4(const ResidueData& k, const DepthZeroElement& z)
{
    return kEta.inverse()(norm(k, kE4, z));
}

std::vector<IdentityCheck> verify_eta_identities(const ResidueData& k, int bound)
{
    const auto m0 = enumerate_m0(k, bound);
    const auto eta = kEta;
    const auto eta_inv = kEta.inverse();
    const auto eta2 = kEta.pow(2);
    std::vector<IdentityCheck> out;

    out.push_back(run_identity_check("localfield.eta.m0-identity", "eta(N x) = eta^-1(N y) eta^-1(N z) on M0", [&](auto check) {
        for (const auto& m : m0)
            check(eta(norm(k, kE2, m.x)) == eta_inv(norm(k, kE2, m.y)) * eta_inv(norm(k, kE4, m.z)), m.to_string());
    }));
    out.push_back(run_identity_check("localfield.eta2.e2-norms", "eta^2(N_E2 e) = 1 for e in E2^x", [&](auto check) {
        for_each_element(k, bound, [&](const DepthZeroElement& e) {
            check(eta2(norm(k, kE2, e)) == Phase::one(), e.to_string());
        });
    }));
    out.push_back(run_identity_check("localfield.eta2.e4-on-m0", "eta^2(N_E4 z) = 1 for (x,y,z) in M0", [&](auto check) {
        for (const auto& m : m0) check(eta2(norm(k, kE4, m.z)) == Phase::one(), m.to_string());
    }));
    out.push_back(run_identity_check("localfield.eta-inv.e4-units", "eta^-1(N_E4 u) = 1 for u a unit of E4", [&](auto check) {
        for (long long t = 0; t < k.units(); ++t) {
            const DepthZeroElement u{0, t};
            check(eta_inv(norm(k, kE4, u)) == Phase::one(), u.to_string());
        }
    }));
    return out;
}

std::vector<IdentityCheck> verify_weyl_twist(const ResidueData& k, int bound)
{
    const auto m0 = enumerate_m0(k, bound);
    std::vector<IdentityCheck> out;
    out.push_back(run_identity_check("localfield.weyl-twist", "sigma0(y,x,z) = chi4(z) sigma0(x,y,z) on M0", [&](auto check) {
        for (const auto& m : m0) {
            const M0Element swapped{m.y, m.x, m.z};
            check(sigma0(k, swapped) == chi4(k, m.z) * sigma0(k, m), m.to_string());
        }
    }));
    // The twist is the unramified character with coordinates (1 : 1 : -i):
    // it only sees val_F of the third norm.
    out.push_back(run_identity_check("localfield.weyl-twist.unramified", "chi4(z) = (-i)^(val_F N_E4 z) on M0", [&](auto check) {
        for (const auto& m : m0) check(chi4(k, m.z) == Phase::minus_i().pow(norm(k, kE4, m.z).v), m.to_string());
    }));
    return out;
}

std::vector<IdentityCheck> verify_chi4(const ResidueData& k, int bound)
{
    std::vector<IdentityCheck> out;
    out.push_back(run_identity_check("localfield.chi4.formula", "chi4(z) = (-i)^v(z) on E4^x", [&](auto check) {
        for_each_element(k, bound, [&](const DepthZeroElement& z) {
            check(chi4(k, z) == Phase::minus_i().pow(z.v), z.to_string());
        });
    }));
    const auto m0 = enumerate_m0(k, bound);
    out.push_back(run_identity_check("localfield.m0.vz-even", "v(z) is even for (x,y,z) in M0", [&](auto check) {
        for (const auto& m : m0) check(m.z.v % 2 == 0, m.to_string());
    }));
    out.push_back(run_identity_check("localfield.norm.uniformizers", "N_E4(pi_E4) = zeta pi_F and N_E2(pi_E2) = pi_F",
                            [&](auto check) {
                                const auto n4 = norm(k, kE4, {1, 0});
                                const auto n2 = norm(k, kE2, {1, 0});
                                check(n4 == DepthZeroElement{1, 1}, "N_E4(pi_E4) = " + n4.to_string());
                                check(n4 == conjugate_product_norm(k, 4),
                                      "conjugate product " + conjugate_product_norm(k, 4).to_string());
                                check(n2 == DepthZeroElement{1, 0}, "N_E2(pi_E2) = " + n2.to_string());
                                check(n2 == conjugate_product_norm(k, 2),
                                      "conjugate product " + conjugate_product_norm(k, 2).to_string());
                            }));
    out.push_back(run_identity_check("localfield.norm.valuation", "val_F(N e) = v(e) for E2 and E4", [&](auto check) {
        for_each_element(k, bound, [&](const DepthZeroElement& e) {
            check(norm(k, kE2, e).v == e.v && norm(k, kE4, e).v == e.v, e.to_string());
        });
    }));
    return out;
}

std::vector<IdentityCheck> verify_character_orders(const ResidueData& k, int bound)
{
    const auto m0 = enumerate_m0(k, bound);
    std::vector<IdentityCheck> out;
    out.push_back(run_identity_check("localfield.sigma0.quadratic", "sigma0(m)^2 = 1 on M0", [&](auto check) {
        for (const auto& m : m0) check(sigma0(k, m).pow(2) == Phase::one(), m.to_string());
    }));
    out.push_back(run_identity_check("localfield.eta.order4", "eta^4 = 1 on F^x", [&](auto check) {
        for_each_element(k, bound, [&](const DepthZeroElement& e) {
            check(kEta.pow(4)(e) == Phase::one(), e.to_string());
        });
    }));
    return out;
}

}  // namespace klein
