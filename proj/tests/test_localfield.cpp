#include "doctest.h"

#include <algorithm>

#include "klein/localfield.hpp"

using namespace klein;

namespace {

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

// Norms written directly: N_E2 (v, t) = (v, 2t), N_E4 (v, t) = (v, 4t + v).
bool brute_in_m0(long long q, const M0Element& m)
{
    const long long vsum = m.x.v + m.y.v + m.z.v;
    const long long tsum = 2 * m.x.t + 2 * m.y.t + 4 * m.z.t + m.z.v;
    return vsum == 0 && mod(tsum, q - 1) == 0;
}

std::size_t brute_m0_count(long long q, int bound)
{
    std::size_t count = 0;
    for (long long tx = 0; tx < q - 1; ++tx)
        for (long long ty = 0; ty < q - 1; ++ty)
            for (long long tz = 0; tz < q - 1; ++tz)
                for (long long vx = -bound; vx <= bound; ++vx)
                    for (long long vy = -bound; vy <= bound; ++vy)
                        for (long long vz = -bound; vz <= bound; ++vz)
                            count += brute_in_m0(q, {{vx, tx}, {vy, ty}, {vz, tz}});
    return count;
}

Phase i_pow(long long k) { return Phase::from_power(k); }

void require_all_pass(const std::vector<IdentityCheck>& checks)
{
    for (const auto& c : checks) {
        INFO(c.id << ": " << c.witness);
        CHECK(c.pass);
        CHECK(c.cases > 0);
    }
}

}  // namespace

TEST_SUITE("localfield")
{
    TEST_CASE("residue field preconditions")
    {
        CHECK(is_prime_power(2));
        CHECK(is_prime_power(9));
        CHECK(is_prime_power(125));
        CHECK_FALSE(is_prime_power(1));
        CHECK_FALSE(is_prime_power(12));
        CHECK_NOTHROW(ResidueData(5));
        CHECK_NOTHROW(ResidueData(9));
        CHECK_THROWS_AS(ResidueData(7), PreconditionError);
        CHECK_THROWS_AS(ResidueData(21), PreconditionError);
        try {
            ResidueData bad(7);
        } catch (const PreconditionError& e) {
            CHECK(std::string(e.what()).find("4 | q-1") != std::string::npos);
        }
    }

    TEST_CASE("M0 matches a brute-force enumeration")
    {
        for (long long q : {5, 9, 13}) {
            const ResidueData k(q);
            const auto m0 = enumerate_m0(k, 2);
            CHECK(m0.size() == brute_m0_count(q, 2));
            for (const auto& m : m0) {
                CHECK(in_m0(k, m));
                CHECK(brute_in_m0(q, m));
            }
        }
        CHECK(enumerate_m0(ResidueData(5), 2).size() == 352);
        CHECK(enumerate_m0(ResidueData(13), 2).size() == 3168);
    }

    TEST_CASE("M0 enumeration is identical on both paths")
    {
        const ResidueData k(13);
        CHECK(enumerate_m0(k, 2, Execution::serial) == enumerate_m0(k, 2, Execution::parallel));
    }

    TEST_CASE("norms")
    {
        const ResidueData k(13);
        CHECK(norm(k, kE4, {1, 0}) == DepthZeroElement{1, 1});
        CHECK(norm(k, kE2, {1, 0}) == DepthZeroElement{1, 0});
        CHECK(norm(k, kE4, {0, 5}) == DepthZeroElement{0, k.reduce(20)});
        CHECK(conjugate_product_norm(k, 4) == DepthZeroElement{1, 1});
        CHECK(conjugate_product_norm(k, 2) == DepthZeroElement{1, 0});
        for (long long v = -3; v <= 3; ++v)
            for (long long t = 0; t < 12; ++t)
                CHECK(norm(k, kE4, {v, t}) == DepthZeroElement{v, mod(4 * t + v, 12)});
    }

    TEST_CASE("chi4 is (-i)^v")
    {
        for (long long q : {5, 13}) {
            const ResidueData k(q);
            for (long long v = -4; v <= 4; ++v)
                for (long long t = 0; t < q - 1; ++t) CHECK(chi4(k, {v, t}) == i_pow(-v));
        }
    }

    TEST_CASE("sigma0 on M0")
    {
        const ResidueData k(5);
        for (const auto& m : enumerate_m0(k, 2)) {
            const Phase s = sigma0(k, m);
            CHECK(s * s == Phase::one());
            CHECK(sigma0(k, {m.y, m.x, m.z}) == chi4(k, m.z) * s);
        }
        CHECK_THROWS_AS(sigma0(k, {{1, 0}, {0, 0}, {0, 0}}), PreconditionError);
    }

    TEST_CASE("characters")
    {
        CHECK(kEta({3, 2}) == Phase::minus_one());
        CHECK(kChi0({1, 7}) == Phase::minus_i());
        CHECK(kEta.pow(4)({5, 3}) == Phase::one());
        CHECK(kEta.inverse()({0, 1}) == Phase::minus_i());
    }

    TEST_CASE("identity batteries pass for several residue fields")
    {
        for (long long q : {5, 9, 13, 17}) {
            const ResidueData k(q);
            require_all_pass(verify_eta_identities(k));
            require_all_pass(verify_weyl_twist(k));
            require_all_pass(verify_chi4(k));
            require_all_pass(verify_character_orders(k));
        }
    }
}
