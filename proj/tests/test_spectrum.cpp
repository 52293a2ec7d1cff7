#include "doctest.h"

#include <random>

#include "klein/spectrum.hpp"

using namespace klein;

namespace {

Cyclotomic unit_root(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> k(0, 7);
    return Cyclotomic::root_of_unity(8, k(rng));
}

}  // namespace

TEST_SUITE("spectrum_geometry")
{
    TEST_CASE("kernel generators are equivalent to (1 : 1 : 1)")
    {
        const HomogeneousTriple one = make_triple(Cyclotomic(1), Cyclotomic(1), Cyclotomic(1));
        const Cyclotomic a = Cyclotomic::gaussian(2, 3), b = Cyclotomic(Rational(-5, 2));
        CHECK(triples_equivalent(make_triple(a, a, a), one));
        CHECK(triples_equivalent(make_triple(b, b, -b), one));
        CHECK_FALSE(triples_equivalent(make_triple(a, Cyclotomic(1), a), one));
        CHECK_THROWS_AS(make_triple(Cyclotomic(), a, a), PreconditionError);
    }

    TEST_CASE("to_bc is J-invariant and from_bc is a section")
    {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 30; ++trial) {
            const auto t = make_triple(random_gaussian(rng), random_gaussian(rng), random_gaussian(rng));
            const Cyclotomic l = random_gaussian(rng);
            const auto scaled = make_triple(l * t.a1, l * t.a2, -l * t.a3);
            CHECK(j_equivalent(to_bc(t), to_bc(scaled)));
            CHECK(triples_equivalent(from_bc(to_bc(t)), t));
            const BCPair p{random_gaussian(rng), random_gaussian(rng)};
            CHECK(j_equivalent(to_bc(from_bc(p)), p));
            CHECK(j_action(j_action(p)) == p);
        }
    }

    TEST_CASE("the commuting square closes")
    {
        std::mt19937_64 rng(32);
        for (int trial = 0; trial < 30; ++trial) {
            const auto t = make_triple(random_gaussian(rng), random_gaussian(rng), random_gaussian(rng));
            CHECK(j_equivalent(to_bc(s_action_homogeneous(t)), tau_bc(to_bc(t))));
            const BCPair p = to_bc(t);
            CHECK(bc_to_wz(tau_bc(p)) == tau_wz(bc_to_wz(p)));
            CHECK(tau_bc(tau_bc(p)) == j_action(p));
            CHECK(bc_to_wz(j_action(p)) == bc_to_wz(p));
        }
    }

    TEST_CASE("tau_wz has no fixed points and the untwisted involution fixes z = +-1")
    {
        std::mt19937_64 rng(33);
        for (int trial = 0; trial < 50; ++trial) {
            const WZPoint p{random_gaussian(rng), random_gaussian(rng)};
            CHECK_FALSE(tau_wz(p) == p);
            CHECK(tau_wz(tau_wz(p)) == p);
        }
        CHECK(untwisted_involution({Cyclotomic(3), Cyclotomic(-1)}) == WZPoint{Cyclotomic(3), Cyclotomic(-1)});
        CHECK_FALSE(untwisted_involution({Cyclotomic(3), Cyclotomic(2)}) == WZPoint{Cyclotomic(3), Cyclotomic(2)});
    }

    TEST_CASE("wz_to_bc inverts bc_to_wz up to J")
    {
        std::mt19937_64 rng(34);
        for (int trial = 0; trial < 30; ++trial) {
            const BCPair p{unit_root(rng), unit_root(rng)};
            const BCPair q = wz_to_bc(bc_to_wz(p), 8);
            CHECK(j_equivalent(p, q));
        }
        CHECK_THROWS_AS(wz_to_bc({Cyclotomic(2), Cyclotomic(1)}, 4), PreconditionError);
    }

    TEST_CASE("angle forms agree with the exact maps")
    {
        constexpr int field = 48;
        std::mt19937_64 rng(35);
        std::uniform_int_distribution<int> num(0, 23);
        for (int trial = 0; trial < 40; ++trial) {
            const AnglePoint a = make_angle(Rational(num(rng), 24), Rational(num(rng), 24));
            const auto scalar = [](const AnglePoint& p) {
                return WZPoint{turn_to_scalar(p.theta, field), turn_to_scalar(p.phi, field)};
            };
            CHECK(scalar(tau_wz_angle(a)) == tau_wz(scalar(a)));
            const auto bc = scalar(a);
            const BCPair pair{bc.w, bc.z};
            const auto mapped = scalar(tau_bc_angle(a));
            CHECK(BCPair{mapped.w, mapped.z} == tau_bc(pair));
            CHECK(scalar(bc_to_wz_angle(a)) == bc_to_wz(pair));
            CHECK(bc_to_wz_angle(wz_to_bc_angle(a)) == a);
        }
    }

    TEST_CASE("turn arithmetic")
    {
        CHECK(reduce_turn(Rational(5, 4)) == Rational(1, 4));
        CHECK(reduce_turn(Rational(-1, 3)) == Rational(2, 3));
        CHECK(turn_to_scalar(Rational(1, 4)) == Cyclotomic::i());
        CHECK(turn_to_scalar(Rational(1, 2)) == Cyclotomic(-1));
        CHECK(turn_to_scalar(Rational(1, 3), 12) == Cyclotomic::root_of_unity(3, 1));
    }

    TEST_CASE("the two torus data agree")
    {
        CHECK(depth_zero_datum(5).twist == Cyclotomic::i() * Cyclotomic(-1));
        CHECK(comparison_datum().twist == depth_zero_datum(13).twist);
        std::mt19937_64 rng(36);
        for (const auto& c : comparison_map_check(rng, 20)) {
            INFO(c.id << ": " << c.witness);
            CHECK(c.pass);
        }
        for (const auto& c : verify_coordinates(rng, 20, 50)) {
            INFO(c.id << ": " << c.witness);
            CHECK(c.pass);
        }
    }
}
