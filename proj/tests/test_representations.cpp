#include "doctest.h"

#include <random>
#include <set>

#include "klein/representations.hpp"

using namespace klein;

namespace {

// Orbits of the character involution on (Z/N)^2 counted by brute force:
// returns (number of fixed characters, number of free orbits).
std::pair<int, int> orbit_counts(int n, Flavor f)
{
    std::set<std::pair<int, int>> seen;
    int fixed = 0, free = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (seen.count({a, b})) continue;
            const int pa = f == Flavor::twisted ? (a + n / 2) % n : a;
            const int pb = (n - b) % n;
            seen.insert({a, b});
            seen.insert({pa, pb});
            if (pa == a && pb == b)
                ++fixed;
            else
                ++free;
        }
    return {fixed, free};
}

Cyclotomic not_pm_one(std::mt19937_64& rng)
{
    for (;;) {
        const Cyclotomic z = random_gaussian(rng);
        if (!(z == Cyclotomic(1)) && !(z == Cyclotomic(-1))) return z;
    }
}

}  // namespace

TEST_SUITE("representations")
{
    TEST_CASE("simple modules satisfy the relations and are absolutely irreducible")
    {
        std::mt19937_64 rng(21);
        for (int trial = 0; trial < 15; ++trial) {
            const Cyclotomic w = random_gaussian(rng), z = not_pm_one(rng);
            for (const auto& rep : {make_twisted_simple(w, z), make_untwisted_simple(w, z)}) {
                CHECK(relations_hold(rep));
                CHECK(commutant_dimension(rep) == 1);
                CHECK(check_homomorphism(rep, 2).pass);
            }
        }
    }

    TEST_CASE("partner characters give isomorphic modules")
    {
        std::mt19937_64 rng(22);
        for (int trial = 0; trial < 15; ++trial) {
            const Cyclotomic w = random_gaussian(rng), z = not_pm_one(rng);
            const auto a = make_twisted_simple(w, z);
            const auto b = make_twisted_simple(-w, z.inverse());
            const auto t = find_intertwiner(a, b);
            REQUIRE(t.has_value());
            CHECK(*t * a.s == b.s * *t);
            CHECK(*t * a.x == b.x * *t);
            CHECK(*t * a.y == b.y * *t);
            CHECK_FALSE(find_intertwiner(a, make_twisted_simple(w * Cyclotomic(2), z)).has_value());
            CHECK(find_intertwiner(make_untwisted_simple(w, z), make_untwisted_simple(w, z.inverse())).has_value());
        }
    }

    TEST_CASE("restriction and induction")
    {
        const Cyclotomic w = Cyclotomic::gaussian(1, 2), z = Cyclotomic(3);
        const auto chars = restrict_to_B(make_twisted_simple(w, z));
        REQUIRE(chars.size() == 2);
        CHECK(chars[0] == BCharacter{w, z});
        CHECK(chars[1] == partner_character(Flavor::twisted, {w, z}));
        CHECK(partner_character(Flavor::untwisted, {w, z}) == BCharacter{w, z.inverse()});
        const auto induced = induce_from_character(Flavor::twisted, {w, z});
        CHECK(relations_hold(induced));
        CHECK(find_intertwiner(induced, make_twisted_simple(w, z)).has_value());
    }

    TEST_CASE("one-dimensional modules")
    {
        const auto twisted = solve_one_dimensional(Flavor::twisted);
        CHECK_FALSE(twisted.satisfiable);
        CHECK_FALSE(twisted.witness_equation.empty());
        const auto untwisted = solve_one_dimensional(Flavor::untwisted);
        CHECK(untwisted.satisfiable);
        const Cyclotomic w = Cyclotomic::gaussian(2, -1);
        for (int s : {1, -1})
            for (int x : {1, -1}) {
                CHECK(untwisted.admits(Cyclotomic(s), Cyclotomic(x), w));
                CHECK(relations_hold(make_untwisted_character(w, x, s)));
            }
        CHECK_FALSE(untwisted.admits(Cyclotomic(1), Cyclotomic(2), w));
        CHECK_FALSE(untwisted.admits(Cyclotomic::i(), Cyclotomic(1), w));
    }

    TEST_CASE("untwisted modules at z = +-1 are rejected")
    {
        CHECK_THROWS(make_untwisted_simple(Cyclotomic(2), Cyclotomic(1)));
        CHECK_THROWS(make_untwisted_simple(Cyclotomic(2), Cyclotomic(-1)));
    }

    TEST_CASE("census matches brute-force orbit counts")
    {
        for (Flavor f : {Flavor::twisted, Flavor::untwisted})
            for (int n : {2, 4, 6}) {
                const auto [fixed, free] = orbit_counts(n, f);
                const auto r = finite_census(n, f);
                CHECK(r.pass());
                CHECK(r.sum_of_squares == 2LL * n * n);
                const int dim1 = r.count_by_dimension.count(1) ? r.count_by_dimension.at(1) : 0;
                const int dim2 = r.count_by_dimension.count(2) ? r.count_by_dimension.at(2) : 0;
                if (f == Flavor::twisted) {
                    CHECK(fixed == 0);
                    CHECK(dim1 == 0);
                    CHECK(dim2 == free);
                } else {
                    CHECK(dim1 == 2 * fixed);
                    CHECK(dim2 == free);
                }
            }
    }

    TEST_CASE("census serial and parallel paths agree")
    {
        const auto a = finite_census(4, Flavor::untwisted, Execution::serial);
        const auto b = finite_census(4, Flavor::untwisted, Execution::parallel);
        CHECK(a.summary() == b.summary());
        CHECK(a.count_by_dimension == b.count_by_dimension);
        CHECK(a.orbits.size() == b.orbits.size());
    }
}
