#include "doctest.h"

#include <random>

#include "klein/algebra.hpp"
#include "klein/representations.hpp"

using namespace klein;

namespace {

AlgebraElement random_element(std::mt19937_64& rng, Flavor f)
{
    std::uniform_int_distribution<int> coord(-2, 2), bit(0, 1), terms(1, 4);
    AlgebraElement a(f);
    const int count = terms(rng);
    for (int k = 0; k < count; ++k)
        a.add_term({coord(rng), bit(rng), coord(rng)}, random_gaussian(rng, 3));
    return a;
}

AlgebraElement gen(Flavor f, const GroupElement& g) { return AlgebraElement::basis(f, g); }

}  // namespace

TEST_SUITE("twisted_algebra")
{
    TEST_CASE("the product is associative and unital")
    {
        std::mt19937_64 rng(5);
        for (Flavor f : {Flavor::twisted, Flavor::untwisted}) {
            for (int trial = 0; trial < 30; ++trial) {
                const auto a = random_element(rng, f), b = random_element(rng, f), c = random_element(rng, f);
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(AlgebraElement::unit(f) * a == a);
                CHECK(a * AlgebraElement::unit(f) == a);
            }
        }
    }

    TEST_CASE("basis products carry the cocycle")
    {
        const GroupElement s = kGenS, y = kGenY;
        const auto ts = gen(Flavor::twisted, s), ty = gen(Flavor::twisted, y);
        CHECK(ts * ty == gen(Flavor::twisted, multiply(s, y)) * Cyclotomic(-1));
        CHECK(ty * ts == gen(Flavor::twisted, multiply(y, s)));
        const auto us = gen(Flavor::untwisted, s), uy = gen(Flavor::untwisted, y);
        CHECK(us * uy == uy * us);
    }

    TEST_CASE("basis inverses")
    {
        for (Flavor f : {Flavor::twisted, Flavor::untwisted})
            for (const auto& g : window_elements(2)) {
                CHECK(gen(f, g) * AlgebraElement::basis_inverse(f, g) == AlgebraElement::unit(f));
                CHECK(AlgebraElement::basis_inverse(f, g) * gen(f, g) == AlgebraElement::unit(f));
            }
    }

    TEST_CASE("the presentations hold")
    {
        for (Flavor f : {Flavor::twisted, Flavor::untwisted}) {
            const auto r = verify_presentation(f);
            CHECK(r.pass());
            CHECK(r.relations.size() == 6);
            for (const auto& rel : r.relations) CHECK(rel.residual == "0");
        }
    }

    TEST_CASE("the twisted sign is visible in sY")
    {
        const auto s = gen(Flavor::twisted, kGenS), y = gen(Flavor::twisted, kGenY);
        CHECK_FALSE((s * y - y * s).is_zero());
        CHECK((s * y + y * s).is_zero());
    }

    TEST_CASE("mixing flavors throws")
    {
        CHECK_THROWS_AS(gen(Flavor::twisted, kGenS) * gen(Flavor::untwisted, kGenS), std::invalid_argument);
        CHECK_THROWS_AS(parse_flavor("both"), PreconditionError);
        CHECK(parse_flavor("untwisted") == Flavor::untwisted);
    }

    TEST_CASE("evaluation in a simple module is multiplicative")
    {
        std::mt19937_64 rng(9);
        for (int trial = 0; trial < 10; ++trial) {
            const auto rep = make_twisted_simple(random_gaussian(rng), random_gaussian(rng));
            const auto a = random_element(rng, Flavor::twisted), b = random_element(rng, Flavor::twisted);
            CHECK(evaluate(rep, a * b) == evaluate(rep, a) * evaluate(rep, b));
        }
    }

    TEST_CASE("finite dimension")
    {
        CHECK(finite_dimension(2) == 8);
        CHECK(finite_dimension(6) == 72);
    }
}
