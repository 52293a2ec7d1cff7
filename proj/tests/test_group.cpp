#include "doctest.h"

#include <array>
#include <random>

#include "klein/group.hpp"

using namespace klein;

namespace {

// Independent model: (m, eps, n) acts on Z x Z by (x, y) -> ((-1)^eps x + m, y + n),
// written as a 3x3 integer matrix.
using Affine = std::array<std::array<long long, 3>, 3>;

Affine to_affine(const GroupElement& g)
{
    return {{{g.eps ? -1 : 1, 0, g.m}, {0, 1, g.n}, {0, 0, 1}}};
}

Affine mul(const Affine& a, const Affine& b)
{
    Affine c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

// mu_T written out by cases rather than via Phase::sign.
int mu_sign(const GroupElement& g, const GroupElement& h)
{
    if (g.eps == 0) return 1;
    return (h.n % 2 == 0) ? 1 : -1;
}

}  // namespace

TEST_SUITE("group_cocycle")
{
    TEST_CASE("group law agrees with the affine model")
    {
        const auto elems = window_elements(4);
        CHECK(elems.size() == 9 * 2 * 9);
        for (const auto& g : elems)
            for (const auto& h : elems) CHECK(to_affine(multiply(g, h)) == mul(to_affine(g), to_affine(h)));
    }

    TEST_CASE("inverses and powers")
    {
        for (const auto& g : window_elements(3)) {
            CHECK(multiply(g, inverse(g)) == kIdentity);
            CHECK(multiply(inverse(g), g) == kIdentity);
            CHECK(power(g, 3) == multiply(g, multiply(g, g)));
            CHECK(power(g, -2) == inverse(multiply(g, g)));
            CHECK(power(g, 0) == kIdentity);
        }
    }

    TEST_CASE("words")
    {
        CHECK(word_evaluate(parse_word("s X^2 Y^-1")) == GroupElement{-2, 1, -1});
        CHECK(word_evaluate(parse_word("sXs")) == GroupElement{-1, 0, 0});
        CHECK(word_evaluate(parse_word("")) == kIdentity);
        CHECK_THROWS_AS(parse_word("s Z"), PreconditionError);
        CHECK_THROWS_AS(parse_word("X^"), PreconditionError);
    }

    TEST_CASE("mu_T matches its case-by-case definition")
    {
        for (const auto& g : window_elements(2))
            for (const auto& h : window_elements(2)) CHECK(mu_t(g, h) == Phase::sign(mu_sign(g, h) == 1 ? 0 : 1));
    }

    TEST_CASE("serial and parallel sweeps agree")
    {
        const auto serial = check_cocycle_identity(Cocycle::mu_t(), 3, Execution::serial);
        const auto parallel = check_cocycle_identity(Cocycle::mu_t(), 3, Execution::parallel);
        CHECK(serial.pass());
        CHECK(parallel.pass());
        CHECK(serial.triples_checked == parallel.triples_checked);
        CHECK(serial.triples_checked == 98u * 98u * 98u);
    }

    TEST_CASE("a corrupted cocycle is caught with the same witness on both paths")
    {
        const GroupElement bad_g{1, 1, 0}, bad_h{0, 0, 1};
        const auto corrupted = Cocycle::custom("corrupted", [&](const GroupElement& g, const GroupElement& h) {
            if (g == bad_g && h == bad_h) return Phase::i();
            return mu_t(g, h);
        });
        const auto serial = check_cocycle_identity(corrupted, 2, Execution::serial);
        const auto parallel = check_cocycle_identity(corrupted, 2, Execution::parallel);
        CHECK_FALSE(serial.pass());
        REQUIRE(serial.witness.has_value());
        CHECK(serial.witness == parallel.witness);
        CHECK(serial.triples_checked == parallel.triples_checked);
        const auto [g, h, k] = *serial.witness;
        CHECK_FALSE(corrupted(g, h) * corrupted(multiply(g, h), k) == corrupted(h, k) * corrupted(g, multiply(h, k)));
    }

    TEST_CASE("a non-normalized function is reported")
    {
        const auto c = Cocycle::custom("shifted", [](const GroupElement&, const GroupElement&) { return Phase::i(); });
        const auto r = check_cocycle_identity(c, 1);
        CHECK_FALSE(r.normalized);
        CHECK(r.normalization_witness.has_value());
    }

    TEST_CASE("bicharacter and class indicator")
    {
        const auto mu = Cocycle::mu_t();
        CHECK(commutator_bicharacter(mu, kGenS, kGenY) == Phase::minus_one());
        CHECK(commutator_bicharacter(mu, kGenX, kGenY) == Phase::one());
        CHECK_THROWS_AS(commutator_bicharacter(mu, kGenS, kGenX), PreconditionError);
        CHECK(cohomology_class_indicator(mu) == CohomologyClass::nontrivial);
        CHECK(cohomology_class_indicator(Cocycle::trivial()) == CohomologyClass::trivial);
    }

    TEST_CASE("random coboundaries preserve the class")
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 10; ++trial) {
            const auto f = random_cochain(rng, 2);
            const auto twisted = apply_coboundary(Cocycle::mu_t(), f);
            const auto plain = apply_coboundary(Cocycle::trivial(), f);
            CHECK(check_cocycle_identity(twisted, 1).pass());
            CHECK(commutator_bicharacter(twisted, kGenS, kGenY) == Phase::minus_one());
            CHECK(cohomology_class_indicator(plain) == CohomologyClass::trivial);
        }
        Cochain f(1);
        f.set(kIdentity, Phase::i());
        CHECK_THROWS_AS(apply_coboundary(Cocycle::mu_t(), f), PreconditionError);
    }

    TEST_CASE("projection to the finite quotient is a homomorphism")
    {
        for (int n : {2, 4}) {
            CHECK(quotient_elements(n).size() == static_cast<std::size_t>(2 * n * n));
            for (const auto& g : window_elements(3))
                for (const auto& h : window_elements(3))
                    CHECK(quotient_project(multiply(g, h), n) == multiply(quotient_project(g, n), quotient_project(h, n)));
        }
        CHECK_THROWS_AS(quotient_project(kGenX, 3), PreconditionError);
    }

    TEST_CASE("mu_T descends to even quotients")
    {
        for (int n : {2, 4, 6}) {
            const auto serial = check_cocycle_identity_quotient(Cocycle::mu_t(), n, Execution::serial);
            const auto parallel = check_cocycle_identity_quotient(Cocycle::mu_t(), n, Execution::parallel);
            CHECK(serial.pass());
            CHECK(parallel.pass());
            CHECK(serial.triples_checked == static_cast<std::size_t>(8 * n * n * n * n * n * n));
        }
    }
}
