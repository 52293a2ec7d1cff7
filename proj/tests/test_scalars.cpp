#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "klein/literal.hpp"
#include "klein/matrix.hpp"
#include "klein/scalars.hpp"

using namespace klein;

namespace {

// Evaluates Phi_n numerically as the product over primitive roots.
std::complex<double> phi_numeric(int n, std::complex<double> x)
{
    std::complex<double> out = 1;
    for (int k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) out *= x - std::polar(1.0, 2 * std::numbers::pi * k / n);
    return out;
}

std::complex<double> poly_at(const std::vector<Integer>& c, std::complex<double> x)
{
    std::complex<double> out = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * x + it->get_d();
    return out;
}

Cyclotomic random_element(std::mt19937_64& rng, int conductor)
{
    std::uniform_int_distribution<int> coef(-4, 4);
    Cyclotomic out;
    for (int k = 0; k < conductor; ++k) out += Cyclotomic(coef(rng)) * Cyclotomic::root_of_unity(conductor, k);
    return out;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9 * (1 + std::abs(a)); }

}  // namespace

TEST_SUITE("scalars")
{
    TEST_CASE("cyclotomic polynomials match the product over primitive roots")
    {
        for (int n = 1; n <= 30; ++n) {
            const auto c = cyclotomic_polynomial(n);
            CHECK(static_cast<int>(c.size()) - 1 == totient(n));
            const std::complex<double> x(0.3, 0.7);
            CHECK(close(poly_at(c, x), phi_numeric(n, x)));
        }
    }

    TEST_CASE("small cyclotomic polynomials")
    {
        CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
        CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
        CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
        CHECK_THROWS_AS(cyclotomic_polynomial(0), PreconditionError);
    }

    TEST_CASE("roots of unity have the right order")
    {
        for (int n : {1, 2, 3, 4, 5, 6, 8, 12, 24}) {
            const Cyclotomic z = Cyclotomic::root_of_unity(n, 1);
            CHECK(z.pow(n) == Cyclotomic(1));
            for (int k = 1; k < n; ++k) CHECK_FALSE(z.pow(k) == Cyclotomic(1));
        }
        CHECK(Cyclotomic::i() * Cyclotomic::i() == Cyclotomic(-1));
        CHECK(Cyclotomic::root_of_unity(8, 2) == Cyclotomic::i());
    }

    TEST_CASE("field axioms on random elements")
    {
        std::mt19937_64 rng(7);
        for (int n : {4, 8, 12, 24}) {
            for (int trial = 0; trial < 20; ++trial) {
                const Cyclotomic a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(a - a == Cyclotomic());
                if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
                CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
            }
        }
    }

    TEST_CASE("promotion and strict conductors")
    {
        const Cyclotomic i = Cyclotomic::i();
        CHECK(i.promote(8) == i);
        CHECK(i.promote(12).conductor() == 12);
        CHECK(i + Cyclotomic::root_of_unity(8, 1) == Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 2));
        CHECK_THROWS_AS(i + Cyclotomic::root_of_unity(3, 1), std::domain_error);
        CHECK_THROWS_AS(Cyclotomic().inverse(), std::domain_error);
        CHECK(Cyclotomic(Rational(3, 4)).is_rational());
    }

    TEST_CASE("exact square roots")
    {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 40; ++trial) {
            const Cyclotomic a = random_gaussian(rng);
            const auto r = exact_sqrt(a * a);
            REQUIRE(r.has_value());
            CHECK(*r * *r == a * a);
            CHECK((*r == a || *r == -a));
        }
        const auto s = exact_sqrt(Cyclotomic::i(), 8);
        CHECK_FALSE(exact_sqrt(Cyclotomic::i()).has_value());
        REQUIRE(s.has_value());
        CHECK(*s == Cyclotomic::root_of_unity(8, 1));
        CHECK_FALSE(exact_sqrt(Cyclotomic(2), 4).has_value());
    }

    TEST_CASE("scaled roots of unity")
    {
        const Cyclotomic a = Cyclotomic(Rational(3, 2)) * Cyclotomic::root_of_unity(8, 3);
        const auto d = as_scaled_root_of_unity(a);
        REQUIRE(d.has_value());
        CHECK(d->modulus == Rational(3, 2));
        CHECK(d->order == 8);
        CHECK(d->exponent == 3);
        CHECK_FALSE(as_scaled_root_of_unity(Cyclotomic::gaussian(1, 1)).has_value());
    }

    TEST_CASE("phase arithmetic")
    {
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                const Phase p = Phase::from_power(a), q = Phase::from_power(b);
                CHECK((p * q).to_scalar() == p.to_scalar() * q.to_scalar());
                CHECK(p * p.inverse() == Phase::one());
            }
        CHECK(Phase::sign(3) == Phase::minus_one());
        CHECK(Phase::i().pow(-1) == Phase::minus_i());
    }
}

TEST_SUITE("literal")
{
    TEST_CASE("parses rationals, Gaussian rationals and roots of unity")
    {
        CHECK(parse_scalar("3") == Cyclotomic(3));
        CHECK(parse_scalar("-2/6") == Cyclotomic(Rational(-1, 3)));
        CHECK(parse_scalar("1+2i") == Cyclotomic::gaussian(1, 2));
        CHECK(parse_scalar("i") == Cyclotomic::i());
        CHECK(parse_scalar("zeta(8,3)") == Cyclotomic::root_of_unity(8, 3));
        CHECK(parse_scalar("(1 + i)*(1 - i)") == Cyclotomic(2));
        CHECK(parse_scalar("2i") == Cyclotomic::gaussian(0, 2));
        CHECK(parse_scalar("zeta(8,-1) * zeta(8,1)") == Cyclotomic(1));
        CHECK(parse_scalar("i + zeta(3,1)") == Cyclotomic::root_of_unity(12, 3) + Cyclotomic::root_of_unity(12, 4));
    }

    TEST_CASE("rejects malformed literals")
    {
        for (const char* bad : {"", "1/", "1+", "zeta", "zeta(0,1)", "x", "(1", "2**3", "0^-1"})
            CHECK_THROWS_AS(parse_scalar(bad), PreconditionError);
        CHECK_THROWS(parse_scalar("1/0"));
    }
}

TEST_SUITE("matrix")
{
    TEST_CASE("inverse, determinant and powers")
    {
        const Cyclotomic i = Cyclotomic::i();
        const Matrix m{{Cyclotomic(1), i}, {Cyclotomic(2), Cyclotomic(3)}};
        CHECK(m.determinant() == Cyclotomic(3) - Cyclotomic(2) * i);
        CHECK(m * m.inverse() == Matrix::identity(2));
        CHECK(m.pow(3) == m * m * m);
        CHECK(m.pow(-2) * m.pow(2) == Matrix::identity(2));
        CHECK_THROWS_AS((Matrix{{Cyclotomic(1), Cyclotomic(2)}, {Cyclotomic(2), Cyclotomic(4)}}).inverse(), std::domain_error);
    }

    TEST_CASE("nullspace vectors are annihilated")
    {
        const Matrix m{{Cyclotomic(1), Cyclotomic(2), Cyclotomic(3)}, {Cyclotomic(2), Cyclotomic(4), Cyclotomic(6)}};
        const auto ns = nullspace(m);
        CHECK(ns.size() == 2);
        for (const auto& v : ns) {
            for (std::size_t r = 0; r < m.rows(); ++r) {
                Cyclotomic s;
                for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
                CHECK(s.is_zero());
            }
        }
    }
}
