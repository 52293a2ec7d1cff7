#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace klein {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& r);

/// Raised when an operation's precondition is violated by its input.
/// The CLI maps this to exit code 2.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The N-th cyclotomic polynomial, lowest-degree coefficient first.
/// Computed by dividing x^N - 1 by the product of Phi_d over proper divisors d.
std::vector<Integer> cyclotomic_polynomial(int n);

/// Euler's totient; equals deg Phi_N.
int totient(int n);

/// An element of Q(zeta_N), stored as dense coefficients of a polynomial of
/// degree < phi(N) in zeta_N. Values with different conductors combine only
/// when one conductor divides the other; the smaller one is promoted.
class Cyclotomic {
public:
    /// Zero. Rational values are always held with conductor 1 so that they
    /// combine with any field.
    Cyclotomic();
    explicit Cyclotomic(const Rational& r);
    Cyclotomic(long value) : Cyclotomic(Rational(value)) {}
    Cyclotomic(int value) : Cyclotomic(Rational(value)) {}

    /// a + b i in Q(i).
    static Cyclotomic gaussian(const Rational& re, const Rational& im);
    /// zeta_N^k reduced modulo Phi_N.
    static Cyclotomic root_of_unity(int n, long long k);
    static Cyclotomic i() { return root_of_unity(4, 1); }

    int conductor() const { return conductor_; }
    std::span<const Rational> coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Only meaningful when is_rational().
    Rational rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

    /// Re-express in Q(zeta_m); m must be a multiple of conductor().
    Cyclotomic promote(int m) const;

    Cyclotomic inverse() const;
    Cyclotomic pow(long long e) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator/=(const Cyclotomic& rhs);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Double-precision value at zeta_N = exp(2 pi i / N). Output paths only.
    std::complex<double> to_complex() const;

    /// Human-readable form: Gaussian rationals as "a+bi", otherwise a
    /// polynomial in zeta_N.
    std::string to_string() const;

private:
    Cyclotomic(int conductor, std::vector<Rational> coeffs);
    static int common_conductor(int a, int b);

    int conductor_;
    std::vector<Rational> coeffs_;
};

inline std::string to_string(const Cyclotomic& c) { return c.to_string(); }

/// Square root inside Q(zeta_F), F = field_conductor (default: lcm of the
/// value's conductor and 4), when one is representable by the supported
/// constructions: Gaussian rationals (closed-form formula) and rational
/// multiples of a root of unity. Among the two roots, returns the one whose
/// argument lies in [0, 1/2) of a turn.
std::optional<Cyclotomic> exact_sqrt(const Cyclotomic& a, int field_conductor = 0);

/// a = modulus * exp(2 pi i * exponent / order) with modulus > 0.
struct ScaledRoot {
    Rational modulus;
    int order = 1;
    int exponent = 0;
};

/// Decomposes a as a positive rational times a root of unity, if possible.
/// The order is the conductor of a, doubled when the conductor is odd.
std::optional<ScaledRoot> as_scaled_root_of_unity(const Cyclotomic& a);

/// A nonzero Gaussian rational a + b i with numerators in [-range, range] and
/// denominators in [1, 3]; used by the randomized property checks.
Cyclotomic random_gaussian(std::mt19937_64& rng, int range = 5);

/// A fourth root of unity i^k. All cocycle values and depth-zero character
/// values in this library live in this group.
class Phase {
public:
    constexpr Phase() = default;
    static constexpr Phase from_power(long long k) { return Phase(static_cast<std::uint8_t>(((k % 4) + 4) % 4)); }
    static constexpr Phase one() { return Phase(0); }
    static constexpr Phase i() { return Phase(1); }
    static constexpr Phase minus_one() { return Phase(2); }
    static constexpr Phase minus_i() { return Phase(3); }
    /// (-1)^e
    static constexpr Phase sign(long long e) { return (e % 2 == 0) ? one() : minus_one(); }

    constexpr int power() const { return k_; }
    constexpr Phase inverse() const { return from_power(-static_cast<long long>(k_)); }
    constexpr Phase pow(long long e) const { return from_power((k_ * (((e % 4) + 4) % 4))); }

    friend constexpr Phase operator*(Phase a, Phase b) { return from_power(a.k_ + b.k_); }
    friend constexpr Phase operator/(Phase a, Phase b) { return a * b.inverse(); }
    friend constexpr bool operator==(Phase, Phase) = default;

    Cyclotomic to_scalar() const { return Cyclotomic::root_of_unity(4, k_); }
    std::string to_string() const;

private:
    constexpr explicit Phase(std::uint8_t k) : k_(k) {}
    std::uint8_t k_ = 0;
};

}  // namespace klein
