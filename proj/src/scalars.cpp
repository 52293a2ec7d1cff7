#include "klein/scalars.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace klein {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Integer> compute_cyclotomic(int n)
{
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact long division.
    std::vector<Integer> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<Integer> den = compute_cyclotomic(d);
        const std::size_t dd = den.size() - 1;
        std::vector<Integer> quot(num.size() - dd, 0);
        for (std::size_t k = num.size(); k-- > dd;) {
            Integer c = num[k];  // den is monic
            quot[k - dd] = c;
            for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
        }
        num = std::move(quot);
    }
    return num;
}

constexpr int kTableSize = 129;

const std::vector<Integer>& phi_poly(int n)
{
    static const std::array<std::vector<Integer>, kTableSize> table = [] {
        std::array<std::vector<Integer>, kTableSize> t;
        for (int k = 1; k < kTableSize; ++k) t[k] = compute_cyclotomic(k);
        return t;
    }();
    if (n >= 1 && n < kTableSize) return table[n];
    thread_local std::vector<Integer> scratch;
    scratch = compute_cyclotomic(n);
    return scratch;
}

// Reduces p modulo the monic polynomial phi; result has length deg(phi).
Poly reduce_mod(Poly p, const std::vector<Integer>& phi)
{
    const std::size_t d = phi.size() - 1;
    for (std::size_t k = p.size(); k-- > d;) {
        if (p[k] == 0) continue;
        Rational c = p[k];
        for (std::size_t j = 0; j <= d; ++j) p[k - d + j] -= c * phi[j];
    }
    p.resize(d, Rational(0));
    return p;
}

// (quotient, remainder) of a / b over Q; b nonzero and trimmed.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b)
{
    trim(a);
    if (a.size() < b.size()) return {Poly{}, a};
    Poly q(a.size() - b.size() + 1, Rational(0));
    const Rational lead = b.back();
    for (std::size_t k = a.size(); k >= b.size(); --k) {
        const std::size_t top = k - 1;
        if (a[top] == 0) continue;
        Rational c = a[top] / lead;
        const std::size_t shift = top - (b.size() - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Poly poly_sub(Poly a, const Poly& b)
{
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

bool is_perfect_square(const Integer& n, Integer& root)
{
    if (n < 0) return false;
    root = sqrt(n);
    return root * root == n;
}

std::optional<Rational> rational_sqrt(const Rational& r)
{
    if (r < 0) return std::nullopt;
    Integer a, b;
    if (!is_perfect_square(r.get_num(), a) || !is_perfect_square(r.get_den(), b)) return std::nullopt;
    Rational out(a, b);
    out.canonicalize();
    return out;
}

// Fraction of a full turn of a nonzero value known exactly through its
// decomposition; used to pick a square root deterministically.
bool angle_in_lower_half(const ScaledRoot& s)
{
    // exponent / order in [0, 1/2)
    return 2 * s.exponent < s.order;
}

}  // namespace

std::string to_string(const Rational& r)
{
    return r.get_str();
}

std::vector<Integer> cyclotomic_polynomial(int n)
{
    if (n < 1) throw PreconditionError("cyclotomic_polynomial: N must be positive");
    return phi_poly(n);
}

int totient(int n)
{
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}

Cyclotomic::Cyclotomic(const Rational& r) : conductor_(1), coeffs_{r} {}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs))
{
    if (conductor_ != 1 && std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; })) {
        Rational c0 = coeffs_[0];
        conductor_ = 1;
        coeffs_ = {c0};
    }
}

Cyclotomic Cyclotomic::gaussian(const Rational& re, const Rational& im)
{
    return Cyclotomic(4, {re, im});
}

Cyclotomic Cyclotomic::root_of_unity(int n, long long k)
{
    if (n < 1) throw PreconditionError("root_of_unity: N must be positive");
    const long long e = ((k % n) + n) % n;
    Poly p(static_cast<std::size_t>(e) + 1, Rational(0));
    p[e] = 1;
    return Cyclotomic(n, reduce_mod(std::move(p), phi_poly(n)));
}

bool Cyclotomic::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const
{
    return conductor_ == 1;
}

int Cyclotomic::common_conductor(int a, int b)
{
    if (a == b || b == 1) return a;
    if (a == 1) return b;
    if (b % a == 0) return b;
    if (a % b == 0) return a;
    throw std::domain_error("incompatible conductors " + std::to_string(a) + " and " + std::to_string(b));
}

Cyclotomic Cyclotomic::promote(int m) const
{
    if (m == conductor_ || conductor_ == 1) return *this;
    if (m < 1 || m % conductor_ != 0)
        throw std::domain_error("cannot promote conductor " + std::to_string(conductor_) + " to " + std::to_string(m));
    const int step = m / conductor_;
    Poly p((coeffs_.size() - 1) * step + 1, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
    Cyclotomic out;
    out.conductor_ = m;
    out.coeffs_ = reduce_mod(std::move(p), phi_poly(m));
    return out;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs)
{
    if (rhs.conductor_ == 1) {
        coeffs_[0] += rhs.coeffs_[0];
        return *this;
    }
    if (conductor_ == 1) {
        const Rational c = coeffs_[0];
        *this = rhs;
        coeffs_[0] += c;
        return *this;
    }
    const int n = common_conductor(conductor_, rhs.conductor_);
    Cyclotomic a = promote(n);
    const Cyclotomic b = rhs.promote(n);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) a.coeffs_[k] += b.coeffs_[k];
    *this = Cyclotomic(n, std::move(a.coeffs_));
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs)
{
    return *this += -rhs;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs)
{
    if (rhs.conductor_ == 1 || conductor_ == 1) {
        const Rational c = rhs.conductor_ == 1 ? rhs.coeffs_[0] : coeffs_[0];
        if (rhs.conductor_ != 1) {
            coeffs_ = rhs.coeffs_;
            conductor_ = rhs.conductor_;
        }
        for (auto& x : coeffs_) x *= c;
        *this = Cyclotomic(conductor_, std::move(coeffs_));
        return *this;
    }
    const int n = common_conductor(conductor_, rhs.conductor_);
    const Cyclotomic a = promote(n);
    const Cyclotomic b = rhs.promote(n);
    *this = Cyclotomic(n, reduce_mod(poly_mul(a.coeffs_, b.coeffs_), phi_poly(n)));
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs)
{
    return *this *= rhs.inverse();
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero");
    if (conductor_ == 1) return Cyclotomic(1 / coeffs_[0]);

    // Extended Euclid: track s with s * a == r (mod phi).
    const auto& phi_int = phi_poly(conductor_);
    Poly phi(phi_int.begin(), phi_int.end());
    Poly r0 = phi, r1 = coeffs_;
    Poly s0{}, s1{Rational(1)};
    trim(r1);
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant since Phi_N is irreducible.
    const Rational c = r1[0];
    for (auto& x : s1) x /= c;
    return Cyclotomic(conductor_, reduce_mod(std::move(s1), phi_int));
}

Cyclotomic Cyclotomic::pow(long long e) const
{
    Cyclotomic base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Cyclotomic out(1);
    while (k) {
        if (k & 1) out *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    // Rational values are canonical at conductor 1, so a mismatch with a
    // rational side means inequality.
    if (a.conductor_ == 1 || b.conductor_ == 1) return false;
    const int n = Cyclotomic::common_conductor(a.conductor_, b.conductor_);
    return a.promote(n).coeffs_ == b.promote(n).coeffs_;
}

std::complex<double> Cyclotomic::to_complex() const
{
    std::complex<double> out{0.0, 0.0};
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / conductor_;
        out += coeffs_[k].get_d() * std::polar(1.0, angle);
    }
    return out;
}

std::string Cyclotomic::to_string() const
{
    if (conductor_ == 1) return coeffs_[0].get_str();
    std::ostringstream os;
    if (conductor_ == 4) {
        const Rational& re = coeffs_[0];
        const Rational& im = coeffs_[1];
        if (re != 0) os << re.get_str();
        if (im != 0) {
            if (re != 0 && im > 0) os << "+";
            if (im == 1) os << "i";
            else if (im == -1) os << "-i";
            else os << im.get_str() << "i";
        }
        return os.str();
    }
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        if (!first && c > 0) os << "+";
        first = false;
        if (k == 0) {
            os << c.get_str();
            continue;
        }
        if (c == -1) os << "-";
        else if (c != 1) os << c.get_str() << "*";
        os << "zeta" << conductor_;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::optional<ScaledRoot> as_scaled_root_of_unity(const Cyclotomic& a)
{
    if (a.is_zero()) return std::nullopt;
    const int n = a.conductor();
    const int order = (n % 2 == 0) ? n : 2 * n;
    for (int k = 0; k < order; ++k) {
        const Cyclotomic b = a * Cyclotomic::root_of_unity(order, -k);
        if (b.is_rational() && b.rational_part() > 0) return ScaledRoot{b.rational_part(), order, k};
    }
    return std::nullopt;
}

std::optional<Cyclotomic> exact_sqrt(const Cyclotomic& a, int field_conductor)
{
    if (a.is_zero()) return Cyclotomic(0);
    if (field_conductor <= 0) field_conductor = std::lcm(a.conductor(), 4);
    auto fits = [&](const Cyclotomic& r) { return field_conductor % r.conductor() == 0; };

    if (auto s = as_scaled_root_of_unity(a)) {
        if (auto m = rational_sqrt(s->modulus)) {
            ScaledRoot root{*m, s->order, s->exponent / 2};
            if (s->exponent % 2) root = ScaledRoot{*m, 2 * s->order, s->exponent};
            if (!angle_in_lower_half(root)) root.exponent += root.order / 2;
            Cyclotomic out = Cyclotomic(*m) * Cyclotomic::root_of_unity(root.order, root.exponent);
            if (fits(out)) return out;
        }
    }

    if (a.conductor() == 4 && fits(Cyclotomic::i())) {
        // (x + y i)^2 = re + im i  =>  x^2 = (re + |a|)/2, y^2 = (|a| - re)/2.
        const Rational re = a.coefficients()[0];
        const Rational im = a.coefficients()[1];
        auto modulus = rational_sqrt(re * re + im * im);
        if (!modulus) return std::nullopt;
        auto x = rational_sqrt((re + *modulus) / 2);
        auto y = rational_sqrt((*modulus - re) / 2);
        if (!x || !y) return std::nullopt;
        Rational xs = *x, ys = *y;
        if (im < 0) ys = -ys;
        // Pick the root with argument in [0, 1/2): y > 0, or y == 0 and x > 0.
        if (ys < 0 || (ys == 0 && xs < 0)) {
            xs = -xs;
            ys = -ys;
        }
        return Cyclotomic::gaussian(xs, ys);
    }
    return std::nullopt;
}

Cyclotomic random_gaussian(std::mt19937_64& rng, int range)
{
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 3);
    for (;;) {
        const int a = num(rng), da = den(rng), b = num(rng), db = den(rng);
        if (a == 0 && b == 0) continue;
        Rational re(a, da), im(b, db);
        re.canonicalize();
        im.canonicalize();
        return Cyclotomic::gaussian(re, im);
    }
}

std::string Phase::to_string() const
{
    static constexpr std::array<const char*, 4> names{"1", "i", "-1", "-i"};
    return names[k_];
}

}  // namespace klein
