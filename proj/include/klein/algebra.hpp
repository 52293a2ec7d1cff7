#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "klein/group.hpp"
#include "klein/scalars.hpp"

namespace klein {

/// twisted: N_g N_h = mu^T(g,h) N_gh.  untwisted: N_g N_h = N_gh.
enum class Flavor { twisted, untwisted };

std::string to_string(Flavor f);
/// Accepts "twisted" or "untwisted"; throws PreconditionError otherwise.
Flavor parse_flavor(std::string_view text);

/// The structure cocycle of the flavor.
inline Phase structure_cocycle(Flavor f, const GroupElement& g, const GroupElement& h)
{
    return f == Flavor::twisted ? mu_t(g, h) : Phase::one();
}

/// Finitely supported sum of basis symbols N_g. Terms are kept in canonical
/// (m, eps, n) order with no zero coefficients.
class AlgebraElement {
public:
    explicit AlgebraElement(Flavor f) : flavor_(f) {}

    /// c N_g
    static AlgebraElement basis(Flavor f, const GroupElement& g, const Cyclotomic& c = Cyclotomic(1));
    static AlgebraElement unit(Flavor f) { return basis(f, kIdentity); }
    /// The inverse of N_g, namely mu(g, g^-1)^-1 N_{g^-1}.
    static AlgebraElement basis_inverse(Flavor f, const GroupElement& g);

    Flavor flavor() const { return flavor_; }
    const std::map<GroupElement, Cyclotomic>& terms() const { return terms_; }
    Cyclotomic coefficient(const GroupElement& g) const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const GroupElement& g, const Cyclotomic& c);

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    AlgebraElement& operator*=(const Cyclotomic& c);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Cyclotomic& c) { return a *= c; }
    friend AlgebraElement operator*(const Cyclotomic& c, AlgebraElement a) { return a *= c; }
    /// Throws std::invalid_argument on a flavor mismatch.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

    std::string to_string() const;

private:
    void check_flavor(const AlgebraElement& rhs) const;

    Flavor flavor_;
    std::map<GroupElement, Cyclotomic> terms_;
};

struct RelationCheck {
    std::string name;
    std::string relation;
    bool holds = false;
    /// The evaluated left side minus right side; "0" when the relation holds.
    std::string residual;
};

struct PresentationReport {
    Flavor flavor;
    std::vector<RelationCheck> relations;

    bool pass() const;
};

/// Evaluates the four defining relations of the flavor in the algebra, plus
/// the conjugation identities N_s N_X N_s^-1 = N_X^-1 and
/// N_s N_Y N_s^-1 = -+N_Y.
PresentationReport verify_presentation(Flavor f);

/// 2 N^2, the dimension of the quotient algebra of modulus N.
long long finite_dimension(int modulus);

}  // namespace klein
