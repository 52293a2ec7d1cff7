#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klein/algebra.hpp"
#include "klein/kernels.hpp"
#include "klein/matrix.hpp"

namespace klein {

/// A character of B = C[X^+-1, Y^+-1]: X -> z, Y -> w.
struct BCharacter {
    Cyclotomic w;
    Cyclotomic z;

    friend bool operator==(const BCharacter&, const BCharacter&) = default;
    std::string to_string() const;
};

enum class Family { twisted_simple, untwisted_simple, untwisted_character, induced, custom };

/// Matrices for the generators s, X, Y of one flavor.
struct Representation {
    Flavor flavor = Flavor::twisted;
    Family family = Family::custom;
    Matrix s;
    Matrix x;
    Matrix y;
    /// (w, z) for the 2-dimensional families and induced modules,
    /// (w, delta, eps) for characters.
    std::vector<Cyclotomic> params;

    std::size_t dimension() const { return s.rows(); }
    std::string label() const;
};

/// Y -> diag(w, -w), s -> swap, X -> diag(z, 1/z).
Representation make_twisted_simple(const Cyclotomic& w, const Cyclotomic& z);
/// Y -> diag(w, w), s -> swap, X -> diag(z, 1/z); requires z != +-1.
Representation make_untwisted_simple(const Cyclotomic& w, const Cyclotomic& z);
/// (Y, X, s) -> (w, delta, eps) with delta, eps in {1, -1}.
Representation make_untwisted_character(const Cyclotomic& w, int delta, int eps);

/// rho(N_g) = (sign) rho(X)^m rho(s)^eps rho(Y)^n, where the sign is
/// (-1)^(eps n) in the twisted flavor and 1 otherwise.
Matrix image(const Representation& rep, const GroupElement& g);

/// Linear extension of N_g -> image(rep, g).
Matrix evaluate(const Representation& rep, const AlgebraElement& a);

/// The defining relations of the flavor, checked on the generator matrices,
/// plus invertibility of each generator.
std::vector<RelationCheck> check_relations(const Representation& rep);
bool relations_hold(const Representation& rep);

struct HomomorphismReport {
    bool pass = true;
    std::size_t pairs_checked = 0;
    std::optional<std::array<GroupElement, 2>> witness;
};

/// rho(g) rho(h) = mu(g,h) rho(gh) for all g, h with |m|, |n| <= window.
HomomorphismReport check_homomorphism(const Representation& rep, int window);

struct OneDimensionalSolution {
    Flavor flavor = Flavor::twisted;
    bool satisfiable = false;
    /// Case analysis, one reduced equation per step.
    std::vector<std::string> derivation;
    /// The equation that has no solution in nonzero scalars, when unsatisfiable.
    std::string witness_equation;
    /// Description of the solution family, when satisfiable.
    std::string family;

    /// Whether (s, x, y) lies in the solution set.
    bool admits(const Cyclotomic& s, const Cyclotomic& x, const Cyclotomic& y) const;
};

/// Solves s^2 = 1, s x = x^-1 s, s y = b y s in nonzero scalars, where b is
/// the commutator bicharacter of the flavor's cocycle at (s, Y).
OneDimensionalSolution solve_one_dimensional(Flavor f);

/// Simultaneous eigencharacters of the commuting pair (X, Y) of a
/// representation of dimension at most 2, in eigenvector order.
/// Throws std::domain_error when no common eigenbasis exists over the field.
std::vector<BCharacter> restrict_to_B(const Representation& rep);

/// The module A (x)_B chi on the basis (1 (x) 1, N_s (x) 1), with the action
/// computed by multiplying in the algebra.
Representation induce_from_character(Flavor f, const BCharacter& chi);

/// The involution on characters whose orbits index the simples:
/// (w, z) -> (-w, 1/z) twisted, (w, 1/z) untwisted.
BCharacter partner_character(Flavor f, const BCharacter& chi);

/// dim {T : T rho(g) = rho(g) T for g in s, X, Y}.
std::size_t commutant_dimension(const Representation& rep);

/// An invertible T with T rho1(g) = rho2(g) T for every generator, if any.
std::optional<Matrix> find_intertwiner(const Representation& r1, const Representation& r2);

/// An orbit of the character involution on (Z/N)^2, characters given by
/// exponents (a, b) meaning (w, z) = (zeta_N^a, zeta_N^b).
struct CensusOrbit {
    std::vector<std::pair<int, int>> characters;
    /// Dimensions of the simples attached to the orbit.
    std::vector<int> dimensions;
};

struct CensusReport {
    int modulus = 0;
    Flavor flavor = Flavor::twisted;
    std::vector<CensusOrbit> orbits;
    std::map<int, int> count_by_dimension;
    long long sum_of_squares = 0;
    long long expected = 0;
    bool relations_ok = true;
    bool quotient_ok = true;
    bool commutants_ok = true;
    bool restrictions_ok = true;
    bool non_isomorphic_ok = true;
    std::size_t intertwiner_pairs = 0;
    std::vector<std::string> failures;

    std::size_t simples() const;
    bool pass() const;
    std::string summary() const;
};

/// Builds every simple module of the quotient algebra of modulus N from the
/// orbits of the character involution and certifies the list: relations,
/// X^N = Y^N = 1, commutant dimension 1, restriction equals the orbit,
/// sum of squared dimensions 2 N^2, and intertwiner absence between distinct
/// simples (all pairs for N <= 4, a deterministic sample otherwise).
CensusReport finite_census(int modulus, Flavor f, Execution exec = Execution::parallel);

}  // namespace klein
