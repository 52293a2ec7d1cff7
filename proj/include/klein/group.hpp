#pragma once

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "klein/kernels.hpp"
#include "klein/scalars.hpp"

namespace klein {

/// (m, eps, n) in (Z_A x| Z/2) x Z_B, with
/// (m1,e1,n1)(m2,e2,n2) = (m1 + (-1)^e1 m2, e1 ^ e2, n1 + n2).
struct GroupElement {
    long long m = 0;
    int eps = 0;
    long long n = 0;

    auto operator<=>(const GroupElement&) const = default;
    std::string to_string() const;
};

inline constexpr GroupElement kIdentity{0, 0, 0};
inline constexpr GroupElement kGenS{0, 1, 0};
inline constexpr GroupElement kGenX{1, 0, 0};
inline constexpr GroupElement kGenY{0, 0, 1};

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
GroupElement power(const GroupElement& g, long long k);

enum class Generator { s, X, Y };

struct Letter {
    Generator gen;
    long long exponent = 1;
};

/// Left-to-right product of generator powers; the empty word is the identity.
GroupElement word_evaluate(std::span<const Letter> word);

/// Parses words such as "s X^2 Y^-1" or "sXs". Throws PreconditionError.
std::vector<Letter> parse_word(std::string_view text);

/// All elements with |m|, |n| <= window, in canonical (m, eps, n) order.
std::vector<GroupElement> window_elements(int window);

/// Element of the quotient by the normal subgroup N Z_A x N Z_B.
struct FiniteQuotientElement {
    int modulus = 2;
    int m = 0;
    int eps = 0;
    int n = 0;

    auto operator<=>(const FiniteQuotientElement&) const = default;
    GroupElement lift() const { return {m, eps, n}; }
    std::string to_string() const;
};

/// Reduces m and n modulo N. Odd N is rejected: mu^T only depends on n mod N
/// when N is even.
FiniteQuotientElement quotient_project(const GroupElement& g, int modulus);
FiniteQuotientElement multiply(const FiniteQuotientElement& g, const FiniteQuotientElement& h);
/// All 2 N^2 elements in canonical order.
std::vector<FiniteQuotientElement> quotient_elements(int modulus);

enum class CocycleKind { trivial, mu_t, coboundary_modified, custom };

std::string to_string(CocycleKind kind);

/// A unit-valued function of two group elements. Values are fourth roots of
/// unity, which covers every cocycle and coboundary built here.
class Cocycle {
public:
    using Rule = std::function<Phase(const GroupElement&, const GroupElement&)>;

    Cocycle(CocycleKind kind, std::string name, Rule rule)
        : kind_(kind), name_(std::move(name)), rule_(std::move(rule))
    {
    }

    static Cocycle trivial();
    static Cocycle mu_t();
    static Cocycle custom(std::string name, Rule rule) { return {CocycleKind::custom, std::move(name), std::move(rule)}; }

    Phase operator()(const GroupElement& g, const GroupElement& h) const { return rule_(g, h); }

    CocycleKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

private:
    CocycleKind kind_;
    std::string name_;
    Rule rule_;
};

/// (-1)^(eps_g * n_h).
constexpr Phase mu_t(const GroupElement& g, const GroupElement& h)
{
    return Phase::sign(static_cast<long long>(g.eps) * h.n);
}

/// A 1-cochain on the window |m|, |n| <= window, equal to 1 outside it.
class Cochain {
public:
    Cochain() = default;
    explicit Cochain(int window);

    Phase operator()(const GroupElement& g) const
    {
        const auto k = index(g);
        return k ? values_[*k] : Phase::one();
    }
    /// g must lie in the window.
    void set(const GroupElement& g, Phase value);
    int window() const { return window_; }

private:
    std::optional<std::size_t> index(const GroupElement& g) const
    {
        if (g.m < -window_ || g.m > window_ || g.n < -window_ || g.n > window_) return std::nullopt;
        const std::size_t side = 2 * static_cast<std::size_t>(window_) + 1;
        return (static_cast<std::size_t>(g.m + window_) * 2 + static_cast<std::size_t>(g.eps)) * side +
               static_cast<std::size_t>(g.n + window_);
    }

    int window_ = -1;
    std::vector<Phase> values_;
};

/// Values drawn uniformly from {1, i, -1, -i} on every element of the window
/// except the identity.
Cochain random_cochain(std::mt19937_64& rng, int window);

/// c * (df) with df(g,h) = f(g) f(h) / f(gh). Throws PreconditionError if
/// f(e) != 1.
Cocycle apply_coboundary(const Cocycle& c, Cochain f);

struct CocycleReport {
    bool normalized = true;
    bool identity_holds = true;
    /// Quotient checks only: values agree on every lift shifted by N.
    bool descends = true;
    std::size_t elements = 0;
    std::size_t triples_checked = 0;
    std::optional<GroupElement> normalization_witness;
    std::optional<std::array<GroupElement, 3>> witness;
    std::optional<std::array<GroupElement, 2>> lift_witness;

    bool pass() const { return normalized && identity_holds && descends; }
    std::string describe() const;
};

/// Normalization and the 2-cocycle identity on every triple from the window.
CocycleReport check_cocycle_identity(const Cocycle& c, int window, Execution exec = Execution::parallel);

/// Same on the full finite quotient of modulus N, using the cocycle evaluated
/// on canonical lifts. Also checks that those values do not depend on the lift.
CocycleReport check_cocycle_identity_quotient(const Cocycle& c, int modulus, Execution exec = Execution::parallel);

/// c(g,h) / c(h,g). Throws PreconditionError("bicharacter undefined") when g
/// and h do not commute.
Phase commutator_bicharacter(const Cocycle& c, const GroupElement& g, const GroupElement& h);

enum class CohomologyClass { trivial, nontrivial };

std::string to_string(CohomologyClass cls);

/// Class of c restricted to <s, Y> = Z/2 x Z. The commutator bicharacter at
/// (s, Y) is a complete invariant there.
CohomologyClass cohomology_class_indicator(const Cocycle& c);

}  // namespace klein
