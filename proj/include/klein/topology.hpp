#pragma once

// Quotients of the torus R^2 / Z^2 by finite groups of affine maps
// x -> A x + t. Points are pairs of rationals mod 1, i.e. fractions of a full
// turn in each angle.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "klein/identity_check.hpp"
#include "klein/kernels.hpp"
#include "klein/scalars.hpp"
#include "klein/smith.hpp"

namespace klein {

using TorusPoint = std::array<Rational, 2>;

TorusPoint reduce_point(const TorusPoint& p);
std::string to_string(const TorusPoint& p);

struct TorusAutomorphism {
    /// 2x2, det +-1.
    IntMatrix a = IntMatrix::identity(2);
    /// Reduced to [0, 1).
    TorusPoint t{Rational(0), Rational(0)};

    /// Validates det A = +-1 and reduces t. Throws PreconditionError.
    static TorusAutomorphism make(const IntMatrix& a, const TorusPoint& t);
    static TorusAutomorphism identity() { return {}; }

    long long det() const;
    bool is_identity() const;
    /// A p + t, reduced.
    TorusPoint apply(const TorusPoint& p) const;

    friend bool operator==(const TorusAutomorphism&, const TorusAutomorphism&) = default;
    std::string to_string() const;
};

/// (A1, t1) o (A2, t2) = (A1 A2, A1 t2 + t1).
TorusAutomorphism compose(const TorusAutomorphism& f, const TorusAutomorphism& g);
TorusAutomorphism inverse(const TorusAutomorphism& f);

/// Parses "a,b,c,d" (row-major) and "p/q,r/s". Throws PreconditionError.
TorusAutomorphism parse_automorphism(const std::string& matrix, const std::string& translation);

struct DeckGroup {
    std::vector<TorusAutomorphism> generators;
    /// Identity first, then breadth-first order from the generators.
    std::vector<TorusAutomorphism> elements;

    std::size_t order() const { return elements.size(); }
    /// Index of an element, or elements.size() if absent.
    std::size_t index_of(const TorusAutomorphism& f) const;
};

/// Closure of the generators. Requires every translation denominator to be
/// at most `bound`; throws PreconditionError("group too large or infinite")
/// once the closure exceeds 12 bound^2 elements.
DeckGroup generate_group(const std::vector<TorusAutomorphism>& gens, int bound);

/// Solutions of (A - I) x = -t mod Z^2.
struct FixedLocus {
    enum class Kind { empty, points, circles, everything };

    Kind kind = Kind::empty;
    /// The fixed points, or one base point per circle.
    std::vector<TorusPoint> points;
    /// Primitive integer direction of the circles.
    std::array<long long, 2> direction{0, 0};

    bool is_empty() const { return kind == Kind::empty; }
    bool contains(const TorusPoint& p) const;
    /// "no fixed points", "fixed circles at phi in {0, 1/2}", ...
    std::string describe() const;
};

/// Via the Smith normal form of A - I.
FixedLocus fixed_points(const TorusAutomorphism& m);

/// Brute-force oracle: all grid points (i/G, j/G) fixed by m.
/// Requires G to be a multiple of every translation denominator.
std::vector<TorusPoint> grid_fixed_points(const TorusAutomorphism& m, long long grid,
                                          Execution exec = Execution::parallel);

/// A grid fine enough to contain every isolated fixed point of m and a
/// sample of every fixed circle.
long long oracle_grid(const TorusAutomorphism& m);

enum class SurfaceType { torus, klein_bottle, not_free };
std::string to_string(SurfaceType t);

struct SurfaceReport {
    bool free = true;
    /// First non-identity element with a fixed point, and its locus.
    std::optional<TorusAutomorphism> fixed_element;
    FixedLocus fixed_locus;
    std::size_t order = 1;
    /// chi(T^2) / order, when free.
    std::optional<long long> euler;
    bool orientable = true;
    std::optional<AbelianGroup> h1;
    SurfaceType classification = SurfaceType::torus;

    /// "free, order 4, χ=0, non-orientable, H₁ = ℤ⊕ℤ/2: KLEIN BOTTLE".
    std::string summary() const;
};

SurfaceReport classify(const DeckGroup& g);

/// First homology of T^2 / G from the group of lifts to R^2: generators e1,
/// e2 and one lift per group element, abelianized. Throws PreconditionError
/// when G does not act freely.
AbelianGroup h1_of_quotient(const DeckGroup& g);

/// The shipped groups:
///   bc        (b, c)-angles: (theta, phi) -> (phi + 1/4, theta + 1/4), order 4
///   wz        (w, z)-angles: (theta, phi) -> (theta + 1/2, -phi), order 2
///   untwisted (theta, phi) -> (theta, -phi)
///   j-only    (theta, phi) -> (theta + 1/2, phi + 1/2)
enum class Preset { bc, wz, untwisted, j_only };
std::string to_string(Preset p);
/// Throws PreconditionError on an unknown name.
Preset parse_preset(const std::string& name);
DeckGroup preset_group(Preset p);

/// Automorphisms with |a_ij| <= 2 and translation denominators <= 8.
TorusAutomorphism random_automorphism(std::mt19937_64& rng);

/// The topology identities: the four presets classify as expected, H1
/// matches orientability, and the Smith route agrees with the grid oracle on
/// `samples` random automorphisms.
std::vector<IdentityCheck> verify_topology(std::mt19937_64& rng, int samples = 50);

}  // namespace klein
