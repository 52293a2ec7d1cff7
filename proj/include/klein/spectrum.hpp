#pragma once

// Coordinates on the torus of unramified twists: homogeneous triples
// (a1 : a2 : a3) modulo the kernel generated by (a,a,a) and (b,b,-b), the
// (b, c) chart modulo J = {+-1}, and the (w, z) = (bc, b/c) chart.

#include <random>
#include <string>
#include <vector>

#include "klein/localfield.hpp"
#include "klein/scalars.hpp"

namespace klein {

struct HomogeneousTriple {
    Cyclotomic a1, a2, a3;

    std::string to_string() const;
};

/// Throws PreconditionError if a coordinate is zero.
HomogeneousTriple make_triple(const Cyclotomic& a1, const Cyclotomic& a2, const Cyclotomic& a3);

/// t2 = (l a1, l a2, +-l a3) for some l != 0.
bool triples_equivalent(const HomogeneousTriple& t1, const HomogeneousTriple& t2);

struct BCPair {
    Cyclotomic b, c;

    friend bool operator==(const BCPair&, const BCPair&) = default;
    std::string to_string() const;
};

/// p ~ q under J: q = p or q = -p.
bool j_equivalent(const BCPair& p, const BCPair& q);
BCPair j_action(const BCPair& p);

struct WZPoint {
    Cyclotomic w, z;

    friend bool operator==(const WZPoint&, const WZPoint&) = default;
    std::string to_string() const;
};

/// (a1 / a3, a2 / a3).
BCPair to_bc(const HomogeneousTriple& t);
/// (b : c : 1), a section of to_bc.
HomogeneousTriple from_bc(const BCPair& p);

/// (bc, b / c).
WZPoint bc_to_wz(const BCPair& p);
/// b = sqrt(wz) (argument in [0, 1/2)), c = w / b. Throws PreconditionError
/// when wz has no square root in Q(zeta_F); see the angle form instead.
BCPair wz_to_bc(const WZPoint& p, int field_conductor = 0);

/// (a2, a1, -i a3).
HomogeneousTriple s_action_homogeneous(const HomogeneousTriple& t);
/// (i c, i b).
BCPair tau_bc(const BCPair& p);
/// (-w, 1 / z).
WZPoint tau_wz(const WZPoint& p);
/// (w, 1 / z).
WZPoint untwisted_involution(const WZPoint& p);

/// A point of the compact torus as fractions of a full turn, reduced mod 1.
struct AnglePoint {
    Rational theta, phi;

    friend bool operator==(const AnglePoint&, const AnglePoint&) = default;
    std::string to_string() const;
};

Rational reduce_turn(const Rational& r);
AnglePoint make_angle(const Rational& theta, const Rational& phi);
/// exp(2 pi i r) as an exact root of unity, expressed in Q(zeta_n) with
/// n = lcm(denominator, field_conductor). Throws PreconditionError if the
/// denominator is too large to represent.
Cyclotomic turn_to_scalar(const Rational& r, int field_conductor = 4);

/// (theta + 1/2, -phi): tau_wz in angles.
AnglePoint tau_wz_angle(const AnglePoint& p);
/// (phi + 1/4, theta + 1/4): tau_bc in angles.
AnglePoint tau_bc_angle(const AnglePoint& p);
/// (theta_b + theta_c, theta_b - theta_c).
AnglePoint bc_to_wz_angle(const AnglePoint& p);
/// ((theta_w + theta_z) / 2, (theta_w - theta_z) / 2); the other preimage
/// differs by (1/2, 1/2), the J-action.
AnglePoint wz_to_bc_angle(const AnglePoint& p);

/// One datum of a torus with its Weyl involution: the sign pattern of the
/// second kernel generator and the scalar multiplying a3 under s.
struct TorusDatum {
    std::string name;
    std::vector<HomogeneousTriple> kernel_generators;
    Cyclotomic twist;

    HomogeneousTriple act(const HomogeneousTriple& t) const { return {t.a2, t.a1, twist * t.a3}; }
    bool in_kernel(const HomogeneousTriple& t) const;
};

/// Depth-zero datum: twist coordinate chi4(pi_E4) from the local-field model
/// over the residue field of size q.
TorusDatum depth_zero_datum(long long q = 5);
/// The comparison datum: twist coordinate chi0(pi_F).
TorusDatum comparison_datum();

/// Kernel classes coincide, the action formulas agree, orbits agree on
/// `samples` random points, and chi0^2 = (1 : 1 : -1) is a kernel class.
std::vector<IdentityCheck> comparison_map_check(std::mt19937_64& rng, int samples = 30);

/// The coordinate identities: kernel membership, to_bc well defined and
/// bijective onto J-classes, the commuting square, tau_bc^2 = J,
/// tau_wz fixed-point-free, the angle forms, and the wz_to_bc round trip.
std::vector<IdentityCheck> verify_coordinates(std::mt19937_64& rng, int samples = 30, int free_samples = 100);

}  // namespace klein
