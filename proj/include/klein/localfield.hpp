#pragma once

// Depth-zero model of F^x, E2^x and E4^x modulo principal units. An element
// is (v, t): the uniformizer exponent and the Teichmuller exponent of zeta,
// a generator of the (q-1)-st roots of unity. E2 and E4 are totally ramified
// with pi_E2^2 = -pi_F and pi_E4^4 = -zeta pi_F.

#include <string>
#include <vector>

#include "klein/identity_check.hpp"
#include "klein/kernels.hpp"
#include "klein/scalars.hpp"

namespace klein {

bool is_prime_power(long long q);

/// Residue field size q. Requires q a prime power with 4 | q - 1 (so that
/// i = zeta^((q-1)/4) lies in F); throws PreconditionError otherwise.
class ResidueData {
public:
    explicit ResidueData(long long q);

    long long q() const { return q_; }
    long long units() const { return q_ - 1; }
    /// Teichmuller exponent of i and of -1.
    long long i_exponent() const { return (q_ - 1) / 4; }
    long long minus_one_exponent() const { return (q_ - 1) / 2; }
    long long reduce(long long t) const;

private:
    long long q_;
};

struct DepthZeroElement {
    long long v = 0;
    long long t = 0;

    friend bool operator==(const DepthZeroElement&, const DepthZeroElement&) = default;
    std::string to_string() const;
};

/// A tame totally ramified extension: degree d and the norm of its chosen
/// uniformizer in F-coordinates.
struct TameExtensionSpec {
    int degree = 1;
    DepthZeroElement uniformizer_norm{1, 0};
    const char* name = "F";
};

inline constexpr TameExtensionSpec kBaseField{1, {1, 0}, "F"};
inline constexpr TameExtensionSpec kE2{2, {1, 0}, "E2"};
inline constexpr TameExtensionSpec kE4{4, {1, 1}, "E4"};

/// N(v, t) = (v, d t) * (uniformizer norm)^v, in F-coordinates.
DepthZeroElement norm(const ResidueData& k, const TameExtensionSpec& ext, const DepthZeroElement& e);

/// The norm of the uniformizer computed independently as the product of its
/// d conjugates xi^j pi_E (xi a primitive d-th root of unity in F), using
/// pi_E^d = -pi_F (d = 2) or -zeta pi_F (d = 4).
DepthZeroElement conjugate_product_norm(const ResidueData& k, int degree);

/// The depth-zero character (v, t) -> u^v * c^t, where c is the image of
/// zeta. Every character used here takes values in the fourth roots of unity,
/// so c is stored as i^j, i.e. zeta -> zeta^(j (q-1)/4).
struct DepthZeroCharacter {
    Phase u;
    Phase zeta_image;
    const char* name = "";

    Phase operator()(const DepthZeroElement& e) const { return u.pow(e.v) * zeta_image.pow(e.t); }
    DepthZeroCharacter inverse() const { return {u.inverse(), zeta_image.inverse(), name}; }
    DepthZeroCharacter pow(int k) const { return {u.pow(k), zeta_image.pow(k), name}; }
};

/// Trivial on pi_F, zeta -> i.
inline constexpr DepthZeroCharacter kEta{Phase::one(), Phase::i(), "eta"};
/// pi_F -> -i, trivial on units.
inline constexpr DepthZeroCharacter kChi0{Phase::minus_i(), Phase::one(), "chi0"};

/// A point (x, y, z) of E2^x x E2^x x E4^x.
struct M0Element {
    DepthZeroElement x;
    DepthZeroElement y;
    DepthZeroElement z;

    friend bool operator==(const M0Element&, const M0Element&) = default;
    std::string to_string() const;
};

/// N(x) N(y) N(z) = 1 in F-coordinates.
bool in_m0(const ResidueData& k, const M0Element& m);

/// All norm-one triples with |v| <= bound in every component and all
/// Teichmuller residues, ordered by (t_x, v_x, t_y, v_y, t_z).
std::vector<M0Element> enumerate_m0(const ResidueData& k, int bound, Execution exec = Execution::parallel);

/// eta(N_E2(y)). Throws PreconditionError when m is not in M0.
Phase sigma0(const ResidueData& k, const M0Element& m);

/// eta^-1(N_E4(z)).
Phase chi4(const ResidueData& k, const DepthZeroElement& z);

/// Over all residues and |v| <= bound:
///   eta(N x) = eta^-1(N y) eta^-1(N z) on M0;
///   eta^2 o N_E2 = 1 on E2^x;
///   eta^2(N_E4 z) = 1 for (x, y, z) in M0;
///   eta^-1 o N_E4 = 1 on E4 units.
std::vector<IdentityCheck> verify_eta_identities(const ResidueData& k, int bound = 2);

/// sigma0(y, x, z) = chi4(z) sigma0(x, y, z) on M0, and chi4(z) equals the
/// unramified character (1 : 1 : -i) evaluated at val_F N_E4(z).
std::vector<IdentityCheck> verify_weyl_twist(const ResidueData& k, int bound = 2);

/// chi4(z) = (-i)^v(z) on E4^x; v(z) even on M0; the stored norm of pi_E4
/// (and of pi_E2) equals the conjugate product; val_F o N = v_E.
std::vector<IdentityCheck> verify_chi4(const ResidueData& k, int bound = 2);

/// sigma0^2 = 1 on M0 and eta^4 = 1 on F^x.
std::vector<IdentityCheck> verify_character_orders(const ResidueData& k, int bound = 2);

}  // namespace klein
