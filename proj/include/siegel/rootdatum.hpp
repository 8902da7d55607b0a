#pragma once

#include "siegel/error.hpp"
#include "siegel/linalg.hpp"
#include "siegel/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace siegel {

// Lattice vectors for the similitude group of genus g: characters are
// integer combinations of e_1..e_{g+1}, cocharacters of f_1..f_{g+1}.
struct Character {
    Int g = 0;
    std::vector<Int> coeffs;  // length g+1

    Character() = default;
    Character(Int genus, std::vector<Int> c) : g(genus), coeffs(std::move(c)) {
        check(coeffs.size() == static_cast<size_t>(g + 1), "BadLength",
              "character needs g+1 coefficients");
    }
    bool operator==(const Character& o) const { return g == o.g && coeffs == o.coeffs; }
    std::string to_string() const;
};

struct Cocharacter {
    Int g = 0;
    std::vector<Int> coeffs;  // length g+1

    Cocharacter() = default;
    Cocharacter(Int genus, std::vector<Int> c) : g(genus), coeffs(std::move(c)) {
        check(coeffs.size() == static_cast<size_t>(g + 1), "BadLength",
              "cocharacter needs g+1 coefficients");
    }
    bool operator==(const Cocharacter& o) const { return g == o.g && coeffs == o.coeffs; }
    bool operator!=(const Cocharacter& o) const { return !(*this == o); }
    bool operator<(const Cocharacter& o) const {  // lexicographic; map key order
        if (g != o.g) return g < o.g;
        return coeffs < o.coeffs;
    }
    std::string to_string() const;
};

Character char_add(const Character& x, const Character& y);
Character char_sub(const Character& x, const Character& y);
Cocharacter cochar_add(const Cocharacter& x, const Cocharacter& y);
Cocharacter cochar_sub(const Cocharacter& x, const Cocharacter& y);
Cocharacter cochar_scale(Int n, const Cocharacter& x);

// <e_i, f_j> = delta_ij, extended bilinearly.
Int pairing(const Character& x, const Cocharacter& y);

struct RootDatum {
    Int g = 0;
    std::vector<Character> simple_roots;       // alpha_1 .. alpha_g
    std::vector<Cocharacter> simple_coroots;   // alpha_1^vee .. alpha_g^vee
    std::vector<Character> positive_roots;     // g^2 of them
    std::vector<Cocharacter> positive_coroots;
    Character rho2;       // sum of positive roots (rho doubled to stay integral)
    Cocharacter rho2_hat; // sum of positive coroots
};

RootDatum build_root_datum(Int g);

// Chamber test: 2a_1 >= 2a_2 >= ... >= 2a_g >= a_{g+1}.
bool is_dominant(const Cocharacter& lam);

// If mu <= lam in dominance order, the unique witness n with
// lam - mu = sum n_j alpha_j^vee (n_j >= 0); nullopt when incomparable.
// Both arguments must be dominant.
std::optional<std::vector<Int>> dominance_witness(const Cocharacter& lam, const Cocharacter& mu);

// Exponent of the similitude character: eta(lam(ell)) = ell^eta_exponent(lam).
Int eta_exponent(const Cocharacter& lam);
// det(lam(ell)) = ell^{g * eta_exponent(lam)}.
Int det_exponent(const Cocharacter& lam);

// The diagonal torus matrix lam(ell^r), as a 2g x 2g rational matrix.
QMat cochar_matrix(const Cocharacter& lam, Int ell, Int r = 1);

// The similitude scalar of M (requires M J M^T = c J exactly).
Rational similitude_factor(const QMat& m);

// A Weyl group element: its matrix action on cocharacter coefficient vectors,
// the contragredient action on character coefficient vectors, and the sign.
struct WeylElement {
    IMat on_cochar;  // (g+1) x (g+1)
    IMat on_char;
    int sign = 1;

    Cocharacter apply(const Cocharacter& y) const;
    Character apply(const Character& x) const;
};

// Closure of the simple reflections; |W| = 2^g g!.  Guarded to g <= 4.
std::vector<WeylElement> weyl_group(const RootDatum& rd);

// All dominant mu <= lam (lam must be dominant), sorted.
std::vector<Cocharacter> dominant_lower_set(const Cocharacter& lam);

// Descending-sorted dominant representative of the Weyl orbit of the
// torus exponent vector (a_1..a_g fixed similitude part a_{g+1}).
Cocharacter dominant_representative(const Cocharacter& lam);

}  // namespace siegel
