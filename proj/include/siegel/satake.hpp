#pragma once

#include "siegel/exactring.hpp"
#include "siegel/rootdatum.hpp"

#include <map>
#include <string>

namespace siegel {

// Laurent polynomial in the formal half-power symbol v (v^2 plays the role
// of the Hecke prime), with coefficients in an exact ring.
class VLaurent {
public:
    explicit VLaurent(RingDesc ring) : ring_(std::move(ring)) {}
    static VLaurent zero(const RingDesc& ring) { return VLaurent(ring); }
    static VLaurent monomial(const RingDesc& ring, Int v_exp, const RingValue& c);
    static VLaurent constant(const RingValue& c);

    const RingDesc& ring() const { return ring_; }
    const std::map<Int, RingValue>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(Int v_exp, const RingValue& c);

    VLaurent operator+(const VLaurent& o) const;
    VLaurent operator-(const VLaurent& o) const;
    VLaurent operator*(const VLaurent& o) const;
    VLaurent operator-() const;
    bool operator==(const VLaurent& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

    // Substitute v -> v_image (a unit of a field containing the coefficient
    // ring) and sum.
    RingValue eval(const RingValue& v_image) const;

    std::string to_string() const;

private:
    RingDesc ring_;
    std::map<Int, RingValue> terms_;
};

// Formal combination of double-coset basis elements, indexed by dominant
// cocharacters.
struct HeckeElement {
    Int g = 0;
    Int ell = 0;
    RingDesc ring = RingDesc::rational();
    std::map<Cocharacter, VLaurent> terms;

    void add(const Cocharacter& lam, const VLaurent& c);
    std::string to_string(const char* symbol = "c") const;
};

// Formal combination of irreducible characters of the dual group.
struct RepRingElement {
    Int g = 0;
    RingDesc ring = RingDesc::rational();
    std::map<Cocharacter, VLaurent> terms;

    void add(const Cocharacter& lam, const VLaurent& c);
    std::string to_string(const char* symbol = "chi") const;
};

// Unitriangular coefficient table over a dominance lower set: for each lam
// in the support, entries mu -> value for every dominant mu <= lam, with
// value 1 on the diagonal.  These coefficients are input data.
class SatakeCoefficients {
public:
    SatakeCoefficients(Int g, RingDesc ring) : g_(g), ring_(std::move(ring)) {}

    Int g() const { return g_; }
    const RingDesc& ring() const { return ring_; }
    const std::map<Cocharacter, std::map<Cocharacter, VLaurent>>& table() const { return table_; }

    void set(const Cocharacter& lam, const Cocharacter& mu, const VLaurent& value);
    const VLaurent& at(const Cocharacter& lam, const Cocharacter& mu) const;
    bool has_row(const Cocharacter& lam) const { return table_.count(lam) != 0; }

    // Diagonal ones, rows defined on full lower sets, support dominance-closed.
    void validate() const;

    // Identity table on the lower set of lam.
    static SatakeCoefficients identity(Int g, const RingDesc& ring, const Cocharacter& lam);

private:
    Int g_;
    RingDesc ring_;
    std::map<Cocharacter, std::map<Cocharacter, VLaurent>> table_;
};

// An eigenvalue system: dominant cocharacters of a lower set -> values in a
// finite field of characteristic p.
struct Eigensystem {
    Int g = 0;
    Int ell = 0;
    Int p = 0;
    RingDesc field = RingDesc::rational();
    std::map<Cocharacter, RingValue> values;

    const RingValue& at(const Cocharacter& lam) const;
};

// Point of the dual maximal torus: invertible coordinates v_1..v_{g+1}.
struct DualTorusPoint {
    Int g = 0;
    RingDesc field = RingDesc::rational();
    std::vector<RingValue> coords;

    static DualTorusPoint make(Int g, const RingDesc& field, std::vector<RingValue> coords);
    // (1, ..., 1, a): the central point the similitude character pairs with.
    static DualTorusPoint eta_dual(Int g, const RingDesc& field, const RingValue& a);
    DualTorusPoint componentwise_mul(const DualTorusPoint& o) const;
};

// sum_{mu <= lam} b_lam(mu) v^{<2 rho, mu>} chi_mu.
RepRingElement satake_image(const Cocharacter& lam, const SatakeCoefficients& b);

// v^{-<2 rho, lam>} sum_{mu <= lam} d_lam(mu) c_mu.
HeckeElement satake_inverse_chi(const Cocharacter& lam, const SatakeCoefficients& d, Int ell);

// The unique unitriangular table d with, for each lam and nu <= lam,
//   sum_{nu <= mu <= lam} d_lam(mu) b_mu(nu) = [nu == lam]
// (the common v-power v^{<2rho,nu>-<2rho,lam>} drops out of each equation).
SatakeCoefficients invert_coefficients(const SatakeCoefficients& b);

// Multiplies each value by ell^{m * eta_exponent(lam)}.
Eigensystem twist_eigensystem(const Eigensystem& psi, Int m);

// Weight multiplicities of the irreducible dual-group representation with
// highest weight lam, by exact alternant division in doubled coordinates.
std::map<Cocharacter, BigInt> weights_of_irrep(const Cocharacter& lam);

// Trace of the torus point on that representation.
RingValue char_eval(const Cocharacter& lam, const DualTorusPoint& t);

struct MainTheoremResult {
    bool ok = false;
    bool symbolically_distinct = false;
    RingValue lhs, rhs;
    std::string transcript;
};

// Replays both evaluation chains of the eigensystem-twisting statement:
//   left : v^{-<2rho,lam>} sum_mu d_lam(mu) ell^{m eta(mu)} psi(c_mu)
//   right: v^{-<2rho,lam>} [central scalar of eta-dual(ell^m) on V_lam]
//                          sum_mu d_lam(mu) psi(c_mu)
// The central scalar on the right is computed from the weight decomposition
// of V_lam on the dual side, so the two chains only agree because the eta
// exponent is constant on dominance classes and on weight sets.
MainTheoremResult main_theorem_verify(const Cocharacter& lam, const SatakeCoefficients& d,
                                      const Eigensystem& psi, Int m, Int ell, Int p,
                                      const RingValue& v_image);

}  // namespace siegel
