#pragma once

#include "siegel/qexp.hpp"
#include "siegel/rootdatum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace siegel {

// One right-coset representative [[ell^r D^{-T}, B], [0, D]] of a double
// coset with similitude ell^r.  D is in Hermite normal form, ell^r D^{-1} is
// integral and B D^{-1} is symmetric.
struct CosetRep {
    Int g = 0;
    Int ell = 0;
    Int r = 0;
    IMat d;
    IMat b;

    IMat assembled() const;
    static CosetRep identity(Int g, Int ell);
};

// Whether a and b represent the same right coset: a b^{-1} integral at ell
// (the similitude of the quotient is automatically 1).
bool same_right_coset(const CosetRep& a, const CosetRep& b);

// Complete duplicate-free list of right-coset representatives of the double
// coset named by a dominant cocharacter with 0 <= exponents <= r <= 2, g <= 2.
std::vector<CosetRep> coset_reps(Int g, Int ell, const Cocharacter& lam);

struct HeckeOperator {
    struct Component {
        Cocharacter lam;
        std::vector<CosetRep> reps;
    };
    Int g = 0;
    Int ell = 0;
    Int r = 0;  // similitude exponent, shared by all components
    std::string name;
    std::vector<Component> components;
};

// name: "T(ell)" for a prime ell, "T(ell^2)" for its square, or
// "T<i>(ell^2)"; a dominant cocharacter can be used directly instead.
HeckeOperator hecke_operator(Int g, Int ell, const std::string& name);
HeckeOperator hecke_operator_for(const Cocharacter& lam, Int ell, std::string name = "");

// Weight-k slash of one block-upper-triangular representative on a rational
// expansion; the output lives over the cyclotomic ring of order N * ell^{rg}.
// Requires tau_f >= ell^r * tau_out.
QExpansion slash_block_upper(const CosetRep& m, Int k, const QExpansion& f, Int tau_out);

// Sum of slashes over all representatives, coerced back to the input ring.
// Mod-p input is lifted to characteristic zero, transformed, and reduced.
QExpansion hecke_apply(const HeckeOperator& op, Int k, const QExpansion& f, Int tau_out);

// The unique scalar c with (op f) = c f on the visible window, if any.
std::optional<RingValue> eigenvalue_of(const HeckeOperator& op, Int k, const QExpansion& f);

struct CommutationReport {
    bool ok = false;
    std::string detail;
};

// Checks op_{k+p+1} (theta f) == ell^{g r} theta (op_k f) coefficientwise.
CommutationReport commutation_check(const QExpansion& f, Int k, const HeckeOperator& op);

}  // namespace siegel
