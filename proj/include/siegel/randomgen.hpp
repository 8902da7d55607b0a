#pragma once

#include "siegel/clifford.hpp"
#include "siegel/qexp.hpp"
#include "siegel/rootdatum.hpp"
#include "siegel/satake.hpp"

#include <random>

namespace siegel {

// All randomised checks draw from this engine so runs are reproducible from
// a single seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    Int below(Int n) { return static_cast<Int>(engine_() % static_cast<std::uint64_t>(n)); }
    Int range(Int lo, Int hi) { return lo + below(hi - lo + 1); }  // inclusive
    bool coin() { return (engine_() & 1) != 0; }

    RingValue value(const RingDesc& ring);          // arbitrary element, small height
    RingValue nonzero_value(const RingDesc& ring);
    RingValue unit(const RingDesc& ring);

private:
    std::mt19937_64 engine_;
};

QExpansion random_qexpansion(Int g, Int level, const RingDesc& ring, Int tau, Rng& rng,
                             int fill_percent = 60);

Cocharacter random_dominant(Int g, Rng& rng, Int lo = -2, Int hi = 3);

// (mu, lambda) with both dominant and lambda = mu + nonnegative coroot
// combination.
std::pair<Cocharacter, Cocharacter> random_dominant_pair(Int g, Rng& rng);

CliffordElement random_clifford(Int g, const RingDesc& ring, Rng& rng, int terms = 4);

// Unitriangular table on the lower set of lam, off-diagonal entries random
// (optionally with formal v-powers).
SatakeCoefficients random_unitriangular(const Cocharacter& lam, const RingDesc& ring, Rng& rng,
                                        bool with_v_powers = true);

Eigensystem random_eigensystem(const Cocharacter& lam, Int ell, Int p, const RingDesc& field,
                               Rng& rng);

// A field of characteristic p containing a square root of ell, plus the
// root: F_p when ell is a square mod p, a quadratic extension otherwise.
std::pair<RingDesc, RingValue> square_root_field(Int ell, Int p);

}  // namespace siegel
