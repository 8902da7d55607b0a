#pragma once

#include "siegel/exactring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace siegel {

// Element of the algebra on 2g+1 anticommuting unit generators c_1..c_{2g+1};
// the basis monomial for a subset S (ascending product of its generators) is
// keyed by the bitmask of S.  Zero coefficients are never stored.
class CliffordElement {
public:
    CliffordElement(Int g, RingDesc ring) : g_(g), ring_(std::move(ring)) {
        check(g_ >= 1, "BadDegree", "degree must be >= 1");
    }

    static CliffordElement zero(Int g, const RingDesc& ring) { return {g, ring}; }
    static CliffordElement scalar(Int g, const RingDesc& ring, const RingValue& c);
    static CliffordElement generator(Int g, const RingDesc& ring, Int i);  // c_i, 1-based

    Int degree() const { return g_; }
    Int generator_count() const { return 2 * g_ + 1; }
    const RingDesc& ring() const { return ring_; }
    const std::map<std::uint32_t, RingValue>& terms() const { return terms_; }

    void add_term(std::uint32_t mask, const RingValue& c);
    RingValue coefficient(std::uint32_t mask) const;
    bool is_zero() const { return terms_.empty(); }
    bool is_even() const;   // supported on even-size masks only
    bool is_vector() const; // supported on single-generator masks only

    CliffordElement operator+(const CliffordElement& o) const;
    CliffordElement operator-(const CliffordElement& o) const;
    CliffordElement operator*(const CliffordElement& o) const;
    CliffordElement scale(const RingValue& c) const;
    bool operator==(const CliffordElement& o) const;

    std::string to_string() const;

private:
    Int g_;
    RingDesc ring_;
    std::map<std::uint32_t, RingValue> terms_;
};

// Sign of e_S e_T: (-1)^{#{(s,t) in S x T : s > t}}.
int monomial_sign(std::uint32_t s, std::uint32_t t);

// The grading automorphism: negates odd terms, fixes even terms.
CliffordElement parity_automorphism(const CliffordElement& x);

// Inverse by solving the left-multiplication system in the monomial basis;
// guarded to g <= 2 (dimension 32).
std::optional<CliffordElement> cliff_inverse(const CliffordElement& x);

// gamma(x) m x^{-1}; throws NotInvertible when x has no inverse.
CliffordElement twisted_conjugate(const CliffordElement& x, const CliffordElement& m);

// Even, invertible, and twisted conjugation maps every generator into the
// span of the generators.
bool is_gspin(const CliffordElement& x);

}  // namespace siegel
