#pragma once

#include "siegel/error.hpp"
#include "siegel/numeric.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace siegel {

enum class RingKind { Rational, PrimeField, CyclotomicRational, PrimeFieldExt };

// Descriptor of an exact coefficient ring.  Cheap to copy (shared payload);
// equality is structural.  All four kinds are fields.
class RingDesc {
public:
    static RingDesc rational();
    static RingDesc prime_field(Int p);
    static RingDesc cyclotomic(Int order);
    // modulus: coefficients low-to-high degree, monic and irreducible over F_p.
    static RingDesc prime_field_ext(Int p, std::vector<Int> modulus);

    RingKind kind() const { return impl_->kind; }
    Int p() const { return impl_->p; }
    Int cyclotomic_order() const { return impl_->order; }
    const std::vector<Int>& modulus() const { return impl_->modulus; }
    // Phi_order, integer coefficients low-to-high (CyclotomicRational only).
    const std::vector<BigInt>& cyclotomic_modulus() const { return impl_->cyc; }
    Int residue_degree() const;  // dimension over the prime field / over Q

    bool operator==(const RingDesc& other) const;
    bool operator!=(const RingDesc& other) const { return !(*this == other); }

    std::string to_string() const;  // Q | Fp:5 | QZeta:4 | FpExt:5:c0,c1,...
    static RingDesc parse(const std::string& text);

private:
    struct Impl {
        RingKind kind;
        Int p = 0;
        Int order = 0;
        std::vector<Int> modulus;
        std::vector<BigInt> cyc;
    };
    explicit RingDesc(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

// Immutable element of a RingDesc ring, always in canonical form:
//   Rational           lowest terms
//   PrimeField         residue in [0, p)
//   CyclotomicRational representative of degree < deg Phi_M, trailing zeros trimmed
//   PrimeFieldExt      representative of degree < deg modulus, entries in [0, p)
// Canonical form makes equality structural.
class RingValue {
public:
    RingValue() : desc_(RingDesc::rational()), payload_(Rational(0)) {}

    static RingValue zero(const RingDesc& d);
    static RingValue one(const RingDesc& d);
    static RingValue from_integer(const RingDesc& d, const BigInt& n);
    // Maps a/b to a * b^{-1}; throws NonPIntegral in characteristic p when p | b.
    static RingValue from_rational(const RingDesc& d, const Rational& q);
    // The residue of x (CyclotomicRational / PrimeFieldExt only).
    static RingValue generator(const RingDesc& d);
    // Polynomial payload constructors; coefficients are reduced canonically.
    static RingValue from_poly(const RingDesc& d, std::vector<Rational> coeffs);
    static RingValue from_residues(const RingDesc& d, std::vector<Int> coeffs);

    const RingDesc& desc() const { return desc_; }
    bool is_zero() const;
    bool is_one() const;

    RingValue operator+(const RingValue& o) const;
    RingValue operator-(const RingValue& o) const;
    RingValue operator*(const RingValue& o) const;
    RingValue operator-() const;
    bool operator==(const RingValue& o) const;
    bool operator!=(const RingValue& o) const { return !(*this == o); }

    std::optional<RingValue> inverse() const;
    RingValue pow(Int e) const;  // negative e inverts (throws NotInvertible on 0)

    // Scalar action of Q on the ring (identity embedding for Rational /
    // CyclotomicRational, reduction for the characteristic-p kinds).
    RingValue scale(const Rational& q) const;

    // Payload accessors (checked).
    const Rational& rational_value() const;
    Int residue() const;
    const std::vector<Rational>& poly_coeffs() const;
    const std::vector<Int>& residue_coeffs() const;

    // If the value lies in the prime subring (degree-0 cyclotomic / extension
    // payload), return it there; used to coerce cyclotomic results back.
    std::optional<Rational> try_rational() const;

    std::string to_string() const;
    static RingValue parse(const RingDesc& d, const std::string& text);

private:
    RingValue(RingDesc d, std::variant<Rational, Int, std::vector<Rational>, std::vector<Int>> v)
        : desc_(std::move(d)), payload_(std::move(v)) {}
    RingDesc desc_;
    std::variant<Rational, Int, std::vector<Rational>, std::vector<Int>> payload_;
};

enum class RingOp { Add, Sub, Mul };

RingValue ring_arith(const RingValue& a, const RingValue& b, RingOp op);

// Phi_M, coefficients low-to-high, computed by exact division of x^M - 1 by
// the proper-divisor cyclotomic factors.
std::vector<BigInt> cyclotomic_poly(Int order);

// Ring homomorphism into F_p (or an extension given by `target`); input must
// be Rational or CyclotomicRational.  For cyclotomic input, zeta_image must
// be a root of Phi_M in the target field (checked).
RingValue reduce_to_prime_field(const RingValue& a, const RingDesc& target,
                                const std::optional<RingValue>& zeta_image = std::nullopt);

// Square root by exhaustive search; PrimeField / PrimeFieldExt only, and the
// field is required to be small enough to sweep.
std::optional<RingValue> find_square_root(const RingDesc& d, const RingValue& a);

// Canonical embedding of a value into a larger ring: identity, Q into a
// cyclotomic ring, or F_p into an extension of F_p.
RingValue embed_into(const RingValue& v, const RingDesc& target);

}  // namespace siegel
