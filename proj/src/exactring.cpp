#include "siegel/exactring.hpp"

#include <algorithm>
#include <sstream>

namespace siegel {

namespace {

// ---- dense polynomial helpers, coefficients low-to-high ----

template <typename T>
void trim(std::vector<T>& v) {
    while (!v.empty() && v.back() == T(0)) v.pop_back();
}

std::vector<Rational> q_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Remainder of a modulo monic m.
std::vector<Rational> q_rem(std::vector<Rational> a, const std::vector<Rational>& m) {
    trim(a);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Rational c = a.back();
        size_t shift = a.size() - 1 - dm;
        for (size_t i = 0; i < m.size(); ++i) a[shift + i] -= c * m[i];
        trim(a);  // the leading term cancels exactly (m monic)
    }
    return a;
}

// Extended gcd over Q[x]: returns (g, u) with u*a = g mod m, g monic = gcd(a, m).
std::pair<std::vector<Rational>, std::vector<Rational>> q_ext_gcd_mod(
    const std::vector<Rational>& a, const std::vector<Rational>& m) {
    // Standard iterative extended Euclid tracking only the a-cofactor.
    std::vector<Rational> r0 = m, r1 = a, s0 = {}, s1 = {Rational(1)};
    trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<Rational> q;
        std::vector<Rational> rem = r0;
        trim(rem);
        if (rem.size() >= r1.size()) {
            q.assign(rem.size() - r1.size() + 1, Rational(0));
            while (rem.size() >= r1.size() && !rem.empty()) {
                Rational c = rem.back() / r1.back();
                size_t shift = rem.size() - r1.size();
                q[shift] = c;
                for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
                trim(rem);
            }
        }
        trim(q);
        // (r0, r1) <- (r1, r0 - q r1); (s0, s1) likewise
        std::vector<Rational> qs = q_mul(q, s1);
        std::vector<Rational> s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    // normalize gcd monic
    if (!r0.empty() && r0.back() != 1) {
        Rational lead = r0.back();
        for (auto& c : r0) c /= lead;
        for (auto& c : s0) c /= lead;
    }
    return {r0, s0};
}

std::vector<Int> p_mul(const std::vector<Int>& a, const std::vector<Int>& b, Int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    trim(r);
    return r;
}

Int p_inv(Int a, Int p) {
    a = mod_reduce(a, p);
    check(a != 0, "NotInvertible", "zero has no inverse mod p");
    return powmod(a, p - 2, p);
}

// Remainder of a modulo m over F_p; m need not be monic.
std::vector<Int> p_rem(std::vector<Int> a, const std::vector<Int>& m, Int p) {
    trim(a);
    const size_t dm = m.size() - 1;
    Int lead_inv = p_inv(m.back(), p);
    while (a.size() > dm) {
        Int c = mulmod(a.back(), lead_inv, p);
        size_t shift = a.size() - 1 - dm;
        for (size_t i = 0; i < m.size(); ++i)
            a[shift + i] = mod_reduce(a[shift + i] - mulmod(c, m[i], p), p);
        trim(a);
    }
    return a;
}

std::pair<std::vector<Int>, std::vector<Int>> p_ext_gcd_mod(const std::vector<Int>& a,
                                                            const std::vector<Int>& m, Int p) {
    std::vector<Int> r0 = m, r1 = a, s0 = {}, s1 = {1};
    trim(r1);
    while (!r1.empty()) {
        std::vector<Int> rem = r0, q;
        trim(rem);
        Int lead_inv = p_inv(r1.back(), p);
        if (rem.size() >= r1.size()) {
            q.assign(rem.size() - r1.size() + 1, 0);
            while (rem.size() >= r1.size() && !rem.empty()) {
                Int c = mulmod(rem.back(), lead_inv, p);
                size_t shift = rem.size() - r1.size();
                q[shift] = c;
                for (size_t i = 0; i < r1.size(); ++i)
                    rem[shift + i] = mod_reduce(rem[shift + i] - mulmod(c, r1[i], p), p);
                trim(rem);
            }
        }
        trim(q);
        std::vector<Int> qs = p_mul(q, s1, p);
        std::vector<Int> s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), 0);
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = mod_reduce(s2[i] - qs[i], p);
        trim(s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (!r0.empty() && r0.back() != 1) {
        Int lead_inv = p_inv(r0.back(), p);
        for (auto& c : r0) c = mulmod(c, lead_inv, p);
        for (auto& c : s0) c = mulmod(c, lead_inv, p);
    }
    return {r0, s0};
}

bool p_is_irreducible(const std::vector<Int>& m, Int p) {
    const Int deg = static_cast<Int>(m.size()) - 1;
    if (deg <= 1) return deg == 1;
    // Trial division by all monic polynomials of degree <= deg/2.
    for (Int d = 1; 2 * d <= deg; ++d) {
        check(pow_bigint(p, d) <= 100000, "SizeGuard",
              "irreducibility trial search too large for this modulus");
        std::vector<Int> cand(d + 1, 0);
        cand[d] = 1;
        while (true) {
            if (p_rem(m, cand, p).empty()) return false;
            // increment base-p counter over the lower coefficients
            Int i = 0;
            for (; i < d; ++i) {
                if (++cand[i] < p) break;
                cand[i] = 0;
            }
            if (i == d) break;
        }
    }
    return true;
}

}  // namespace

// ---- cyclotomic polynomials ----

std::vector<BigInt> cyclotomic_poly(Int order) {
    check(order >= 1, "BadOrder", "cyclotomic order must be >= 1");
    // x^order - 1
    std::vector<BigInt> num(order + 1, BigInt(0));
    num[0] = -1;
    num[order] = 1;
    for (Int d = 1; d < order; ++d) {
        if (order % d != 0) continue;
        std::vector<BigInt> phi_d = cyclotomic_poly(d);
        // exact division (both monic)
        std::vector<BigInt> quot(num.size() - phi_d.size() + 1, BigInt(0));
        std::vector<BigInt> rem = num;
        while (rem.size() >= phi_d.size()) {
            BigInt c = rem.back();
            size_t shift = rem.size() - phi_d.size();
            quot[shift] = c;
            for (size_t i = 0; i < phi_d.size(); ++i) rem[shift + i] -= c * phi_d[i];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (rem.empty()) break;
        }
        check(rem.empty(), "InternalError", "cyclotomic division left a remainder");
        num = quot;
    }
    return num;
}

// ---- RingDesc ----

RingDesc RingDesc::rational() {
    static const auto impl = std::make_shared<const Impl>(Impl{RingKind::Rational, 0, 0, {}, {}});
    return RingDesc(impl);
}

RingDesc RingDesc::prime_field(Int p) {
    check(is_prime(p), "NotPrime", "PrimeField modulus must be prime");
    check(p < (Int(1) << 31), "SizeGuard", "prime too large for this representation");
    auto impl = std::make_shared<Impl>();
    impl->kind = RingKind::PrimeField;
    impl->p = p;
    return RingDesc(impl);
}

RingDesc RingDesc::cyclotomic(Int order) {
    check(order >= 1, "BadOrder", "cyclotomic order must be >= 1");
    auto impl = std::make_shared<Impl>();
    impl->kind = RingKind::CyclotomicRational;
    impl->order = order;
    impl->cyc = cyclotomic_poly(order);
    return RingDesc(impl);
}

RingDesc RingDesc::prime_field_ext(Int p, std::vector<Int> modulus) {
    check(is_prime(p), "NotPrime", "PrimeFieldExt characteristic must be prime");
    check(p < (Int(1) << 31), "SizeGuard", "prime too large for this representation");
    for (auto& c : modulus) c = mod_reduce(c, p);
    trim(modulus);
    check(modulus.size() >= 2, "BadModulus", "extension modulus must have degree >= 1");
    check(modulus.back() == 1, "BadModulus", "extension modulus must be monic");
    check(p_is_irreducible(modulus, p), "BadModulus", "extension modulus is reducible");
    auto impl = std::make_shared<Impl>();
    impl->kind = RingKind::PrimeFieldExt;
    impl->p = p;
    impl->modulus = std::move(modulus);
    return RingDesc(impl);
}

Int RingDesc::residue_degree() const {
    switch (kind()) {
        case RingKind::Rational:
        case RingKind::PrimeField: return 1;
        case RingKind::CyclotomicRational: return static_cast<Int>(impl_->cyc.size()) - 1;
        case RingKind::PrimeFieldExt: return static_cast<Int>(impl_->modulus.size()) - 1;
    }
    return 1;
}

bool RingDesc::operator==(const RingDesc& other) const {
    if (impl_ == other.impl_) return true;
    return impl_->kind == other.impl_->kind && impl_->p == other.impl_->p &&
           impl_->order == other.impl_->order && impl_->modulus == other.impl_->modulus;
}

std::string RingDesc::to_string() const {
    std::ostringstream os;
    switch (kind()) {
        case RingKind::Rational: os << "Q"; break;
        case RingKind::PrimeField: os << "Fp:" << p(); break;
        case RingKind::CyclotomicRational: os << "QZeta:" << cyclotomic_order(); break;
        case RingKind::PrimeFieldExt: {
            os << "FpExt:" << p() << ":";
            for (size_t i = 0; i < modulus().size(); ++i) {
                if (i) os << ",";
                os << modulus()[i];
            }
            break;
        }
    }
    return os.str();
}

RingDesc RingDesc::parse(const std::string& text) {
    if (text == "Q") return rational();
    auto starts = [&](const char* pre) { return text.rfind(pre, 0) == 0; };
    if (starts("Fp:")) return prime_field(std::stoll(text.substr(3)));
    if (starts("QZeta:")) return cyclotomic(std::stoll(text.substr(6)));
    if (starts("FpExt:")) {
        std::string rest = text.substr(6);
        auto colon = rest.find(':');
        check(colon != std::string::npos, "ParseError", "FpExt needs p and modulus");
        Int p = std::stoll(rest.substr(0, colon));
        std::vector<Int> mod;
        std::istringstream is(rest.substr(colon + 1));
        std::string piece;
        while (std::getline(is, piece, ',')) mod.push_back(std::stoll(piece));
        return prime_field_ext(p, std::move(mod));
    }
    throw domain_error("ParseError", "unknown ring descriptor: " + text);
}

// ---- RingValue ----

namespace {

std::vector<Rational> canon_cyc(const RingDesc& d, std::vector<Rational> coeffs) {
    const auto& cyc = d.cyclotomic_modulus();
    std::vector<Rational> m(cyc.size());
    for (size_t i = 0; i < cyc.size(); ++i) m[i] = Rational(cyc[i]);
    return q_rem(std::move(coeffs), m);
}

std::vector<Int> canon_ext(const RingDesc& d, std::vector<Int> coeffs) {
    for (auto& c : coeffs) c = mod_reduce(c, d.p());
    return p_rem(std::move(coeffs), d.modulus(), d.p());
}

}  // namespace

RingValue RingValue::zero(const RingDesc& d) { return from_integer(d, 0); }
RingValue RingValue::one(const RingDesc& d) { return from_integer(d, 1); }

RingValue RingValue::from_integer(const RingDesc& d, const BigInt& n) {
    switch (d.kind()) {
        case RingKind::Rational: return RingValue(d, Rational(n));
        case RingKind::PrimeField: return RingValue(d, mod_reduce(n, d.p()));
        case RingKind::CyclotomicRational: {
            std::vector<Rational> c;
            if (n != 0) c.push_back(Rational(n));
            return RingValue(d, std::move(c));
        }
        case RingKind::PrimeFieldExt: {
            std::vector<Int> c;
            Int r = mod_reduce(n, d.p());
            if (r != 0) c.push_back(r);
            return RingValue(d, std::move(c));
        }
    }
    throw domain_error("InternalError", "bad ring kind");
}

RingValue RingValue::from_rational(const RingDesc& d, const Rational& q) {
    switch (d.kind()) {
        case RingKind::Rational: return RingValue(d, q);
        case RingKind::CyclotomicRational: {
            std::vector<Rational> c;
            if (q != 0) c.push_back(q);
            return RingValue(d, std::move(c));
        }
        case RingKind::PrimeField:
        case RingKind::PrimeFieldExt: {
            check(denominator_coprime_to(q, d.p()), "NonPIntegral",
                  "denominator divisible by p in reduction");
            Int num = mod_reduce(numerator(q), d.p());
            Int den = mod_reduce(denominator(q), d.p());
            Int r = mulmod(num, p_inv(den, d.p()), d.p());
            return from_integer(d, r);
        }
    }
    throw domain_error("InternalError", "bad ring kind");
}

RingValue RingValue::generator(const RingDesc& d) {
    switch (d.kind()) {
        case RingKind::CyclotomicRational:
            return from_poly(d, {Rational(0), Rational(1)});
        case RingKind::PrimeFieldExt:
            return from_residues(d, {0, 1});
        default:
            throw domain_error("BadRing", "ring has no distinguished generator");
    }
}

RingValue RingValue::from_poly(const RingDesc& d, std::vector<Rational> coeffs) {
    check(d.kind() == RingKind::CyclotomicRational, "BadRing", "expected cyclotomic ring");
    return RingValue(d, canon_cyc(d, std::move(coeffs)));
}

RingValue RingValue::from_residues(const RingDesc& d, std::vector<Int> coeffs) {
    check(d.kind() == RingKind::PrimeFieldExt, "BadRing", "expected prime-field extension");
    return RingValue(d, canon_ext(d, std::move(coeffs)));
}

bool RingValue::is_zero() const {
    switch (desc_.kind()) {
        case RingKind::Rational: return std::get<Rational>(payload_) == 0;
        case RingKind::PrimeField: return std::get<Int>(payload_) == 0;
        case RingKind::CyclotomicRational: return std::get<std::vector<Rational>>(payload_).empty();
        case RingKind::PrimeFieldExt: return std::get<std::vector<Int>>(payload_).empty();
    }
    return false;
}

bool RingValue::is_one() const { return *this == one(desc_); }

RingValue RingValue::operator+(const RingValue& o) const { return ring_arith(*this, o, RingOp::Add); }
RingValue RingValue::operator-(const RingValue& o) const { return ring_arith(*this, o, RingOp::Sub); }
RingValue RingValue::operator*(const RingValue& o) const { return ring_arith(*this, o, RingOp::Mul); }

RingValue RingValue::operator-() const { return zero(desc_) - *this; }

bool RingValue::operator==(const RingValue& o) const {
    return desc_ == o.desc_ && payload_ == o.payload_;
}

RingValue ring_arith(const RingValue& a, const RingValue& b, RingOp op) {
    check(a.desc() == b.desc(), "RingMismatch", "operands live in different rings");
    const RingDesc& d = a.desc();
    switch (d.kind()) {
        case RingKind::Rational: {
            const Rational &x = a.rational_value(), &y = b.rational_value();
            Rational r = op == RingOp::Add   ? Rational(x + y)
                         : op == RingOp::Sub ? Rational(x - y)
                                             : Rational(x * y);
            return RingValue::from_rational(d, r);
        }
        case RingKind::PrimeField: {
            Int x = a.residue(), y = b.residue(), p = d.p();
            Int r = op == RingOp::Add   ? mod_reduce(x + y, p)
                    : op == RingOp::Sub ? mod_reduce(x - y, p)
                                        : mulmod(x, y, p);
            return RingValue::from_integer(d, r);
        }
        case RingKind::CyclotomicRational: {
            const auto &x = a.poly_coeffs(), &y = b.poly_coeffs();
            std::vector<Rational> r;
            if (op == RingOp::Mul) {
                r = q_mul(x, y);
            } else {
                r = x;
                r.resize(std::max(x.size(), y.size()), Rational(0));
                for (size_t i = 0; i < y.size(); ++i)
                    r[i] = op == RingOp::Add ? Rational(r[i] + y[i]) : Rational(r[i] - y[i]);
            }
            return RingValue::from_poly(d, std::move(r));
        }
        case RingKind::PrimeFieldExt: {
            const auto &x = a.residue_coeffs(), &y = b.residue_coeffs();
            Int p = d.p();
            std::vector<Int> r;
            if (op == RingOp::Mul) {
                r = p_mul(x, y, p);
            } else {
                r = x;
                r.resize(std::max(x.size(), y.size()), 0);
                for (size_t i = 0; i < y.size(); ++i)
                    r[i] = mod_reduce(op == RingOp::Add ? r[i] + y[i] : r[i] - y[i], p);
            }
            return RingValue::from_residues(d, std::move(r));
        }
    }
    throw domain_error("InternalError", "bad ring kind");
}

std::optional<RingValue> RingValue::inverse() const {
    if (is_zero()) return std::nullopt;
    switch (desc_.kind()) {
        case RingKind::Rational:
            return from_rational(desc_, rational_inverse(rational_value()));
        case RingKind::PrimeField:
            return from_integer(desc_, p_inv(residue(), desc_.p()));
        case RingKind::CyclotomicRational: {
            const auto& cyc = desc_.cyclotomic_modulus();
            std::vector<Rational> m(cyc.size());
            for (size_t i = 0; i < cyc.size(); ++i) m[i] = Rational(cyc[i]);
            auto [g, u] = q_ext_gcd_mod(poly_coeffs(), m);
            if (g.size() != 1) return std::nullopt;  // cannot happen: Phi_M irreducible over Q
            return from_poly(desc_, std::move(u));
        }
        case RingKind::PrimeFieldExt: {
            auto [g, u] = p_ext_gcd_mod(residue_coeffs(), desc_.modulus(), desc_.p());
            if (g.size() != 1) return std::nullopt;
            return from_residues(desc_, std::move(u));
        }
    }
    return std::nullopt;
}

RingValue RingValue::pow(Int e) const {
    RingValue base = *this;
    if (e < 0) {
        auto inv = inverse();
        check(inv.has_value(), "NotInvertible", "negative power of a non-invertible element");
        base = *inv;
        e = -e;
    }
    RingValue r = one(desc_);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

RingValue RingValue::scale(const Rational& q) const {
    return *this * from_rational(desc_, q);
}

const Rational& RingValue::rational_value() const {
    check(desc_.kind() == RingKind::Rational, "BadRing", "value is not rational");
    return std::get<Rational>(payload_);
}

Int RingValue::residue() const {
    check(desc_.kind() == RingKind::PrimeField, "BadRing", "value is not a prime-field residue");
    return std::get<Int>(payload_);
}

const std::vector<Rational>& RingValue::poly_coeffs() const {
    check(desc_.kind() == RingKind::CyclotomicRational, "BadRing", "value is not cyclotomic");
    return std::get<std::vector<Rational>>(payload_);
}

const std::vector<Int>& RingValue::residue_coeffs() const {
    check(desc_.kind() == RingKind::PrimeFieldExt, "BadRing", "value is not an extension residue");
    return std::get<std::vector<Int>>(payload_);
}

std::optional<Rational> RingValue::try_rational() const {
    switch (desc_.kind()) {
        case RingKind::Rational: return rational_value();
        case RingKind::CyclotomicRational: {
            const auto& c = poly_coeffs();
            if (c.empty()) return Rational(0);
            if (c.size() == 1) return c[0];
            return std::nullopt;
        }
        default: return std::nullopt;
    }
}

namespace {

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q) << "/" << denominator(q);
    return os.str();
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
    check(den != 0, "ParseError", "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

}  // namespace

std::string RingValue::to_string() const {
    std::ostringstream os;
    switch (desc_.kind()) {
        case RingKind::Rational:
            return rational_to_string(rational_value());
        case RingKind::PrimeField:
            os << residue() << " mod " << desc_.p();
            return os.str();
        case RingKind::CyclotomicRational: {
            const auto& c = poly_coeffs();
            if (c.empty()) return "0/1";
            for (size_t i = 0; i < c.size(); ++i) {
                if (i) os << ",";
                os << rational_to_string(c[i]);
            }
            return os.str();
        }
        case RingKind::PrimeFieldExt: {
            const auto& c = residue_coeffs();
            if (c.empty()) return "0";
            for (size_t i = 0; i < c.size(); ++i) {
                if (i) os << ",";
                os << c[i];
            }
            return os.str();
        }
    }
    return "";
}

RingValue RingValue::parse(const RingDesc& d, const std::string& text) {
    switch (d.kind()) {
        case RingKind::Rational:
            return from_rational(d, parse_rational(text));
        case RingKind::PrimeField: {
            auto at = text.find(" mod ");
            std::string num = at == std::string::npos ? text : text.substr(0, at);
            if (at != std::string::npos) {
                Int p = std::stoll(text.substr(at + 5));
                check(p == d.p(), "RingMismatch", "modulus in text differs from descriptor");
            }
            return from_integer(d, BigInt(num));
        }
        case RingKind::CyclotomicRational: {
            std::vector<Rational> c;
            std::istringstream is(text);
            std::string piece;
            while (std::getline(is, piece, ',')) c.push_back(parse_rational(piece));
            return from_poly(d, std::move(c));
        }
        case RingKind::PrimeFieldExt: {
            std::vector<Int> c;
            std::istringstream is(text);
            std::string piece;
            while (std::getline(is, piece, ',')) c.push_back(std::stoll(piece));
            return from_residues(d, std::move(c));
        }
    }
    throw domain_error("InternalError", "bad ring kind");
}

// ---- reduction maps ----

RingValue reduce_to_prime_field(const RingValue& a, const RingDesc& target,
                                const std::optional<RingValue>& zeta_image) {
    check(target.kind() == RingKind::PrimeField || target.kind() == RingKind::PrimeFieldExt,
          "BadRing", "reduction target must be a prime field or an extension");
    switch (a.desc().kind()) {
        case RingKind::Rational:
            return RingValue::from_rational(target, a.rational_value());
        case RingKind::CyclotomicRational: {
            check(zeta_image.has_value(), "MissingZetaImage",
                  "cyclotomic reduction needs an image for the root of unity");
            check(zeta_image->desc() == target, "RingMismatch", "zeta image not in target ring");
            // zeta_image must be a root of Phi_M in the target field.
            const auto& cyc = a.desc().cyclotomic_modulus();
            RingValue phi_at = RingValue::zero(target);
            for (size_t i = cyc.size(); i-- > 0;)
                phi_at = phi_at * *zeta_image + RingValue::from_integer(target, cyc[i]);
            check(phi_at.is_zero(), "BadZetaImage", "given element is not a root of Phi_M");
            RingValue acc = RingValue::zero(target);
            const auto& coeffs = a.poly_coeffs();
            for (size_t i = coeffs.size(); i-- > 0;)
                acc = acc * *zeta_image + RingValue::from_rational(target, coeffs[i]);
            return acc;
        }
        default:
            throw domain_error("BadRing", "reduction input must be rational or cyclotomic");
    }
}

RingValue embed_into(const RingValue& v, const RingDesc& target) {
    if (v.desc() == target) return v;
    if (v.desc().kind() == RingKind::Rational) return RingValue::from_rational(target, v.rational_value());
    if (v.desc().kind() == RingKind::PrimeField && target.kind() == RingKind::PrimeFieldExt &&
        v.desc().p() == target.p())
        return RingValue::from_residues(target, {v.residue()});
    throw domain_error("RingMismatch", "no canonical embedding between these rings");
}

std::optional<RingValue> find_square_root(const RingDesc& d, const RingValue& a) {
    check(d.kind() == RingKind::PrimeField || d.kind() == RingKind::PrimeFieldExt, "BadRing",
          "square-root search needs a finite field");
    check(a.desc() == d, "RingMismatch", "value not in the given field");
    const Int p = d.p();
    const Int deg = d.residue_degree();
    check(pow_bigint(p, deg) <= 1000000, "SizeGuard", "field too large for exhaustive search");
    if (d.kind() == RingKind::PrimeField) {
        for (Int x = 0; x < p; ++x) {
            if (mulmod(x, x, p) == a.residue()) return RingValue::from_integer(d, x);
        }
        return std::nullopt;
    }
    std::vector<Int> digits(deg, 0);
    while (true) {
        RingValue x = RingValue::from_residues(d, digits);
        if (x * x == a) return x;
        Int i = 0;
        for (; i < deg; ++i) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
        if (i == deg) break;
    }
    return std::nullopt;
}

}  // namespace siegel
