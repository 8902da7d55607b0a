#include "siegel/satake.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace siegel {

VLaurent VLaurent::monomial(const RingDesc& ring, Int v_exp, const RingValue& c) {
    VLaurent r(ring);
    r.add_term(v_exp, c);
    return r;
}

VLaurent VLaurent::constant(const RingValue& c) { return monomial(c.desc(), 0, c); }

void VLaurent::add_term(Int v_exp, const RingValue& c) {
    check(c.desc() == ring_, "RingMismatch", "coefficient ring mismatch");
    auto it = terms_.find(v_exp);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(v_exp, c);
        return;
    }
    RingValue sum = it->second + c;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

VLaurent VLaurent::operator+(const VLaurent& o) const {
    check(ring_ == o.ring_, "RingMismatch", "Laurent operands over different rings");
    VLaurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

VLaurent VLaurent::operator-(const VLaurent& o) const {
    check(ring_ == o.ring_, "RingMismatch", "Laurent operands over different rings");
    VLaurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

VLaurent VLaurent::operator*(const VLaurent& o) const {
    check(ring_ == o.ring_, "RingMismatch", "Laurent operands over different rings");
    VLaurent r(ring_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

VLaurent VLaurent::operator-() const {
    VLaurent r(ring_);
    for (const auto& [e, c] : terms_) r.add_term(e, -c);
    return r;
}

RingValue VLaurent::eval(const RingValue& v_image) const {
    RingValue acc = RingValue::zero(v_image.desc());
    for (const auto& [e, c] : terms_) acc = acc + embed_into(c, v_image.desc()) * v_image.pow(e);
    return acc;
}

std::string VLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")";
        if (e != 0) os << "*v^" << e;
        first = false;
    }
    return os.str();
}

void HeckeElement::add(const Cocharacter& lam, const VLaurent& c) {
    check(is_dominant(lam), "NotDominant", "basis elements are indexed by dominant cocharacters");
    auto it = terms.find(lam);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(lam, c);
        return;
    }
    VLaurent sum = it->second + c;
    if (sum.is_zero())
        terms.erase(it);
    else
        it->second = sum;
}

void RepRingElement::add(const Cocharacter& lam, const VLaurent& c) {
    check(is_dominant(lam), "NotDominant", "characters are indexed by dominant cocharacters");
    auto it = terms.find(lam);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(lam, c);
        return;
    }
    VLaurent sum = it->second + c;
    if (sum.is_zero())
        terms.erase(it);
    else
        it->second = sum;
}

namespace {

template <typename T>
std::string combination_string(const std::map<Cocharacter, VLaurent>& terms, const char* symbol) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : terms) {
        if (!first) os << " + ";
        os << "[" << c.to_string() << "] " << symbol << "(" << lam.to_string() << ")";
        first = false;
    }
    return os.str();
}

}  // namespace

std::string HeckeElement::to_string(const char* symbol) const {
    return combination_string<int>(terms, symbol);
}

std::string RepRingElement::to_string(const char* symbol) const {
    return combination_string<int>(terms, symbol);
}

void SatakeCoefficients::set(const Cocharacter& lam, const Cocharacter& mu, const VLaurent& value) {
    check(lam.g == g_ && mu.g == g_, "DegreeMismatch", "table entries of wrong degree");
    check(value.ring() == ring_, "RingMismatch", "table value over the wrong ring");
    check(dominance_witness(lam, mu).has_value(), "NotComparable",
          "table entries must satisfy mu <= lam");
    table_[lam].insert_or_assign(mu, value);
}

const VLaurent& SatakeCoefficients::at(const Cocharacter& lam, const Cocharacter& mu) const {
    auto row = table_.find(lam);
    check(row != table_.end(), "MissingEntry", "no table row for " + lam.to_string());
    auto it = row->second.find(mu);
    check(it != row->second.end(), "MissingEntry",
          "no table entry (" + lam.to_string() + ", " + mu.to_string() + ")");
    return it->second;
}

void SatakeCoefficients::validate() const {
    for (const auto& [lam, row] : table_) {
        std::vector<Cocharacter> lower = dominant_lower_set(lam);
        for (const auto& mu : lower) {
            check(row.count(mu) != 0, "MissingEntry",
                  "row " + lam.to_string() + " misses " + mu.to_string());
            check(table_.count(mu) != 0, "MissingEntry",
                  "table not closed under the lower set: missing row " + mu.to_string());
        }
        check(row.size() == lower.size(), "BadEntry", "row supported outside the lower set");
        VLaurent diag = at(lam, lam);
        check(diag == VLaurent::constant(RingValue::one(ring_)), "NotUnitriangular",
              "diagonal entries must equal 1");
    }
}

SatakeCoefficients SatakeCoefficients::identity(Int g, const RingDesc& ring,
                                                const Cocharacter& lam) {
    SatakeCoefficients t(g, ring);
    for (const auto& row : dominant_lower_set(lam))
        for (const auto& mu : dominant_lower_set(row)) {
            RingValue v = row == mu ? RingValue::one(ring) : RingValue::zero(ring);
            t.set(row, mu, VLaurent::constant(v));
        }
    return t;
}

const RingValue& Eigensystem::at(const Cocharacter& lam) const {
    auto it = values.find(lam);
    check(it != values.end(), "MissingEntry", "eigensystem undefined at " + lam.to_string());
    return it->second;
}

DualTorusPoint DualTorusPoint::make(Int g, const RingDesc& field, std::vector<RingValue> coords) {
    check(coords.size() == static_cast<size_t>(g + 1), "BadLength",
          "torus point needs g+1 coordinates");
    for (const auto& c : coords)
        check(c.inverse().has_value(), "NotInvertible", "torus coordinates must be units");
    DualTorusPoint t;
    t.g = g;
    t.field = field;
    t.coords = std::move(coords);
    return t;
}

DualTorusPoint DualTorusPoint::eta_dual(Int g, const RingDesc& field, const RingValue& a) {
    std::vector<RingValue> coords(g + 1, RingValue::one(field));
    coords[g] = a;
    return make(g, field, std::move(coords));
}

DualTorusPoint DualTorusPoint::componentwise_mul(const DualTorusPoint& o) const {
    check(g == o.g && field == o.field, "Mismatch", "torus points over different data");
    std::vector<RingValue> coords;
    coords.reserve(this->coords.size());
    for (size_t i = 0; i < this->coords.size(); ++i) coords.push_back(this->coords[i] * o.coords[i]);
    return make(g, field, std::move(coords));
}

RepRingElement satake_image(const Cocharacter& lam, const SatakeCoefficients& b) {
    RootDatum rd = build_root_datum(lam.g);
    RepRingElement out;
    out.g = lam.g;
    out.ring = b.ring();
    for (const auto& mu : dominant_lower_set(lam)) {
        VLaurent shift = VLaurent::monomial(b.ring(), pairing(rd.rho2, mu),
                                            RingValue::one(b.ring()));
        out.add(mu, b.at(lam, mu) * shift);
    }
    return out;
}

HeckeElement satake_inverse_chi(const Cocharacter& lam, const SatakeCoefficients& d, Int ell) {
    RootDatum rd = build_root_datum(lam.g);
    HeckeElement out;
    out.g = lam.g;
    out.ell = ell;
    out.ring = d.ring();
    VLaurent shift = VLaurent::monomial(d.ring(), -pairing(rd.rho2, lam),
                                        RingValue::one(d.ring()));
    for (const auto& mu : dominant_lower_set(lam)) out.add(mu, d.at(lam, mu) * shift);
    return out;
}

SatakeCoefficients invert_coefficients(const SatakeCoefficients& b) {
    b.validate();
    SatakeCoefficients d(b.g(), b.ring());
    for (const auto& [lam, row] : b.table()) {
        std::vector<Cocharacter> lower = dominant_lower_set(lam);
        // increasing distance from lam, so strict majorants are ready first
        std::stable_sort(lower.begin(), lower.end(), [&](const auto& x, const auto& y) {
            auto wx = dominance_witness(lam, x), wy = dominance_witness(lam, y);
            Int hx = std::accumulate(wx->begin(), wx->end(), Int(0));
            Int hy = std::accumulate(wy->begin(), wy->end(), Int(0));
            return hx < hy;
        });
        d.set(lam, lam, VLaurent::constant(RingValue::one(b.ring())));
        for (const auto& nu : lower) {
            if (nu == lam) continue;
            VLaurent acc = VLaurent::zero(b.ring());
            for (const auto& mu : dominant_lower_set(lam)) {
                if (mu == nu) continue;
                if (!dominance_witness(mu, nu).has_value()) continue;  // need nu < mu <= lam
                acc = acc + d.at(lam, mu) * b.at(mu, nu);
            }
            d.set(lam, nu, -acc);
        }
    }
    return d;
}

Eigensystem twist_eigensystem(const Eigensystem& psi, Int m) {
    check(m >= 0, "BadTwist", "twist exponent must be >= 0");
    check(psi.ell != psi.p, "BadPrime", "twisting needs ell != p");
    Eigensystem out = psi;
    RingValue ell_val = RingValue::from_integer(psi.field, psi.ell);
    for (auto& [lam, value] : out.values) value = value * ell_val.pow(m * eta_exponent(lam));
    return out;
}

namespace {

// Sparse Laurent polynomial in g+1 variables, exponents doubled so the
// half-integral rho-shift stays integral.
using Exponent = std::vector<Int>;
using Alternant = std::map<Exponent, BigInt>;

void alternant_add(Alternant& a, const Exponent& e, const BigInt& c) {
    auto it = a.find(e);
    if (it == a.end()) {
        if (c != 0) a.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) a.erase(it);
}

Exponent apply_weyl(const WeylElement& w, const Exponent& e) {
    const int n = w.on_cochar.rows;
    Exponent out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += w.on_cochar(i, j) * e[j];
    return out;
}

Alternant weyl_alternant(const std::vector<WeylElement>& group, const Exponent& e) {
    Alternant a;
    for (const auto& w : group) alternant_add(a, apply_weyl(w, e), BigInt(w.sign));
    return a;
}

}  // namespace

std::map<Cocharacter, BigInt> weights_of_irrep(const Cocharacter& lam) {
    const Int g = lam.g;
    check(g <= 2, "SizeGuard", "weight decomposition guarded to g <= 2");
    check(is_dominant(lam), "NotDominant", "highest weight must be dominant");
    for (const auto& c : lam.coeffs)
        check(c >= -16 && c <= 16, "SizeGuard", "highest weight outside the supported ball");

    RootDatum rd = build_root_datum(g);
    std::vector<WeylElement> group = weyl_group(rd);

    Exponent rho2hat(rd.rho2_hat.coeffs.begin(), rd.rho2_hat.coeffs.end());
    Exponent top(g + 1);
    for (Int i = 0; i <= g; ++i) top[i] = 2 * lam.coeffs[i] + rho2hat[i];

    Alternant numerator = weyl_alternant(group, top);
    Alternant denominator = weyl_alternant(group, rho2hat);

    // exact division; the dominant alternant term is the unique lex maximum
    const auto& den_lead = *denominator.rbegin();
    check(den_lead.second == 1 || den_lead.second == -1, "InternalError",
          "alternant leading coefficient must be a unit");

    std::map<Cocharacter, BigInt> weights;
    int steps = 0;
    while (!numerator.empty()) {
        check(++steps <= 200000, "SizeGuard", "alternant division did not terminate");
        const auto& lead = *numerator.rbegin();
        Exponent diff(g + 1);
        for (Int i = 0; i <= g; ++i) diff[i] = lead.first[i] - den_lead.first[i];
        BigInt coeff = lead.second / den_lead.second;
        check(coeff * den_lead.second == lead.second, "InternalError",
              "non-exact alternant division");
        for (const auto& [e, c] : denominator) {
            Exponent shifted(g + 1);
            for (Int i = 0; i <= g; ++i) shifted[i] = e[i] + diff[i];
            alternant_add(numerator, shifted, -coeff * c);
        }
        std::vector<Int> undoubled(g + 1);
        for (Int i = 0; i <= g; ++i) {
            check(diff[i] % 2 == 0, "InternalError", "weight exponent not in the lattice");
            undoubled[i] = diff[i] / 2;
        }
        check(coeff > 0, "InternalError", "negative weight multiplicity");
        weights.emplace(Cocharacter(g, std::move(undoubled)), coeff);
    }
    return weights;
}

RingValue char_eval(const Cocharacter& lam, const DualTorusPoint& t) {
    check(lam.g == t.g, "DegreeMismatch", "torus point of wrong degree");
    RingValue acc = RingValue::zero(t.field);
    for (const auto& [mu, mult] : weights_of_irrep(lam)) {
        RingValue term = RingValue::from_integer(t.field, mult);
        for (Int i = 0; i <= lam.g; ++i) term = term * t.coords[i].pow(mu.coeffs[i]);
        acc = acc + term;
    }
    return acc;
}

MainTheoremResult main_theorem_verify(const Cocharacter& lam, const SatakeCoefficients& d,
                                      const Eigensystem& psi, Int m, Int ell, Int p,
                                      const RingValue& v_image) {
    check(p % 2 == 1 && is_prime(p), "BadPrime", "verification needs an odd prime p");
    check(is_prime(ell) && ell != p, "BadPrime", "verification needs a prime ell != p");
    check(m >= 0, "BadTwist", "twist exponent must be >= 0");
    const RingDesc& field = v_image.desc();
    check(field.kind() == RingKind::PrimeField || field.kind() == RingKind::PrimeFieldExt,
          "BadRing", "evaluation field must have characteristic p");
    check(field.p() == p, "BadPrime", "evaluation field has the wrong characteristic");
    check(v_image * v_image == RingValue::from_integer(field, ell), "BadSquareRoot",
          "v_image^2 must equal ell in the field");

    RootDatum rd = build_root_datum(lam.g);
    RingValue ell_val = RingValue::from_integer(field, ell);
    RingValue v_shift = v_image.pow(-pairing(rd.rho2, lam));

    std::ostringstream transcript;
    transcript << "lambda = " << lam.to_string() << ", m = " << m << ", ell = " << ell
               << ", p = " << p << "\n";

    // left chain: twist factor applied per term, from the similitude exponent
    RingValue left = RingValue::zero(field);
    transcript << "left  = v^{-<2rho,lam>} * [";
    bool first = true;
    for (const auto& mu : dominant_lower_set(lam)) {
        RingValue coeff = d.at(lam, mu).eval(v_image);
        RingValue factor = ell_val.pow(m * eta_exponent(mu));
        left = left + coeff * factor * embed_into(psi.at(mu), field);
        if (!first) transcript << " + ";
        transcript << "d(" << mu.to_string() << ") * ell^{" << m << "*" << eta_exponent(mu)
                   << "} * psi(" << mu.to_string() << ")";
        first = false;
    }
    transcript << "]\n";
    left = left * v_shift;

    // right chain: one central scalar, computed on the dual side from the
    // weight decomposition of V_lam
    std::map<Cocharacter, BigInt> weights = weights_of_irrep(lam);
    Int central_exp = eta_exponent(lam);
    for (const auto& [mu, mult] : weights)
        check(eta_exponent(mu) == central_exp, "InternalError",
              "weights of an irreducible do not share the eta exponent");
    RingValue central = ell_val.pow(m * central_exp);

    RingValue right = RingValue::zero(field);
    transcript << "right = v^{-<2rho,lam>} * chi_lam(eta-dual(ell^" << m << ")) * [";
    first = true;
    for (const auto& mu : dominant_lower_set(lam)) {
        RingValue coeff = d.at(lam, mu).eval(v_image);
        right = right + coeff * embed_into(psi.at(mu), field);
        if (!first) transcript << " + ";
        transcript << "d(" << mu.to_string() << ") * psi(" << mu.to_string() << ")";
        first = false;
    }
    transcript << "]\n";
    transcript << "central scalar: ell^{" << m << "*" << central_exp << "} from "
               << weights.size() << " weight(s) of V_lam\n";
    right = right * central * v_shift;

    MainTheoremResult result;
    result.ok = (left == right);
    result.symbolically_distinct = (m != 0 && central_exp != 0);
    result.lhs = left;
    result.rhs = right;
    transcript << "lhs = " << left.to_string() << ", rhs = " << right.to_string() << " => "
               << (result.ok ? "EQUAL" : "DIFFERENT") << "\n";
    result.transcript = transcript.str();
    return result;
}

}  // namespace siegel
