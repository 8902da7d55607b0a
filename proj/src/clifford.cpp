#include "siegel/clifford.hpp"

#include <bit>
#include <sstream>
#include <vector>

namespace siegel {

int monomial_sign(std::uint32_t s, std::uint32_t t) {
    // Count pairs (i in s, j in t) with i > j by sweeping t's bits.
    int inversions = 0;
    for (std::uint32_t rest = t; rest; rest &= rest - 1) {
        std::uint32_t j = std::countr_zero(rest);
        std::uint32_t above = s >> (j + 1);
        inversions += std::popcount(above);
    }
    return inversions % 2 == 0 ? 1 : -1;
}

CliffordElement CliffordElement::scalar(Int g, const RingDesc& ring, const RingValue& c) {
    CliffordElement r(g, ring);
    r.add_term(0, c);
    return r;
}

CliffordElement CliffordElement::generator(Int g, const RingDesc& ring, Int i) {
    check(i >= 1 && i <= 2 * g + 1, "BadGenerator", "generator index out of range");
    CliffordElement r(g, ring);
    r.add_term(1u << (i - 1), RingValue::one(ring));
    return r;
}

void CliffordElement::add_term(std::uint32_t mask, const RingValue& c) {
    check(mask < (1u << generator_count()), "BadMask", "mask outside the generator range");
    check(c.desc() == ring_, "RingMismatch", "coefficient ring mismatch");
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(mask, c);
        return;
    }
    RingValue sum = it->second + c;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

RingValue CliffordElement::coefficient(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? RingValue::zero(ring_) : it->second;
}

bool CliffordElement::is_even() const {
    for (const auto& [mask, c] : terms_)
        if (std::popcount(mask) % 2 != 0) return false;
    return true;
}

bool CliffordElement::is_vector() const {
    for (const auto& [mask, c] : terms_)
        if (std::popcount(mask) != 1) return false;
    return true;
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
    check(g_ == o.g_ && ring_ == o.ring_, "Mismatch", "operands of different degree or ring");
    CliffordElement r = *this;
    for (const auto& [mask, c] : o.terms_) r.add_term(mask, c);
    return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
    check(g_ == o.g_ && ring_ == o.ring_, "Mismatch", "operands of different degree or ring");
    CliffordElement r = *this;
    for (const auto& [mask, c] : o.terms_) r.add_term(mask, -c);
    return r;
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
    check(g_ == o.g_ && ring_ == o.ring_, "Mismatch", "operands of different degree or ring");
    CliffordElement r(g_, ring_);
    for (const auto& [s, cs] : terms_)
        for (const auto& [t, ct] : o.terms_) {
            RingValue c = cs * ct;
            if (monomial_sign(s, t) < 0) c = -c;
            r.add_term(s ^ t, c);
        }
    return r;
}

CliffordElement CliffordElement::scale(const RingValue& c) const {
    CliffordElement r(g_, ring_);
    for (const auto& [mask, v] : terms_) r.add_term(mask, v * c);
    return r;
}

bool CliffordElement::operator==(const CliffordElement& o) const {
    return g_ == o.g_ && ring_ == o.ring_ && terms_ == o.terms_;
}

std::string CliffordElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")";
        for (std::uint32_t rest = mask; rest; rest &= rest - 1)
            os << "*c" << (std::countr_zero(rest) + 1);
        first = false;
    }
    return os.str();
}

CliffordElement parity_automorphism(const CliffordElement& x) {
    CliffordElement r(x.degree(), x.ring());
    for (const auto& [mask, c] : x.terms())
        r.add_term(mask, std::popcount(mask) % 2 == 0 ? c : -c);
    return r;
}

std::optional<CliffordElement> cliff_inverse(const CliffordElement& x) {
    const Int g = x.degree();
    check(g <= 2, "SizeGuard", "dense inverse solve guarded to g <= 2");
    const int dim = 1 << (2 * g + 1);
    const RingDesc& ring = x.ring();
    if (x.is_zero()) return std::nullopt;

    // Left-multiplication matrix L: column T holds the coordinates of x * e_T.
    // Solve L y = e_0 by Gaussian elimination over the field.
    std::vector<std::vector<RingValue>> m(
        dim, std::vector<RingValue>(dim + 1, RingValue::zero(ring)));
    for (int t = 0; t < dim; ++t)
        for (const auto& [s, c] : x.terms()) {
            std::uint32_t target = s ^ static_cast<std::uint32_t>(t);
            RingValue v = monomial_sign(s, static_cast<std::uint32_t>(t)) < 0 ? -c : c;
            m[target][t] = m[target][t] + v;
        }
    m[0][dim] = RingValue::one(ring);

    for (int col = 0; col < dim; ++col) {
        int pivot = -1;
        for (int i = col; i < dim; ++i)
            if (!m[i][col].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(m[col], m[pivot]);
        RingValue inv = *m[col][col].inverse();
        for (int j = col; j <= dim; ++j) m[col][j] = m[col][j] * inv;
        for (int i = 0; i < dim; ++i) {
            if (i == col || m[i][col].is_zero()) continue;
            RingValue f = m[i][col];
            for (int j = col; j <= dim; ++j) m[i][j] = m[i][j] - f * m[col][j];
        }
    }
    CliffordElement y(g, ring);
    for (int t = 0; t < dim; ++t) y.add_term(static_cast<std::uint32_t>(t), m[t][dim]);
    return y;
}

CliffordElement twisted_conjugate(const CliffordElement& x, const CliffordElement& m) {
    auto inv = cliff_inverse(x);
    check(inv.has_value(), "NotInvertible", "twisted conjugation by a non-invertible element");
    return parity_automorphism(x) * m * *inv;
}

bool is_gspin(const CliffordElement& x) {
    check(x.degree() <= 2, "SizeGuard", "membership test guarded to g <= 2");
    if (!x.is_even()) return false;
    auto inv = cliff_inverse(x);
    if (!inv) return false;
    CliffordElement gx = parity_automorphism(x);
    // Conjugation is linear in m, so testing the generators suffices.
    for (Int i = 1; i <= x.generator_count(); ++i) {
        CliffordElement image = gx * CliffordElement::generator(x.degree(), x.ring(), i) * *inv;
        if (!image.is_vector()) return false;
    }
    return true;
}

}  // namespace siegel
