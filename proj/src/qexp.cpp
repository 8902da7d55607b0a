#include "siegel/qexp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace siegel {

FourierIndex FourierIndex::validate(const IMat& doubled) {
    check(doubled.rows == doubled.cols && doubled.rows >= 1, "NotSymmetric",
          "index matrix must be square");
    const Int g = doubled.rows;
    for (Int i = 0; i < g; ++i)
        for (Int j = i + 1; j < g; ++j)
            check(doubled(i, j) == doubled(j, i), "NotSymmetric", "index matrix must be symmetric");
    for (Int i = 0; i < g; ++i)
        check(doubled(i, i) % 2 == 0, "OddDiagonal",
              "doubled index must have even diagonal (integral n_ii)");
    // Positive semidefinite iff every principal minor is >= 0.
    for (std::uint32_t subset = 1; subset < (1u << g); ++subset) {
        std::vector<int> idx;
        for (Int i = 0; i < g; ++i)
            if (subset & (1u << i)) idx.push_back(static_cast<int>(i));
        IMat sub(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = 0; j < idx.size(); ++j) sub(i, j) = doubled(idx[i], idx[j]);
        check(imat_det(sub) >= 0, "NotPSD", "index matrix must be positive semidefinite");
    }
    return FourierIndex(g, doubled);
}

FourierIndex FourierIndex::zero(Int g) { return FourierIndex(g, IMat(g, g)); }

FourierIndex FourierIndex::scalar(Int n) {
    IMat m(1, 1);
    m(0, 0) = 2 * n;
    return validate(m);
}

Int FourierIndex::trace() const {
    Int t = 0;
    for (Int i = 0; i < g_; ++i) t += doubled_(i, i);
    return t / 2;
}

BigInt FourierIndex::det_doubled() const { return imat_det(doubled_); }

Rational FourierIndex::det() const {
    return Rational(det_doubled(), pow_bigint(2, g_));
}

FourierIndex FourierIndex::operator+(const FourierIndex& o) const {
    check(g_ == o.g_, "DegreeMismatch", "index sum needs equal genus");
    IMat m = doubled_;
    for (size_t i = 0; i < m.a.size(); ++i) m.a[i] += o.doubled_.a[i];
    return FourierIndex(g_, std::move(m));  // sum of PSD indices stays valid
}

std::string FourierIndex::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (Int i = 0; i < g_; ++i)
        for (Int j = i; j < g_; ++j) {
            if (!first) os << " ";
            os << doubled_(i, j);
            first = false;
        }
    return os.str();
}

std::vector<FourierIndex> fourier_indices_up_to(Int g, Int tau) {
    check(g >= 1 && g <= 2, "SizeGuard", "index enumeration implemented for g <= 2");
    std::vector<FourierIndex> out;
    if (g == 1) {
        for (Int n = 0; n <= tau; ++n) out.push_back(FourierIndex::scalar(n));
        return out;
    }
    for (Int a = 0; a <= tau; ++a)
        for (Int c = 0; a + c <= tau; ++c) {
            // doubled = [[2a, b], [b, 2c]], PSD iff b^2 <= 4ac
            for (Int b = 0; b * b <= 4 * a * c; ++b) {
                IMat m(2, 2);
                m(0, 0) = 2 * a;
                m(1, 1) = 2 * c;
                m(0, 1) = m(1, 0) = b;
                out.push_back(FourierIndex::validate(m));
                if (b > 0) {
                    m(0, 1) = m(1, 0) = -b;
                    out.push_back(FourierIndex::validate(m));
                }
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

void QExpansion::set_coefficient(const FourierIndex& n, const RingValue& c) {
    check(n.g() == g_, "DegreeMismatch", "index genus mismatch");
    check(n.trace() <= tau_, "TraceBound", "index beyond the trace bound");
    check(c.desc() == ring_, "RingMismatch", "coefficient ring mismatch");
    if (c.is_zero())
        coeffs_.erase(n);
    else
        coeffs_.insert_or_assign(n, c);
}

void QExpansion::add_coefficient(const FourierIndex& n, const RingValue& c) {
    check(n.g() == g_, "DegreeMismatch", "index genus mismatch");
    check(n.trace() <= tau_, "TraceBound", "index beyond the trace bound");
    auto it = coeffs_.find(n);
    if (it == coeffs_.end()) {
        if (!c.is_zero()) {
            check(c.desc() == ring_, "RingMismatch", "coefficient ring mismatch");
            coeffs_.emplace(n, c);
        }
        return;
    }
    RingValue sum = it->second + c;
    if (sum.is_zero())
        coeffs_.erase(it);
    else
        it->second = sum;
}

RingValue QExpansion::coefficient(const FourierIndex& n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? RingValue::zero(ring_) : it->second;
}

bool QExpansion::operator==(const QExpansion& o) const {
    return g_ == o.g_ && level_ == o.level_ && weight_ == o.weight_ && ring_ == o.ring_ &&
           tau_ == o.tau_ && coeffs_ == o.coeffs_;
}

bool same_series(const QExpansion& f, const QExpansion& h) {
    return f.g() == h.g() && f.level() == h.level() && f.ring() == h.ring() &&
           f.coeffs() == h.coeffs();
}

namespace {

void check_compatible(const QExpansion& f, const QExpansion& h) {
    check(f.g() == h.g(), "DegreeMismatch", "expansions of different genus");
    check(f.level() == h.level(), "LevelMismatch", "expansions of different level");
    check(f.ring() == h.ring(), "RingMismatch", "expansions over different rings");
}

}  // namespace

QExpansion qexp_linear(const RingValue& a, const QExpansion& f, const RingValue& b,
                       const QExpansion& h) {
    check_compatible(f, h);
    check(a.desc() == f.ring() && b.desc() == f.ring(), "RingMismatch",
          "scalars must live in the coefficient ring");
    std::optional<Int> weight;
    if (f.weight() && h.weight() && *f.weight() == *h.weight()) weight = f.weight();
    QExpansion r(f.g(), f.level(), weight, f.ring(), std::min(f.tau(), h.tau()));
    for (const auto& [n, c] : f.coeffs())
        if (n.trace() <= r.tau()) r.add_coefficient(n, a * c);
    for (const auto& [n, c] : h.coeffs())
        if (n.trace() <= r.tau()) r.add_coefficient(n, b * c);
    return r;
}

QExpansion qexp_mul(const QExpansion& f, const QExpansion& h) {
    check_compatible(f, h);
    std::optional<Int> weight;
    if (f.weight() && h.weight()) weight = *f.weight() + *h.weight();
    QExpansion r(f.g(), f.level(), weight, f.ring(), std::min(f.tau(), h.tau()));
    for (const auto& [n1, c1] : f.coeffs()) {
        if (n1.trace() > r.tau()) continue;
        for (const auto& [n2, c2] : h.coeffs()) {
            if (n1.trace() + n2.trace() > r.tau()) continue;
            r.add_coefficient(n1 + n2, c1 * c2);
        }
    }
    return r;
}

QExpansion truncate(const QExpansion& f, Int tau) {
    check(tau <= f.tau(), "TraceBound", "cannot extend precision by truncation");
    QExpansion r(f.g(), f.level(), f.weight(), f.ring(), tau);
    for (const auto& [n, c] : f.coeffs())
        if (n.trace() <= tau) r.set_coefficient(n, c);
    return r;
}

Rational bernoulli(Int k) {
    check(k >= 0, "BadWeight", "Bernoulli index must be >= 0");
    static std::vector<Rational> cache{Rational(1)};
    for (Int m = static_cast<Int>(cache.size()); m <= k; ++m) {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rational s = 0;
        for (Int j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * cache[j];
        cache.push_back(-s / Rational(m + 1));
    }
    return cache[k];
}

QExpansion eisenstein(Int k, Int tau) {
    check(k >= 4 && k % 2 == 0, "BadWeight", "Eisenstein weight must be even and >= 4");
    QExpansion e(1, 1, k, RingDesc::rational(), tau);
    RingDesc q = RingDesc::rational();
    e.set_coefficient(FourierIndex::zero(1), RingValue::one(q));
    Rational c = Rational(-2 * k) / bernoulli(k);
    for (Int n = 1; n <= tau; ++n) {
        BigInt sigma = 0;
        for (Int d = 1; d <= n; ++d)
            if (n % d == 0) sigma += pow_bigint(d, k - 1);
        e.set_coefficient(FourierIndex::scalar(n), RingValue::from_rational(q, c * Rational(sigma)));
    }
    return e;
}

QExpansion delta_series(Int tau) {
    // q prod_{n>=1} (1-q^n)^24, expanded exactly.
    std::vector<BigInt> euler(tau + 1, BigInt(0));
    euler[0] = 1;
    for (Int n = 1; n <= tau; ++n) {
        for (Int i = tau; i >= n; --i) euler[i] -= euler[i - n];
    }
    auto mul_trunc = [&](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
        std::vector<BigInt> r(tau + 1, BigInt(0));
        for (Int i = 0; i <= tau; ++i) {
            if (a[i] == 0) continue;
            for (Int j = 0; i + j <= tau; ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    };
    std::vector<BigInt> pow = euler;  // euler^1
    std::vector<BigInt> acc(tau + 1, BigInt(0));
    acc[0] = 1;
    Int e = 24;
    while (e > 0) {  // acc * pow^e stays invariant
        if (e & 1) acc = mul_trunc(acc, pow);
        pow = mul_trunc(pow, pow);
        e >>= 1;
    }
    QExpansion d(1, 1, 12, RingDesc::rational(), tau);
    RingDesc q = RingDesc::rational();
    for (Int n = 1; n <= tau; ++n)
        d.set_coefficient(FourierIndex::scalar(n), RingValue::from_rational(q, Rational(acc[n - 1])));
    return d;
}

QExpansion reduce_mod_p(const QExpansion& f, Int p, const std::optional<RingValue>& zeta_image) {
    RingDesc target = zeta_image ? zeta_image->desc() : RingDesc::prime_field(p);
    check(target.p() == p, "RingMismatch", "zeta image lives over a different prime");
    QExpansion r(f.g(), f.level(), f.weight(), target, f.tau());
    for (const auto& [n, c] : f.coeffs()) {
        try {
            r.set_coefficient(n, reduce_to_prime_field(c, target, zeta_image));
        } catch (const domain_error& e) {
            if (e.code() == "NonPIntegral")
                throw domain_error("NonPIntegral",
                                   "coefficient at index [" + n.to_string() + "] is not p-integral");
            throw;
        }
    }
    return r;
}

QExpansion reindex_level(const QExpansion& f) {
    QExpansion r(f.g(), 1, f.weight(), f.ring(), f.tau());
    for (const auto& [n, c] : f.coeffs()) r.set_coefficient(n, c);
    return r;
}

}  // namespace siegel
