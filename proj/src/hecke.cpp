#include "siegel/hecke.hpp"

#include "siegel/theta.hpp"

#include <algorithm>
#include <sstream>

namespace siegel {

IMat CosetRep::assembled() const {
    const int gg = static_cast<int>(g);
    QMat dinv = *qmat_inverse(to_qmat(d));
    Rational eta = pow_rational(Rational(ell), r);
    IMat m(2 * gg, 2 * gg);
    for (int i = 0; i < gg; ++i)
        for (int j = 0; j < gg; ++j) {
            Rational a = eta * dinv(j, i);  // ell^r D^{-T}
            check(denominator(a) == 1, "InternalError", "non-integral upper-left block");
            m(i, j) = static_cast<Int>(numerator(a));
            m(i, gg + j) = b(i, j);
            m(gg + i, gg + j) = d(i, j);
        }
    return m;
}

CosetRep CosetRep::identity(Int g, Int ell) {
    CosetRep rep;
    rep.g = g;
    rep.ell = ell;
    rep.r = 0;
    rep.d = IMat::identity(static_cast<int>(g));
    rep.b = IMat(static_cast<int>(g), static_cast<int>(g));
    return rep;
}

bool same_right_coset(const CosetRep& a, const CosetRep& b) {
    check(a.g == b.g && a.ell == b.ell, "Mismatch", "coset comparison mismatch");
    if (a.r != b.r) return false;
    QMat binv = *qmat_inverse(to_qmat(b.assembled()));
    QMat x = to_qmat(a.assembled()) * binv;
    return qmat_ell_integral(x, a.ell);
}

namespace {

// Exponent profile (ascending) of the elementary divisors of lam(ell).
std::vector<Int> target_divisor_exponents(const Cocharacter& lam, Int ell) {
    auto torus = to_imat(cochar_matrix(lam, ell));
    check(torus.has_value(), "NotIntegralCoset",
          "cocharacter evaluates to a non-integral matrix; shift by a central twist");
    return elementary_divisor_exponents(*torus, ell);
}

// All Hermite normal forms D with ell-power diagonal ell^{b_i}, b_i <= r,
// above-diagonal column entries reduced mod the diagonal, and ell^r D^{-1}
// integral.
std::vector<IMat> enumerate_hnf(Int g, Int ell, Int r) {
    const int n = static_cast<int>(g);
    std::vector<std::pair<int, int>> offdiag;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) offdiag.emplace_back(i, j);

    std::vector<IMat> out;
    Rational scale = pow_rational(Rational(ell), r);
    auto emit_offdiag = [&](auto&& self, IMat& d, size_t pos) -> void {
        if (pos == offdiag.size()) {
            QMat dinv = *qmat_inverse(to_qmat(d));
            for (const auto& e : dinv.a)
                if (denominator(e * scale) != 1) return;  // ell^r D^{-1} not integral
            out.push_back(d);
            return;
        }
        auto [i, j] = offdiag[pos];
        Int bound = d(j, j);
        for (Int v = 0; v < bound; ++v) {
            d(i, j) = v;
            self(self, d, pos + 1);
        }
        d(i, j) = 0;
    };
    std::vector<Int> diag_exp(n, 0);
    auto sweep_diag = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            IMat d(n, n);
            for (int i = 0; i < n; ++i) {
                Int v = 1;
                for (Int t = 0; t < diag_exp[i]; ++t) v *= ell;
                d(i, i) = v;
            }
            emit_offdiag(emit_offdiag, d, 0);
            return;
        }
        for (Int e = 0; e <= r; ++e) {
            diag_exp[pos] = e;
            self(self, pos + 1);
        }
    };
    sweep_diag(sweep_diag, 0);
    return out;
}

// Symmetric S with entries in [0,1) of denominator dividing ell^r and S D
// integral; the returned B = S D ranges over the translation classes.
std::vector<IMat> enumerate_b(const IMat& d, Int ell, Int r) {
    const int n = d.rows;
    Int denom = 1;
    for (Int t = 0; t < r; ++t) denom *= ell;
    std::vector<Int> entries(static_cast<size_t>(n) * (n + 1) / 2, 0);
    std::vector<IMat> out;
    auto emit = [&](auto&& self, size_t pos) -> void {
        if (pos == entries.size()) {
            QMat s(n, n);
            size_t t = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    s(i, j) = s(j, i) = Rational(entries[t], denom);
                    ++t;
                }
            QMat sd = s * to_qmat(d);
            auto b = to_imat(sd);
            if (b) out.push_back(*b);
            return;
        }
        for (Int v = 0; v < denom; ++v) {
            entries[pos] = v;
            self(self, pos + 1);
        }
    };
    emit(emit, 0);
    return out;
}

}  // namespace

std::vector<CosetRep> coset_reps(Int g, Int ell, const Cocharacter& lam) {
    check(g >= 1 && g <= 2, "SizeGuard", "coset enumeration guarded to g <= 2");
    check(lam.g == g, "DegreeMismatch", "cocharacter degree mismatch");
    check(is_prime(ell), "NotPrime", "coset enumeration needs a prime");
    check(is_dominant(lam), "NotDominant", "double cosets are named by dominant cocharacters");
    const Int r = eta_exponent(lam);
    check(r >= 0 && r <= 2, "SizeGuard", "similitude exponent guarded to r <= 2");
    for (Int i = 0; i < g; ++i)
        check(lam.coeffs[i] >= 0 && lam.coeffs[i] <= r, "NotIntegralCoset",
              "cocharacter exponents must lie in [0, r] for an integral coset");

    const std::vector<Int> target = target_divisor_exponents(lam, ell);
    std::vector<CosetRep> kept;
    std::vector<QMat> kept_inverses;
    for (const IMat& d : enumerate_hnf(g, ell, r)) {
        for (const IMat& b : enumerate_b(d, ell, r)) {
            CosetRep rep{g, ell, r, d, b};
            IMat m = rep.assembled();
            if (elementary_divisor_exponents(m, ell) != target) continue;
            // brute-force dedupe: same coset iff rep * kept^{-1} is ell-integral
            QMat qm = to_qmat(m);
            bool dup = false;
            for (const auto& kinv : kept_inverses) {
                if (qmat_ell_integral(qm * kinv, ell)) {
                    dup = true;
                    break;
                }
            }
            if (dup) continue;
            kept_inverses.push_back(*qmat_inverse(qm));
            kept.push_back(std::move(rep));
        }
    }
    // construction invariants
    Rational eta = pow_rational(Rational(ell), r);
    for (const auto& rep : kept)
        check(similitude_factor(to_qmat(rep.assembled())) == eta, "InternalError",
              "representative with wrong similitude");
    return kept;
}

HeckeOperator hecke_operator_for(const Cocharacter& lam, Int ell, std::string name) {
    HeckeOperator op;
    op.g = lam.g;
    op.ell = ell;
    op.r = eta_exponent(lam);
    op.name = name.empty() ? "T[" + lam.to_string() + "]" : std::move(name);
    op.components.push_back({lam, coset_reps(lam.g, ell, lam)});
    return op;
}

namespace {

Cocharacter ti_cocharacter(Int g, Int i) {
    // diag(I_{g-i}, ell I_i; ell^2 I_{g-i}, ell I_i): dominant profile has
    // exponent 2 on the first g-i entries and 1 on the rest, similitude 2.
    std::vector<Int> c(g + 1, 1);
    for (Int j = 0; j < g - i; ++j) c[j] = 2;
    c[g] = 2;
    return Cocharacter(g, std::move(c));
}

}  // namespace

HeckeOperator hecke_operator(Int g, Int ell, const std::string& name) {
    check(is_prime(ell), "NotPrime", "Hecke operators are indexed by primes");
    std::ostringstream tell, tell2;
    tell << "T(" << ell << ")";
    tell2 << "T(" << ell << "^2)";
    if (name == tell.str()) {
        std::vector<Int> c(g + 1, 1);
        return hecke_operator_for(Cocharacter(g, std::move(c)), ell, name);
    }
    if (name == tell2.str()) {
        HeckeOperator op;
        op.g = g;
        op.ell = ell;
        op.r = 2;
        op.name = name;
        for (Int i = 0; i <= g; ++i) {
            Cocharacter lam = ti_cocharacter(g, i);
            op.components.push_back({lam, coset_reps(g, ell, lam)});
        }
        return op;
    }
    for (Int i = 0; i <= g; ++i) {
        std::ostringstream ti;
        ti << "T" << i << "(" << ell << "^2)";
        if (name == ti.str()) return hecke_operator_for(ti_cocharacter(g, i), ell, name);
    }
    throw domain_error("BadOperator", "unknown Hecke operator name: " + name);
}

QExpansion slash_block_upper(const CosetRep& m, Int k, const QExpansion& f, Int tau_out) {
    check(f.g() == m.g, "DegreeMismatch", "representative genus mismatch");
    check(f.ring().kind() == RingKind::Rational, "BadRing",
          "slash operates on rational expansions (mod-p input is lifted upstream)");
    Int ell_pow_r = 1;
    for (Int t = 0; t < m.r; ++t) ell_pow_r *= m.ell;
    check(f.tau() >= ell_pow_r * tau_out, "Precision",
          "input precision below ell^r * tau_out");

    const Int g = m.g;
    Int det_m = 1;  // ell^{rg}
    for (Int t = 0; t < g; ++t) det_m *= ell_pow_r;
    const Int cyc_order = f.level() * det_m;
    RingDesc cyc = RingDesc::cyclotomic(cyc_order);
    RingValue zeta = cyc_order == 1 ? RingValue::one(cyc) : RingValue::generator(cyc);

    QMat dinv = *qmat_inverse(to_qmat(m.d));
    QMat s = to_qmat(m.b) * dinv;  // symmetric by construction
    Rational eta = Rational(ell_pow_r);
    Rational det_d = qmat_det(to_qmat(m.d));
    Rational prefactor = pow_rational(eta, k * g - g * (g + 1) / 2) * pow_rational(det_d, -k);

    QExpansion out(g, f.level(), k, cyc, tau_out);
    for (const auto& [n, a] : f.coeffs()) {
        // n' = eta D^{-1} n D^{-T}, kept only when it is again a valid index
        QMat nd = to_qmat(n.doubled());
        QMat ndp = dinv * nd * dinv.transpose();
        for (auto& e : ndp.a) e *= eta;
        auto doubled_prime = to_imat(ndp);
        if (!doubled_prime) continue;
        bool even_diag = true;
        for (Int i = 0; i < g; ++i)
            if ((*doubled_prime)(i, i) % 2 != 0) even_diag = false;
        if (!even_diag) continue;
        FourierIndex np = FourierIndex::validate(*doubled_prime);
        if (np.trace() > tau_out) continue;

        // phase: Tr(n B D^{-1}) scaled into the cyclotomic order
        Rational tr = 0;
        for (Int i = 0; i < g; ++i)
            for (Int j = 0; j < g; ++j) tr += Rational(n.doubled()(i, j)) * s(j, i);
        tr /= 2;
        Rational t_exact = Rational(det_m) * tr;
        check(denominator(t_exact) == 1, "NonIntegralPhase",
              "phase exponent is not an integer");
        Int t = mod_reduce(numerator(t_exact), cyc_order);

        RingValue coeff = RingValue::from_rational(cyc, a.rational_value() * prefactor);
        out.add_coefficient(np, coeff * zeta.pow(t));
    }
    return out;
}

namespace {

QExpansion lift_to_rational(const QExpansion& f) {
    QExpansion out(f.g(), f.level(), f.weight(), RingDesc::rational(), f.tau());
    for (const auto& [n, c] : f.coeffs())
        out.set_coefficient(n, RingValue::from_integer(RingDesc::rational(), c.residue()));
    return out;
}

// Representatives are enumerated ell-locally with B reduced mod the
// translation lattice; acting on a level-N expansion needs the translate
// with B == 0 mod N in the same local coset.  Scaling B by the CRT unit
// c = 1 mod ell^r, c = 0 mod N does that (and is the identity at N = 1).
CosetRep level_adjusted(const CosetRep& rep, Int level) {
    if (level == 1 || rep.r == 0) return rep;
    Int ell_pow_r = 1;
    for (Int t = 0; t < rep.r; ++t) ell_pow_r *= rep.ell;
    Int c = 0;
    while (c % ell_pow_r != 1) c += level;  // smallest multiple of N that is 1 mod ell^r
    CosetRep adjusted = rep;
    for (auto& entry : adjusted.b.a) entry *= c;
    return adjusted;
}

QExpansion apply_char0(const HeckeOperator& op, Int k, const QExpansion& f, Int tau_out) {
    Int ell_pow_r = 1;
    for (Int t = 0; t < op.r; ++t) ell_pow_r *= op.ell;
    Int det_m = 1;
    for (Int t = 0; t < op.g; ++t) det_m *= ell_pow_r;
    RingDesc cyc = RingDesc::cyclotomic(f.level() * det_m);
    QExpansion acc(f.g(), f.level(), k, cyc, tau_out);
    for (const auto& component : op.components)
        for (const auto& rep : component.reps) {
            QExpansion part = slash_block_upper(level_adjusted(rep, f.level()), k, f, tau_out);
            for (const auto& [n, c] : part.coeffs()) acc.add_coefficient(n, c);
        }
    // phase cancellation: the sum over a full set of representatives has
    // coefficients in the base ring again
    QExpansion out(f.g(), f.level(), k, RingDesc::rational(), tau_out);
    for (const auto& [n, c] : acc.coeffs()) {
        auto q = c.try_rational();
        check(q.has_value(), "CoefficientNotRational",
              "coset sum left a nontrivial root of unity at index [" + n.to_string() + "]");
        out.set_coefficient(n, RingValue::from_rational(RingDesc::rational(), *q));
    }
    return out;
}

}  // namespace

QExpansion hecke_apply(const HeckeOperator& op, Int k, const QExpansion& f, Int tau_out) {
    check(f.g() == op.g, "DegreeMismatch", "operator genus mismatch");
    check(f.level() % op.ell != 0, "BadLevel", "Hecke prime must satisfy ell does not divide pN");
    switch (f.ring().kind()) {
        case RingKind::Rational:
            return apply_char0(op, k, f, tau_out);
        case RingKind::PrimeField: {
            check(f.ring().p() != op.ell, "BadPrime",
                  "Hecke prime must satisfy ell does not divide pN");
            QExpansion lifted = apply_char0(op, k, lift_to_rational(f), tau_out);
            return reduce_mod_p(lifted, f.ring().p());
        }
        default:
            throw domain_error("BadRing", "Hecke action implemented over Q and prime fields");
    }
}

std::optional<RingValue> eigenvalue_of(const HeckeOperator& op, Int k, const QExpansion& f) {
    check(!f.is_zero(), "ZeroInput", "eigenvalue of the zero expansion is undefined");
    Int ell_pow_r = 1;
    for (Int t = 0; t < op.r; ++t) ell_pow_r *= op.ell;
    Int tau_out = f.tau() / ell_pow_r;
    QExpansion tf = hecke_apply(op, k, f, tau_out);

    std::optional<RingValue> ratio;
    auto consider = [&](const FourierIndex& n) -> bool {
        RingValue a = f.coefficient(n), b = tf.coefficient(n);
        if (a.is_zero()) return b.is_zero();
        RingValue candidate = b * *a.inverse();
        if (!ratio) {
            ratio = candidate;
            return true;
        }
        return candidate == *ratio;
    };
    for (const auto& [n, c] : f.coeffs()) {
        if (n.trace() > tau_out) continue;
        if (!consider(n)) return std::nullopt;
    }
    for (const auto& [n, c] : tf.coeffs()) {
        if (!consider(n)) return std::nullopt;
    }
    if (!ratio) return RingValue::zero(f.ring());  // operator kills the visible window
    return ratio;
}

CommutationReport commutation_check(const QExpansion& f, Int k, const HeckeOperator& op) {
    const Int g = f.g();
    const RingDesc& ring = f.ring();
    check(ring.kind() == RingKind::PrimeField, "BadRing",
          "commutation check works on mod-p expansions");
    const Int p = ring.p();
    check(2 * p > g * (g + 1), "BadPrime", "theta operator needs p > g(g+1)/2");
    check(op.ell != p && f.level() % op.ell != 0, "BadPrime",
          "Hecke prime must satisfy ell does not divide pN");

    Int ell_pow_r = 1;
    for (Int t = 0; t < op.r; ++t) ell_pow_r *= op.ell;
    Int tau_out = f.tau() / ell_pow_r;

    QExpansion lhs = hecke_apply(op, k + p + 1, theta_bn_direct(f), tau_out);
    QExpansion rhs = theta_bn_direct(hecke_apply(op, k, f, tau_out));
    RingValue factor = RingValue::from_integer(ring, pow_bigint(op.ell, g * op.r));
    rhs = qexp_linear(factor, rhs, RingValue::zero(ring), rhs);

    CommutationReport report;
    if (same_series(lhs, rhs)) {
        report.ok = true;
        std::ostringstream os;
        os << "det factor " << op.ell << "^" << g * op.r << " verified at tau=" << tau_out;
        report.detail = os.str();
        return report;
    }
    report.ok = false;
    for (const auto& [n, c] : lhs.coeffs()) {
        if (!(rhs.coefficient(n) == c)) {
            report.detail = "first differing index [" + n.to_string() + "]";
            return report;
        }
    }
    for (const auto& [n, c] : rhs.coeffs()) {
        if (!(lhs.coefficient(n) == c)) {
            report.detail = "first differing index [" + n.to_string() + "]";
            return report;
        }
    }
    report.detail = "metadata mismatch";
    return report;
}

}  // namespace siegel
