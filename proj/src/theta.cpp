#include "siegel/theta.hpp"

#include <algorithm>

namespace siegel {

namespace {

using Poly = std::vector<Rational>;  // coefficients low-to-high

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

void poly_add_into(Poly& a, const Poly& b, const Rational& scale) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
}

// det of a matrix of linear polynomials r_ij + x s_ij, by cofactor expansion.
Poly det_linear_pencil(const QMat& r, const QMat& s, std::vector<int>& rows,
                       std::vector<int>& cols) {
    const size_t k = rows.size();
    if (k == 1) return Poly{r(rows[0], cols[0]), s(rows[0], cols[0])};
    Poly det;
    int sign = 1;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < k; ++j) {
        Poly entry{r(rows[0], cols[j]), s(rows[0], cols[j])};
        bool zero = entry[0] == 0 && entry[1] == 0;
        if (!zero) {
            std::vector<int> sub_cols;
            sub_cols.reserve(k - 1);
            for (size_t t = 0; t < k; ++t)
                if (t != j) sub_cols.push_back(cols[t]);
            Poly minor = det_linear_pencil(r, s, sub_rows, sub_cols);
            poly_add_into(det, poly_mul(entry, minor), Rational(sign));
        }
        sign = -sign;
    }
    return det;
}

void check_symmetric(const QMat& m, const char* what) {
    check(m.rows == m.cols, "NotSymmetric", std::string(what) + " must be square");
    for (int i = 0; i < m.rows; ++i)
        for (int j = i + 1; j < m.cols; ++j)
            check(m(i, j) == m(j, i), "NotSymmetric", std::string(what) + " must be symmetric");
}

QMat index_over_level(const FourierIndex& n, Int level) {
    QMat m(static_cast<int>(n.g()), static_cast<int>(n.g()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            m(i, j) = Rational(n.doubled()(i, j), 2 * level);
    return m;
}

}  // namespace

std::vector<Rational> p_polys(const QMat& r, const QMat& s) {
    check_symmetric(r, "R");
    check_symmetric(s, "S");
    check(r.rows == s.rows, "ShapeMismatch", "R and S must have equal size");
    const int g = r.rows;
    std::vector<int> rows(g), cols(g);
    for (int i = 0; i < g; ++i) rows[i] = cols[i] = i;
    Poly det = det_linear_pencil(r, s, rows, cols);
    det.resize(g + 1, Rational(0));
    return det;
}

BigInt q_coefficient(const PQContext& ctx, Int j) {
    BigInt c = factorial(j) * factorial(ctx.g - j);
    c *= binomial(BigInt(2 * ctx.k2 - j), ctx.g - j);
    c *= binomial(BigInt(2 * ctx.k1 - ctx.g + j), j);
    return j % 2 == 0 ? c : -c;
}

Rational q_eval(const PQContext& ctx, const QMat& r, const QMat& s) {
    check(r.rows == ctx.g && s.rows == ctx.g, "ShapeMismatch",
          "matrix size must match the context degree");
    std::vector<Rational> p = p_polys(r, s);
    Rational total = 0;
    for (Int j = 0; j <= ctx.g; ++j) total += Rational(q_coefficient(ctx, j)) * p[j];
    return total;
}

QMat eigenrelation_residual(const FourierIndex& n, Int level) {
    const int g = static_cast<int>(n.g());
    QMat residual(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            // exponent of q_ij in the N-th root of the index monomial
            Rational exponent = i == j ? Rational(n.doubled()(i, i), 2 * level)
                                       : Rational(n.doubled()(i, j), level);
            Rational operator_entry = Rational(1 + (i == j ? 1 : 0), 2) * exponent;
            residual(i, j) = operator_entry - Rational(n.doubled()(i, j), 2 * level);
        }
    return residual;
}

QExpansion bracket(const QExpansion& f, const QExpansion& g, const PQContext& ctx) {
    check(f.g() == g.g() && f.g() == ctx.g, "DegreeMismatch", "bracket degree mismatch");
    check(f.level() == g.level(), "LevelMismatch", "bracket level mismatch");
    check(f.ring() == g.ring(), "RingMismatch", "bracket ring mismatch");
    if (f.weight()) check(*f.weight() == ctx.k1, "BadWeight", "first weight differs from context");
    if (g.weight()) check(*g.weight() == ctx.k2, "BadWeight", "second weight differs from context");

    QExpansion out(f.g(), f.level(), ctx.k1 + ctx.k2 + 2, f.ring(), std::min(f.tau(), g.tau()));
    for (const auto& [n1, a] : f.coeffs()) {
        if (n1.trace() > out.tau()) continue;
        QMat r = index_over_level(n1, f.level());
        for (const auto& [n2, b] : g.coeffs()) {
            if (n1.trace() + n2.trace() > out.tau()) continue;
            QMat s = index_over_level(n2, f.level());
            Rational q = q_eval(ctx, r, s);
            if (q == 0) continue;
            out.add_coefficient(n1 + n2, (a * b).scale(q));
        }
    }
    return out;
}

QExpansion theta_bn_direct(const QExpansion& f) {
    const RingDesc& ring = f.ring();
    check(ring.kind() == RingKind::PrimeField || ring.kind() == RingKind::PrimeFieldExt,
          "BadRing", "theta operator works on mod-p expansions");
    const Int p = ring.p();
    const Int g = f.g();
    check(2 * p > g * (g + 1), "BadPrime", "theta operator needs p > g(g+1)/2");
    check(f.level() % p != 0, "BadLevel", "theta operator needs the level invertible mod p");

    std::optional<Int> weight;
    if (f.weight()) weight = *f.weight() + p + 1;
    QExpansion out(g, f.level(), weight, ring, f.tau());
    Rational level_power = pow_rational(Rational(f.level()), g);
    for (const auto& [n, c] : f.coeffs()) {
        RingValue factor = RingValue::from_rational(ring, n.det() / level_power);
        out.set_coefficient(n, c * factor);
    }
    return out;
}

QExpansion theta_bn_via_bracket(const QExpansion& f, const QExpansion& h, Int p,
                                std::optional<Int> k1_opt) {
    check(f.ring().kind() == RingKind::Rational && h.ring().kind() == RingKind::Rational,
          "BadRing", "bracket route starts from rational expansions");
    check(is_prime(p), "NotPrime", "p must be prime");
    const Int g = f.g();
    check(2 * p > g * (g + 1), "BadPrime", "theta operator needs p > g(g+1)/2");

    // H must reduce to the constant series 1.
    QExpansion h_red = reduce_mod_p(h, p);
    QExpansion one(h.g(), h.level(), h.weight(), RingDesc::prime_field(p), h.tau());
    one.set_coefficient(FourierIndex::zero(h.g()), RingValue::one(RingDesc::prime_field(p)));
    check(same_series(h_red, one), "BadKernelSeries",
          "second series must be congruent to 1 mod p");
    if (h.weight()) check(*h.weight() == p - 1, "BadWeight", "kernel series must have weight p-1");

    std::optional<Int> k1 = k1_opt ? k1_opt : f.weight();
    check(k1.has_value(), "BadWeight", "bracket route needs the weight of the input");
    PQContext ctx(g, *k1, p - 1);
    QExpansion br = bracket(f, h, ctx);

    Rational scalar = Rational(1, factorial(g + 1));
    if (g % 2 != 0) scalar = -scalar;
    RingDesc q = RingDesc::rational();
    QExpansion scaled = qexp_linear(RingValue::from_rational(q, scalar), br,
                                    RingValue::zero(q), br);
    scaled.set_weight(br.weight());
    return reduce_mod_p(scaled, p);
}

std::vector<Rational> theta_normalization_poly(Int g) {
    // (-1)^g/(g+1)! g! prod_{i=0}^{g-1} (2x - 2 - i) / g!  collapses to
    // (-1)^g/(g+1)! prod_{i=0}^{g-1} (2x - 2 - i); subtract 1.
    Poly acc{Rational(1)};
    for (Int i = 0; i < g; ++i) acc = poly_mul(acc, Poly{Rational(-2 - i), Rational(2)});
    Rational scale = Rational(1, factorial(g + 1));
    if (g % 2 != 0) scale = -scale;
    for (auto& c : acc) c *= scale;
    acc[0] -= 1;
    return acc;
}

}  // namespace siegel
