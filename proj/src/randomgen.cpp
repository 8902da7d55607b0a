#include "siegel/randomgen.hpp"

namespace siegel {

RingValue Rng::value(const RingDesc& ring) {
    switch (ring.kind()) {
        case RingKind::Rational:
            return RingValue::from_rational(ring, Rational(range(-9, 9), range(1, 5)));
        case RingKind::PrimeField:
            return RingValue::from_integer(ring, below(ring.p()));
        case RingKind::CyclotomicRational: {
            std::vector<Rational> c(ring.residue_degree());
            for (auto& x : c) x = Rational(range(-5, 5));
            return RingValue::from_poly(ring, std::move(c));
        }
        case RingKind::PrimeFieldExt: {
            std::vector<Int> c(ring.residue_degree());
            for (auto& x : c) x = below(ring.p());
            return RingValue::from_residues(ring, std::move(c));
        }
    }
    throw domain_error("InternalError", "bad ring kind");
}

RingValue Rng::nonzero_value(const RingDesc& ring) {
    for (;;) {
        RingValue v = value(ring);
        if (!v.is_zero()) return v;
    }
}

RingValue Rng::unit(const RingDesc& ring) {
    for (;;) {
        RingValue v = value(ring);
        if (v.inverse().has_value()) return v;
    }
}

QExpansion random_qexpansion(Int g, Int level, const RingDesc& ring, Int tau, Rng& rng,
                             int fill_percent) {
    QExpansion f(g, level, std::nullopt, ring, tau);
    for (const auto& n : fourier_indices_up_to(g, tau)) {
        if (rng.below(100) >= fill_percent) continue;
        f.set_coefficient(n, rng.value(ring));
    }
    return f;
}

Cocharacter random_dominant(Int g, Rng& rng, Int lo, Int hi) {
    for (;;) {
        std::vector<Int> c(g + 1);
        for (auto& x : c) x = rng.range(lo, hi);
        Cocharacter lam(g, std::move(c));
        if (is_dominant(lam)) return lam;
    }
}

std::pair<Cocharacter, Cocharacter> random_dominant_pair(Int g, Rng& rng) {
    RootDatum rd = build_root_datum(g);
    for (;;) {
        Cocharacter mu = random_dominant(g, rng);
        Cocharacter lam = mu;
        for (Int j = 0; j < g; ++j)
            lam = cochar_add(lam, cochar_scale(rng.range(0, 2), rd.simple_coroots[j]));
        if (is_dominant(lam)) return {mu, lam};
    }
}

CliffordElement random_clifford(Int g, const RingDesc& ring, Rng& rng, int terms) {
    CliffordElement x(g, ring);
    const Int dim = Int(1) << (2 * g + 1);
    for (int t = 0; t < terms; ++t)
        x.add_term(static_cast<std::uint32_t>(rng.below(dim)), rng.value(ring));
    return x;
}

SatakeCoefficients random_unitriangular(const Cocharacter& lam, const RingDesc& ring, Rng& rng,
                                        bool with_v_powers) {
    SatakeCoefficients b(lam.g, ring);
    for (const auto& row : dominant_lower_set(lam))
        for (const auto& mu : dominant_lower_set(row)) {
            if (row == mu) {
                b.set(row, mu, VLaurent::constant(RingValue::one(ring)));
            } else {
                Int v_exp = with_v_powers ? rng.range(-2, 2) : 0;
                b.set(row, mu, VLaurent::monomial(ring, v_exp, rng.value(ring)));
            }
        }
    return b;
}

Eigensystem random_eigensystem(const Cocharacter& lam, Int ell, Int p, const RingDesc& field,
                               Rng& rng) {
    Eigensystem psi;
    psi.g = lam.g;
    psi.ell = ell;
    psi.p = p;
    psi.field = field;
    for (const auto& mu : dominant_lower_set(lam)) psi.values.emplace(mu, rng.value(field));
    return psi;
}

std::pair<RingDesc, RingValue> square_root_field(Int ell, Int p) {
    RingDesc fp = RingDesc::prime_field(p);
    auto root = find_square_root(fp, RingValue::from_integer(fp, ell));
    if (root) return {fp, *root};
    // adjoin a root of x^2 - n for a nonresidue n; then search the extension
    for (Int n = 2; n < p; ++n) {
        if (find_square_root(fp, RingValue::from_integer(fp, n))) continue;
        RingDesc ext = RingDesc::prime_field_ext(p, {mod_reduce(-n, p), 0, 1});
        auto ext_root = find_square_root(ext, RingValue::from_integer(ext, ell));
        check(ext_root.has_value(), "InternalError",
              "quadratic extension must contain all square roots");
        return {ext, *ext_root};
    }
    throw domain_error("InternalError", "no quadratic nonresidue found");
}

}  // namespace siegel
