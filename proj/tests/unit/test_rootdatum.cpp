#include "siegel/randomgen.hpp"
#include "siegel/rootdatum.hpp"

#include <doctest.h>

#include <algorithm>

using namespace siegel;

namespace {

Cocharacter cochar(Int g, std::vector<Int> c) { return Cocharacter(g, std::move(c)); }
Character charac(Int g, std::vector<Int> c) { return Character(g, std::move(c)); }

}  // namespace

TEST_CASE("degree 1 lattice data") {
    RootDatum rd = build_root_datum(1);
    CHECK(rd.simple_roots == std::vector<Character>{charac(1, {2, -1})});
    CHECK(rd.simple_coroots == std::vector<Cocharacter>{cochar(1, {1, 0})});
    CHECK(rd.positive_roots == std::vector<Character>{charac(1, {2, -1})});
    CHECK(rd.rho2 == charac(1, {2, -1}));
}

TEST_CASE("degree 2 lattice data") {
    RootDatum rd = build_root_datum(2);
    CHECK(rd.simple_coroots ==
          std::vector<Cocharacter>{cochar(2, {1, -1, 0}), cochar(2, {0, 1, 0})});
    // closure of the two simple reflections
    std::vector<Cocharacter> expect = {cochar(2, {1, -1, 0}), cochar(2, {0, 1, 0}),
                                       cochar(2, {1, 0, 0}), cochar(2, {1, 1, 0})};
    auto sorted = rd.positive_coroots;
    std::sort(sorted.begin(), sorted.end());
    std::sort(expect.begin(), expect.end());
    CHECK(sorted == expect);
    CHECK(rd.rho2_hat == cochar(2, {3, 1, 0}));
}

TEST_CASE("positive root count is g squared") {
    for (Int g = 1; g <= 4; ++g) {
        RootDatum rd = build_root_datum(g);
        CHECK(static_cast<Int>(rd.positive_roots.size()) == g * g);
        CHECK(static_cast<Int>(rd.positive_coroots.size()) == g * g);
    }
}

TEST_CASE("pairing values") {
    CHECK(pairing(charac(2, {1, 0, 0}), cochar(2, {1, 0, 0})) == 1);
    // <alpha_g, alpha_g^vee> = 2 at g = 2
    CHECK(pairing(charac(2, {0, 2, -1}), cochar(2, {0, 1, 0})) == 2);
    CHECK(pairing(charac(2, {0, 0, 1}), cochar(2, {1, 0, 0})) == 0);
    CHECK_THROWS_AS(pairing(charac(1, {1, 0}), cochar(2, {1, 0, 0})), domain_error);
}

TEST_CASE("dominance chamber test") {
    CHECK(is_dominant(cochar(2, {1, 1, 1})));
    CHECK(!is_dominant(cochar(2, {0, 0, 1})));
    CHECK(is_dominant(cochar(1, {1, 2})));
    CHECK(!is_dominant(cochar(2, {1, 2, 1})));
}

TEST_CASE("dominance witness closed form") {
    auto w = dominance_witness(cochar(1, {2, 2}), cochar(1, {1, 2}));
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<Int>{1});

    auto self = dominance_witness(cochar(2, {1, 1, 1}), cochar(2, {1, 1, 1}));
    REQUIRE(self.has_value());
    CHECK(*self == std::vector<Int>{0, 0});

    CHECK(!dominance_witness(cochar(2, {1, 1, 1}), cochar(2, {1, 1, 0})).has_value());
    CHECK_THROWS_WITH_AS(dominance_witness(cochar(2, {0, 0, 1}), cochar(2, {0, 0, 1})),
                         doctest::Contains("NotDominant"), domain_error);
}

TEST_CASE("dominance is a partial order on samples") {
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        Cocharacter a = random_dominant(2, rng), b = random_dominant(2, rng),
                    c = random_dominant(2, rng);
        CHECK(dominance_witness(a, a).has_value());
        if (dominance_witness(a, b) && dominance_witness(b, a)) CHECK(a == b);
        if (dominance_witness(a, b) && dominance_witness(b, c))
            CHECK(dominance_witness(a, c).has_value());
    }
}

TEST_CASE("similitude exponents") {
    RootDatum rd = build_root_datum(3);
    for (const auto& beta : rd.positive_coroots) CHECK(eta_exponent(beta) == 0);
    CHECK(eta_exponent(cochar(2, {1, 1, 1})) == 1);
    CHECK(det_exponent(cochar(2, {1, 1, 1})) == 2);
    CHECK(eta_exponent(cochar(2, {1, 1, 2})) == 2);
    CHECK(det_exponent(cochar(2, {1, 1, 2})) == 4);
}

TEST_CASE("torus matrices and similitude factors") {
    QMat m = cochar_matrix(cochar(1, {1, 1}), 2);
    CHECK(m(0, 0) == 2);
    CHECK(m(1, 1) == 1);
    CHECK(similitude_factor(m) == 2);

    QMat m2 = cochar_matrix(cochar(2, {0, 0, 1}), 3);
    CHECK(m2(0, 0) == 1);
    CHECK(m2(1, 1) == 1);
    CHECK(m2(2, 2) == 3);
    CHECK(m2(3, 3) == 3);
    CHECK(similitude_factor(m2) == 3);

    QMat j(2, 2);
    j(0, 1) = 1;
    j(1, 0) = -1;
    CHECK(similitude_factor(j) == 1);
    QMat bad = QMat::identity(2);
    bad(0, 0) = 2;
    CHECK_THROWS_WITH_AS(similitude_factor(bad), doctest::Contains("NotSimilitude"), domain_error);
}

TEST_CASE("similitude factor of torus points matches the exponent") {
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        Int g = rng.range(1, 3);
        Cocharacter lam = random_dominant(g, rng);
        QMat m = cochar_matrix(lam, 2);
        CHECK(similitude_factor(m) == pow_rational(Rational(2), eta_exponent(lam)));
        CHECK(qmat_det(m) == pow_rational(Rational(2), g * eta_exponent(lam)));
    }
}

TEST_CASE("weyl group size and pairing invariance") {
    for (Int g = 1; g <= 3; ++g) {
        RootDatum rd = build_root_datum(g);
        auto group = weyl_group(rd);
        Int expected = 1;
        for (Int i = 1; i <= g; ++i) expected *= 2 * i;
        CHECK(static_cast<Int>(group.size()) == expected);

        Rng rng(23 + g);
        for (int t = 0; t < 30; ++t) {
            std::vector<Int> xc(g + 1), yc(g + 1);
            for (auto& v : xc) v = rng.range(-3, 3);
            for (auto& v : yc) v = rng.range(-3, 3);
            Character x(g, xc);
            Cocharacter y(g, yc);
            const WeylElement& w = group[rng.below(static_cast<Int>(group.size()))];
            CHECK(pairing(w.apply(x), w.apply(y)) == pairing(x, y));
        }
    }
}

TEST_CASE("doubled rho pairing agrees with the sum over positive roots") {
    Rng rng(29);
    for (Int g = 1; g <= 3; ++g) {
        RootDatum rd = build_root_datum(g);
        for (int t = 0; t < 30; ++t) {
            std::vector<Int> yc(g + 1);
            for (auto& v : yc) v = rng.range(-3, 3);
            Cocharacter y(g, yc);
            Int direct = pairing(rd.rho2, y);
            Int summed = 0;
            for (const auto& beta : rd.positive_roots) summed += pairing(beta, y);
            CHECK(direct == summed);
        }
    }
}

TEST_CASE("dominant lower sets") {
    auto l1 = dominant_lower_set(cochar(1, {2, 2}));
    CHECK(l1 == std::vector<Cocharacter>{cochar(1, {1, 2}), cochar(1, {2, 2})});
    auto l2 = dominant_lower_set(cochar(2, {2, 2, 2}));
    CHECK(l2 == std::vector<Cocharacter>{cochar(2, {1, 1, 2}), cochar(2, {2, 1, 2}),
                                         cochar(2, {2, 2, 2})});
    // singleton: nothing dominant strictly below
    CHECK(dominant_lower_set(cochar(2, {1, 1, 1})) ==
          std::vector<Cocharacter>{cochar(2, {1, 1, 1})});
    // every member is dominant and comparable
    for (const auto& mu : dominant_lower_set(cochar(2, {2, 2, 0}))) {
        CHECK(is_dominant(mu));
        CHECK(dominance_witness(cochar(2, {2, 2, 0}), mu).has_value());
    }
    CHECK(dominant_lower_set(cochar(2, {2, 2, 0})).size() == 6);
}

TEST_CASE("dominant orbit representative") {
    CHECK(dominant_representative(cochar(2, {0, 0, 1})) == cochar(2, {1, 1, 1}));
    CHECK(dominant_representative(cochar(1, {0, 2})) == cochar(1, {2, 2}));
    CHECK(dominant_representative(cochar(2, {2, 1, 2})) == cochar(2, {2, 1, 2}));
}
