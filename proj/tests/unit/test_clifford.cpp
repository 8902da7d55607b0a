#include "siegel/clifford.hpp"
#include "siegel/randomgen.hpp"

#include <doctest.h>

#include <bit>

using namespace siegel;

namespace {

// Independent sign oracle: append the generators of T after those of S and
// bubble the sequence into sorted order, counting swaps; equal neighbours
// cancel with a positive square.
int bubble_sign(std::uint32_t s, std::uint32_t t) {
    std::vector<int> seq;
    for (int i = 0; i < 32; ++i)
        if (s & (1u << i)) seq.push_back(i);
    for (int i = 0; i < 32; ++i)
        if (t & (1u << i)) seq.push_back(i);
    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < seq.size(); ++i) {
            if (seq[i] > seq[i + 1]) {
                std::swap(seq[i], seq[i + 1]);
                sign = -sign;
                moved = true;
            } else if (seq[i] == seq[i + 1]) {
                seq.erase(seq.begin() + i, seq.begin() + i + 2);
                moved = true;
                break;
            }
        }
    }
    return sign;
}

CliffordElement gen(Int g, const RingDesc& ring, Int i) {
    return CliffordElement::generator(g, ring, i);
}

CliffordElement random_invertible_vector(Int g, const RingDesc& ring, Rng& rng) {
    for (;;) {
        CliffordElement v(g, ring);
        RingValue norm = RingValue::zero(ring);
        for (Int i = 1; i <= 2 * g + 1; ++i) {
            RingValue a = rng.value(ring);
            v.add_term(1u << (i - 1), a);
            norm = norm + a * a;
        }
        if (norm.inverse().has_value()) return v;
    }
}

}  // namespace

TEST_CASE("multiplication sign rule matches the bubble oracle") {
    for (Int g = 1; g <= 2; ++g) {
        const std::uint32_t dim = 1u << (2 * g + 1);
        for (std::uint32_t s = 0; s < dim; ++s)
            for (std::uint32_t t = 0; t < dim; ++t)
                CHECK(monomial_sign(s, t) == bubble_sign(s, t));
    }
}

TEST_CASE("generator relations") {
    RingDesc q = RingDesc::rational();
    CHECK(gen(1, q, 1) * gen(1, q, 1) == CliffordElement::scalar(1, q, RingValue::one(q)));
    // c2 c1 = -c1 c2
    CliffordElement c1c2 = gen(1, q, 1) * gen(1, q, 2);
    CHECK(gen(1, q, 2) * gen(1, q, 1) == CliffordElement::zero(1, q) - c1c2);
    // (c1 c2)(c2 c3) = c1 c3
    CliffordElement lhs = (gen(1, q, 1) * gen(1, q, 2)) * (gen(1, q, 2) * gen(1, q, 3));
    CHECK(lhs == gen(1, q, 1) * gen(1, q, 3));
}

TEST_CASE("parity automorphism") {
    RingDesc q = RingDesc::rational();
    CHECK(parity_automorphism(gen(1, q, 1)) == CliffordElement::zero(1, q) - gen(1, q, 1));
    CliffordElement even = gen(1, q, 1) * gen(1, q, 2);
    CHECK(parity_automorphism(even) == even);
    CliffordElement mixed = CliffordElement::scalar(1, q, RingValue::one(q)) + gen(1, q, 1) + even;
    CliffordElement expect = CliffordElement::scalar(1, q, RingValue::one(q)) +
                             (CliffordElement::zero(1, q) - gen(1, q, 1)) + even;
    CHECK(parity_automorphism(mixed) == expect);
}

TEST_CASE("inverse by dense solve") {
    RingDesc q = RingDesc::rational();
    CliffordElement c1c2 = gen(1, q, 1) * gen(1, q, 2);
    auto inv = cliff_inverse(c1c2);
    REQUIRE(inv.has_value());
    CHECK(*inv == CliffordElement::zero(1, q) - c1c2);  // (c1 c2)^2 = -1

    CliffordElement one = CliffordElement::scalar(1, q, RingValue::one(q));
    CliffordElement u = one + c1c2;
    auto uinv = cliff_inverse(u);
    REQUIRE(uinv.has_value());
    CHECK(u * *uinv == one);
    RingValue half = RingValue::parse(q, "1/2");
    CHECK(*uinv == (one - c1c2).scale(half));

    CHECK(!cliff_inverse(CliffordElement::zero(1, q)).has_value());
    // c1 + c2 has norm 2, invertible over Q
    CHECK(cliff_inverse(gen(1, q, 1) + gen(1, q, 2)).has_value());
}

TEST_CASE("twisted conjugation examples") {
    RingDesc q = RingDesc::rational();
    CliffordElement x = gen(1, q, 1) * gen(1, q, 2);
    CHECK(twisted_conjugate(x, gen(1, q, 1)) == CliffordElement::zero(1, q) - gen(1, q, 1));
    CHECK(twisted_conjugate(x, gen(1, q, 3)) == gen(1, q, 3));
    CliffordElement one = CliffordElement::scalar(1, q, RingValue::one(q));
    CHECK(twisted_conjugate(one, gen(1, q, 1)) == gen(1, q, 1));
    CHECK_THROWS_WITH_AS(twisted_conjugate(CliffordElement::zero(1, q), gen(1, q, 1)),
                         doctest::Contains("NotInvertible"), domain_error);
}

TEST_CASE("membership test") {
    RingDesc q = RingDesc::rational();
    CHECK(is_gspin(gen(1, q, 1) * gen(1, q, 2)));
    CHECK(!is_gspin(gen(1, q, 1)));  // odd
    RingDesc f11 = RingDesc::prime_field(11);
    Rng rng(41);
    for (Int g = 1; g <= 2; ++g)
        for (int t = 0; t < 50; ++t) {
            CliffordElement u = random_invertible_vector(g, f11, rng);
            CliffordElement w = random_invertible_vector(g, f11, rng);
            CHECK(is_gspin(u * w));
        }
}

TEST_CASE("membership closure and quadratic form preservation") {
    RingDesc f7 = RingDesc::prime_field(7);
    Rng rng(43);
    for (int t = 0; t < 50; ++t) {
        Int g = 1 + (t % 2);
        CliffordElement x = random_invertible_vector(g, f7, rng) *
                            random_invertible_vector(g, f7, rng);
        CliffordElement y = random_invertible_vector(g, f7, rng) *
                            random_invertible_vector(g, f7, rng);
        CHECK(is_gspin(x * y));  // closure under products

        // the twisted action preserves m -> m^2
        CliffordElement m(g, f7);
        for (Int i = 1; i <= 2 * g + 1; ++i) m.add_term(1u << (i - 1), rng.value(f7));
        CliffordElement image = twisted_conjugate(x, m);
        CHECK(image.is_vector());
        CHECK(image * image == m * m);
    }
}

TEST_CASE("algebra properties on random elements") {
    Rng rng(47);
    for (Int g = 1; g <= 2; ++g) {
        RingDesc ring = g == 1 ? RingDesc::rational() : RingDesc::prime_field(5);
        for (int t = 0; t < 200; ++t) {
            CliffordElement x = random_clifford(g, ring, rng);
            CliffordElement y = random_clifford(g, ring, rng);
            CliffordElement z = random_clifford(g, ring, rng);
            CHECK((x * y) * z == x * (y * z));
            CHECK(parity_automorphism(x * y) == parity_automorphism(x) * parity_automorphism(y));
            CHECK(parity_automorphism(parity_automorphism(x)) == x);
        }
    }
}
