#include "siegel/exactring.hpp"
#include "siegel/randomgen.hpp"

#include <doctest.h>

using namespace siegel;

namespace {

RingValue rat(const char* s) { return RingValue::parse(RingDesc::rational(), s); }

Int euler_phi(Int m) {
    Int r = 0;
    for (Int k = 1; k <= m; ++k) {
        Int a = k, b = m;
        while (b) {
            Int t = a % b;
            a = b;
            b = t;
        }
        if (a == 1) ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
    CHECK(rat("1/2") + rat("1/3") == rat("5/6"));
    CHECK(rat("1/2") - rat("1/2") == rat("0"));
    CHECK((rat("-2/4")).to_string() == "-1/2");  // canonical lowest terms
}

TEST_CASE("prime field arithmetic basics") {
    RingDesc f5 = RingDesc::prime_field(5);
    CHECK(RingValue::from_integer(f5, 3) * RingValue::from_integer(f5, 4) ==
          RingValue::from_integer(f5, 2));
    RingDesc f7 = RingDesc::prime_field(7);
    CHECK(*RingValue::from_integer(f7, 3).inverse() == RingValue::from_integer(f7, 5));
    CHECK_THROWS_AS(RingDesc::prime_field(6), domain_error);
}

TEST_CASE("cyclotomic residue arithmetic") {
    RingDesc z4 = RingDesc::cyclotomic(4);
    RingValue x = RingValue::generator(z4);
    CHECK(x * x == RingValue::from_integer(z4, -1));  // x^2 = -1 mod x^2+1
    CHECK(*x.inverse() == -x);
    CHECK(x.inverse()->operator*(x) == RingValue::one(z4));
}

TEST_CASE("ring inverse edge cases") {
    CHECK(!RingValue::zero(RingDesc::rational()).inverse().has_value());
    CHECK(!RingValue::zero(RingDesc::prime_field(7)).inverse().has_value());
    RingDesc ext = RingDesc::prime_field_ext(5, {2, 0, 1});  // x^2 + 2 irreducible over F_5
    RingValue t = RingValue::generator(ext);
    CHECK(*t.inverse() * t == RingValue::one(ext));
}

TEST_CASE("descriptor rejects reducible extension modulus") {
    // x^2 - 1 = (x-1)(x+1)
    CHECK_THROWS_AS(RingDesc::prime_field_ext(5, {4, 0, 1}), domain_error);
}

TEST_CASE("cyclotomic polynomials: frozen small cases") {
    CHECK(cyclotomic_poly(1) == std::vector<BigInt>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<BigInt>{1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<BigInt>{1, 0, 1});
    // divide x^6-1 by Phi_1 Phi_2 Phi_3 by hand: x^2 - x + 1
    CHECK(cyclotomic_poly(6) == std::vector<BigInt>{1, -1, 1});
}

TEST_CASE("cyclotomic polynomials: product and degree properties") {
    for (Int m = 1; m <= 40; ++m) {
        CHECK(static_cast<Int>(cyclotomic_poly(m).size()) - 1 == euler_phi(m));
        std::vector<BigInt> prod{1};
        for (Int d = 1; d <= m; ++d) {
            if (m % d != 0) continue;
            std::vector<BigInt> phi = cyclotomic_poly(d);
            std::vector<BigInt> next(prod.size() + phi.size() - 1, BigInt(0));
            for (size_t i = 0; i < prod.size(); ++i)
                for (size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
            prod = std::move(next);
        }
        std::vector<BigInt> expect(m + 1, BigInt(0));
        expect[0] = -1;
        expect[m] = 1;
        CHECK(prod == expect);
    }
}

TEST_CASE("reduction to prime fields") {
    RingDesc f5 = RingDesc::prime_field(5);
    CHECK(reduce_to_prime_field(rat("3/4"), f5) == RingValue::from_integer(f5, 2));
    CHECK_THROWS_WITH_AS(reduce_to_prime_field(rat("1/5"), f5), doctest::Contains("NonPIntegral"),
                         domain_error);

    RingDesc z4 = RingDesc::cyclotomic(4);
    RingValue x = RingValue::generator(z4);
    RingValue zeta_image = RingValue::from_integer(f5, 2);  // 2^2 = 4 = -1 mod 5
    CHECK(reduce_to_prime_field(x, f5, zeta_image) == RingValue::from_integer(f5, 2));
    // 1 is not a root of x^2+1 mod 5 (the roots are 2 and 3)
    CHECK_THROWS_AS(reduce_to_prime_field(x, f5, RingValue::from_integer(f5, 1)), domain_error);
    CHECK(reduce_to_prime_field(x, f5, RingValue::from_integer(f5, 3)) ==
          RingValue::from_integer(f5, 3));
}

TEST_CASE("reduction is a ring homomorphism on p-integral inputs") {
    RingDesc f7 = RingDesc::prime_field(7);
    Rng rng(11);
    int done = 0;
    while (done < 200) {
        Rational a(rng.range(-40, 40), rng.range(1, 12));
        Rational b(rng.range(-40, 40), rng.range(1, 12));
        if (denominator(a) % 7 == 0 || denominator(b) % 7 == 0) continue;
        RingValue ra = rat("0"), rb = rat("0");
        ra = RingValue::from_rational(RingDesc::rational(), a);
        rb = RingValue::from_rational(RingDesc::rational(), b);
        CHECK(reduce_to_prime_field(ra + rb, f7) ==
              reduce_to_prime_field(ra, f7) + reduce_to_prime_field(rb, f7));
        CHECK(reduce_to_prime_field(ra * rb, f7) ==
              reduce_to_prime_field(ra, f7) * reduce_to_prime_field(rb, f7));
        ++done;
    }
}

TEST_CASE("ring axioms on random triples") {
    std::vector<RingDesc> rings = {RingDesc::rational(), RingDesc::prime_field(5),
                                   RingDesc::cyclotomic(4), RingDesc::cyclotomic(6),
                                   RingDesc::prime_field_ext(5, {2, 0, 1})};
    Rng rng(7);
    for (const auto& ring : rings) {
        for (int t = 0; t < 500; ++t) {
            RingValue a = rng.value(ring), b = rng.value(ring), c = rng.value(ring);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + RingValue::zero(ring) == a);
            CHECK(a * RingValue::one(ring) == a);
        }
    }
}

TEST_CASE("every nonzero prime field element is invertible") {
    RingDesc f13 = RingDesc::prime_field(13);
    for (Int x = 1; x < 13; ++x) {
        auto inv = RingValue::from_integer(f13, x).inverse();
        REQUIRE(inv.has_value());
        CHECK(*inv * RingValue::from_integer(f13, x) == RingValue::one(f13));
    }
}

TEST_CASE("value encodings round trip") {
    Rng rng(3);
    std::vector<RingDesc> rings = {RingDesc::rational(), RingDesc::prime_field(11),
                                   RingDesc::cyclotomic(4),
                                   RingDesc::prime_field_ext(3, {1, 2, 0, 1})};
    for (const auto& ring : rings) {
        CHECK(RingDesc::parse(ring.to_string()) == ring);
        for (int t = 0; t < 40; ++t) {
            RingValue v = rng.value(ring);
            CHECK(RingValue::parse(ring, v.to_string()) == v);
        }
    }
}

TEST_CASE("square root search") {
    RingDesc f7 = RingDesc::prime_field(7);
    CHECK(find_square_root(f7, RingValue::from_integer(f7, 2)).has_value());   // 3^2 = 2
    CHECK(!find_square_root(f7, RingValue::from_integer(f7, 3)).has_value());  // nonresidue
    auto [field, root] = square_root_field(3, 7);
    CHECK(root * root == RingValue::from_integer(field, 3));
    CHECK(field.kind() == RingKind::PrimeFieldExt);  // 3 is not a square mod 7
}
