#include "siegel/qexp.hpp"
#include "siegel/qexp_io.hpp"
#include "siegel/randomgen.hpp"

#include <doctest.h>

using namespace siegel;

namespace {

RingDesc Q = RingDesc::rational();

FourierIndex g2_index(Int a, Int b, Int c) {  // doubled [[a, b], [b, c]]
    IMat m(2, 2);
    m(0, 0) = a;
    m(1, 1) = c;
    m(0, 1) = m(1, 0) = b;
    return FourierIndex::validate(m);
}

RingValue qv(Int n) { return RingValue::from_integer(Q, n); }

Rational coeff(const QExpansion& f, Int n) {
    return f.coefficient(FourierIndex::scalar(n)).rational_value();
}

// pentagonal-number route to prod (1 - q^n), independent of delta_series
std::vector<BigInt> euler_by_pentagonal(Int tau) {
    std::vector<BigInt> e(tau + 1, BigInt(0));
    for (Int k = -tau; k <= tau; ++k) {
        Int exponent = k * (3 * k - 1) / 2;
        if (exponent < 0 || exponent > tau) continue;
        e[exponent] += (k % 2 == 0) ? 1 : -1;
    }
    return e;
}

}  // namespace

TEST_CASE("index validation") {
    CHECK_NOTHROW(g2_index(2, 1, 2));  // minors 2, 2, 3
    CHECK_THROWS_WITH_AS(g2_index(2, 3, 2), doctest::Contains("NotPSD"), domain_error);
    IMat odd(1, 1);
    odd(0, 0) = 3;
    CHECK_THROWS_WITH_AS(FourierIndex::validate(odd), doctest::Contains("OddDiagonal"),
                         domain_error);
    IMat asym(2, 2);
    asym(0, 1) = 1;
    CHECK_THROWS_WITH_AS(FourierIndex::validate(asym), doctest::Contains("NotSymmetric"),
                         domain_error);
}

TEST_CASE("exhaustive psd acceptance at genus 2") {
    // doubled [[2t, s], [s, 2u]] is an index iff t, u >= 0 and 4tu >= s^2
    for (Int t = -6; t <= 6; ++t)
        for (Int u = -6; u <= 6; ++u)
            for (Int s = -6; s <= 6; ++s) {
                bool expect = t >= 0 && u >= 0 && 4 * t * u >= s * s;
                bool got = true;
                try {
                    g2_index(2 * t, s, 2 * u);
                } catch (const domain_error&) {
                    got = false;
                }
                CHECK(got == expect);
            }
}

TEST_CASE("index determinant and trace") {
    FourierIndex n = g2_index(2, 1, 2);  // n = [[1, 1/2], [1/2, 1]]
    CHECK(n.trace() == 2);
    CHECK(n.det() == Rational(3, 4));
    CHECK(FourierIndex::scalar(4).det() == 4);
}

TEST_CASE("linear combinations") {
    QExpansion e4 = eisenstein(4, 8);
    QExpansion zero = qexp_linear(qv(1), e4, qv(-1), e4);
    CHECK(zero.is_zero());
    CHECK(zero.weight() == 4);

    QExpansion one(1, 1, std::nullopt, Q, 5);
    one.set_coefficient(FourierIndex::zero(1), qv(1));
    QExpansion doubled = qexp_linear(qv(2), one, qv(0), one);
    CHECK(doubled.coefficient(FourierIndex::zero(1)) == qv(2));
}

TEST_CASE("products") {
    // (1 + 240 q)(1 - 504 q) = 1 - 264 q + O(q^2)
    QExpansion a(1, 1, 4, Q, 1), b(1, 1, 6, Q, 1);
    a.set_coefficient(FourierIndex::zero(1), qv(1));
    a.set_coefficient(FourierIndex::scalar(1), qv(240));
    b.set_coefficient(FourierIndex::zero(1), qv(1));
    b.set_coefficient(FourierIndex::scalar(1), qv(-504));
    QExpansion ab = qexp_mul(a, b);
    CHECK(coeff(ab, 0) == 1);
    CHECK(coeff(ab, 1) == -264);
    CHECK(ab.weight() == 10);

    QExpansion e4 = eisenstein(4, 10);
    QExpansion unit(1, 1, 0, Q, 10);
    unit.set_coefficient(FourierIndex::zero(1), qv(1));
    CHECK(same_series(qexp_mul(e4, unit), e4));

    QExpansion m1(2, 1, std::nullopt, Q, 4), m2(2, 1, std::nullopt, Q, 4);
    m1.set_coefficient(g2_index(2, 0, 0), qv(1));
    m2.set_coefficient(g2_index(2, 0, 0), qv(1));
    QExpansion prod = qexp_mul(m1, m2);
    CHECK(prod.coefficient(g2_index(4, 0, 0)) == qv(1));
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("eisenstein series coefficients") {
    QExpansion e4 = eisenstein(4, 4);
    CHECK(coeff(e4, 0) == 1);
    CHECK(coeff(e4, 1) == 240);
    CHECK(coeff(e4, 2) == 2160);   // 240 * sigma_3(2) = 240 * 9
    CHECK(coeff(e4, 3) == 6720);   // 240 * 28
    QExpansion e6 = eisenstein(6, 2);
    CHECK(coeff(e6, 1) == -504);
    CHECK(coeff(e6, 2) == -16632);  // -504 * sigma_5(2) = -504 * 33
    CHECK_THROWS_AS(eisenstein(5, 4), domain_error);
}

TEST_CASE("discriminant form against the pentagonal oracle") {
    const Int tau = 12;
    QExpansion d = delta_series(tau);
    CHECK(coeff(d, 1) == 1);
    CHECK(coeff(d, 2) == -24);
    CHECK(coeff(d, 3) == 252);
    CHECK(coeff(d, 4) == -1472);

    std::vector<BigInt> euler = euler_by_pentagonal(tau);
    std::vector<BigInt> p24{1};
    auto mul = [&](const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
        std::vector<BigInt> r(tau + 1, BigInt(0));
        for (size_t i = 0; i < x.size() && i <= static_cast<size_t>(tau); ++i)
            for (size_t j = 0; j < y.size() && i + j <= static_cast<size_t>(tau); ++j)
                r[i + j] += x[i] * y[j];
        return r;
    };
    for (int t = 0; t < 24; ++t) p24 = mul(p24, euler);
    for (Int n = 1; n <= tau; ++n) CHECK(coeff(d, n) == Rational(p24[n - 1]));
}

TEST_CASE("discriminant relation between the generators") {
    const Int tau = 8;
    QExpansion e4 = eisenstein(4, tau), e6 = eisenstein(6, tau);
    QExpansion lhs = qexp_linear(qv(1), qexp_mul(qexp_mul(e4, e4), e4), qv(-1), qexp_mul(e6, e6));
    CHECK(coeff(lhs, 0) == 0);
    CHECK(coeff(lhs, 1) == 1728);
    QExpansion rhs = qexp_linear(qv(1728), delta_series(tau), qv(0), delta_series(tau));
    CHECK(same_series(lhs, rhs));
}

TEST_CASE("reduction mod p") {
    QExpansion e4 = eisenstein(4, 20);
    QExpansion red = reduce_mod_p(e4, 5);
    RingDesc f5 = RingDesc::prime_field(5);
    CHECK(red.coefficient(FourierIndex::zero(1)) == RingValue::one(f5));
    for (Int n = 1; n <= 20; ++n) CHECK(red.coefficient(FourierIndex::scalar(n)).is_zero());

    QExpansion d2 = reduce_mod_p(delta_series(6), 2);
    CHECK(d2.coefficient(FourierIndex::scalar(1)) ==
          RingValue::one(RingDesc::prime_field(2)));

    QExpansion bad(1, 1, std::nullopt, Q, 2);
    bad.set_coefficient(FourierIndex::scalar(1), RingValue::parse(Q, "1/5"));
    CHECK_THROWS_WITH_AS(reduce_mod_p(bad, 5), doctest::Contains("NonPIntegral"), domain_error);
}

TEST_CASE("level reindexing") {
    QExpansion f(1, 3, 2, Q, 4);
    f.set_coefficient(FourierIndex::zero(1), qv(1));
    f.set_coefficient(FourierIndex::scalar(2), qv(7));
    QExpansion g = reindex_level(f);
    CHECK(g.level() == 1);
    CHECK(g.coefficient(FourierIndex::scalar(2)) == qv(7));
    CHECK(reindex_level(g) == g);
    QExpansion empty(2, 5, std::nullopt, Q, 3);
    CHECK(reindex_level(empty).is_zero());
}

TEST_CASE("product is commutative and associative under the shared bound") {
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
        Int g = 1 + (t % 2);
        QExpansion a = random_qexpansion(g, 1, Q, 4, rng, 40);
        QExpansion b = random_qexpansion(g, 1, Q, 4, rng, 40);
        QExpansion c = random_qexpansion(g, 1, Q, 4, rng, 40);
        CHECK(same_series(qexp_mul(a, b), qexp_mul(b, a)));
        CHECK(same_series(qexp_mul(qexp_mul(a, b), c), qexp_mul(a, qexp_mul(b, c))));
    }
}

TEST_CASE("truncation coherence") {
    Rng rng(37);
    for (int t = 0; t < 40; ++t) {
        Int g = 1 + (t % 2);
        QExpansion a = random_qexpansion(g, 1, Q, 6, rng, 50);
        QExpansion b = random_qexpansion(g, 1, Q, 6, rng, 50);
        QExpansion full = qexp_mul(a, b);
        QExpansion narrow = qexp_mul(truncate(a, 3), truncate(b, 3));
        CHECK(same_series(truncate(full, 3), narrow));
    }
}

TEST_CASE("file format round trip") {
    Rng rng(41);
    std::vector<RingDesc> rings = {Q, RingDesc::prime_field(7), RingDesc::cyclotomic(4)};
    for (int t = 0; t < 30; ++t) {
        const RingDesc& ring = rings[t % rings.size()];
        QExpansion f = random_qexpansion(1 + (t % 2), 1 + (t % 3), ring, 4, rng, 50);
        if (t % 2 == 0) f.set_weight(t);
        std::string text = qexp_to_text(f);
        QExpansion parsed = qexp_from_text(text);
        CHECK(parsed == f);
        CHECK(qexp_to_text(parsed) == text);
    }
}
