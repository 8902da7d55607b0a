#pragma once

#include "siegel/qexp.hpp"

#include <vector>

namespace siegel {

// Weight context for the bilinear bracket; both weights must satisfy
// 2 k_i >= g.
struct PQContext {
    Int g;
    Int k1;
    Int k2;

    PQContext(Int genus, Int w1, Int w2) : g(genus), k1(w1), k2(w2) {
        check(g >= 1, "BadDegree", "degree must be >= 1");
        check(2 * k1 >= g && 2 * k2 >= g, "BadWeight", "bracket weights need 2k_i >= g");
    }
};

// Coefficients of det(R + x S) as a polynomial in x, exact.
std::vector<Rational> p_polys(const QMat& r, const QMat& s);

// The alternating binomial combination
//   sum_j (-1)^j j! (g-j)! C(2k2-j, g-j) C(2k1-g+j, j) P_j(R, S).
Rational q_eval(const PQContext& ctx, const QMat& r, const QMat& s);
// Just the j-th scalar coefficient of that sum.
BigInt q_coefficient(const PQContext& ctx, Int j);

// Bilinear bracket of two expansions: the coefficient at n is
//   sum_{n1+n2=n} Q(n1/N, n2/N) a_F(n1) a_G(n2),
// of weight k1 + k2 + 2.  This rests on the diagonal operator acting on a
// Fourier monomial by entrywise multiplication with n/N, which
// eigenrelation_residual verifies from the monomial exponents.
QExpansion bracket(const QExpansion& f, const QExpansion& g, const PQContext& ctx);

// Entrywise difference between the operator matrix applied to the monomial
// exponents of q_N^n and n/N; zero for every valid index (checked in tests
// for g = 1, 2 before the bracket is trusted).
QMat eigenrelation_residual(const FourierIndex& n, Int level);

// Diagonal theta operator on a mod-p expansion: multiplies the coefficient
// at n by det(n)/N^g and raises the weight by p+1.  Needs p > g(g+1)/2 and
// p coprime to N.
QExpansion theta_bn_direct(const QExpansion& f);

// The same operator computed through the bracket with a weight p-1 series
// H == 1 (mod p): reduction mod p of (-1)^g/(g+1)! [F, H].
QExpansion theta_bn_via_bracket(const QExpansion& f, const QExpansion& h, Int p,
                                std::optional<Int> k1 = std::nullopt);

// (-1)^g/(g+1)! g! C(2x-2, g) - 1 as a polynomial in x (coefficients
// low-to-high).  Its constant term vanishing, with denominators supported on
// primes <= g(g+1)/2 < p, is what makes the two theta routes agree.
std::vector<Rational> theta_normalization_poly(Int g);

}  // namespace siegel
