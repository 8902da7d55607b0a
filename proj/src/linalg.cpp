#include "siegel/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace siegel {

QMat to_qmat(const IMat& m) {
    QMat r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rational(m.a[i]);
    return r;
}

std::optional<IMat> to_imat(const QMat& m) {
    IMat r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) {
        if (denominator(m.a[i]) != 1) return std::nullopt;
        BigInt n = numerator(m.a[i]);
        r.a[i] = static_cast<Int>(n);
    }
    return r;
}

Rational qmat_det(QMat m) {
    check(m.rows == m.cols, "ShapeMismatch", "determinant of a non-square matrix");
    Rational det = 1;
    const int n = m.rows;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (m(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        Rational inv = Rational(1) / m(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            Rational f = m(i, col) * inv;
            for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

std::optional<QMat> qmat_inverse(QMat m) {
    check(m.rows == m.cols, "ShapeMismatch", "inverse of a non-square matrix");
    const int n = m.rows;
    QMat aug = QMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (m(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(col, j));
                std::swap(aug(pivot, j), aug(col, j));
            }
        Rational inv = Rational(1) / m(col, col);
        for (int j = 0; j < n; ++j) {
            m(col, j) *= inv;
            aug(col, j) *= inv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (int j = 0; j < n; ++j) {
                m(i, j) -= f * m(col, j);
                aug(i, j) -= f * aug(col, j);
            }
        }
    }
    return aug;
}

namespace {

BigInt det_recursive(const IMat& m, std::vector<int>& rows, std::vector<int>& cols) {
    const size_t k = rows.size();
    if (k == 1) return BigInt(m(rows[0], cols[0]));
    BigInt det = 0;
    int sign = 1;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < k; ++j) {
        Int entry = m(rows[0], cols[j]);
        if (entry != 0) {
            std::vector<int> sub_cols;
            sub_cols.reserve(k - 1);
            for (size_t t = 0; t < k; ++t)
                if (t != j) sub_cols.push_back(cols[t]);
            det += sign * entry * det_recursive(m, sub_rows, sub_cols);
        }
        sign = -sign;
    }
    return det;
}

void minors_gcd(const IMat& m, size_t k, BigInt& g) {
    const int n = m.rows;
    std::vector<int> rows(k), cols(k);
    std::vector<int> rsel(k), csel(k);
    // iterate over all k-subsets of rows and columns
    std::iota(rsel.begin(), rsel.end(), 0);
    while (true) {
        std::iota(csel.begin(), csel.end(), 0);
        while (true) {
            rows.assign(rsel.begin(), rsel.end());
            cols.assign(csel.begin(), csel.end());
            BigInt d = det_recursive(m, rows, cols);
            if (d != 0) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(d));
            // next column subset
            int i = static_cast<int>(k) - 1;
            while (i >= 0 && csel[i] == n - static_cast<int>(k) + i) --i;
            if (i < 0) break;
            ++csel[i];
            for (size_t t = i + 1; t < k; ++t) csel[t] = csel[t - 1] + 1;
        }
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && rsel[i] == n - static_cast<int>(k) + i) --i;
        if (i < 0) break;
        ++rsel[i];
        for (size_t t = i + 1; t < k; ++t) rsel[t] = rsel[t - 1] + 1;
    }
}

}  // namespace

BigInt imat_det(const IMat& m) {
    check(m.rows == m.cols, "ShapeMismatch", "determinant of a non-square matrix");
    std::vector<int> rows(m.rows), cols(m.cols);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    return det_recursive(m, rows, cols);
}

std::vector<Int> elementary_divisor_exponents(const IMat& m, Int ell) {
    check(m.rows == m.cols, "ShapeMismatch", "elementary divisors of a non-square matrix");
    const int n = m.rows;
    std::vector<BigInt> dk(n + 1);
    dk[0] = 1;
    for (int k = 1; k <= n; ++k) {
        BigInt g = 0;
        minors_gcd(m, static_cast<size_t>(k), g);
        check(g != 0, "SingularMatrix", "matrix is singular");
        dk[k] = g;
    }
    std::vector<Int> exps(n);
    for (int k = 1; k <= n; ++k) exps[k - 1] = valuation(dk[k], ell) - valuation(dk[k - 1], ell);
    return exps;
}

bool qmat_ell_integral(const QMat& m, Int ell) {
    for (const auto& e : m.a)
        if (denominator(e) % ell == 0) return false;
    return true;
}

}  // namespace siegel
