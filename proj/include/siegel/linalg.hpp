#pragma once

#include "siegel/error.hpp"
#include "siegel/numeric.hpp"

#include <optional>
#include <vector>

namespace siegel {

// Small dense matrices with exact entries.  Row-major storage.
template <typename T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    Mat transpose() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

using IMat = Mat<Int>;
using QMat = Mat<Rational>;

template <typename T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
    check(x.cols == y.rows, "ShapeMismatch", "matrix product shape mismatch");
    Mat<T> r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const T& v = x(i, k);
            if (v == T(0)) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
        }
    return r;
}

template <typename T>
Mat<T> operator+(const Mat<T>& x, const Mat<T>& y) {
    check(x.rows == y.rows && x.cols == y.cols, "ShapeMismatch", "matrix sum shape mismatch");
    Mat<T> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

QMat to_qmat(const IMat& m);
std::optional<IMat> to_imat(const QMat& m);  // nullopt if any entry non-integral

Rational qmat_det(QMat m);                   // Gaussian elimination
std::optional<QMat> qmat_inverse(QMat m);    // nullopt if singular
BigInt imat_det(const IMat& m);              // cofactor expansion (small matrices)

// v_ell of the k-th determinantal divisor, k = 1..n, for a nonsingular integer
// matrix whose determinant is a power of ell up to sign.  The elementary
// divisor exponents are the successive differences.
std::vector<Int> elementary_divisor_exponents(const IMat& m, Int ell);

// True when every entry has denominator coprime to ell.
bool qmat_ell_integral(const QMat& m, Int ell);

}  // namespace siegel
