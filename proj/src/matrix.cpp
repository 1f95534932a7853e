#include "taulab/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace taulab {

DenseMatrix DenseMatrix::operator*(const DenseMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    DenseMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (is_zero(aik)) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Scalar& bkj = other.at(k, j);
                if (!is_zero(bkj)) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

bool DenseMatrix::operator==(const DenseMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

DenseMatrix DenseMatrix::select(const std::vector<std::size_t>& rows,
                                const std::vector<std::size_t>& cols) const {
    DenseMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.at(i, j) = at(rows[i], cols[j]);
    return out;
}

namespace {

// Bareiss elimination over the integers. Returns the determinant of the
// integer matrix `a` (modified in place).
mpz_class bareiss_det(std::vector<std::vector<mpz_class>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    mpz_class prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                // exact by the Bareiss minor identity
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace

Scalar det(const DenseMatrix& m) {
    if (!m.square()) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return Scalar(1);

    // Clear denominators row by row, track the scale factor.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpz_class scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& q = m.at(i, j);
            a[i][j] = q.get_num() * (l / q.get_den());
        }
        scale *= l;
    }
    mpz_class d = bareiss_det(a);
    Scalar out(d, scale);
    out.canonicalize();
    return out;
}

DenseMatrix vandermonde(const std::vector<Scalar>& points) {
    const std::size_t k = points.size();
    DenseMatrix v(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        Scalar p(1);
        for (std::size_t r = 0; r < k; ++r) {
            v.at(r, j) = p;
            p *= points[j];
        }
    }
    return v;
}

bool desnanot_jacobi_check(const DenseMatrix& m) {
    if (!m.square() || m.rows() < 2) throw std::invalid_argument("desnanot_jacobi_check: size >= 2 required");
    const std::size_t n = m.rows();
    std::vector<std::size_t> all, head, tail, mid;
    for (std::size_t i = 0; i < n; ++i) all.push_back(i);
    for (std::size_t i = 0; i + 1 < n; ++i) head.push_back(i);
    for (std::size_t i = 1; i < n; ++i) tail.push_back(i);
    for (std::size_t i = 1; i + 1 < n; ++i) mid.push_back(i);

    Scalar full = det(m);
    Scalar interior = det(m.select(mid, mid)); // 0x0 -> 1 when n == 2
    Scalar nw = det(m.select(head, head));
    Scalar se = det(m.select(tail, tail));
    Scalar ne = det(m.select(head, tail));
    Scalar sw = det(m.select(tail, head));
    return full * interior == nw * se - ne * sw;
}

DenseMatrix solve_xa_eq_b(const DenseMatrix& a, const DenseMatrix& b) {
    if (!a.square()) throw std::invalid_argument("solve: A not square");
    if (b.cols() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = a.rows();
    const std::size_t m = b.rows();

    // Gauss-Jordan on [A^T | B^T]; X A = B  <=>  A^T X^T = B^T.
    std::vector<std::vector<Scalar>> t(n, std::vector<Scalar>(n + m));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a.at(j, i);
        for (std::size_t j = 0; j < m; ++j) t[i][n + j] = b.at(j, i);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && is_zero(t[p][k])) ++p;
        if (p == n) throw SingularMatrixError();
        if (p != k) std::swap(t[k], t[p]);
        Scalar inv = 1 / t[k][k];
        for (std::size_t j = k; j < n + m; ++j) t[k][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || is_zero(t[i][k])) continue;
            Scalar f = t[i][k];
            for (std::size_t j = k; j < n + m; ++j) t[i][j] -= f * t[k][j];
        }
    }
    DenseMatrix x(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            x.at(i, j) = t[j][n + i];
    return x;
}

} // namespace taulab
