#include "macd/linalg.hpp"

namespace macd {

namespace {

// Clears denominators row by row; rank and kernel are unchanged.
std::vector<std::vector<mpz_class>> integerize(const Mat& a) {
    std::vector<std::vector<mpz_class>> m(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        mpz_class l(1);
        for (const auto& x : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        m[i].reserve(a[i].size());
        for (const auto& x : a[i]) m[i].push_back(mpz_class(x.get_num() * (l / x.get_den())));
    }
    return m;
}

// Bareiss fraction-free elimination; returns rank, optionally the det sign/value
// accumulator for square inputs.
long bareiss_rank(std::vector<std::vector<mpz_class>>& m) {
    if (m.empty() || m[0].empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    mpz_class prev(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<long>(r);
}

} // namespace

long mat_rank(const Mat& a) {
    if (a.empty()) return 0;
    auto m = integerize(a);
    return bareiss_rank(m);
}

Rational mat_det(const Mat& a) {
    size_t n = a.size();
    if (n == 0) return Rational(1);
    require_internal(a[0].size() == n, "determinant of a non-square matrix");
    // Plain rational elimination keeps the determinant exact without scale tracking.
    Mat m = a;
    Rational det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rational inv = Rational(1) / m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<long> rref(Mat& m) {
    std::vector<long> pivots;
    if (m.empty() || m[0].empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<long>(c));
        ++r;
    }
    return pivots;
}

} // namespace

std::vector<std::vector<Rational>> mat_kernel(const Mat& a) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    Mat m = a;
    std::vector<long> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (long p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[fc] = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi) {
            if (static_cast<size_t>(pivots[pi]) < cols) v[pivots[pi]] = -m[pi][fc];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool mat_solve(const Mat& a, const std::vector<Rational>& b, std::vector<Rational>& x) {
    Mat bb(b.size(), std::vector<Rational>(1));
    for (size_t i = 0; i < b.size(); ++i) bb[i][0] = b[i];
    Mat xx;
    if (!mat_solve_multi(a, bb, xx)) return false;
    x.resize(xx.size());
    for (size_t i = 0; i < xx.size(); ++i) x[i] = xx[i][0];
    return true;
}

bool mat_solve_multi(const Mat& a, const Mat& b, Mat& x) {
    size_t rows = a.size();
    size_t cols = rows == 0 ? 0 : a[0].size();
    size_t bcols = b.empty() ? 0 : b[0].size();
    require_internal(b.size() == rows, "solve: dimension mismatch");
    // Augmented RREF.
    Mat m(rows, std::vector<Rational>(cols + bcols, Rational(0)));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        for (size_t j = 0; j < bcols; ++j) m[i][cols + j] = b[i][j];
    }
    std::vector<long> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (size_t j = c; j < cols + bcols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols + bcols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<long>(c));
        ++r;
    }
    // Inconsistent if a zero row of A has a nonzero RHS.
    for (size_t i = r; i < rows; ++i)
        for (size_t j = 0; j < bcols; ++j)
            if (m[i][cols + j] != 0) return false;
    x.assign(cols, std::vector<Rational>(bcols, Rational(0)));
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        for (size_t j = 0; j < bcols; ++j) x[pivots[pi]][j] = m[pi][cols + j];
    return true;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), mcols = b.empty() ? 0 : b[0].size();
    Mat r(n, std::vector<Rational>(mcols, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < mcols; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

} // namespace macd
