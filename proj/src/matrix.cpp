#include "mfus/matrix.hpp"

#include <algorithm>

namespace mfus {

Mat::Mat(const Field* f, int rows, int cols)
    : f_(f), r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Elem(f)) {}

Mat Mat::identity(const Field* f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Elem(f, 1);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) throw Error("ShapeMismatch", "matrix product of incompatible shapes");
    Mat r(f_ ? f_ : o.f_, r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Elem& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                const Elem& b = o(k, j);
                if (b.is_zero()) continue;
                r(i, j) += a * b;
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(*this);
    r += o;
    return r;
}

Mat& Mat::operator+=(const Mat& o) {
    if (r_ != o.r_ || c_ != o.c_) throw Error("ShapeMismatch", "matrix sum of incompatible shapes");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Mat Mat::operator-(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw Error("ShapeMismatch", "matrix difference of incompatible shapes");
    Mat r(*this);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Mat Mat::scaled(const Elem& s) const {
    Mat r(*this);
    for (auto& x : r.a_) x = x * s;
    return r;
}

Mat Mat::transpose() const {
    Mat r(f_, c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool Mat::operator==(const Mat& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

bool Mat::is_zero() const {
    for (const auto& x : a_) if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            const Elem& x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

Mat Mat::block(int r0, int c0, int nr, int nc) const {
    Mat b(f_, nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Mat::set_block(int r0, int c0, const Mat& b) {
    for (int i = 0; i < b.r_; ++i)
        for (int j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat Mat::kron(const Mat& a, const Mat& b) {
    Mat r(a.f_ ? a.f_ : b.f_, a.r_ * b.r_, a.c_ * b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int j = 0; j < a.c_; ++j) {
            const Elem& x = a(i, j);
            if (x.is_zero()) continue;
            for (int k = 0; k < b.r_; ++k)
                for (int l = 0; l < b.c_; ++l) r(i * b.r_ + k, j * b.c_ + l) = x * b(k, l);
        }
    return r;
}

Mat Mat::hstack(const std::vector<Mat>& parts, const Field* f, int rows) {
    int cols = 0;
    for (const auto& p : parts) cols += p.cols();
    Mat r(f, rows, cols);
    int c = 0;
    for (const auto& p : parts) {
        r.set_block(0, c, p);
        c += p.cols();
    }
    return r;
}

Mat Mat::vstack(const std::vector<Mat>& parts, const Field* f, int cols) {
    int rows = 0;
    for (const auto& p : parts) rows += p.rows();
    Mat r(f, rows, cols);
    int k = 0;
    for (const auto& p : parts) {
        r.set_block(k, 0, p);
        k += p.rows();
    }
    return r;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    const int R = m.rows(), C = m.cols();
    for (int col = 0; col < C && row < R; ++col) {
        int p = -1;
        for (int i = row; i < R; ++i)
            if (!m(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < C; ++j) std::swap(m(p, j), m(row, j));
        Elem inv = m(row, col).inv();
        for (int j = col; j < C; ++j) m(row, j) = m(row, j) * inv;
        for (int i = 0; i < R; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Elem f = m(i, col);
            for (int j = col; j < C; ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(const Mat& m) {
    Mat t(m);
    return static_cast<int>(rref(t).size());
}

Mat nullspace(const Mat& m) {
    Mat t(m);
    auto piv = rref(t);
    const int C = m.cols();
    std::vector<bool> is_piv(C, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<int> free;
    for (int j = 0; j < C; ++j) if (!is_piv[j]) free.push_back(j);
    Mat ns(m.field(), C, static_cast<int>(free.size()));
    for (size_t k = 0; k < free.size(); ++k) {
        ns(free[k], static_cast<int>(k)) = Elem(m.field(), 1);
        for (size_t i = 0; i < piv.size(); ++i)
            ns(piv[i], static_cast<int>(k)) = -t(static_cast<int>(i), free[k]);
    }
    return ns;
}

bool solve(const Mat& m, const Mat& b, Mat& x) {
    const int R = m.rows(), C = m.cols(), K = b.cols();
    Mat aug(m.field(), R, C + K);
    aug.set_block(0, 0, m);
    aug.set_block(0, C, b);
    auto piv = rref(aug);
    for (size_t i = 0; i < piv.size(); ++i)
        if (piv[i] >= C) return false;
    x = Mat(m.field(), C, K);
    for (size_t i = 0; i < piv.size(); ++i)
        for (int k = 0; k < K; ++k) x(piv[i], k) = aug(static_cast<int>(i), C + k);
    return true;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw Error("ShapeMismatch", "inverse of a non-square matrix");
    Mat x;
    if (!solve(m, Mat::identity(m.field(), m.rows()), x) || rank(m) != m.rows())
        throw Error("DivisionByZero", "matrix is singular");
    return x;
}

bool is_invertible(const Mat& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

CokernelData cokernel_split(const Mat& m) {
    const int n = m.rows();
    Mat t = m.transpose();
    auto piv = rref(t);
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<int> rest;
    for (int r = 0; r < n; ++r) if (!is_piv[r]) rest.push_back(r);
    const int k = static_cast<int>(rest.size());
    CokernelData out{Mat(m.field(), k, n), Mat(m.field(), n, k)};
    for (int a = 0; a < k; ++a) {
        int r = rest[a];
        out.sec(r, a) = Elem(m.field(), 1);
        out.proj(a, r) = Elem(m.field(), 1);
        for (size_t i = 0; i < piv.size(); ++i) {
            const Elem& coef = t(static_cast<int>(i), r);
            if (!coef.is_zero()) out.proj(a, piv[i]) -= coef;
        }
    }
    return out;
}

RankFactor rank_factor(const Mat& m) {
    Mat t(m);
    auto piv = rref(t);
    const int k = static_cast<int>(piv.size());
    RankFactor out{Mat(m.field(), m.rows(), k), Mat(m.field(), k, m.cols())};
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < m.rows(); ++i) out.inc(i, j) = m(i, piv[j]);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m.cols(); ++j) out.pro(i, j) = t(i, j);
    return out;
}

} // namespace mfus
