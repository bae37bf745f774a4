#pragma once

#include <vector>

#include "mfus/field.hpp"

namespace mfus {

// Dense row-major matrix over a number field.
class Mat {
public:
    Mat() = default;
    Mat(const Field* f, int rows, int cols);

    static Mat identity(const Field* f, int n);
    static Mat zero(const Field* f, int rows, int cols) { return Mat(f, rows, cols); }

    const Field* field() const { return f_; }
    int rows() const { return r_; }
    int cols() const { return c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    Elem& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Elem& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat& operator+=(const Mat& o);
    Mat scaled(const Elem& s) const;
    Mat transpose() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;

    Mat block(int r0, int c0, int nr, int nc) const;
    void set_block(int r0, int c0, const Mat& b);

    static Mat kron(const Mat& a, const Mat& b);
    static Mat hstack(const std::vector<Mat>& parts, const Field* f, int rows);
    static Mat vstack(const std::vector<Mat>& parts, const Field* f, int cols);

private:
    const Field* f_ = nullptr;
    int r_ = 0, c_ = 0;
    std::vector<Elem> a_;
};

// Reduced row echelon form in place; returns pivot columns. Pivots are
// chosen as the first nonzero entry scanning rows top to bottom, which
// keeps every downstream basis choice deterministic.
std::vector<int> rref(Mat& m);
int rank(const Mat& m);
// Columns of the result span {v : m v = 0}.
Mat nullspace(const Mat& m);
// Solves m x = b for a matrix right-hand side; returns false if inconsistent.
bool solve(const Mat& m, const Mat& b, Mat& x);
Mat inverse(const Mat& m);
bool is_invertible(const Mat& m);

// Cokernel of a linear map m (rows = target dimension). proj is k x rows with
// proj*m = 0 and proj*sec = I; sec is rows x k. The complement is spanned by
// the standard vectors of the rows that are not pivots of m's column space.
struct CokernelData {
    Mat proj;
    Mat sec;
};
CokernelData cokernel_split(const Mat& m);

// m = inc * pro with inc of full column rank (the column basis of m) and
// pro of full row rank.
struct RankFactor {
    Mat inc;
    Mat pro;
};
RankFactor rank_factor(const Mat& m);

} // namespace mfus
