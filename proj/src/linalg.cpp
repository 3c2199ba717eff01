#include "symadj/linalg.hpp"

#include <algorithm>

namespace symadj {

Vec Vec::unit(int dim, int i) {
    Vec v(dim);
    if (i < 0 || i >= dim) throw std::invalid_argument("Vec::unit: index out of range");
    v[i] = Rat(1);
    return v;
}

bool Vec::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rat& r) { return r.is_zero(); });
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("dot: dimension mismatch");
    Rat s;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("Vec +: dimension mismatch");
    Vec r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("Vec -: dimension mismatch");
    Vec r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator*(const Rat& c, const Vec& v) {
    Vec r(v.dim());
    for (int i = 0; i < v.dim(); ++i) r[i] = c * v[i];
    return r;
}

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("Mat: dims must be positive");
    e_.resize(static_cast<size_t>(rows) * cols);
}

Mat::Mat(int rows, int cols, std::vector<Rat> entries) : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("Mat: dims must be positive");
    if (e_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("Mat: entry count does not match dims");
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Mat::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rat& r) { return r.is_zero(); });
}

bool Mat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

SymMat Mat::as_sym() const { return SymMat(*this); }

Vec Mat::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Mat::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("Mat +: shape mismatch");
    Mat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("Mat -: shape mismatch");
    Mat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("Mat *: inner dims differ");
    Mat r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

Mat operator*(const Rat& c, const Mat& a) {
    Mat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
    return r;
}

Vec operator*(const Mat& a, const Vec& x) {
    if (a.cols() != x.dim()) throw DimensionMismatch("Mat * Vec: dims differ");
    Vec r(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        Rat s;
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        r[i] = s;
    }
    return r;
}

SymMat::SymMat(Mat m) : m_(std::move(m)) {
    if (!m_.is_symmetric()) throw std::invalid_argument("SymMat: matrix is not symmetric");
}

SymMat SymMat::unit(int n, int i, int j) {
    SymMat m(n);
    if (i < 0 || i >= n || j < 0 || j >= n) throw std::invalid_argument("SymMat::unit: index out of range");
    m.set(i, j, Rat(1));
    return m;
}

SymMat SymMat::diag(std::vector<Rat> d) {
    SymMat m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m.set(i, i, d[static_cast<size_t>(i)]);
    return m;
}

SymMat operator+(const SymMat& a, const SymMat& b) { return SymMat(a.mat() + b.mat()); }
SymMat operator-(const SymMat& a, const SymMat& b) { return SymMat(a.mat() - b.mat()); }
SymMat operator*(const Rat& c, const SymMat& a) { return SymMat(c * a.mat()); }

SymMat sym_outer(const RankOneTerm& t, int n) {
    if (t.vector.dim() != n) throw DimensionMismatch("sym_outer: vector dim differs from n");
    return sym_outer(t);
}

SymMat sym_outer(const RankOneTerm& t) {
    const int n = t.vector.dim();
    SymMat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, t.coeff * t.vector[i] * t.vector[j]);
    return m;
}

namespace {

// Row-wise denominator clearing: multiplies each row by the lcm of its
// denominators. Preserves rank and row space.
std::vector<std::vector<mpz_class>> cleared_int_rows(const Mat& a) {
    std::vector<std::vector<mpz_class>> m(static_cast<size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) {
        mpz_class l = 1;
        for (int j = 0; j < a.cols(); ++j) {
            mpz_class d = a(i, j).den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        m[static_cast<size_t>(i)].resize(static_cast<size_t>(a.cols()));
        for (int j = 0; j < a.cols(); ++j) {
            const Rat& r = a(i, j);
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = r.num() * (l / r.den());
        }
    }
    return m;
}

// Bareiss fraction-free elimination over Z. Returns the pivot column of each
// eliminated row, in elimination order. rank = result size.
std::vector<int> bareiss_pivot_cols(std::vector<std::vector<mpz_class>> m) {
    if (m.empty()) return {};
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    std::vector<int> pivots;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(m[static_cast<size_t>(i)][static_cast<size_t>(c)]) != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[static_cast<size_t>(r)], m[static_cast<size_t>(p)]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class t = m[static_cast<size_t>(r)][static_cast<size_t>(c)] * m[static_cast<size_t>(i)][static_cast<size_t>(j)]
                            - m[static_cast<size_t>(i)][static_cast<size_t>(c)] * m[static_cast<size_t>(r)][static_cast<size_t>(j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = t;
            }
            m[static_cast<size_t>(i)][static_cast<size_t>(c)] = 0;
        }
        prev = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const Mat& a) {
    return static_cast<int>(bareiss_pivot_cols(cleared_int_rows(a)).size());
}

int rank(const SymMat& a) { return rank(a.mat()); }

int dist(const SymMat& a, const SymMat& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("dist: dimension mismatch");
    return rank(a - b);
}

bool is_adjacent(const SymMat& a, const SymMat& b) { return dist(a, b) == 1; }

SymMat congruence(const SymMat& a, const Mat& r) {
    if (r.rows() != r.cols() || r.rows() != a.dim())
        throw DimensionMismatch("congruence: R must be square of A's dim");
    return SymMat(r * a.mat() * r.transpose());
}

std::vector<Vec> image_basis(const Mat& a) {
    // Pivot columns of the row echelon form index a basis of the column space.
    std::vector<int> pivots = bareiss_pivot_cols(cleared_int_rows(a));
    std::vector<Vec> basis;
    basis.reserve(pivots.size());
    for (int c : pivots) basis.push_back(a.col(c));
    return basis;
}

std::vector<Vec> image_basis(const SymMat& a) { return image_basis(a.mat()); }

bool direct_sum_check(const SymMat& x, const SymMat& y, const SymMat& z) {
    if (x.dim() != y.dim() || x.dim() != z.dim())
        throw DimensionMismatch("direct_sum_check: dimension mismatch");
    if (!(y + z == x)) throw PreconditionViolation("direct_sum_check: X != Y + Z");
    return rank(x) == rank(y) + rank(z);
}

std::optional<Vec> solve(const Mat& a, const Vec& v) {
    if (a.rows() != v.dim()) throw DimensionMismatch("solve: rhs dim differs from rows");
    const int rows = a.rows(), cols = a.cols();
    // Rational Gauss elimination on the augmented matrix.
    Mat aug(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug(i, j) = a(i, j);
        aug(i, cols) = v[i];
    }
    std::vector<int> pivot_col_of_row(static_cast<size_t>(rows), -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!aug(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j <= cols; ++j) std::swap(aug(r, j), aug(p, j));
        Rat inv = aug(r, c).inverse();
        for (int j = c; j <= cols; ++j) aug(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || aug(i, c).is_zero()) continue;
            Rat f = aug(i, c);
            for (int j = c; j <= cols; ++j) aug(i, j) -= f * aug(r, j);
        }
        pivot_col_of_row[static_cast<size_t>(r)] = c;
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!aug(i, cols).is_zero()) return std::nullopt;  // inconsistent
    Vec w(cols);
    for (int i = 0; i < r; ++i) w[pivot_col_of_row[static_cast<size_t>(i)]] = aug(i, cols);
    return w;
}

std::optional<Vec> solve(const SymMat& a, const Vec& v) { return solve(a.mat(), v); }

bool in_image(const SymMat& a, const Vec& v) { return solve(a, v).has_value(); }

SymMat embed_h(const SymMat& b, int m) {
    if (m < b.dim()) throw PreconditionViolation("embed_h: target dim smaller than source");
    SymMat r(m);
    for (int i = 0; i < b.dim(); ++i)
        for (int j = i; j < b.dim(); ++j) r.set(i, j, b(i, j));
    return r;
}

SymMat extract_block(const SymMat& a, int n) {
    if (n <= 0 || n > a.dim()) throw std::invalid_argument("extract_block: bad block size");
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j)
            if ((i >= n || j >= n) && !a(i, j).is_zero())
                throw PreconditionViolation("extract_block: nonzero entry outside the block");
    SymMat b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) b.set(i, j, a(i, j));
    return b;
}

Rat det(const Mat& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("det: matrix not square");
    const int n = a.rows();
    Mat m = a;
    Rat d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!m(i, c).is_zero()) { p = i; break; }
        if (p < 0) return Rat(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(c, j), m(p, j));
            d = -d;
        }
        d *= m(c, c);
        Rat inv = m(c, c).inverse();
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Rat f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

Rat det(const SymMat& a) { return det(a.mat()); }

Rat trace(const SymMat& a) {
    Rat t;
    for (int i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

Mat inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("inverse: matrix not square");
    const int n = a.rows();
    Mat m = a;
    Mat inv = Mat::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!m(i, c).is_zero()) { p = i; break; }
        if (p < 0) throw PreconditionViolation("inverse: matrix is singular");
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m(c, j), m(p, j));
                std::swap(inv(c, j), inv(p, j));
            }
        Rat piv = m(c, c).inverse();
        for (int j = 0; j < n; ++j) {
            m(c, j) *= piv;
            inv(c, j) *= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || m(i, c).is_zero()) continue;
            Rat f = m(i, c);
            for (int j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

}  // namespace symadj
