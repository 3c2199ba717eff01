#include "symadj/quadform.hpp"

namespace symadj {
namespace quadform {

namespace {

// Congruence row/col k <- row/col k + row/col j, tracked in s.
void add_row_col(Mat& a, Mat& s, int k, int j) {
    const int n = a.rows();
    for (int c = 0; c < n; ++c) a(k, c) += a(j, c);
    for (int r = 0; r < n; ++r) a(r, k) += a(r, j);
    for (int c = 0; c < n; ++c) s(k, c) += s(j, c);
}

void swap_row_col(Mat& a, Mat& s, int k, int j) {
    const int n = a.rows();
    for (int c = 0; c < n; ++c) std::swap(a(k, c), a(j, c));
    for (int r = 0; r < n; ++r) std::swap(a(r, k), a(r, j));
    for (int c = 0; c < n; ++c) std::swap(s(k, c), s(j, c));
}

}  // namespace

CongruenceDiag diagonalize(const SymMat& src) {
    const int n = src.dim();
    Mat a = src.mat();
    Mat s = Mat::identity(n);
    for (int k = 0; k < n; ++k) {
        if (a(k, k).is_zero()) {
            // Prefer moving a nonzero diagonal entry into place.
            int jd = -1;
            for (int j = k + 1; j < n; ++j)
                if (!a(j, j).is_zero()) { jd = j; break; }
            if (jd >= 0) {
                swap_row_col(a, s, k, jd);
            } else {
                // All remaining diagonal entries are zero. If the block is
                // nonzero, adding row/col j to i turns a_ij into diagonal 2a_ij.
                int oi = -1, oj = -1;
                for (int i = k; i < n && oi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (!a(i, j).is_zero()) { oi = i; oj = j; break; }
                if (oi < 0) break;  // remaining block is zero
                add_row_col(a, s, oi, oj);
                if (oi != k) swap_row_col(a, s, k, oi);
            }
        }
        Rat inv_piv = a(k, k).inverse();
        for (int i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            Rat f = a(i, k) * inv_piv;
            for (int c = 0; c < n; ++c) a(i, c) -= f * a(k, c);
            for (int r = 0; r < n; ++r) a(r, i) -= f * a(r, k);
            for (int c = 0; c < n; ++c) s(i, c) -= f * s(k, c);
        }
    }
    std::vector<Rat> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = a(i, i);
    return CongruenceDiag{std::move(s), std::move(d)};
}

Inertia inertia(const SymMat& a) {
    CongruenceDiag cd = diagonalize(a);
    Inertia in;
    for (const Rat& v : cd.d) {
        if (v.sign() > 0) ++in.pos;
        else if (v.sign() < 0) ++in.neg;
        else ++in.zero;
    }
    return in;
}

Decomposition rank_one_decompose(const SymMat& a) {
    CongruenceDiag cd = diagonalize(a);
    Mat s_inv = inverse(cd.s);
    Decomposition dec;
    for (int i = 0; i < a.dim(); ++i) {
        const Rat& lambda = cd.d[static_cast<size_t>(i)];
        if (lambda.is_zero()) continue;
        dec.terms.emplace_back(lambda, s_inv.col(i));
    }
    return dec;
}

SymMat reassemble(const Decomposition& dec, int n) {
    SymMat acc(n);
    for (const RankOneTerm& t : dec.terms) acc = acc + sym_outer(t, n);
    return acc;
}

bool is_projection(const SymMat& p) {
    if (p.is_zero()) return false;
    return p.mat() * p.mat() == p.mat();
}

int sign_of_rank_one(const SymMat& m) {
    if (rank(m) != 1) throw PreconditionViolation("sign_of_rank_one: rank is not one");
    return trace(m).sign();
}

RankOneTerm rank_one_extract(const SymMat& m) {
    if (rank(m) != 1) throw PreconditionViolation("rank_one_extract: rank is not one");
    // m = c*uu^T forces a nonzero diagonal entry at any nonzero column.
    int j = -1;
    for (int c = 0; c < m.dim() && j < 0; ++c)
        if (!m(c, c).is_zero()) j = c;
    if (j < 0) throw PreconditionViolation("rank_one_extract: not of the form c*uu^T");
    Vec u = m.mat().col(j);
    Rat coeff = m(j, j).inverse();
    RankOneTerm t(coeff, std::move(u));
    if (!(sym_outer(t) == m)) throw PreconditionViolation("rank_one_extract: not of the form c*uu^T");
    return t;
}

SymMat compress_q(const SymMat& a, int k) {
    return extract_block(a, k);
}

Mat compress_q(const Mat& a, int k) {
    if (a.rows() != a.cols()) throw DimensionMismatch("compress_q: matrix not square");
    if (k <= 0 || k > a.rows()) throw std::invalid_argument("compress_q: bad block size");
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if ((i >= k || j >= k) && !a(i, j).is_zero())
                throw PreconditionViolation("compress_q: nonzero entry outside the corner");
    Mat b(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) b(i, j) = a(i, j);
    return b;
}

}  // namespace quadform
}  // namespace symadj
