#include "symadj/minkowski.hpp"

#include "symadj/quadform.hpp"

namespace symadj {
namespace minkowski {

Mat MinkForm::j() const {
    Mat m(dim, dim);
    for (int i = 0; i + 1 < dim; ++i) m(i, i) = Rat(-1);
    m(dim - 1, dim - 1) = Rat(1);
    return m;
}

Rat MinkForm::q(const Vec& x) const {
    if (x.dim() != dim) throw DimensionMismatch("MinkForm::q: dimension mismatch");
    Rat s = x[dim - 1] * x[dim - 1];
    for (int i = 0; i + 1 < dim; ++i) s -= x[i] * x[i];
    return s;
}

Rat q_form(const Vec& x) { return MinkForm(x.dim()).q(x); }

SymMat t_map(const Vec& x) {
    if (x.dim() != 3) throw DimensionMismatch("t_map: expects a 3-vector");
    SymMat m(2);
    m.set(0, 0, x[2] + x[0]);
    m.set(0, 1, x[1]);
    m.set(1, 1, x[2] - x[0]);
    return m;
}

Vec t_inv(const SymMat& m) {
    if (m.dim() != 2) throw DimensionMismatch("t_inv: expects a 2x2 symmetric matrix");
    Rat half(1, 2);
    return Vec{half * (m(0, 0) - m(1, 1)), m(0, 1), half * (m(0, 0) + m(1, 1))};
}

bool is_lorentz(const Mat& l) {
    if (l.rows() != l.cols()) return false;
    Mat j = MinkForm(l.rows()).j();
    return l.transpose() * j * l == j;
}

LorentzMat::LorentzMat(Mat l) : l_(std::move(l)) {
    if (l_.rows() != 3 || l_.cols() != 3)
        throw DimensionMismatch("LorentzMat: expects 3x3");
    if (!is_lorentz(l_)) throw PreconditionViolation("LorentzMat: L^T J L != J");
    // Both follow from the defining identity; asserted as construction checks.
    if (det(l_).abs() != Rat(1)) throw std::logic_error("LorentzMat: |det| != 1");
    if (l_(2, 2).abs() < Rat(1)) throw std::logic_error("LorentzMat: |l33| < 1");
}

bool is_restricted_lorentz(const LorentzMat& l) {
    return det(l.mat()) == Rat(1) && l.mat()(2, 2) >= Rat(1);
}

WeylMap::WeylMap(Rat a, LorentzMat lorentz, Vec offset)
    : alpha(std::move(a)), l(std::move(lorentz)), b(std::move(offset)) {
    if (alpha.is_zero()) throw std::invalid_argument("WeylMap: alpha must be nonzero");
    if (b.dim() != 3) throw DimensionMismatch("WeylMap: offset must be a 3-vector");
}

Vec weyl_apply(const WeylMap& f, const Vec& x) {
    return f.alpha * (f.l.mat() * x) + f.b;
}

WeylMap weyl_compose(const WeylMap& f, const WeylMap& g) {
    // f(g(x)) = (af*ag) Lf Lg x + (af*Lf(bg) + bf)
    return WeylMap(f.alpha * g.alpha, LorentzMat(f.l.mat() * g.l.mat()),
                   f.alpha * (f.l.mat() * g.b) + f.b);
}

WeylMap weyl_inverse(const WeylMap& f) {
    // L^{-1} = J L^T J for Lorentz L.
    Mat j = MinkForm(3).j();
    Mat li = j * f.l.mat().transpose() * j;
    Rat ai = f.alpha.inverse();
    Vec bi = -ai * (li * f.b);
    return WeylMap(ai, LorentzMat(std::move(li)), std::move(bi));
}

WeylMap weyl_identity() {
    return WeylMap(Rat(1), LorentzMat(Mat::identity(3)), Vec(3));
}

AffineCongruence::AffineCongruence(int sign, Mat p_mat, SymMat shift)
    : c(sign), p(std::move(p_mat)), s(std::move(shift)) {
    if (c != 1 && c != -1) throw std::invalid_argument("AffineCongruence: c must be +1 or -1");
    if (p.rows() != 2 || p.cols() != 2) throw DimensionMismatch("AffineCongruence: P must be 2x2");
    if (s.dim() != 2) throw DimensionMismatch("AffineCongruence: S must be 2x2");
    if (det(p).is_zero()) throw PreconditionViolation("AffineCongruence: P must be invertible");
}

SymMat affine_apply(const AffineCongruence& g, const SymMat& a) {
    return Rat(g.c) * congruence(a, g.p) + g.s;
}

WeylMap congruence_to_weyl(const AffineCongruence& g) {
    // The linear part x -> t_inv(c P t_map(x) P^T), as a 3x3 matrix from the
    // images of the standard basis.
    Mat f(3, 3);
    for (int j = 0; j < 3; ++j) {
        Vec y = t_inv(Rat(g.c) * congruence(t_map(Vec::unit(3, j)), g.p));
        for (int i = 0; i < 3; ++i) f(i, j) = y[i];
    }
    Rat alpha = det(g.p).abs();
    Mat l = alpha.inverse() * f;
    if (!is_lorentz(l))
        throw std::logic_error("congruence_to_weyl: scaled linear part is not Lorentz");
    return WeylMap(alpha, LorentzMat(std::move(l)), t_inv(g.s));
}

namespace {

// Column of P from c * (that column outer itself) = value, via the exact
// square root of a diagonal entry.
Vec column_from_outer(const SymMat& m) {
    int j = -1;
    for (int i = 0; i < m.dim() && j < 0; ++i)
        if (!m(i, i).is_zero()) j = i;
    if (j < 0) throw std::logic_error("column_from_outer: zero diagonal on a rank-one value");
    std::optional<Rat> root = m(j, j).sqrt_exact();
    if (!root) throw NonRationalLift(m(j, j));
    Vec col(m.dim());
    Rat inv = root->inverse();
    for (int i = 0; i < m.dim(); ++i) col[i] = m(i, j) * inv;
    return col;
}

}  // namespace

std::pair<int, Mat> lorentz_to_congruence(const LorentzMat& l) {
    // Images of the basis of symmetric 2x2 space under A -> T(L T^{-1}(A)).
    auto push = [&l](const SymMat& a) { return t_map(l.mat() * t_inv(a)); };
    SymMat m11 = push(SymMat::unit(2, 0, 0));   // should be c * p1 p1^T
    SymMat m22 = push(SymMat::unit(2, 1, 1));   // should be c * p2 p2^T
    SymMat m12 = push(SymMat::unit(2, 0, 1));   // should be c * (p1 p2^T + p2 p1^T)

    int c = quadform::sign_of_rank_one(m11);
    if (quadform::sign_of_rank_one(m22) != c)
        throw std::logic_error("lorentz_to_congruence: inconsistent signs on basis images");

    Vec p1 = column_from_outer(Rat(c) * m11);
    Vec p2 = column_from_outer(Rat(c) * m22);

    auto cross = [&c](const Vec& a, const Vec& b) {
        SymMat m(2);
        m.set(0, 0, Rat(2 * c) * a[0] * b[0]);
        m.set(0, 1, Rat(c) * (a[0] * b[1] + a[1] * b[0]));
        m.set(1, 1, Rat(2 * c) * a[1] * b[1]);
        return m;
    };
    if (!(cross(p1, p2) == m12)) {
        p2 = Rat(-1) * p2;
        if (!(cross(p1, p2) == m12))
            throw std::logic_error("lorentz_to_congruence: cross term matches neither sign");
    }

    Mat p(2, 2);
    for (int i = 0; i < 2; ++i) {
        p(i, 0) = p1[i];
        p(i, 1) = p2[i];
    }
    // Global sign: first nonzero entry positive.
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (p(i, j).is_zero()) continue;
            if (p(i, j).sign() < 0) p = Rat(-1) * p;
            goto normalized;
        }
normalized:
    // Full verification on the basis; linearity extends it to every x.
    for (int j = 0; j < 3; ++j) {
        Vec e = Vec::unit(3, j);
        if (!(t_map(l.mat() * e) == Rat(c) * congruence(t_map(e), p)))
            throw std::logic_error("lorentz_to_congruence: verification failed");
    }
    return {c, p};
}

SeparationCheck null_separation_adjacency_check(const Vec& x, const Vec& y) {
    if (x.dim() != 3 || y.dim() != 3)
        throw DimensionMismatch("null_separation_adjacency_check: expects 3-vectors");
    Vec diff = x - y;
    Rat q = q_form(diff);
    bool null_sep = !(x == y) && q.is_zero();
    bool adj = is_adjacent(t_map(x), t_map(y));
    bool det_id = det(t_map(x) - t_map(y)) == q;
    return SeparationCheck{null_sep, adj, null_sep == adj && det_id};
}

}  // namespace minkowski
}  // namespace symadj
