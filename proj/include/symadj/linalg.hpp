#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "symadj/rational.hpp"

namespace symadj {

class Vec {
public:
    explicit Vec(int dim) : e_(static_cast<size_t>(check_dim(dim))) {}
    Vec(std::initializer_list<Rat> entries) : e_(entries) {
        if (e_.empty()) throw std::invalid_argument("Vec: empty");
    }
    explicit Vec(std::vector<Rat> entries) : e_(std::move(entries)) {
        if (e_.empty()) throw std::invalid_argument("Vec: empty");
    }

    static Vec unit(int dim, int i);

    int dim() const { return static_cast<int>(e_.size()); }
    const Rat& operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    Rat& operator[](int i) { return e_[static_cast<size_t>(i)]; }

    bool is_zero() const;

    friend bool operator==(const Vec&, const Vec&) = default;

private:
    static int check_dim(int d) {
        if (d <= 0) throw std::invalid_argument("Vec: dim must be positive");
        return d;
    }
    std::vector<Rat> e_;
};

Rat dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& c, const Vec& v);

class SymMat;

// Dense rational matrix, row-major.
class Mat {
public:
    Mat(int rows, int cols);
    Mat(int rows, int cols, std::vector<Rat> entries);

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& operator()(int i, int j) const { return e_[idx(i, j)]; }
    Rat& operator()(int i, int j) { return e_[idx(i, j)]; }

    Mat transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;
    SymMat as_sym() const;  // throws unless square and symmetric

    Vec col(int j) const;
    Vec row(int i) const;

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * cols_ + j; }
    int rows_, cols_;
    std::vector<Rat> e_;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(const Rat& c, const Mat& a);
Vec operator*(const Mat& a, const Vec& x);

// Symmetric rational matrix. Symmetry is a construction invariant; in-place
// writes go through set() which mirrors the entry.
class SymMat {
public:
    explicit SymMat(int dim) : m_(check_dim(dim), dim) {}
    explicit SymMat(Mat m);  // throws unless symmetric

    static SymMat identity(int n) { return SymMat(Mat::identity(n)); }
    static SymMat zero(int n) { return SymMat(n); }
    static SymMat unit(int n, int i, int j);  // E_ii, or E_ij + E_ji for i != j
    static SymMat diag(std::vector<Rat> d);

    int dim() const { return m_.rows(); }
    const Rat& operator()(int i, int j) const { return m_(i, j); }
    void set(int i, int j, const Rat& v) { m_(i, j) = v; m_(j, i) = v; }

    const Mat& mat() const { return m_; }
    bool is_zero() const { return m_.is_zero(); }

    friend bool operator==(const SymMat&, const SymMat&) = default;

private:
    static int check_dim(int d) {
        if (d <= 0) throw std::invalid_argument("SymMat: dim must be positive");
        return d;
    }
    Mat m_;
};

SymMat operator+(const SymMat& a, const SymMat& b);
SymMat operator-(const SymMat& a, const SymMat& b);
SymMat operator*(const Rat& c, const SymMat& a);

// coeff * (vector vector^T), coeff and vector nonzero; rank one by construction.
struct RankOneTerm {
    Rat coeff;
    Vec vector;

    RankOneTerm(Rat c, Vec v) : coeff(std::move(c)), vector(std::move(v)) {
        if (coeff.is_zero()) throw std::invalid_argument("RankOneTerm: zero coefficient");
        if (vector.is_zero()) throw std::invalid_argument("RankOneTerm: zero vector");
    }

    friend bool operator==(const RankOneTerm&, const RankOneTerm&) = default;
};

SymMat sym_outer(const RankOneTerm& t, int n);
SymMat sym_outer(const RankOneTerm& t);

// Exact rank over Q, fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
int rank(const Mat& a);
int rank(const SymMat& a);

// Arithmetic distance rank(A - B); a metric on symmetric matrices.
int dist(const SymMat& a, const SymMat& b);
bool is_adjacent(const SymMat& a, const SymMat& b);

// R * A * R^T. R need not be invertible; call sites that rely on rank
// invariance check that themselves.
SymMat congruence(const SymMat& a, const Mat& r);

// Basis of the column space; size equals rank.
std::vector<Vec> image_basis(const Mat& a);
std::vector<Vec> image_basis(const SymMat& a);

// True iff rank X = rank Y + rank Z, for X = Y + Z (checked); equivalent to
// Im X = Im Y (+) Im Z.
bool direct_sum_check(const SymMat& x, const SymMat& y, const SymMat& z);

// Some w with A w = v, or nullopt when v is outside the column space.
std::optional<Vec> solve(const Mat& a, const Vec& v);
std::optional<Vec> solve(const SymMat& a, const Vec& v);

bool in_image(const SymMat& a, const Vec& v);

// [B 0; 0 0] of size m >= B.dim.
SymMat embed_h(const SymMat& b, int m);

// Top-left n x n block; everything outside must be zero (checked).
SymMat extract_block(const SymMat& a, int n);

Rat det(const Mat& a);
Rat det(const SymMat& a);
Rat trace(const SymMat& a);

// Inverse of a square invertible matrix; throws PreconditionViolation if singular.
Mat inverse(const Mat& a);

}  // namespace symadj
