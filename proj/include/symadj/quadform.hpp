#pragma once

#include "symadj/linalg.hpp"

namespace symadj {
namespace quadform {

// Rational congruence diagonalization: S * A * S^T = diag(d), S invertible.
// The count of nonzero d entries equals rank(A).
struct CongruenceDiag {
    Mat s;
    std::vector<Rat> d;
};

// A = sum of coeff_i * u_i u_i^T with linearly independent u_i; term count
// equals rank, and the first j partial sums have rank exactly j.
struct Decomposition {
    std::vector<RankOneTerm> terms;
};

// Sylvester invariant of the quadratic form.
struct Inertia {
    int pos = 0;
    int neg = 0;
    int zero = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

CongruenceDiag diagonalize(const SymMat& a);

Inertia inertia(const SymMat& a);

Decomposition rank_one_decompose(const SymMat& a);

SymMat reassemble(const Decomposition& dec, int n);

// P*P = P and P != 0.
bool is_projection(const SymMat& p);

// Sign of the coefficient of a rank-one symmetric matrix c*uu^T, read off
// the trace (= c*|u|^2). Throws unless rank is exactly one.
int sign_of_rank_one(const SymMat& m);

// The unique (coeff, u) with m = coeff * uu^T up to the (c,u) ~ (c/t^2, tu)
// gauge; throws unless rank is one.
RankOneTerm rank_one_extract(const SymMat& m);

// Top-left k x k block of a corner element (entries vanish outside the
// block, checked). Preserves d, adjacency, and products of corner elements.
SymMat compress_q(const SymMat& a, int k);
Mat compress_q(const Mat& a, int k);

}  // namespace quadform
}  // namespace symadj
