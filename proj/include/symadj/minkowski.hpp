#pragma once

#include "symadj/linalg.hpp"

namespace symadj {
namespace minkowski {

// Q(x) = x_n^2 - x_1^2 - ... - x_{n-1}^2, signature matrix diag(-1,...,-1,+1).
struct MinkForm {
    int dim;

    explicit MinkForm(int n) : dim(n) {
        if (n < 2) throw std::invalid_argument("MinkForm: dim must be at least 2");
    }
    Mat j() const;
    Rat q(const Vec& x) const;
};

Rat q_form(const Vec& x);

// The linear bijection between 3-vectors and symmetric 2x2 matrices:
// x -> [x3+x1, x2; x2, x3-x1]. det(t_map(x)) = q_form(x).
SymMat t_map(const Vec& x);
Vec t_inv(const SymMat& m);

bool is_lorentz(const Mat& l);

// 3x3 matrix with L^T J L = J. |det L| = 1 and |l33| >= 1 follow and are
// asserted on construction.
class LorentzMat {
public:
    explicit LorentzMat(Mat l);

    const Mat& mat() const { return l_; }
    Rat determinant() const { return det(l_); }

    friend bool operator==(const LorentzMat&, const LorentzMat&) = default;

private:
    Mat l_;
};

// det L = 1 and l33 >= 1. The identity (l33 = 1) counts as restricted.
bool is_restricted_lorentz(const LorentzMat& l);

// x -> alpha * L x + b, alpha nonzero.
struct WeylMap {
    Rat alpha;
    LorentzMat l;
    Vec b;

    WeylMap(Rat a, LorentzMat lorentz, Vec offset);
};

Vec weyl_apply(const WeylMap& f, const Vec& x);
WeylMap weyl_compose(const WeylMap& f, const WeylMap& g);  // f after g
WeylMap weyl_inverse(const WeylMap& f);
WeylMap weyl_identity();

// A -> c * P A P^T + S on symmetric 2x2 matrices, P invertible.
struct AffineCongruence {
    int c;  // +1 or -1
    Mat p;
    SymMat s;

    AffineCongruence(int sign, Mat p_mat, SymMat shift);
};

SymMat affine_apply(const AffineCongruence& g, const SymMat& a);

// The conjugated map x -> t_inv(c P t_map(x) P^T) is alpha * (Lorentz) with
// alpha = |det P|; translation is t_inv(S). Verified before returning.
WeylMap congruence_to_weyl(const AffineCongruence& g);

struct NonRationalLift : std::runtime_error {
    Rat obstruction;
    explicit NonRationalLift(Rat value)
        : std::runtime_error("lorentz_to_congruence: lift needs an irrational square root of " + value.str()),
          obstruction(std::move(value)) {}
};

// Recovers (c, P) with T(Lx) = c P (Tx) P^T, P normalized so its first
// nonzero entry is positive. Throws NonRationalLift when P exists only over
// a quadratic extension.
std::pair<int, Mat> lorentz_to_congruence(const LorentzMat& l);

struct SeparationCheck {
    bool null_separated;  // x != y and Q(x - y) = 0
    bool adjacent;        // t_map(x), t_map(y) adjacent
    bool consistent;      // the two agree and det(Tx - Ty) = Q(x - y)
};

SeparationCheck null_separation_adjacency_check(const Vec& x, const Vec& y);

}  // namespace minkowski
}  // namespace symadj
