#include "symadj/rng.hpp"

namespace symadj {

uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
}

bool Rng::chance(int num, int den) {
    return range(0, den - 1) < num;
}

Rat Rng::rat() {
    long num = range(-9, 9);
    long den;
    switch (range(0, 3)) {
        case 0: den = 2; break;
        case 1: den = 3; break;
        default: den = 1; break;
    }
    return Rat(num, den);
}

Rat Rng::nonzero_rat() {
    for (;;) {
        Rat r = rat();
        if (!r.is_zero()) return r;
    }
}

Vec Rng::vec(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = rat();
    return v;
}

Vec Rng::nonzero_vec(int n) {
    for (;;) {
        Vec v = vec(n);
        if (!v.is_zero()) return v;
    }
}

Mat Rng::mat(int rows, int cols) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rat();
    return m;
}

Mat Rng::invertible(int n) {
    for (;;) {
        Mat m = mat(n, n);
        if (!det(m).is_zero()) return m;
    }
}

Mat Rng::full_col_rank(int rows, int cols) {
    if (rows < cols) throw std::invalid_argument("full_col_rank: rows < cols");
    for (;;) {
        Mat m = mat(rows, cols);
        if (rank(m) == cols) return m;
    }
}

SymMat Rng::sym(int n) {
    SymMat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, rat());
    return m;
}

SymMat Rng::sym_of_rank(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("sym_of_rank: bad rank");
    for (;;) {
        SymMat m(n);
        for (int t = 0; t < k; ++t) m = m + sym_outer(rank_one_term(n));
        if (rank(m) == k) return m;
    }
}

RankOneTerm Rng::rank_one_term(int n) {
    return RankOneTerm(nonzero_rat(), nonzero_vec(n));
}

}  // namespace symadj
