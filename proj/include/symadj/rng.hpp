#pragma once

#include <cstdint>

#include "symadj/linalg.hpp"

namespace symadj {

// Deterministic splitmix64 generator. Every randomized routine takes a seed
// so reruns with identical arguments are byte-identical.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next();
    // Uniform in [lo, hi], inclusive.
    long range(long lo, long hi);
    bool chance(int num, int den);  // true with probability num/den

    // Small rationals: numerators in [-9, 9], denominators in {1, 1, 2, 3}.
    Rat rat();
    Rat nonzero_rat();

    Vec vec(int n);
    Vec nonzero_vec(int n);

    Mat mat(int rows, int cols);
    Mat invertible(int n);         // rejection-sampled full rank
    Mat full_col_rank(int rows, int cols);

    SymMat sym(int n);
    SymMat sym_of_rank(int n, int k);  // sum of k independent rank-one terms
    RankOneTerm rank_one_term(int n);

private:
    uint64_t state_;
};

}  // namespace symadj
