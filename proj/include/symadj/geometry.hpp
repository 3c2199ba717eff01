#pragma once

#include <variant>

#include "symadj/quadform.hpp"
#include "symadj/rng.hpp"

namespace symadj {
namespace geometry {

// {base + lambda * direction : lambda in Q}, direction rank one.
struct Line {
    SymMat base;
    RankOneTerm direction;
};

// Rank along a line: either constant, or constant except at one point K
// where it is exactly one smaller.
struct ConstantProfile {
    int k = 0;
    friend bool operator==(const ConstantProfile&, const ConstantProfile&) = default;
};
struct ExceptionalProfile {
    Rat lambda0;
    SymMat k_point;
    int k_at_k = 0;
};
using LineProfile = std::variant<ConstantProfile, ExceptionalProfile>;

// Consecutively adjacent points.
struct Chain {
    std::vector<SymMat> points;
};

// Line through two adjacent points; throws unless adjacent.
Line line(const SymMat& a, const SymMat& b);

SymMat line_point(const Line& l, const Rat& lambda);

// lambda with x = base + lambda*direction, if any.
std::optional<Rat> on_line(const Line& l, const SymMat& x);

// Classifies lambda -> d(g, line_point(l, lambda)). Each branch is verified
// by direct rank evaluation before returning.
LineProfile line_distance_profile(const SymMat& g, const Line& l);

// Chain of length dist(a, b) + 1 along a rank-one decomposition of b - a;
// dist(points[i], points[j]) = |i - j| for all i, j.
Chain adjacency_chain(const SymMat& a, const SymMat& b);

// Invertible chain with a rank-(n-1) crossing on every segment line.
struct CrossedChain {
    Chain chain;
    std::vector<std::pair<int, SymMat>> crossings;  // (segment index, point)
};

struct ChainConstructionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Both endpoints must be invertible and distinct. Randomized with bounded
// retries; the result is verified before returning, never returned unverified.
CrossedChain invertible_chain(const SymMat& a, const SymMat& b, uint64_t seed = 0);

}  // namespace geometry
}  // namespace symadj
