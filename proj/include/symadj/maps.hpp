#pragma once

#include <functional>
#include <map>
#include <variant>

#include "symadj/minkowski.hpp"
#include "symadj/quadform.hpp"
#include "symadj/rng.hpp"

namespace symadj {
namespace maps {

// Scalar functional attached to a degenerate map. Table lookups are
// exact-match only.
struct TraceFn {
    friend bool operator==(const TraceFn&, const TraceFn&) = default;
};
struct ScaledTraceFn {
    Rat k;  // nonzero
    friend bool operator==(const ScaledTraceFn&, const ScaledTraceFn&) = default;
};
struct TableFn {
    std::vector<std::pair<SymMat, Rat>> entries;
    friend bool operator==(const TableFn&, const TableFn&) = default;
};
using FunctionalSpec = std::variant<TraceFn, ScaledTraceFn, TableFn>;

struct MissingTableEntry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat eval_functional(const FunctionalSpec& f, const SymMat& a);

// A -> c * R A R^T + translation with R the m x n block of rank n; the
// block is the canonical datum, completion to an invertible m x m matrix
// is not unique and not stored.
struct StandardMapSpec {
    int c;  // +1 or -1
    Mat r_block;
    SymMat translation;

    StandardMapSpec(int sign, Mat block);
    StandardMapSpec(int sign, Mat block, SymMat shift);

    int n() const { return r_block.cols(); }
    int m() const { return r_block.rows(); }

private:
    void validate() const;
};

// A -> f(A) * B with B rank one, normalized so its first nonzero entry is 1
// (the scale is folded into f).
struct DegenerateMapSpec {
    SymMat b;
    FunctionalSpec f;
    int input_dim;

    DegenerateMapSpec(SymMat b_raw, FunctionalSpec fn, int n);

    int n() const { return input_dim; }
    int m() const { return b.dim(); }
};

using MapSpec = std::variant<StandardMapSpec, DegenerateMapSpec>;

int spec_input_dim(const MapSpec& s);
int spec_output_dim(const MapSpec& s);

SymMat apply(const MapSpec& spec, const SymMat& a);

StandardMapSpec gen_random_standard(int n, int m, uint64_t seed);
DegenerateMapSpec gen_random_degenerate(int n, int m, uint64_t seed);

// Appends standard basis columns to a full-column-rank block until it is
// square and invertible; the first n columns are the block itself, so
// R [A 0; 0 0] R^T equals block A block^T.
Mat complete_to_invertible(const Mat& block);

// The map under test, queryable on finitely many points: either backed by a
// MapSpec (total) or by a finite tabulation (partial).
class MapOracle {
public:
    MapOracle(int n, int m, MapSpec spec);
    MapOracle(int n, int m, std::vector<std::pair<SymMat, SymMat>> table);

    static MapOracle tabulate(int n, int m, const std::function<SymMat(const SymMat&)>& fn,
                              const std::vector<SymMat>& points);

    int n() const { return n_; }
    int m() const { return m_; }
    std::optional<SymMat> eval(const SymMat& a) const;
    bool is_tabulated() const { return std::holds_alternative<Table>(eval_); }
    const std::vector<std::pair<SymMat, SymMat>>* table() const;
    const MapSpec* spec() const { return std::get_if<MapSpec>(&eval_); }

private:
    struct Table {
        std::vector<std::pair<SymMat, SymMat>> rows;
    };
    int n_, m_;
    std::variant<MapSpec, Table> eval_;
};

// 0, E_ii, E_ij + E_ji, 2*E_11, I, and ten seeded random rank-one matrices.
std::vector<SymMat> canonical_probes(int n, uint64_t seed);

inline constexpr uint64_t kDefaultProbeSeed = 0x5ca1ab1eULL;

struct CheckReport {
    int pairs_checked = 0;
    int violations = 0;
    std::optional<std::pair<SymMat, SymMat>> witness;  // first violating pair

    bool ok() const { return violations == 0; }
};

// Every adjacent input pair must map to an adjacent output pair. Pairs the
// oracle cannot evaluate are skipped; violations are data, not errors.
CheckReport check_adjacency_preserving(const MapOracle& o,
                                       const std::vector<std::pair<SymMat, SymMat>>& pairs);

// d(images) <= d(inputs) on every evaluable pair.
CheckReport check_nonexpansive(const MapOracle& o,
                               const std::vector<std::pair<SymMat, SymMat>>& pairs);

struct StandardVerdict {
    int c;
    Mat r_block;
};
struct DegenerateVerdict {
    SymMat b;                                      // normalized rank-one
    std::vector<std::pair<SymMat, Rat>> samples;   // observed functional values
};
struct NotAdjacencyPreserving {
    SymMat x, y;          // adjacent inputs
    SymMat image_x, image_y;
};
struct Undetermined {
    std::string reason;
};
using ClassifyResult = std::variant<StandardVerdict, DegenerateVerdict, NotAdjacencyPreserving, Undetermined>;

struct NonRationalColumn : std::runtime_error {
    Rat obstruction;
    explicit NonRationalColumn(Rat value)
        : std::runtime_error("recover_standard: diagonal entry is not a rational square: " + value.str()),
          obstruction(std::move(value)) {}
};
struct CrossTermMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoRank2Witness : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Realizes the dichotomy on the canonical probe set. Verdicts are verified
// against the oracle on every probe before they are returned; when neither
// form fits, the probes are searched for an adjacency violation.
ClassifyResult classify(const MapOracle& o, uint64_t probe_seed = kDefaultProbeSeed);

// (c, R block) of a standard map from the zero-normalized oracle. Columns
// come from exact square roots of the basis images, relative signs from the
// cross terms, global sign normalized (first nonzero entry of column one
// positive).
std::pair<int, Mat> recover_standard(const MapOracle& o);

// Prop-style affine recovery on 2x2 symmetric inputs: S = image of 0, then
// standard recovery of the translate. Requires a probe pair at image
// distance two.
minkowski::AffineCongruence recover_s2_affine(const MapOracle& o,
                                              uint64_t probe_seed = kDefaultProbeSeed);

}  // namespace maps
}  // namespace symadj
