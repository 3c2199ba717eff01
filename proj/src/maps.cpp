#include "symadj/maps.hpp"

#include <algorithm>

namespace symadj {
namespace maps {

Rat eval_functional(const FunctionalSpec& f, const SymMat& a) {
    if (std::holds_alternative<TraceFn>(f)) return trace(a);
    if (const auto* s = std::get_if<ScaledTraceFn>(&f)) return s->k * trace(a);
    const auto& table = std::get<TableFn>(f);
    for (const auto& [key, value] : table.entries)
        if (key == a) return value;
    throw MissingTableEntry("eval_functional: input not tabulated");
}

StandardMapSpec::StandardMapSpec(int sign, Mat block)
    : c(sign), r_block(std::move(block)), translation(r_block.rows()) {
    validate();
}

StandardMapSpec::StandardMapSpec(int sign, Mat block, SymMat shift)
    : c(sign), r_block(std::move(block)), translation(std::move(shift)) {
    validate();
}

void StandardMapSpec::validate() const {
    if (c != 1 && c != -1) throw std::invalid_argument("StandardMapSpec: c must be +1 or -1");
    if (rank(r_block) != r_block.cols())
        throw PreconditionViolation("StandardMapSpec: block must have full column rank");
    if (translation.dim() != m())
        throw DimensionMismatch("StandardMapSpec: translation dim must be m");
}

namespace {

// Scale a rank-one matrix to first-nonzero-entry 1; returns the factor t
// with input = t * normalized.
std::pair<Rat, SymMat> normalize_rank_one(const SymMat& b) {
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) {
            if (b(i, j).is_zero()) continue;
            Rat t = b(i, j);
            return {t, t.inverse() * b};
        }
    throw PreconditionViolation("normalize_rank_one: zero matrix");
}

FunctionalSpec scale_functional(const FunctionalSpec& f, const Rat& t) {
    if (std::holds_alternative<TraceFn>(f)) return ScaledTraceFn{t};
    if (const auto* s = std::get_if<ScaledTraceFn>(&f)) return ScaledTraceFn{s->k * t};
    TableFn scaled = std::get<TableFn>(f);
    for (auto& [key, value] : scaled.entries) value *= t;
    return scaled;
}

}  // namespace

DegenerateMapSpec::DegenerateMapSpec(SymMat b_raw, FunctionalSpec fn, int n)
    : b(b_raw), f(std::move(fn)), input_dim(n) {
    if (n < 1) throw std::invalid_argument("DegenerateMapSpec: bad input dim");
    if (rank(b_raw) != 1) throw PreconditionViolation("DegenerateMapSpec: B must have rank one");
    auto [t, normalized] = normalize_rank_one(b_raw);
    if (t != Rat(1)) {
        b = normalized;
        f = scale_functional(f, t);
    }
    // Sampled soundness check: adjacent inputs must get distinct functional
    // values. Trace-backed functionals satisfy this identically; tables are
    // probed pairwise.
    if (const auto* table = std::get_if<TableFn>(&f)) {
        for (size_t i = 0; i < table->entries.size(); ++i)
            for (size_t j = i + 1; j < table->entries.size(); ++j) {
                const auto& [xi, vi] = table->entries[i];
                const auto& [xj, vj] = table->entries[j];
                if (xi.dim() == xj.dim() && is_adjacent(xi, xj) && vi == vj)
                    throw PreconditionViolation(
                        "DegenerateMapSpec: table collapses an adjacent pair");
            }
    } else {
        Rng rng(0xad1ace57ULL);
        for (int trial = 0; trial < 8; ++trial) {
            SymMat x(input_dim);
            for (int i = 0; i < input_dim; ++i)
                for (int j = i; j < input_dim; ++j) x.set(i, j, rng.rat());
            SymMat y = x + sym_outer(rng.rank_one_term(input_dim));
            if (eval_functional(f, x) == eval_functional(f, y))
                throw PreconditionViolation("DegenerateMapSpec: functional collapses an adjacent pair");
        }
    }
}

int spec_input_dim(const MapSpec& s) {
    return std::visit([](const auto& v) { return v.n(); }, s);
}

int spec_output_dim(const MapSpec& s) {
    return std::visit([](const auto& v) { return v.m(); }, s);
}

SymMat apply(const MapSpec& spec, const SymMat& a) {
    if (a.dim() != spec_input_dim(spec)) throw DimensionMismatch("apply: input dim mismatch");
    if (const auto* st = std::get_if<StandardMapSpec>(&spec)) {
        Mat res = st->r_block * a.mat() * st->r_block.transpose();
        return Rat(st->c) * SymMat(res) + st->translation;
    }
    const auto& dg = std::get<DegenerateMapSpec>(spec);
    return eval_functional(dg.f, a) * dg.b;
}

StandardMapSpec gen_random_standard(int n, int m, uint64_t seed) {
    if (m < n) throw PreconditionViolation("gen_random_standard: m must be at least n");
    Rng rng(seed);
    Mat block = rng.full_col_rank(m, n);
    int c = rng.chance(1, 2) ? 1 : -1;
    return StandardMapSpec(c, std::move(block));
}

DegenerateMapSpec gen_random_degenerate(int n, int m, uint64_t seed) {
    Rng rng(seed);
    SymMat b = sym_outer(rng.rank_one_term(m));
    FunctionalSpec f = rng.chance(1, 2) ? FunctionalSpec(TraceFn{})
                                        : FunctionalSpec(ScaledTraceFn{rng.nonzero_rat()});
    return DegenerateMapSpec(std::move(b), std::move(f), n);
}

Mat complete_to_invertible(const Mat& block) {
    const int m = block.rows(), n = block.cols();
    if (rank(block) != n)
        throw PreconditionViolation("complete_to_invertible: block must have full column rank");
    Mat full(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) full(i, j) = block(i, j);
    int placed = n;
    for (int e = 0; e < m && placed < m; ++e) {
        full(e, placed) = Rat(1);
        Mat prefix(m, placed + 1);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j <= placed; ++j) prefix(i, j) = full(i, j);
        if (rank(prefix) == placed + 1)
            ++placed;
        else
            full(e, placed) = Rat(0);
    }
    if (placed != m) throw std::logic_error("complete_to_invertible: completion failed");
    return full;
}

MapOracle::MapOracle(int n, int m, MapSpec spec) : n_(n), m_(m), eval_(std::move(spec)) {
    const MapSpec& s = std::get<MapSpec>(eval_);
    if (spec_input_dim(s) != n || spec_output_dim(s) != m)
        throw DimensionMismatch("MapOracle: spec dims disagree with declared dims");
}

MapOracle::MapOracle(int n, int m, std::vector<std::pair<SymMat, SymMat>> table)
    : n_(n), m_(m), eval_(Table{std::move(table)}) {
    const auto& rows = std::get<Table>(eval_).rows;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].first.dim() != n || rows[i].second.dim() != m)
            throw DimensionMismatch("MapOracle: tabulated entry has wrong dims");
        for (size_t j = i + 1; j < rows.size(); ++j)
            if (rows[i].first == rows[j].first)
                throw PreconditionViolation("MapOracle: duplicate tabulation input");
    }
}

MapOracle MapOracle::tabulate(int n, int m, const std::function<SymMat(const SymMat&)>& fn,
                              const std::vector<SymMat>& points) {
    std::vector<std::pair<SymMat, SymMat>> rows;
    rows.reserve(points.size());
    for (const SymMat& p : points) {
        bool seen = false;
        for (const auto& [key, unused] : rows)
            if (key == p) { seen = true; break; }
        if (!seen) rows.emplace_back(p, fn(p));
    }
    return MapOracle(n, m, std::move(rows));
}

std::optional<SymMat> MapOracle::eval(const SymMat& a) const {
    if (const auto* spec = std::get_if<MapSpec>(&eval_)) {
        try {
            return apply(*spec, a);
        } catch (const MissingTableEntry&) {
            return std::nullopt;
        }
    }
    for (const auto& [key, value] : std::get<Table>(eval_).rows)
        if (key == a) return value;
    return std::nullopt;
}

const std::vector<std::pair<SymMat, SymMat>>* MapOracle::table() const {
    if (const auto* t = std::get_if<Table>(&eval_)) return &t->rows;
    return nullptr;
}

std::vector<SymMat> canonical_probes(int n, uint64_t seed) {
    std::vector<SymMat> probes;
    probes.push_back(SymMat::zero(n));
    for (int i = 0; i < n; ++i) probes.push_back(SymMat::unit(n, i, i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) probes.push_back(SymMat::unit(n, i, j));
    probes.push_back(Rat(2) * SymMat::unit(n, 0, 0));
    probes.push_back(SymMat::identity(n));
    Rng rng(seed);
    const size_t target = probes.size() + 10;
    while (probes.size() < target) {
        SymMat candidate = sym_outer(rng.rank_one_term(n));
        if (std::find(probes.begin(), probes.end(), candidate) == probes.end())
            probes.push_back(candidate);
    }
    return probes;
}

CheckReport check_adjacency_preserving(const MapOracle& o,
                                       const std::vector<std::pair<SymMat, SymMat>>& pairs) {
    CheckReport rep;
    for (const auto& [x, y] : pairs) {
        if (!is_adjacent(x, y)) continue;
        std::optional<SymMat> fx = o.eval(x), fy = o.eval(y);
        if (!fx || !fy) continue;
        ++rep.pairs_checked;
        if (dist(*fx, *fy) != 1) {
            ++rep.violations;
            if (!rep.witness) rep.witness = std::make_pair(x, y);
        }
    }
    return rep;
}

CheckReport check_nonexpansive(const MapOracle& o,
                               const std::vector<std::pair<SymMat, SymMat>>& pairs) {
    CheckReport rep;
    for (const auto& [x, y] : pairs) {
        std::optional<SymMat> fx = o.eval(x), fy = o.eval(y);
        if (!fx || !fy) continue;
        ++rep.pairs_checked;
        if (dist(*fx, *fy) > dist(x, y)) {
            ++rep.violations;
            if (!rep.witness) rep.witness = std::make_pair(x, y);
        }
    }
    return rep;
}

namespace {

// Oracle translated so zero maps to zero.
class NormalizedOracle {
public:
    NormalizedOracle(const MapOracle& o, SymMat at_zero)
        : oracle_(o), at_zero_(std::move(at_zero)) {}

    std::optional<SymMat> eval(const SymMat& a) const {
        std::optional<SymMat> v = oracle_.eval(a);
        if (!v) return std::nullopt;
        return *v - at_zero_;
    }

private:
    const MapOracle& oracle_;
    SymMat at_zero_;
};

std::pair<int, Mat> recover_standard_from(
    const std::function<std::optional<SymMat>(const SymMat&)>& psi, int n, int m);

}  // namespace

std::pair<int, Mat> recover_standard(const MapOracle& o) {
    return recover_standard_from([&o](const SymMat& a) { return o.eval(a); }, o.n(), o.m());
}

namespace {

std::pair<int, Mat> recover_standard_from(
    const std::function<std::optional<SymMat>(const SymMat&)>& psi, int n, int m) {
    // Basis images Psi(E_ii) = c * r_i r_i^T.
    std::vector<SymMat> diag_images;
    for (int i = 0; i < n; ++i) {
        std::optional<SymMat> v = psi(SymMat::unit(n, i, i));
        if (!v) throw PreconditionViolation("recover_standard: probe not answerable");
        if (rank(*v) != 1)
            throw PreconditionViolation("recover_standard: basis image is not rank one");
        diag_images.push_back(*v);
    }
    int c = quadform::sign_of_rank_one(diag_images[0]);
    std::vector<Vec> cols;
    for (int i = 0; i < n; ++i) {
        SymMat scaled = Rat(c) * diag_images[static_cast<size_t>(i)];
        if (quadform::sign_of_rank_one(scaled) != 1)
            throw CrossTermMismatch("recover_standard: basis images have mixed signs");
        // scaled = r r^T: read r off a nonzero diagonal entry's square root.
        int j = -1;
        for (int d = 0; d < m && j < 0; ++d)
            if (!scaled(d, d).is_zero()) j = d;
        if (j < 0) throw CrossTermMismatch("recover_standard: basis image has zero diagonal");
        std::optional<Rat> root = scaled(j, j).sqrt_exact();
        if (!root) throw NonRationalColumn(scaled(j, j));
        Vec r(m);
        Rat inv = root->inverse();
        for (int d = 0; d < m; ++d) r[d] = scaled(d, j) * inv;
        if (!(sym_outer(RankOneTerm(Rat(1), r), m) == scaled))
            throw CrossTermMismatch("recover_standard: basis image is not an outer square");
        cols.push_back(std::move(r));
    }
    // Relative signs from the cross terms against column one.
    auto cross_val = [&](const Vec& a, const Vec& b) {
        SymMat s(m);
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) s.set(i, j, Rat(c) * (a[i] * b[j] + a[j] * b[i]));
        return s;
    };
    for (int j = 1; j < n; ++j) {
        std::optional<SymMat> v = psi(SymMat::unit(n, 0, j));
        if (!v) throw PreconditionViolation("recover_standard: probe not answerable");
        if (cross_val(cols[0], cols[static_cast<size_t>(j)]) == *v) continue;
        cols[static_cast<size_t>(j)] = Rat(-1) * cols[static_cast<size_t>(j)];
        if (!(cross_val(cols[0], cols[static_cast<size_t>(j)]) == *v))
            throw CrossTermMismatch("recover_standard: no sign fits the cross term");
    }
    // With signs fixed relative to column one, the remaining cross equations
    // must hold outright.
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::optional<SymMat> v = psi(SymMat::unit(n, i, j));
            if (!v) throw PreconditionViolation("recover_standard: probe not answerable");
            if (!(cross_val(cols[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]) == *v))
                throw CrossTermMismatch("recover_standard: cross equations inconsistent");
        }
    Mat block(m, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) block(i, j) = cols[static_cast<size_t>(j)][i];
    // Global sign: first nonzero entry of column one positive; negating every
    // column leaves the map unchanged.
    for (int i = 0; i < m; ++i) {
        if (block(i, 0).is_zero()) continue;
        if (block(i, 0).sign() < 0) block = Rat(-1) * block;
        break;
    }
    if (rank(block) != n)
        throw CrossTermMismatch("recover_standard: recovered block is rank deficient");
    return {c, block};
}

std::optional<NotAdjacencyPreserving> find_violation(
    const std::function<std::optional<SymMat>(const SymMat&)>& psi,
    const std::vector<SymMat>& probes) {
    for (size_t i = 0; i < probes.size(); ++i)
        for (size_t j = i + 1; j < probes.size(); ++j) {
            if (!is_adjacent(probes[i], probes[j])) continue;
            std::optional<SymMat> a = psi(probes[i]), b = psi(probes[j]);
            if (!a || !b) continue;
            if (dist(*a, *b) != 1)
                return NotAdjacencyPreserving{probes[i], probes[j], *a, *b};
        }
    return std::nullopt;
}

}  // namespace

ClassifyResult classify(const MapOracle& o, uint64_t probe_seed) {
    std::vector<SymMat> probes = canonical_probes(o.n(), probe_seed);
    std::optional<SymMat> at_zero = o.eval(SymMat::zero(o.n()));
    if (!at_zero) return Undetermined{"oracle does not answer the zero probe"};
    NormalizedOracle psi(o, *at_zero);
    auto psi_fn = [&psi](const SymMat& a) { return psi.eval(a); };

    std::vector<std::pair<SymMat, SymMat>> values;
    for (const SymMat& p : probes) {
        std::optional<SymMat> v = psi.eval(p);
        if (!v) return Undetermined{"oracle does not answer a canonical probe"};
        values.emplace_back(p, *v);
    }

    // Degenerate attempt: all probe values in Q*B for one rank-one B.
    const SymMat* b_raw = nullptr;
    for (const auto& [p, v] : values)
        if (!v.is_zero()) { b_raw = &v; break; }
    if (b_raw != nullptr && rank(*b_raw) == 1) {
        auto [t, b] = normalize_rank_one(*b_raw);
        bool all_multiples = true;
        std::vector<std::pair<SymMat, Rat>> samples;
        for (const auto& [p, v] : values) {
            if (v.is_zero()) {
                samples.emplace_back(p, Rat(0));
                continue;
            }
            // v = coeff * b exactly, or this is not a degenerate map.
            auto [coeff, v_norm] = normalize_rank_one(v);
            if (rank(v) != 1 || !(v_norm == b)) {
                all_multiples = false;
                break;
            }
            samples.emplace_back(p, coeff);
        }
        if (all_multiples) {
            // Verified degenerate on the probes unless adjacency already
            // fails among them.
            if (auto violation = find_violation(psi_fn, probes)) return *violation;
            return DegenerateVerdict{b, std::move(samples)};
        }
    }

    // Standard attempt, verified on every probe.
    try {
        auto [c, block] = recover_standard_from(psi_fn, o.n(), o.m());
        bool verified = true;
        StandardMapSpec spec(c, block);
        for (const auto& [p, v] : values)
            if (!(maps::apply(MapSpec(spec), p) == v)) { verified = false; break; }
        if (verified) return StandardVerdict{c, block};
    } catch (const NonRationalColumn&) {
    } catch (const CrossTermMismatch&) {
    } catch (const PreconditionViolation&) {
    }

    if (auto violation = find_violation(psi_fn, probes)) return *violation;
    return Undetermined{"probes fit neither form and expose no adjacency violation"};
}

minkowski::AffineCongruence recover_s2_affine(const MapOracle& o, uint64_t probe_seed) {
    if (o.n() != 2 || o.m() != 2)
        throw PreconditionViolation("recover_s2_affine: oracle must map S_2 to S_2");
    std::vector<SymMat> probes = canonical_probes(2, probe_seed);
    std::optional<SymMat> s = o.eval(SymMat::zero(2));
    if (!s) throw PreconditionViolation("recover_s2_affine: oracle does not answer the zero probe");

    // A witness pair at image distance two rules the degenerate branch out.
    bool witness = false;
    std::vector<SymMat> answered;
    for (const SymMat& p : probes)
        if (o.eval(p)) answered.push_back(p);
    for (size_t i = 0; i < answered.size() && !witness; ++i)
        for (size_t j = i + 1; j < answered.size() && !witness; ++j)
            if (dist(*o.eval(answered[i]), *o.eval(answered[j])) == 2) witness = true;
    if (!witness)
        throw NoRank2Witness("recover_s2_affine: every probe image pair has distance <= 1");

    NormalizedOracle psi(o, *s);
    auto [c, block] = recover_standard_from([&psi](const SymMat& a) { return psi.eval(a); }, 2, 2);
    minkowski::AffineCongruence g(c, block, *s);
    for (const SymMat& p : probes) {
        std::optional<SymMat> v = o.eval(p);
        if (v && !(minkowski::affine_apply(g, p) == *v))
            throw CrossTermMismatch("recover_s2_affine: verification failed on a probe");
    }
    return g;
}

}  // namespace maps
}  // namespace symadj
