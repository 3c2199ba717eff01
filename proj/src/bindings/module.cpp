// Python bindings for the main operations. Exact rationals cross the
// boundary as strings ("p/q" or "p"); matrices move as objects or via the
// shared text formats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "symadj/geometry.hpp"
#include "symadj/io.hpp"
#include "symadj/maps.hpp"
#include "symadj/minkowski.hpp"
#include "symadj/quadform.hpp"
#include "symadj/selftest.hpp"

namespace py = pybind11;
using namespace symadj;

namespace {

Rat rat_from_str(const std::string& s) {
    std::optional<Rat> r = Rat::parse(s);
    if (!r) throw ParseError("malformed rational '" + s + "'");
    return *r;
}

SymMat sym_from_rows(const std::vector<std::vector<std::string>>& rows) {
    const int n = static_cast<int>(rows.size());
    Mat m(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
            throw DimensionMismatch("rows must form a square matrix");
        for (int j = 0; j < n; ++j) m(i, j) = rat_from_str(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return SymMat(std::move(m));
}

Mat mat_from_rows(const std::vector<std::vector<std::string>>& rows) {
    const int r = static_cast<int>(rows.size());
    if (r == 0) throw DimensionMismatch("matrix needs at least one row");
    const int c = static_cast<int>(rows[0].size());
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw DimensionMismatch("ragged rows");
        for (int j = 0; j < c; ++j) m(i, j) = rat_from_str(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return m;
}

Vec vec_from_list(const std::vector<std::string>& entries) {
    if (entries.empty()) throw DimensionMismatch("vector needs at least one entry");
    Vec v(static_cast<int>(entries.size()));
    for (int i = 0; i < v.dim(); ++i) v[i] = rat_from_str(entries[static_cast<size_t>(i)]);
    return v;
}

template <typename T>
T parse_text(const std::string& text, T (*reader)(std::istream&)) {
    std::istringstream in(text);
    return reader(in);
}

py::object profile_to_py(const geometry::LineProfile& p) {
    if (const auto* c = std::get_if<geometry::ConstantProfile>(&p))
        return py::make_tuple("constant", c->k);
    const auto& e = std::get<geometry::ExceptionalProfile>(p);
    return py::make_tuple("exceptional", e.lambda0.str(), e.k_point, e.k_at_k);
}

py::object classify_to_py(const maps::ClassifyResult& res) {
    if (const auto* sv = std::get_if<maps::StandardVerdict>(&res))
        return py::make_tuple("standard", sv->c, sv->r_block);
    if (const auto* dv = std::get_if<maps::DegenerateVerdict>(&res))
        return py::make_tuple("degenerate", dv->b);
    if (const auto* nv = std::get_if<maps::NotAdjacencyPreserving>(&res))
        return py::make_tuple("not-adjacency-preserving", nv->x, nv->y);
    return py::make_tuple("undetermined", std::get<maps::Undetermined>(res).reason);
}

}  // namespace

PYBIND11_MODULE(_symadj, m) {
    m.doc() = "exact adjacency geometry of rational symmetric matrices";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<PreconditionViolation>(m, "PreconditionViolation");
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch");

    py::class_<Vec>(m, "Vec")
        .def(py::init(&vec_from_list))
        .def_static("from_text", [](const std::string& t) { return parse_text(t, io::read_vec); })
        .def("dim", &Vec::dim)
        .def("__getitem__", [](const Vec& v, int i) {
            if (i < 0 || i >= v.dim()) throw py::index_error();
            return v[i].str();
        })
        .def("to_text", [](const Vec& v) { return io::format(v); })
        .def("__eq__", [](const Vec& a, const Vec& b) { return a == b; })
        .def("__repr__", [](const Vec& v) { return io::format(v, io::Style::compact); });

    py::class_<Mat>(m, "Mat")
        .def(py::init(&mat_from_rows))
        .def_static("identity", &Mat::identity)
        .def_static("from_text", [](const std::string& t) { return parse_text(t, io::read_mat); })
        .def("rows", &Mat::rows)
        .def("cols", &Mat::cols)
        .def("entry", [](const Mat& m_, int i, int j) { return m_(i, j).str(); })
        .def("transpose", &Mat::transpose)
        .def("to_text", [](const Mat& m_) { return io::format(m_); })
        .def("__eq__", [](const Mat& a, const Mat& b) { return a == b; })
        .def("__mul__", [](const Mat& a, const Mat& b) { return a * b; })
        .def("__repr__", [](const Mat& m_) { return io::format(m_, io::Style::compact); });

    py::class_<SymMat>(m, "SymMat")
        .def(py::init(&sym_from_rows))
        .def_static("identity", &SymMat::identity)
        .def_static("zero", &SymMat::zero)
        .def_static("unit", &SymMat::unit)
        .def_static("from_text", [](const std::string& t) { return parse_text(t, io::read_sym); })
        .def("dim", &SymMat::dim)
        .def("entry", [](const SymMat& m_, int i, int j) { return m_(i, j).str(); })
        .def("to_text", [](const SymMat& m_) { return io::format(m_); })
        .def("__add__", [](const SymMat& a, const SymMat& b) { return a + b; })
        .def("__sub__", [](const SymMat& a, const SymMat& b) { return a - b; })
        .def("__eq__", [](const SymMat& a, const SymMat& b) { return a == b; })
        .def("__repr__", [](const SymMat& m_) { return io::format(m_, io::Style::compact); });

    m.def("rank", py::overload_cast<const Mat&>(&rank));
    m.def("rank", py::overload_cast<const SymMat&>(&rank));
    m.def("dist", &dist);
    m.def("is_adjacent", &is_adjacent);
    m.def("congruence", &congruence);
    m.def("det", py::overload_cast<const Mat&>(&det));
    m.def("trace", [](const SymMat& a) { return trace(a).str(); });
    m.def("embed_h", &embed_h);
    m.def("extract_block", &extract_block);
    m.def("sym_outer", [](const std::string& coeff, const Vec& v) {
        return sym_outer(RankOneTerm(rat_from_str(coeff), v));
    });
    m.def("image_basis", [](const SymMat& a) { return image_basis(a); });
    m.def("direct_sum_check", &direct_sum_check);
    m.def("solve", [](const SymMat& a, const Vec& v) { return solve(a, v); });

    m.def("diagonalize", [](const SymMat& a) {
        quadform::CongruenceDiag cd = quadform::diagonalize(a);
        std::vector<std::string> d;
        for (const Rat& r : cd.d) d.push_back(r.str());
        return py::make_tuple(cd.s, d);
    });
    m.def("inertia", [](const SymMat& a) {
        quadform::Inertia in = quadform::inertia(a);
        return py::make_tuple(in.pos, in.neg, in.zero);
    });
    m.def("rank_one_decompose", [](const SymMat& a) {
        std::vector<py::tuple> out;
        for (const RankOneTerm& t : quadform::rank_one_decompose(a).terms)
            out.push_back(py::make_tuple(t.coeff.str(), t.vector));
        return out;
    });
    m.def("is_projection", &quadform::is_projection);
    m.def("sign_of_rank_one", &quadform::sign_of_rank_one);
    m.def("compress_q", py::overload_cast<const SymMat&, int>(&quadform::compress_q));

    m.def("adjacency_chain", [](const SymMat& a, const SymMat& b) {
        return geometry::adjacency_chain(a, b).points;
    });
    m.def("invertible_chain", [](const SymMat& a, const SymMat& b, uint64_t seed) {
        geometry::CrossedChain cc = geometry::invertible_chain(a, b, seed);
        return py::make_tuple(cc.chain.points, cc.crossings);
    }, py::arg("a"), py::arg("b"), py::arg("seed") = 0);
    m.def("line_distance_profile", [](const SymMat& g, const SymMat& a, const SymMat& b) {
        return profile_to_py(geometry::line_distance_profile(g, geometry::line(a, b)));
    });

    m.def("q_form", [](const Vec& x) { return minkowski::q_form(x).str(); });
    m.def("t_map", &minkowski::t_map);
    m.def("t_inv", &minkowski::t_inv);
    m.def("is_lorentz", &minkowski::is_lorentz);
    m.def("is_restricted_lorentz", [](const Mat& l) {
        return minkowski::is_restricted_lorentz(minkowski::LorentzMat(l));
    });
    m.def("lorentz_to_congruence", [](const Mat& l) {
        auto [c, p] = minkowski::lorentz_to_congruence(minkowski::LorentzMat(l));
        return py::make_tuple(c, p);
    });
    m.def("congruence_to_weyl", [](int c, const Mat& p, const SymMat& s) {
        minkowski::WeylMap w = minkowski::congruence_to_weyl(minkowski::AffineCongruence(c, p, s));
        return py::make_tuple(w.alpha.str(), w.l.mat(), w.b);
    });
    m.def("null_separation_adjacency_check", [](const Vec& x, const Vec& y) {
        minkowski::SeparationCheck sc = minkowski::null_separation_adjacency_check(x, y);
        return py::make_tuple(sc.null_separated, sc.adjacent, sc.consistent);
    });

    m.def("gen_standard_spec", [](int n, int m_out, uint64_t seed) {
        return io::format(maps::MapSpec(maps::gen_random_standard(n, m_out, seed)));
    });
    m.def("gen_degenerate_spec", [](int n, int m_out, uint64_t seed) {
        return io::format(maps::MapSpec(maps::gen_random_degenerate(n, m_out, seed)));
    });
    m.def("map_apply", [](const std::string& spec_text, const SymMat& a) {
        std::istringstream in(spec_text);
        maps::MapOracle o = io::read_oracle(in);
        std::optional<SymMat> v = o.eval(a);
        if (!v) throw PreconditionViolation("oracle does not cover the input");
        return *v;
    });
    m.def("map_classify", [](const std::string& spec_text) {
        std::istringstream in(spec_text);
        return classify_to_py(maps::classify(io::read_oracle(in)));
    });
    m.def("classify_table", [](const std::vector<std::pair<SymMat, SymMat>>& table, int n, int m_out) {
        return classify_to_py(maps::classify(maps::MapOracle(n, m_out, table)));
    });
    m.def("canonical_probes", [](int n) { return maps::canonical_probes(n, maps::kDefaultProbeSeed); });
    m.def("recover_s2_affine", [](const std::vector<std::pair<SymMat, SymMat>>& table) {
        minkowski::AffineCongruence g = maps::recover_s2_affine(maps::MapOracle(2, 2, table));
        return py::make_tuple(g.c, g.p, g.s);
    });

    m.def("suite_names", [] {
        std::vector<std::string> names;
        for (const auto& entry : selftest::all_suites()) names.emplace_back(entry.name);
        return names;
    });
    m.def("run_suite", [](const std::string& name, uint64_t seed, int trials) {
        selftest::Report rep = selftest::run_suite(name, seed, trials);
        return py::make_tuple(rep.ok(), rep.failures);
    }, py::arg("name"), py::arg("seed") = 7, py::arg("trials") = 50);
}
