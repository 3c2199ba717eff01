#include "symadj/io.hpp"

#include <istream>
#include <sstream>

namespace symadj {
namespace io {

namespace {

std::string next_token(std::istream& in) {
    std::string tok;
    if (!(in >> tok)) throw ParseError("unexpected end of input");
    return tok;
}

long next_long(std::istream& in, const char* what) {
    std::string tok = next_token(in);
    try {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected ") + what + ", got '" + tok + "'");
    }
}

Rat next_rat(std::istream& in) {
    std::string tok = next_token(in);
    std::optional<Rat> r = Rat::parse(tok);
    if (!r) throw ParseError("malformed rational '" + tok + "'");
    return *r;
}

void expect_keyword(std::istream& in, const std::string& kw) {
    std::string tok = next_token(in);
    if (tok != kw) throw ParseError("expected '" + kw + "', got '" + tok + "'");
}

std::string grid(const Mat& m, Style s) {
    std::vector<std::string> cells(static_cast<size_t>(m.rows()) * m.cols());
    std::vector<size_t> width(static_cast<size_t>(m.cols()), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            std::string c = format(m(i, j));
            width[static_cast<size_t>(j)] = std::max(width[static_cast<size_t>(j)], c.size());
            cells[static_cast<size_t>(i) * m.cols() + j] = std::move(c);
        }
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            const std::string& c = cells[static_cast<size_t>(i) * m.cols() + j];
            if (j > 0) out += ' ';
            if (s == Style::pretty)
                out.append(width[static_cast<size_t>(j)] - c.size(), ' ');
            out += c;
        }
        out += '\n';
    }
    return out;
}

}  // namespace

std::string format(const Rat& r) { return r.str(); }

std::string format(const Vec& v, Style) {
    std::string out = "vec " + std::to_string(v.dim()) + "\n";
    for (int i = 0; i < v.dim(); ++i) {
        if (i > 0) out += ' ';
        out += format(v[i]);
    }
    out += '\n';
    return out;
}

std::string format(const Mat& m, Style s) {
    return "mat " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n" + grid(m, s);
}

std::string format(const SymMat& m, Style s) {
    return "sym " + std::to_string(m.dim()) + "\n" + grid(m.mat(), s);
}

std::string format(const geometry::Chain& c, Style s) {
    std::string out = "chain " + std::to_string(c.points.size()) + "\n";
    for (const SymMat& p : c.points) {
        out += '\n';
        out += format(p, s);
    }
    return out;
}

std::string format(const geometry::CrossedChain& c, Style s) {
    std::string out = format(c.chain, s);
    out += "\ncrossings " + std::to_string(c.crossings.size()) + "\n";
    for (const auto& [idx, m] : c.crossings) {
        out += "\nsegment " + std::to_string(idx) + "\n";
        out += format(m, s);
    }
    return out;
}

std::string format(const minkowski::LorentzMat& l, Style s) {
    return "lorentz\n" + format(l.mat(), s);
}

std::string format(const minkowski::WeylMap& w, Style s) {
    return "weyl " + format(w.alpha) + "\n" + format(w.l, s) + format(w.b, s);
}

std::string format(const maps::MapSpec& spec, Style s) {
    if (const auto* st = std::get_if<maps::StandardMapSpec>(&spec)) {
        std::string out = "standard c=";
        out += st->c > 0 ? "+1" : "-1";
        out += " n=" + std::to_string(st->n()) + " m=" + std::to_string(st->m()) + "\n";
        out += format(st->r_block, s);
        if (!st->translation.is_zero()) {
            out += "translation\n";
            out += format(st->translation, s);
        }
        return out;
    }
    const auto& dg = std::get<maps::DegenerateMapSpec>(spec);
    std::string out = "degenerate n=" + std::to_string(dg.n()) + " m=" + std::to_string(dg.m()) + " f=";
    if (std::holds_alternative<maps::TraceFn>(dg.f)) {
        out += "trace\n" + format(dg.b, s);
    } else if (const auto* sc = std::get_if<maps::ScaledTraceFn>(&dg.f)) {
        out += "scaled:" + format(sc->k) + "\n" + format(dg.b, s);
    } else {
        const auto& table = std::get<maps::TableFn>(dg.f);
        out += "table\n" + format(dg.b, s);
        out += "table " + std::to_string(table.entries.size()) + "\n";
        for (const auto& [key, value] : table.entries) {
            out += '\n';
            out += format(key, s);
            out += format(value) + "\n";
        }
    }
    return out;
}

std::string format_oracle(const maps::MapOracle& o, Style s) {
    if (const auto* rows = o.table()) {
        std::string out = "tabulated n=" + std::to_string(o.n()) + " m=" + std::to_string(o.m()) +
                          " " + std::to_string(rows->size()) + "\n";
        for (const auto& [in_m, out_m] : *rows) {
            out += '\n';
            out += format(in_m, s);
            out += format(out_m, s);
        }
        return out;
    }
    throw std::logic_error("format_oracle: spec-backed oracles serialize via format(MapSpec)");
}

Rat read_rat(std::istream& in) { return next_rat(in); }

Vec read_vec(std::istream& in) {
    expect_keyword(in, "vec");
    long n = next_long(in, "vector dim");
    if (n <= 0) throw ParseError("vector dim must be positive");
    Vec v(static_cast<int>(n));
    for (long i = 0; i < n; ++i) v[static_cast<int>(i)] = next_rat(in);
    return v;
}

namespace {

Mat read_mat_body(std::istream& in, long rows, long cols) {
    if (rows <= 0 || cols <= 0) throw ParseError("matrix dims must be positive");
    Mat m(static_cast<int>(rows), static_cast<int>(cols));
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) m(static_cast<int>(i), static_cast<int>(j)) = next_rat(in);
    return m;
}

}  // namespace

Mat read_mat(std::istream& in) {
    expect_keyword(in, "mat");
    long rows = next_long(in, "row count");
    long cols = next_long(in, "column count");
    return read_mat_body(in, rows, cols);
}

SymMat read_sym(std::istream& in) {
    expect_keyword(in, "sym");
    long n = next_long(in, "dim");
    Mat m = read_mat_body(in, n, n);
    if (!m.is_symmetric()) throw ParseError("sym block is not symmetric");
    return SymMat(std::move(m));
}

Mat read_any_matrix(std::istream& in) {
    std::string kind = next_token(in);
    if (kind == "mat") {
        long rows = next_long(in, "row count");
        long cols = next_long(in, "column count");
        return read_mat_body(in, rows, cols);
    }
    if (kind == "sym") {
        long n = next_long(in, "dim");
        Mat m = read_mat_body(in, n, n);
        if (!m.is_symmetric()) throw ParseError("sym block is not symmetric");
        return m;
    }
    throw ParseError("expected 'mat' or 'sym', got '" + kind + "'");
}

geometry::Chain read_chain(std::istream& in) {
    expect_keyword(in, "chain");
    long count = next_long(in, "chain length");
    if (count <= 0) throw ParseError("chain length must be positive");
    geometry::Chain c;
    for (long i = 0; i < count; ++i) c.points.push_back(read_sym(in));
    return c;
}

minkowski::LorentzMat read_lorentz(std::istream& in) {
    expect_keyword(in, "lorentz");
    Mat m = read_mat(in);
    try {
        return minkowski::LorentzMat(std::move(m));
    } catch (const PreconditionViolation& e) {
        throw ParseError(e.what());
    }
}

minkowski::WeylMap read_weyl(std::istream& in) {
    expect_keyword(in, "weyl");
    Rat alpha = next_rat(in);
    minkowski::LorentzMat l = read_lorentz(in);
    Vec b = read_vec(in);
    try {
        return minkowski::WeylMap(std::move(alpha), std::move(l), std::move(b));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

namespace {

// key=value tokens on the header lines.
long field_long(const std::string& tok, const std::string& key) {
    if (tok.rfind(key + "=", 0) != 0)
        throw ParseError("expected '" + key + "=<value>', got '" + tok + "'");
    std::string v = tok.substr(key.size() + 1);
    try {
        size_t used = 0;
        long out = std::stol(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw ParseError("malformed value in '" + tok + "'");
    }
}

}  // namespace

maps::MapOracle read_oracle(std::istream& in) {
    std::string kind = next_token(in);
    try {
        if (kind == "standard") {
            long c = field_long(next_token(in), "c");
            long n = field_long(next_token(in), "n");
            long m = field_long(next_token(in), "m");
            Mat block = read_mat(in);
            if (block.rows() != m || block.cols() != n)
                throw ParseError("standard block dims disagree with header");
            SymMat shift(static_cast<int>(m));
            // Optional trailing "translation" section.
            std::string peek;
            if (in >> peek) {
                if (peek != "translation") throw ParseError("unexpected trailing token '" + peek + "'");
                shift = read_sym(in);
            }
            maps::StandardMapSpec st(static_cast<int>(c), std::move(block), std::move(shift));
            return maps::MapOracle(static_cast<int>(n), static_cast<int>(m), maps::MapSpec(std::move(st)));
        }
        if (kind == "degenerate") {
            // The input dim header is optional; it defaults to m.
            std::string tok = next_token(in);
            long n = -1;
            if (tok.rfind("n=", 0) == 0) {
                n = field_long(tok, "n");
                tok = next_token(in);
            }
            long m = field_long(tok, "m");
            if (n < 0) n = m;
            std::string ftok = next_token(in);
            if (ftok.rfind("f=", 0) != 0) throw ParseError("expected 'f=<functional>'");
            std::string fval = ftok.substr(2);
            SymMat b = read_sym(in);
            maps::FunctionalSpec f = maps::TraceFn{};
            if (fval == "trace") {
                // default
            } else if (fval.rfind("scaled:", 0) == 0) {
                std::optional<Rat> k = Rat::parse(fval.substr(7));
                if (!k || k->is_zero()) throw ParseError("malformed scale in '" + ftok + "'");
                f = maps::ScaledTraceFn{*k};
            } else if (fval == "table") {
                expect_keyword(in, "table");
                long count = next_long(in, "table size");
                maps::TableFn table;
                for (long i = 0; i < count; ++i) {
                    SymMat key = read_sym(in);
                    Rat value = next_rat(in);
                    table.entries.emplace_back(std::move(key), std::move(value));
                }
                f = std::move(table);
            } else {
                throw ParseError("unknown functional '" + fval + "'");
            }
            maps::DegenerateMapSpec dg(std::move(b), std::move(f), static_cast<int>(n));
            return maps::MapOracle(static_cast<int>(n), static_cast<int>(m), maps::MapSpec(std::move(dg)));
        }
        if (kind == "tabulated") {
            long n = field_long(next_token(in), "n");
            long m = field_long(next_token(in), "m");
            long count = next_long(in, "pair count");
            std::vector<std::pair<SymMat, SymMat>> rows;
            for (long i = 0; i < count; ++i) {
                SymMat key = read_sym(in);
                SymMat value = read_sym(in);
                rows.emplace_back(std::move(key), std::move(value));
            }
            return maps::MapOracle(static_cast<int>(n), static_cast<int>(m), std::move(rows));
        }
    } catch (const PreconditionViolation& e) {
        throw ParseError(e.what());
    } catch (const DimensionMismatch& e) {
        throw ParseError(e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("expected 'standard', 'degenerate' or 'tabulated', got '" + kind + "'");
}

}  // namespace io
}  // namespace symadj
