// Command-line surface for the adjacency geometry library. Subcommands read
// matrices and map specs in the shared text formats from file arguments ("-"
// reads standard input) and write results in the same formats.
//
// Exit codes: 0 success, 1 property violation or verification failure,
// 2 malformed input, 3 precondition violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "symadj/geometry.hpp"
#include "symadj/io.hpp"
#include "symadj/maps.hpp"
#include "symadj/minkowski.hpp"
#include "symadj/quadform.hpp"
#include "symadj/selftest.hpp"

using namespace symadj;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

io::Style g_style = io::Style::pretty;
bool g_stdin_used = false;

std::istringstream slurp(const std::string& path) {
    if (path == "-") {
        if (g_stdin_used) throw ParseError("standard input can back at most one argument");
        g_stdin_used = true;
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return std::istringstream(buf.str());
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return std::istringstream(buf.str());
}

SymMat load_sym(const std::string& path) {
    auto in = slurp(path);
    return io::read_sym(in);
}

Mat load_any(const std::string& path) {
    auto in = slurp(path);
    return io::read_any_matrix(in);
}

int print_report(const selftest::Report& rep) {
    std::cout << "suite " << rep.suite << " seed " << rep.seed << " trials " << rep.trials << ": "
              << (rep.ok() ? "PASS" : "FAIL");
    if (!rep.ok()) std::cout << " (" << rep.failures.size() << " failures)";
    std::cout << "\n";
    for (const auto& [what, witness] : rep.failures) {
        std::cout << "  case: " << what << "\n";
        std::istringstream lines(witness);
        std::string line;
        while (std::getline(lines, line)) std::cout << "    " << line << "\n";
    }
    std::cerr << "# " << rep.suite << " wall " << rep.wall_seconds << "s\n";
    return rep.ok() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact adjacency geometry of rational symmetric matrices"};
    app.require_subcommand(1);
    std::string style_name = "pretty";
    app.add_option("--format", style_name, "output whitespace style")
        ->check(CLI::IsMember({"compact", "pretty"}));

    std::string file_a, file_b, file_c;
    uint64_t seed = 0;
    int trials = 200;
    int pair_count = 50;
    std::string suite_name;
    std::string gen_kind;
    int gen_n = 2, gen_m = 2;

    auto* cmd_rank = app.add_subcommand("rank", "rank of a matrix");
    cmd_rank->add_option("matrix", file_a)->required();

    auto* cmd_dist = app.add_subcommand("dist", "arithmetic distance of two symmetric matrices");
    cmd_dist->add_option("a", file_a)->required();
    cmd_dist->add_option("b", file_b)->required();

    auto* cmd_adj = app.add_subcommand("adjacent", "whether two symmetric matrices are adjacent");
    cmd_adj->add_option("a", file_a)->required();
    cmd_adj->add_option("b", file_b)->required();

    auto* cmd_chain = app.add_subcommand("chain", "adjacency chain between two symmetric matrices");
    cmd_chain->add_option("a", file_a)->required();
    cmd_chain->add_option("b", file_b)->required();

    auto* cmd_invchain = app.add_subcommand("invchain", "invertible chain with singular crossings");
    cmd_invchain->add_option("a", file_a)->required();
    cmd_invchain->add_option("b", file_b)->required();
    cmd_invchain->add_option("--seed", seed);

    auto* cmd_diag = app.add_subcommand("diag", "congruence diagonalization S A S^T = D");
    cmd_diag->add_option("matrix", file_a)->required();

    auto* cmd_inertia = app.add_subcommand("inertia", "Sylvester inertia");
    cmd_inertia->add_option("matrix", file_a)->required();

    auto* cmd_decomp = app.add_subcommand("decompose", "rank-one decomposition");
    cmd_decomp->add_option("matrix", file_a)->required();

    auto* cmd_profile = app.add_subcommand("line-profile", "distance profile of a line from a point");
    cmd_profile->add_option("g", file_a)->required();
    cmd_profile->add_option("line-a", file_b)->required();
    cmd_profile->add_option("line-b", file_c)->required();

    auto* cmd_mink_t = app.add_subcommand("mink-t", "3-vector to symmetric 2x2");
    cmd_mink_t->add_option("vector", file_a)->required();

    auto* cmd_mink_tinv = app.add_subcommand("mink-tinv", "symmetric 2x2 to 3-vector");
    cmd_mink_tinv->add_option("matrix", file_a)->required();

    auto* cmd_mink_check = app.add_subcommand("mink-check", "null separation vs adjacency for two 3-vectors");
    cmd_mink_check->add_option("x", file_a)->required();
    cmd_mink_check->add_option("y", file_b)->required();

    auto* cmd_lcheck = app.add_subcommand("lorentz-check", "test the Lorentz identity for a 3x3 matrix");
    cmd_lcheck->add_option("matrix", file_a)->required();

    auto* cmd_ltop = app.add_subcommand("lorentz-to-p", "congruence factor of a Lorentz matrix");
    cmd_ltop->add_option("matrix", file_a)->required();

    auto* cmd_ptol = app.add_subcommand("p-to-lorentz", "Weyl data of an affine congruence");
    cmd_ptol->add_option("spec", file_a)->required();

    auto* cmd_mapply = app.add_subcommand("map-apply", "apply a map spec to a symmetric matrix");
    cmd_mapply->add_option("spec", file_a)->required();
    cmd_mapply->add_option("matrix", file_b)->required();

    auto* cmd_mgen = app.add_subcommand("map-gen", "generate a random standard or degenerate map");
    cmd_mgen->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"standard", "degenerate"}));
    cmd_mgen->add_option("n", gen_n)->required();
    cmd_mgen->add_option("m", gen_m)->required();
    cmd_mgen->add_option("--seed", seed);

    auto* cmd_mclassify = app.add_subcommand("map-classify", "classify a map against the dichotomy");
    cmd_mclassify->add_option("spec", file_a)->required();
    cmd_mclassify->add_option("--seed", seed);

    auto* cmd_mverify = app.add_subcommand("map-verify", "check adjacency preservation on sampled pairs");
    cmd_mverify->add_option("spec", file_a)->required();
    cmd_mverify->add_option("--pairs", pair_count);
    cmd_mverify->add_option("--seed", seed);

    auto* cmd_selftest = app.add_subcommand("selftest", "run the property suites");
    cmd_selftest->add_option("--seed", seed)->default_val(7);
    cmd_selftest->add_option("--trials", trials);
    cmd_selftest->add_option("--suite", suite_name);

    // Let --format trail the subcommand arguments.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    g_style = style_name == "compact" ? io::Style::compact : io::Style::pretty;

    try {
        if (cmd_rank->parsed()) {
            std::cout << rank(load_any(file_a)) << "\n";
            return kExitOk;
        }
        if (cmd_dist->parsed()) {
            std::cout << dist(load_sym(file_a), load_sym(file_b)) << "\n";
            return kExitOk;
        }
        if (cmd_adj->parsed()) {
            std::cout << (is_adjacent(load_sym(file_a), load_sym(file_b)) ? "true" : "false") << "\n";
            return kExitOk;
        }
        if (cmd_chain->parsed()) {
            std::cout << io::format(geometry::adjacency_chain(load_sym(file_a), load_sym(file_b)), g_style);
            return kExitOk;
        }
        if (cmd_invchain->parsed()) {
            try {
                std::cout << io::format(geometry::invertible_chain(load_sym(file_a), load_sym(file_b), seed),
                                        g_style);
                return kExitOk;
            } catch (const geometry::ChainConstructionFailure& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitViolation;
            }
        }
        if (cmd_diag->parsed()) {
            quadform::CongruenceDiag cd = quadform::diagonalize(load_sym(file_a));
            std::cout << io::format(cd.s, g_style) << "diag " << cd.d.size() << "\n";
            for (size_t i = 0; i < cd.d.size(); ++i) {
                if (i > 0) std::cout << ' ';
                std::cout << io::format(cd.d[i]);
            }
            std::cout << "\n";
            return kExitOk;
        }
        if (cmd_inertia->parsed()) {
            quadform::Inertia in = quadform::inertia(load_sym(file_a));
            std::cout << "inertia " << in.pos << " " << in.neg << " " << in.zero << "\n";
            return kExitOk;
        }
        if (cmd_decomp->parsed()) {
            SymMat a = load_sym(file_a);
            quadform::Decomposition dec = quadform::rank_one_decompose(a);
            std::cout << "terms " << dec.terms.size() << "\n";
            for (const RankOneTerm& t : dec.terms) {
                std::cout << io::format(t.coeff) << "\n" << io::format(t.vector, g_style);
            }
            return kExitOk;
        }
        if (cmd_profile->parsed()) {
            SymMat g = load_sym(file_a);
            geometry::Line l = geometry::line(load_sym(file_b), load_sym(file_c));
            geometry::LineProfile p = geometry::line_distance_profile(g, l);
            if (const auto* c = std::get_if<geometry::ConstantProfile>(&p)) {
                std::cout << "constant " << c->k << "\n";
            } else {
                const auto& e = std::get<geometry::ExceptionalProfile>(p);
                std::cout << "exceptional lambda0=" << io::format(e.lambda0) << " k=" << e.k_at_k << "\n"
                          << io::format(e.k_point, g_style);
            }
            return kExitOk;
        }
        if (cmd_mink_t->parsed()) {
            auto in = slurp(file_a);
            std::cout << io::format(minkowski::t_map(io::read_vec(in)), g_style);
            return kExitOk;
        }
        if (cmd_mink_tinv->parsed()) {
            std::cout << io::format(minkowski::t_inv(load_sym(file_a)), g_style);
            return kExitOk;
        }
        if (cmd_mink_check->parsed()) {
            auto in_x = slurp(file_a);
            auto in_y = slurp(file_b);
            minkowski::SeparationCheck sc =
                minkowski::null_separation_adjacency_check(io::read_vec(in_x), io::read_vec(in_y));
            std::cout << "null-separated " << (sc.null_separated ? "true" : "false") << " adjacent "
                      << (sc.adjacent ? "true" : "false") << " consistent "
                      << (sc.consistent ? "true" : "false") << "\n";
            return sc.consistent ? kExitOk : kExitViolation;
        }
        if (cmd_lcheck->parsed()) {
            Mat m = load_any(file_a);
            bool lorentz = minkowski::is_lorentz(m);
            std::cout << "lorentz " << (lorentz ? "true" : "false");
            if (lorentz)
                std::cout << " restricted "
                          << (minkowski::is_restricted_lorentz(minkowski::LorentzMat(m)) ? "true" : "false");
            std::cout << "\n";
            return kExitOk;
        }
        if (cmd_ltop->parsed()) {
            Mat m = load_any(file_a);
            if (!minkowski::is_lorentz(m)) throw PreconditionViolation("matrix is not Lorentz");
            try {
                auto [c, p] = minkowski::lorentz_to_congruence(minkowski::LorentzMat(m));
                std::cout << "c=" << (c > 0 ? "+1" : "-1") << "\n" << io::format(p, g_style);
                return kExitOk;
            } catch (const minkowski::NonRationalLift& e) {
                std::cout << "non-rational-lift " << io::format(e.obstruction) << "\n";
                return kExitViolation;
            }
        }
        if (cmd_ptol->parsed()) {
            auto in = slurp(file_a);
            maps::MapOracle o = io::read_oracle(in);
            const maps::MapSpec* spec = o.spec();
            const maps::StandardMapSpec* st =
                spec != nullptr ? std::get_if<maps::StandardMapSpec>(spec) : nullptr;
            if (st == nullptr || st->n() != 2 || st->m() != 2)
                throw PreconditionViolation("p-to-lorentz expects a standard spec with n = m = 2");
            minkowski::AffineCongruence g(st->c, st->r_block, st->translation);
            std::cout << io::format(minkowski::congruence_to_weyl(g), g_style);
            return kExitOk;
        }
        if (cmd_mapply->parsed()) {
            auto in = slurp(file_a);
            maps::MapOracle o = io::read_oracle(in);
            SymMat a = load_sym(file_b);
            std::optional<SymMat> v = o.eval(a);
            if (!v) throw PreconditionViolation("oracle does not cover the input matrix");
            std::cout << io::format(*v, g_style);
            return kExitOk;
        }
        if (cmd_mgen->parsed()) {
            if (gen_kind == "standard") {
                maps::StandardMapSpec st = maps::gen_random_standard(gen_n, gen_m, seed);
                std::cout << io::format(maps::MapSpec(st), g_style);
            } else {
                maps::DegenerateMapSpec dg = maps::gen_random_degenerate(gen_n, gen_m, seed);
                std::cout << io::format(maps::MapSpec(dg), g_style);
            }
            return kExitOk;
        }
        if (cmd_mclassify->parsed()) {
            auto in = slurp(file_a);
            maps::MapOracle o = io::read_oracle(in);
            maps::ClassifyResult res =
                seed != 0 ? maps::classify(o, seed) : maps::classify(o);
            if (const auto* sv = std::get_if<maps::StandardVerdict>(&res)) {
                std::cout << "standard c=" << (sv->c > 0 ? "+1" : "-1") << "\n"
                          << io::format(sv->r_block, g_style);
                return kExitOk;
            }
            if (const auto* dv = std::get_if<maps::DegenerateVerdict>(&res)) {
                std::cout << "degenerate\n" << io::format(dv->b, g_style);
                return kExitOk;
            }
            if (const auto* nv = std::get_if<maps::NotAdjacencyPreserving>(&res)) {
                std::cout << "not-adjacency-preserving\n"
                          << io::format(nv->x, g_style) << io::format(nv->y, g_style)
                          << io::format(nv->image_x, g_style) << io::format(nv->image_y, g_style);
                return kExitViolation;
            }
            std::cout << "undetermined " << std::get<maps::Undetermined>(res).reason << "\n";
            return kExitViolation;
        }
        if (cmd_mverify->parsed()) {
            auto in = slurp(file_a);
            maps::MapOracle o = io::read_oracle(in);
            Rng rng(seed);
            std::vector<std::pair<SymMat, SymMat>> pairs;
            for (int i = 0; i < pair_count; ++i) {
                SymMat x = rng.sym(o.n());
                pairs.emplace_back(x, x + sym_outer(rng.rank_one_term(o.n())));
                pairs.emplace_back(rng.sym(o.n()), rng.sym(o.n()));
            }
            maps::CheckReport adj = maps::check_adjacency_preserving(o, pairs);
            maps::CheckReport nonexp = maps::check_nonexpansive(o, pairs);
            std::cout << "adjacency-preserving " << (adj.ok() ? "pass" : "fail") << " checked "
                      << adj.pairs_checked << "\n";
            std::cout << "nonexpansive " << (nonexp.ok() ? "pass" : "fail") << " checked "
                      << nonexp.pairs_checked << "\n";
            const maps::CheckReport* bad = !adj.ok() ? &adj : (!nonexp.ok() ? &nonexp : nullptr);
            if (bad != nullptr && bad->witness) {
                std::cout << "witness\n"
                          << io::format(bad->witness->first, g_style)
                          << io::format(bad->witness->second, g_style);
                return kExitViolation;
            }
            return kExitOk;
        }
        if (cmd_selftest->parsed()) {
            int worst = kExitOk;
            if (!suite_name.empty()) {
                worst = print_report(selftest::run_suite(suite_name, seed, trials));
            } else {
                int passed = 0;
                const auto& suites = selftest::all_suites();
                for (const auto& entry : suites) {
                    int code = print_report(entry.fn(seed, trials));
                    if (code == kExitOk) ++passed;
                    worst = std::max(worst, code);
                }
                std::cout << "total " << passed << "/" << suites.size() << " suites passed\n";
            }
            return worst;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionViolation& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const DimensionMismatch& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitOk;
}
