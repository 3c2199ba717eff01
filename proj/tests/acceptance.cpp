// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
// All assertions are exact; each suite must finish within its time budget.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "symadj/io.hpp"
#include "symadj/maps.hpp"
#include "symadj/selftest.hpp"

using namespace symadj;

namespace {

constexpr uint64_t kSeed = 20240817;
int g_failures = 0;

void criterion(int number, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("criterion %d: %s — %s\n", number, ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) {
        ++g_failures;
        if (!detail.empty()) std::printf("  %s\n", detail.c_str());
    }
}

std::string first_failure(const selftest::Report& rep) {
    if (rep.failures.empty()) return "";
    return rep.failures.front().first + ": " + rep.failures.front().second;
}

bool within_budget(const selftest::Report& rep) { return rep.wall_seconds < 60.0; }

int run_cli(const std::string& cli, const std::string& args, const std::string& spec_text) {
    std::string spec_path = "acceptance_spec.tmp";
    {
        std::ofstream out(spec_path);
        out << spec_text;
    }
    std::string cmd = cli + " " + args + " " + spec_path + " > acceptance_cli.out 2>&1";
    int status = std::system(cmd.c_str());
    std::remove(spec_path.c_str());
    std::remove("acceptance_cli.out");
    if (status < 0) return -1;
    return WEXITSTATUS(status);
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    {
        selftest::Report rep = selftest::suite_metric_invariance(kSeed, 500);
        criterion(1, "distance invariances on 500 random triples, dims 2-6",
                  rep.ok() && within_budget(rep), first_failure(rep));
    }
    {
        selftest::Report rep = selftest::suite_direct_sum(kSeed, 800);
        criterion(2, "rank additivity vs column-span counting, 200 pairs per dim 2-5",
                  rep.ok() && within_budget(rep), first_failure(rep));
    }
    {
        selftest::Report rep = selftest::suite_line_dichotomy(kSeed, 300);
        criterion(3, "line distance profiles vs brute force on 300 instances",
                  rep.ok() && within_budget(rep), first_failure(rep));
    }
    {
        selftest::Report rep = selftest::suite_chains(kSeed, 200);
        criterion(4, "adjacency chains and verified invertible chains on 200 pairs",
                  rep.ok() && within_budget(rep), first_failure(rep));
    }
    {
        selftest::Report rep = selftest::suite_minkowski_bridge(kSeed, 1000);
        criterion(5, "determinant identity and adjacency equivalence on 1000 pairs",
                  rep.ok() && within_budget(rep), first_failure(rep));
    }
    {
        selftest::Report rep = selftest::suite_lorentz_roundtrip(kSeed, 100);
        criterion(6, "congruence/Lorentz round trip on 100 unimodular factors",
                  rep.ok() && within_budget(rep), first_failure(rep));
    }
    {
        selftest::Report rep = selftest::suite_map_dichotomy(kSeed, 100);
        criterion(7, "100 standard and 100 degenerate maps verified and classified",
                  rep.ok() && within_budget(rep), first_failure(rep));
    }
    {
        selftest::Report rep = selftest::suite_affine_recovery(kSeed, 100);
        selftest::Report neg = selftest::suite_negative_controls(kSeed, 1);
        criterion(8, "affine recovery round trip on 100 congruences; truncation flagged",
                  rep.ok() && neg.ok() && within_budget(rep),
                  first_failure(rep) + first_failure(neg));
    }
    {
        // Negative controls through the CLI: both maps must be flagged with
        // exit code 1 and a printed witness.
        bool ok = true;
        std::string detail;
        if (cli.empty()) {
            ok = false;
            detail = "no --cli path provided";
        } else {
            std::vector<SymMat> probes = maps::canonical_probes(2, maps::kDefaultProbeSeed);
            maps::MapOracle square = maps::MapOracle::tabulate(
                2, 2, [](const SymMat& a) { return SymMat(a.mat() * a.mat()); }, probes);
            maps::MapOracle truncate = maps::MapOracle::tabulate(
                2, 2,
                [](const SymMat& a) {
                    SymMat out(2);
                    out.set(0, 0, a(0, 0));
                    return out;
                },
                probes);
            int sq_code = run_cli(cli, "map-classify", io::format_oracle(square));
            int tr_code = run_cli(cli, "map-classify", io::format_oracle(truncate));
            if (sq_code != 1) {
                ok = false;
                detail += "squaring map exit code " + std::to_string(sq_code) + "; ";
            }
            if (tr_code != 1) {
                ok = false;
                detail += "truncation map exit code " + std::to_string(tr_code);
            }
        }
        criterion(9, "negative controls rejected through the CLI with exit code 1", ok, detail);
    }

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
