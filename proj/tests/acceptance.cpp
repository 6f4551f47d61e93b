// Runs every acceptance criterion at its stated scale and time budget.
// Prints one pass/fail line per criterion; exits 0 only if all pass.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pivot/graph.hpp"
#include "pivot/harness.hpp"
#include "pivot/labeled_matrix.hpp"
#include "pivot/nullity_polynomial.hpp"
#include "pivot/ppt.hpp"
#include "pivot/text_format.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool ok = false;
    std::size_t passed = 0;
    std::size_t total = 0;
    double elapsed = 0.0;
    std::string detail;
};

Outcome run_suites(const std::vector<std::string>& suites) {
    pivot::HarnessConfig config;
    config.suites = suites;
    auto start = Clock::now();
    auto report = pivot::run_harness(config);
    Outcome out;
    out.elapsed = seconds_since(start);
    out.ok = report.all_ok();
    for (const auto& suite : report.suites) {
        out.passed += suite.passed;
        out.total += suite.total;
    }
    if (!out.ok) out.detail = report.str();
    return out;
}

std::string g_self_dir;

Outcome run_cli_poly() {
    Outcome out;
    out.total = 1;
    std::string cli;
    if (const char* env = std::getenv("PIVOT_CLI_PATH")) {
        cli = env;
    } else {
        auto sibling = std::filesystem::path(g_self_dir) / ".." / "tools" / "pivot";
        std::error_code ec;
        if (std::filesystem::exists(sibling, ec)) cli = sibling.string();
    }
    if (cli.empty()) {
        out.detail = "PIVOT_CLI_PATH is not set and no sibling tools/pivot was found\n";
        return out;
    }
    pivot::Rng rng(42);
    std::ostringstream text;
    text << "field GF(2)\nlabels";
    for (char c = 'a'; c < 'a' + 8; ++c) text << ' ' << c;
    text << '\n';
    for (char c = 'a'; c < 'a' + 8; ++c) {
        text << c << ':';
        for (int j = 0; j < 8; ++j) text << ' ' << (rng.flip() ? 1 : 0);
        text << '\n';
    }
    auto file = std::filesystem::temp_directory_path() / "acceptance_poly.txt";
    std::ofstream(file) << text.str();

    std::string command = cli + " ppt poly " + file.string() + " 2>&1";
    auto start = Clock::now();
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        out.detail = "failed to launch the CLI\n";
        return out;
    }
    std::string output;
    char buffer[512];
    while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe)) output.append(buffer, got);
    int status = pclose(pipe);
    out.elapsed = seconds_since(start);
    bool exited_ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
    bool printed_poly = output.find("coeffs: ") != std::string::npos;
    out.ok = exited_ok && printed_poly;
    out.passed = out.ok ? 1 : 0;
    if (!out.ok) out.detail = output;
    return out;
}

Outcome run_golden_fixtures() {
    using pivot::LabelSet;
    const std::string gf2_example = "field GF(2)\nlabels 1 2\n1: 1 1\n2: 1 0\n";
    const std::string q_example = "field Q\nlabels 1 2\n1: 2 1\n2: 1 1\n";

    std::vector<std::pair<std::string, std::function<bool()>>> fixtures;
    fixtures.emplace_back("ppt of the 2x2 GF(2) example", [&] {
        auto a = pivot::parse_matrix(gf2_example);
        auto b = pivot::ppt(a, LabelSet::of({"1"}));
        return b == pivot::parse_matrix("field GF(2)\nlabels 1 2\n1: 1 1\n2: 1 1\n");
    });
    fixtures.emplace_back("ppt of the 2x2 rational example", [&] {
        auto a = pivot::parse_matrix(q_example);
        auto b = pivot::ppt(a, LabelSet::of({"1"}));
        return b == pivot::parse_matrix("field Q\nlabels 1 2\n1: 1/2 -1/2\n2: 1/2 1/2\n");
    });
    fixtures.emplace_back("rational Schur complement 1/2", [&] {
        auto a = pivot::parse_matrix(q_example);
        auto s = pivot::schur_complement(a, LabelSet::of({"1"}));
        return s == pivot::parse_matrix("field Q\nlabels 2\n2: 1/2\n");
    });
    fixtures.emplace_back("sharp keeps pivot rows, units elsewhere", [&] {
        auto a = pivot::parse_matrix(q_example);
        auto s = pivot::sharp(a, LabelSet::of({"1"}));
        return s == pivot::parse_matrix("field Q\nlabels 1 2\n1: 2 1\n2: 0 1\n");
    });
    fixtures.emplace_back("rational triangular inverse", [&] {
        auto a = pivot::parse_matrix("field Q\nlabels 1 2\n1: 1 1\n2: 0 1\n");
        return a.inverse() == pivot::parse_matrix("field Q\nlabels 1 2\n1: 1 -1\n2: 0 1\n");
    });
    fixtures.emplace_back("p of the 1x1 zero matrix", [&] {
        auto a = pivot::parse_matrix("field Q\nlabels v\nv: 0\n");
        return pivot::nullity_polynomial(a).str() == "2 + 2*y";
    });
    fixtures.emplace_back("p of the 1x1 identity", [&] {
        auto a = pivot::parse_matrix("field Q\nlabels v\nv: 1\n");
        return pivot::nullity_polynomial(a).str() == "3 + y";
    });
    fixtures.emplace_back("q of the 1x1 zero matrix", [&] {
        auto a = pivot::parse_matrix("field Q\nlabels v\nv: 0\n");
        return pivot::q_polynomial(a).str() == "1 + y";
    });
    fixtures.emplace_back("q of the all-ones 2x2 over GF(2)", [&] {
        auto a = pivot::parse_matrix("field GF(2)\nlabels 1 2\n1: 1 1\n2: 1 1\n");
        return pivot::q_polynomial(a).str() == "3 + y";
    });
    fixtures.emplace_back("p invariance on the GF(2) example", [&] {
        auto a = pivot::parse_matrix(gf2_example);
        auto b = pivot::ppt(a, LabelSet::of({"1"}));
        return pivot::nullity_polynomial(a) == pivot::nullity_polynomial(b) &&
               pivot::q_polynomial(a).str() == "3 + y";
    });
    fixtures.emplace_back("path to triangle local complement", [&] {
        auto path = pivot::parse_graph("vertices a b c\nedge a b\nedge b c\n");
        auto triangle =
            pivot::parse_graph("vertices a b c\nedge a b\nedge a c\nedge b c\n");
        return pivot::local_complement(path, pivot::Label("b")) == triangle;
    });
    fixtures.emplace_back("triangle cut-rank at {a}", [&] {
        auto triangle =
            pivot::parse_graph("vertices a b c\nedge a b\nedge a c\nedge b c\n");
        return pivot::cut_rank(triangle, LabelSet::of({"a"})) == 1;
    });
    fixtures.emplace_back("path and triangle share a cut-rank spectrum", [&] {
        auto path = pivot::parse_graph("vertices a b c\nedge a b\nedge b c\n");
        auto triangle =
            pivot::parse_graph("vertices a b c\nedge a b\nedge a c\nedge b c\n");
        auto spectrum = pivot::cut_rank_spectrum(path);
        std::vector<std::size_t> expected = {0, 1, 1, 1, 1, 1, 1, 0};
        return spectrum == expected && pivot::cut_rank_spectrum(triangle) == expected;
    });

    Outcome out;
    out.total = fixtures.size();
    auto start = Clock::now();
    for (const auto& [name, check] : fixtures) {
        bool ok = false;
        try {
            ok = check();
        } catch (const std::exception& e) {
            out.detail += name + ": threw " + e.what() + "\n";
        }
        if (ok) {
            ++out.passed;
        } else {
            out.detail += name + ": value mismatch\n";
        }
    }
    out.elapsed = seconds_since(start);
    out.ok = out.passed == out.total;
    return out;
}

struct Criterion {
    int number;
    std::string title;
    std::function<Outcome()> run;
    double budget;
};

}  // namespace

int main(int, char** argv) {
    g_self_dir = std::filesystem::path(argv[0]).parent_path().string();
    const std::vector<Criterion> criteria = {
        {1, "partial-inverse", [] { return run_suites({"partial-inverse"}); }, 5},
        {2, "nullity-equality", [] { return run_suites({"nullity-equality"}); }, 60},
        {3, "kernel-equality", [] { return run_suites({"kernel-equality"}); }, 60},
        {4, "pq-invariance", [] { return run_suites({"p-invariance", "q-invariance"}); }, 120},
        {5, "algebraic-laws",
         [] {
             return run_suites(
                 {"ppt-involution", "ppt-composition", "sharp-inverse", "full-inverse"});
         },
         10},
        {6, "nullity-specializations",
         [] {
             return run_suites(
                 {"nullity-principal", "nullity-inverse", "nullity-complementary"});
         },
         10},
        {7, "pair-correspondence", [] { return run_suites({"pair-correspondence"}); }, 5},
        {8, "lc-ppt-identity", [] { return run_suites({"lc-ppt-identity"}); }, 10},
        {9, "cut-rank-invariance", [] { return run_suites({"cut-rank-invariance"}); }, 30},
        {10, "rank-oracle", [] { return run_suites({"rank-oracle"}); }, 10},
        {11, "cli-poly-performance", run_cli_poly, 10},
        {12, "golden-fixtures", run_golden_fixtures, 30},
    };

    bool all_ok = true;
    for (const auto& criterion : criteria) {
        Outcome out = criterion.run();
        bool within_budget = out.elapsed < criterion.budget;
        bool ok = out.ok && within_budget;
        all_ok = all_ok && ok;
        std::printf("criterion %2d %-24s %s (%zu/%zu checks, %.2fs, budget %.0fs)\n",
                    criterion.number, criterion.title.c_str(), ok ? "pass" : "FAIL",
                    out.passed, out.total, out.elapsed, criterion.budget);
        if (!ok) {
            if (!within_budget) std::printf("  time budget exceeded\n");
            std::istringstream lines(out.detail);
            for (std::string line; std::getline(lines, line);)
                std::printf("  %s\n", line.c_str());
        }
    }
    std::printf("%s\n", all_ok ? "all criteria passed" : "ACCEPTANCE FAILED");
    return all_ok ? 0 : 1;
}
