#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "pivot/pivot.h"

namespace {

using matrix_ptr = std::unique_ptr<pivot_matrix, decltype(&pivot_matrix_free)>;
using graph_ptr = std::unique_ptr<pivot_graph, decltype(&pivot_graph_free)>;
using string_ptr = std::unique_ptr<char, decltype(&pivot_string_free)>;

int fail(pivot_status st) {
    std::fprintf(stderr, "error: %s\n", pivot_last_error());
    return static_cast<int>(st);
}

bool read_input(const std::string& path, std::string& out) {
    if (path == "-") {
        out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(path);
    if (!in) return false;
    out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return true;
}

int load_matrix(const std::string& path, matrix_ptr& m) {
    std::string text;
    if (!read_input(path, text)) {
        std::fprintf(stderr, "error: cannot read '%s'\n", path.c_str());
        return 2;
    }
    pivot_matrix* raw = nullptr;
    pivot_status st = pivot_matrix_parse(text.c_str(), &raw);
    if (st != PIVOT_OK) return fail(st);
    m.reset(raw);
    return 0;
}

int load_graph(const std::string& path, graph_ptr& g) {
    std::string text;
    if (!read_input(path, text)) {
        std::fprintf(stderr, "error: cannot read '%s'\n", path.c_str());
        return 2;
    }
    pivot_graph* raw = nullptr;
    pivot_status st = pivot_graph_parse(text.c_str(), &raw);
    if (st != PIVOT_OK) return fail(st);
    g.reset(raw);
    return 0;
}

int print_matrix_result(pivot_matrix* result) {
    matrix_ptr guard(result, pivot_matrix_free);
    char* text = nullptr;
    pivot_status st = pivot_matrix_print(result, &text);
    if (st != PIVOT_OK) return fail(st);
    string_ptr out(text, pivot_string_free);
    std::fputs(out.get(), stdout);
    return 0;
}

int run_matrix_op(const std::string& file, const std::string& pivot_set,
                  pivot_status (*op)(const pivot_matrix*, const char*, pivot_matrix**)) {
    matrix_ptr m(nullptr, pivot_matrix_free);
    if (int rc = load_matrix(file, m); rc != 0) return rc;
    pivot_matrix* result = nullptr;
    pivot_status st = op(m.get(), pivot_set.c_str(), &result);
    if (st != PIVOT_OK) return fail(st);
    return print_matrix_result(result);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact principal pivot transforms on label-indexed matrices"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string field;
    std::uint64_t seed = 42;
    std::size_t max_size = 0;
    app.add_option("--field", field,
                   "Field for verify: GF(2), GF(p) with p an odd prime below 65536, or Q");
    app.add_option("--seed", seed, "Seed for the verification harness (default 42)");
    app.add_option("--max-size", max_size,
                   "Cap on |V|: polynomial enumeration size and generated verify instances");

    std::string matrix_file;
    std::string pivot_set;
    std::string which = "p";

    auto* ppt_cmd = app.add_subcommand("ppt", "Matrix transforms and invariants");
    ppt_cmd->require_subcommand(1);
    ppt_cmd->fallthrough();

    auto* apply_cmd = ppt_cmd->add_subcommand("apply", "Principal pivot transform");
    apply_cmd->fallthrough();
    apply_cmd->add_option("file", matrix_file, "Matrix file, or - for stdin")->required();
    apply_cmd->add_option("--pivot", pivot_set, "Pivot labels, comma-separated; \"\" for none")
        ->required();

    auto* schur_cmd = ppt_cmd->add_subcommand("schur", "Schur complement of the pivot block");
    schur_cmd->fallthrough();
    schur_cmd->add_option("file", matrix_file, "Matrix file, or - for stdin")->required();
    schur_cmd->add_option("--pivot", pivot_set, "Pivot labels, comma-separated; \"\" for none")
        ->required();

    auto* sharp_cmd = ppt_cmd->add_subcommand("sharp", "Rows outside the pivot set become unit rows");
    sharp_cmd->fallthrough();
    sharp_cmd->add_option("file", matrix_file, "Matrix file, or - for stdin")->required();
    sharp_cmd->add_option("--pivot", pivot_set, "Pivot labels, comma-separated; \"\" for none")
        ->required();

    auto* poly_cmd = ppt_cmd->add_subcommand("poly", "Nullity polynomial");
    poly_cmd->fallthrough();
    poly_cmd->add_option("file", matrix_file, "Matrix file, or - for stdin")->required();
    poly_cmd->add_option("--which", which, "p sums over all pairs, q over diagonal pairs")
        ->check(CLI::IsMember({"p", "q"}));

    std::string graph_file;
    std::string vertex;
    std::string side;

    auto* graph_cmd = app.add_subcommand("graph", "Simple graph operations over GF(2)");
    graph_cmd->require_subcommand(1);
    graph_cmd->fallthrough();

    auto* lc_cmd = graph_cmd->add_subcommand("lc", "Local complementation at a vertex");
    lc_cmd->fallthrough();
    lc_cmd->add_option("file", graph_file, "Graph file, or - for stdin")->required();
    lc_cmd->add_option("--vertex", vertex, "Vertex label")->required();

    auto* cutrank_cmd = graph_cmd->add_subcommand("cutrank", "Cut-rank of a vertex subset");
    cutrank_cmd->fallthrough();
    cutrank_cmd->add_option("file", graph_file, "Graph file, or - for stdin")->required();
    cutrank_cmd->add_option("--side", side, "Subset labels, comma-separated; \"\" for none")
        ->required();

    auto* adj_cmd = graph_cmd->add_subcommand("adj", "Adjacency matrix over GF(2)");
    adj_cmd->fallthrough();
    adj_cmd->add_option("file", graph_file, "Graph file, or - for stdin")->required();

    std::string suites;
    std::size_t samples = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--suites", suites, "Comma-separated suite names (default: all)");
    verify_cmd->add_option("--samples", samples, "Override per-suite random sample counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*apply_cmd) return run_matrix_op(matrix_file, pivot_set, pivot_ppt);
    if (*schur_cmd) return run_matrix_op(matrix_file, pivot_set, pivot_schur);
    if (*sharp_cmd) return run_matrix_op(matrix_file, pivot_set, pivot_sharp);

    if (*poly_cmd) {
        matrix_ptr m(nullptr, pivot_matrix_free);
        if (int rc = load_matrix(matrix_file, m); rc != 0) return rc;
        std::size_t cap = app.count("--max-size") > 0 ? max_size : 10;
        char* display = nullptr;
        char* coeffs = nullptr;
        pivot_status st = pivot_nullity_polynomial(
            m.get(), which == "q" ? PIVOT_POLY_Q : PIVOT_POLY_P, cap, &display, &coeffs);
        if (st != PIVOT_OK) return fail(st);
        string_ptr d(display, pivot_string_free);
        string_ptr c(coeffs, pivot_string_free);
        std::printf("%s\ncoeffs: %s\n", d.get(), c.get());
        return 0;
    }

    if (*lc_cmd) {
        graph_ptr g(nullptr, pivot_graph_free);
        if (int rc = load_graph(graph_file, g); rc != 0) return rc;
        pivot_graph* result = nullptr;
        pivot_status st = pivot_graph_local_complement(g.get(), vertex.c_str(), &result);
        if (st != PIVOT_OK) return fail(st);
        graph_ptr guard(result, pivot_graph_free);
        char* text = nullptr;
        st = pivot_graph_print(result, &text);
        if (st != PIVOT_OK) return fail(st);
        string_ptr out(text, pivot_string_free);
        std::fputs(out.get(), stdout);
        return 0;
    }

    if (*cutrank_cmd) {
        graph_ptr g(nullptr, pivot_graph_free);
        if (int rc = load_graph(graph_file, g); rc != 0) return rc;
        size_t rank = 0;
        pivot_status st = pivot_graph_cut_rank(g.get(), side.c_str(), &rank);
        if (st != PIVOT_OK) return fail(st);
        std::printf("%zu\n", rank);
        return 0;
    }

    if (*adj_cmd) {
        graph_ptr g(nullptr, pivot_graph_free);
        if (int rc = load_graph(graph_file, g); rc != 0) return rc;
        pivot_matrix* result = nullptr;
        pivot_status st = pivot_graph_adjacency(g.get(), &result);
        if (st != PIVOT_OK) return fail(st);
        return print_matrix_result(result);
    }

    if (*verify_cmd) {
        pivot_verify_options opts{};
        opts.field = field.empty() ? nullptr : field.c_str();
        opts.seed = seed;
        opts.max_size = max_size;
        opts.samples = samples;
        opts.suites = suites.empty() ? nullptr : suites.c_str();
        char* report = nullptr;
        int all_ok = 0;
        pivot_status st = pivot_verify(&opts, &report, &all_ok);
        if (st != PIVOT_OK) return fail(st);
        string_ptr out(report, pivot_string_free);
        std::fputs(out.get(), stdout);
        return all_ok != 0 ? 0 : 1;
    }

    return 2;
}
