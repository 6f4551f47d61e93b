#include "pivot/pivot.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "pivot/errors.hpp"
#include "pivot/graph.hpp"
#include "pivot/harness.hpp"
#include "pivot/labeled_matrix.hpp"
#include "pivot/nullity_polynomial.hpp"
#include "pivot/ppt.hpp"
#include "pivot/text_format.hpp"

struct pivot_matrix {
    pivot::LabeledMatrix value;
};

struct pivot_graph {
    pivot::SimpleGraph value;
};

namespace {

thread_local std::string t_last_error;

template <class Fn>
pivot_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return PIVOT_OK;
    } catch (const pivot::PivotSingular& e) {
        t_last_error = e.what();
        return PIVOT_SINGULAR_PIVOT;
    } catch (const pivot::SizeCapExceeded& e) {
        t_last_error = e.what();
        return PIVOT_SIZE_CAP_EXCEEDED;
    } catch (const pivot::LabelNotFound& e) {
        t_last_error = e.what();
        return PIVOT_UNKNOWN_LABEL;
    } catch (const pivot::ParseError& e) {
        t_last_error = e.what();
        return PIVOT_PARSE_ERROR;
    } catch (const pivot::InvalidDescriptor& e) {
        t_last_error = e.what();
        return PIVOT_PARSE_ERROR;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return PIVOT_ERROR;
    }
}

pivot_status bad_argument() {
    t_last_error = "null argument";
    return PIVOT_BAD_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> items;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string item =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        std::size_t b = item.find_first_not_of(" \t");
        std::size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw pivot::ParseError("empty item in list '" + text + "'");
        items.push_back(item.substr(b, e - b + 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return items;
}

pivot::LabelSet parse_label_list(const char* csv) {
    if (csv == nullptr || *csv == '\0') return pivot::LabelSet();
    std::vector<pivot::Label> labels;
    for (const std::string& item : split_csv(csv)) {
        try {
            labels.emplace_back(item);
        } catch (const pivot::Error& e) {
            throw pivot::ParseError(e.what());
        }
    }
    return pivot::LabelSet(std::move(labels));
}

pivot::Label parse_one_label(const char* text) {
    if (text == nullptr) throw pivot::ParseError("missing label");
    try {
        return pivot::Label(text);
    } catch (const pivot::Error& e) {
        throw pivot::ParseError(e.what());
    }
}

}  // namespace

extern "C" {

const char* pivot_version(void) { return "1.0.0"; }

const char* pivot_last_error(void) { return t_last_error.c_str(); }

void pivot_string_free(char* s) { std::free(s); }

pivot_status pivot_matrix_parse(const char* text, pivot_matrix** out) {
    if (text == nullptr || out == nullptr) return bad_argument();
    return guarded([&] { *out = new pivot_matrix{pivot::parse_matrix(text)}; });
}

pivot_status pivot_matrix_print(const pivot_matrix* m, char** out) {
    if (m == nullptr || out == nullptr) return bad_argument();
    return guarded([&] { *out = dup_string(pivot::print_matrix(m->value)); });
}

void pivot_matrix_free(pivot_matrix* m) { delete m; }

pivot_status pivot_matrix_equal(const pivot_matrix* a, const pivot_matrix* b, int* out) {
    if (a == nullptr || b == nullptr || out == nullptr) return bad_argument();
    return guarded([&] { *out = a->value == b->value ? 1 : 0; });
}

pivot_status pivot_matrix_rank(const pivot_matrix* m, size_t* out) {
    if (m == nullptr || out == nullptr) return bad_argument();
    return guarded([&] { *out = m->value.rank(); });
}

pivot_status pivot_matrix_nullity(const pivot_matrix* m, size_t* out) {
    if (m == nullptr || out == nullptr) return bad_argument();
    return guarded([&] { *out = m->value.nullity(); });
}

pivot_status pivot_ppt(const pivot_matrix* m, const char* pivot_set, pivot_matrix** out) {
    if (m == nullptr || pivot_set == nullptr || out == nullptr) return bad_argument();
    return guarded(
        [&] { *out = new pivot_matrix{pivot::ppt(m->value, parse_label_list(pivot_set))}; });
}

pivot_status pivot_schur(const pivot_matrix* m, const char* pivot_set, pivot_matrix** out) {
    if (m == nullptr || pivot_set == nullptr || out == nullptr) return bad_argument();
    return guarded([&] {
        *out = new pivot_matrix{pivot::schur_complement(m->value, parse_label_list(pivot_set))};
    });
}

pivot_status pivot_sharp(const pivot_matrix* m, const char* pivot_set, pivot_matrix** out) {
    if (m == nullptr || pivot_set == nullptr || out == nullptr) return bad_argument();
    return guarded(
        [&] { *out = new pivot_matrix{pivot::sharp(m->value, parse_label_list(pivot_set))}; });
}

pivot_status pivot_nullity_polynomial(const pivot_matrix* m, pivot_poly_kind kind,
                                      size_t max_size, char** display, char** coeffs) {
    if (m == nullptr || (display == nullptr && coeffs == nullptr)) return bad_argument();
    return guarded([&] {
        std::size_t cap = max_size == 0 ? pivot::kPolynomialHardCap : max_size;
        pivot::NullityPolynomial poly = kind == PIVOT_POLY_Q
                                            ? pivot::q_polynomial(m->value, cap)
                                            : pivot::nullity_polynomial(m->value, cap);
        if (display != nullptr) *display = dup_string(poly.str());
        if (coeffs != nullptr) {
            std::string text;
            for (std::size_t d = 0; d < poly.coefficients().size(); ++d) {
                if (d > 0) text += ' ';
                text += std::to_string(poly.coefficients()[d]);
            }
            *coeffs = dup_string(text);
        }
    });
}

pivot_status pivot_graph_parse(const char* text, pivot_graph** out) {
    if (text == nullptr || out == nullptr) return bad_argument();
    return guarded([&] { *out = new pivot_graph{pivot::parse_graph(text)}; });
}

pivot_status pivot_graph_print(const pivot_graph* g, char** out) {
    if (g == nullptr || out == nullptr) return bad_argument();
    return guarded([&] { *out = dup_string(pivot::print_graph(g->value)); });
}

void pivot_graph_free(pivot_graph* g) { delete g; }

pivot_status pivot_graph_local_complement(const pivot_graph* g, const char* vertex,
                                          pivot_graph** out) {
    if (g == nullptr || vertex == nullptr || out == nullptr) return bad_argument();
    return guarded([&] {
        *out = new pivot_graph{pivot::local_complement(g->value, parse_one_label(vertex))};
    });
}

pivot_status pivot_graph_cut_rank(const pivot_graph* g, const char* side, size_t* out) {
    if (g == nullptr || side == nullptr || out == nullptr) return bad_argument();
    return guarded([&] { *out = pivot::cut_rank(g->value, parse_label_list(side)); });
}

pivot_status pivot_graph_adjacency(const pivot_graph* g, pivot_matrix** out) {
    if (g == nullptr || out == nullptr) return bad_argument();
    return guarded([&] { *out = new pivot_matrix{pivot::adjacency_matrix(g->value)}; });
}

pivot_status pivot_verify(const pivot_verify_options* options, char** report, int* all_ok) {
    if (report == nullptr && all_ok == nullptr) return bad_argument();
    return guarded([&] {
        pivot::HarnessConfig cfg;
        if (options != nullptr) {
            if (options->field != nullptr) cfg.fields = {pivot::parse_field_name(options->field)};
            cfg.seed = options->seed;
            cfg.max_size = options->max_size;
            cfg.samples = options->samples;
            if (options->suites != nullptr && *options->suites != '\0')
                cfg.suites = split_csv(options->suites);
        }
        pivot::Report rep = pivot::run_harness(cfg);
        if (report != nullptr) *report = dup_string(rep.str());
        if (all_ok != nullptr) *all_ok = rep.all_ok() ? 1 : 0;
    });
}

}  // extern "C"
