#include "pivot/text_format.hpp"

#include <sstream>
#include <vector>

#include "pivot/errors.hpp"

namespace pivot {

namespace {

/// Lines split into whitespace tokens, with `#` comments and blanks removed.
std::vector<std::vector<std::string>> token_lines(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) out.push_back(std::move(tokens));
    }
    return out;
}

Label parse_label(const std::string& token) {
    try {
        return Label(token);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

LabelSet parse_label_set(const std::vector<std::string>& tokens, std::size_t from) {
    std::vector<Label> labels;
    labels.reserve(tokens.size() - from);
    for (std::size_t i = from; i < tokens.size(); ++i) labels.push_back(parse_label(tokens[i]));
    try {
        return LabelSet(std::move(labels));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

} // namespace

FieldDescriptor parse_field_name(const std::string& text) {
    if (text == "Q") return FieldDescriptor::rational();
    if (text.size() >= 5 && text.rfind("GF(", 0) == 0 && text.back() == ')') {
        const std::string inner = text.substr(3, text.size() - 4);
        if (!inner.empty() && inner.find_first_not_of("0123456789") == std::string::npos &&
            inner.size() <= 9) {
            return FieldDescriptor::gfp(static_cast<std::uint32_t>(std::stoul(inner)));
        }
    }
    throw ParseError("unrecognized field '" + text + "'; expected GF(2), GF(p), or Q");
}

FieldValue parse_scalar(const FieldDescriptor& d, const std::string& token) {
    if (d.kind() == FieldKind::Rational) {
        if (auto slash = token.find('/'); slash != std::string::npos) {
            if (token.find('/', slash + 1) != std::string::npos)
                throw ParseError("malformed rational '" + token + "'");
            try {
                mpz_class num(token.substr(0, slash), 10);
                mpz_class den(token.substr(slash + 1), 10);
                if (den == 0) throw ParseError("zero denominator in '" + token + "'");
                return FieldValue::from_mpq(mpq_class(num, den));
            } catch (const std::invalid_argument&) {
                throw ParseError("malformed rational '" + token + "'");
            }
        }
        try {
            return FieldValue::from_mpq(mpq_class(mpz_class(token, 10)));
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed integer '" + token + "'");
        }
    }
    try {
        mpz_class z(token, 10);
        mpz_class r = z % d.modulus();
        if (r < 0) r += d.modulus();
        return FieldValue::residue(d, r.get_ui());
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed integer '" + token + "' for " + d.str());
    }
}

LabeledMatrix parse_matrix(const std::string& text) {
    auto lines = token_lines(text);
    if (lines.empty()) throw ParseError("empty matrix text");
    if (lines[0][0] != "field" || lines[0].size() != 2)
        throw ParseError("first line must be `field <name>`");
    FieldDescriptor desc = parse_field_name(lines[0][1]);

    if (lines.size() < 2 || (lines[1][0] != "cols" && lines[1][0] != "labels"))
        throw ParseError("second line must be `cols ...` or `labels ...`");
    const bool square_header = lines[1][0] == "labels";

    std::vector<Label> header;
    header.reserve(lines[1].size() - 1);
    for (std::size_t i = 1; i < lines[1].size(); ++i) header.push_back(parse_label(lines[1][i]));
    LabelSet cols;
    try {
        cols = LabelSet(header);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }

    std::vector<Label> row_labels;
    std::vector<std::vector<FieldValue>> row_entries;
    for (std::size_t li = 2; li < lines.size(); ++li) {
        const auto& tokens = lines[li];
        const std::string& head = tokens[0];
        if (head.size() < 2 || head.back() != ':')
            throw ParseError("expected `<row-label>:` at line start, got '" + head + "'");
        row_labels.push_back(parse_label(head.substr(0, head.size() - 1)));
        if (tokens.size() - 1 != cols.size())
            throw ParseError("row '" + row_labels.back().name() + "' has " +
                             std::to_string(tokens.size() - 1) + " entries, expected " +
                             std::to_string(cols.size()));
        std::vector<FieldValue> entries;
        entries.reserve(cols.size());
        for (std::size_t i = 1; i < tokens.size(); ++i)
            entries.push_back(parse_scalar(desc, tokens[i]));
        row_entries.push_back(std::move(entries));
    }

    LabelSet rows;
    try {
        rows = LabelSet(row_labels);
    } catch (const Error& e) {
        throw ParseError(e.what()); // duplicate row label
    }
    if (square_header && !(rows == cols))
        throw ParseError("`labels` header requires the rows to be exactly " + cols.str() +
                         ", got " + rows.str());

    LabeledMatrix m(desc, rows, cols);
    for (std::size_t r = 0; r < row_labels.size(); ++r)
        for (std::size_t c = 0; c < header.size(); ++c)
            m.set(row_labels[r], header[c], row_entries[r][c]);
    return m;
}

std::string print_matrix(const LabeledMatrix& m) {
    std::ostringstream out;
    out << "field " << m.field().str() << '\n';
    out << (m.is_square() ? "labels" : "cols");
    for (const Label& l : m.col_labels()) out << ' ' << l.name();
    out << '\n';
    for (std::size_t i = 0; i < m.row_labels().size(); ++i) {
        out << m.row_labels().at(i).name() << ':';
        for (std::size_t j = 0; j < m.col_labels().size(); ++j)
            out << ' ' << m.entry(i, j).str();
        out << '\n';
    }
    return out.str();
}

SimpleGraph parse_graph(const std::string& text) {
    auto lines = token_lines(text);
    if (lines.empty()) throw ParseError("empty graph text");
    if (lines[0][0] != "vertices")
        throw ParseError("first line must be `vertices ...`");
    LabelSet vertices = parse_label_set(lines[0], 1);

    std::vector<std::pair<Label, Label>> edges;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& tokens = lines[li];
        if (tokens[0] != "edge" || tokens.size() != 3)
            throw ParseError("expected `edge <u> <v>`, got '" + tokens[0] + "' with " +
                             std::to_string(tokens.size() - 1) + " arguments");
        edges.emplace_back(parse_label(tokens[1]), parse_label(tokens[2]));
    }
    try {
        return SimpleGraph(std::move(vertices), edges);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what()); // loops, undeclared endpoints
    }
}

std::string print_graph(const SimpleGraph& g) {
    std::ostringstream out;
    out << "vertices";
    for (const Label& v : g.vertices()) out << ' ' << v.name();
    out << '\n';
    for (const auto& [u, v] : g.edges()) out << "edge " << u.name() << ' ' << v.name() << '\n';
    return out.str();
}

} // namespace pivot
