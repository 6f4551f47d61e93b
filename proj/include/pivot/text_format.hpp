#pragma once

#include <string>

#include "pivot/field.hpp"
#include "pivot/graph.hpp"
#include "pivot/labeled_matrix.hpp"

namespace pivot {

/// Parses "GF(2)", "GF(p)" with a literal prime p, or "Q".
FieldDescriptor parse_field_name(const std::string& text);

/// Parses one entry token: an integer (reduced into the field) or "a/b" over Q.
FieldValue parse_scalar(const FieldDescriptor& d, const std::string& token);

/// Matrix text format:
///   field GF(2)
///   cols a b          (or `labels a b` when rows and columns coincide)
///   r1: 1 0
///   r2: 0 1
/// Blank lines and `#` comments are ignored. Rows may appear in any order.
LabeledMatrix parse_matrix(const std::string& text);

/// Canonical rendering: sorted header and rows, canonical scalars, `labels`
/// header for square matrices on one index set. parse(print(M)) == M.
std::string print_matrix(const LabeledMatrix& m);

/// Graph text format:
///   vertices a b c
///   edge a b
/// Blank lines and `#` comments are ignored.
SimpleGraph parse_graph(const std::string& text);

std::string print_graph(const SimpleGraph& g);

} // namespace pivot
