#pragma once

#include <cstddef>
#include <vector>

#include "pivot/field.hpp"
#include "pivot/label.hpp"

namespace pivot {

/// A vector indexed by an unordered label set: a total map labels -> field.
class LabeledVector {
public:
    LabeledVector(FieldDescriptor field, LabelSet labels)
        : desc_(field), labels_(std::move(labels)),
          entries_(labels_.size(), FieldValue::zero(field)) {}

    const FieldDescriptor& field() const { return desc_; }
    const LabelSet& labels() const { return labels_; }

    const FieldValue& at(const Label& l) const { return entries_[labels_.index_of(l)]; }
    void set(const Label& l, FieldValue v);

    /// Entry at canonical position i.
    const FieldValue& entry(std::size_t i) const { return entries_[i]; }
    void set_entry(std::size_t i, FieldValue v);

    bool is_zero() const;

    bool operator==(const LabeledVector& rhs) const;

    std::string str() const;

private:
    FieldDescriptor desc_;
    LabelSet labels_;
    std::vector<FieldValue> entries_;
};

/// Zero-padding injection: entries outside the source labels become 0.
LabeledVector pad(const LabeledVector& w, const LabelSet& into);

/// Projection: keep only the entries indexed by `onto`.
LabeledVector project(const LabeledVector& v, const LabelSet& onto);

struct KernelBasis {
    LabelSet column_labels;
    std::vector<LabeledVector> vectors;

    std::size_t dimension() const { return vectors.size(); }
};

/// A matrix indexed by unordered label sets, formally a function
/// row_labels x col_labels -> field. Internally entries are stored in the
/// canonical (sorted) label order; equality and every operation are
/// label-wise, so the storage order never shows.
class LabeledMatrix {
public:
    /// Zero matrix on the given index sets.
    LabeledMatrix(FieldDescriptor field, LabelSet rows, LabelSet cols);

    /// The V x V matrix with 1 at (v, v) for v in X and 0 elsewhere.
    static LabeledMatrix identity_on(const LabelSet& X, const LabelSet& V,
                                     const FieldDescriptor& field);

    static LabeledMatrix identity(const LabelSet& V, const FieldDescriptor& field) {
        return identity_on(V, V, field);
    }

    const FieldDescriptor& field() const { return desc_; }
    const LabelSet& row_labels() const { return rows_; }
    const LabelSet& col_labels() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const FieldValue& at(const Label& r, const Label& c) const;
    void set(const Label& r, const Label& c, FieldValue v);

    /// Entry at canonical position (i, j).
    const FieldValue& entry(std::size_t i, std::size_t j) const {
        return entries_[i * cols_.size() + j];
    }
    void set_entry(std::size_t i, std::size_t j, FieldValue v);

    /// Restriction to X x Y. Either set may be empty.
    LabeledMatrix submatrix(const LabelSet& X, const LabelSet& Y) const;

    std::size_t rank() const;

    /// Dimension of the null space: |col_labels| - rank.
    std::size_t nullity() const { return cols_.size() - rank(); }

    /// Canonical kernel basis: one vector per non-pivot column of the reduced
    /// echelon form, with value 1 at that column's label, ordered by label.
    KernelBasis kernel_basis() const;

    /// Exact inverse. Throws NotSquare or Singular. The 0x0 matrix is its own
    /// inverse (it is nonsingular by the empty-product convention).
    LabeledMatrix inverse() const;

    LabeledVector apply(const LabeledVector& v) const;

    friend LabeledMatrix operator*(const LabeledMatrix& a, const LabeledMatrix& b);
    friend LabeledMatrix operator+(const LabeledMatrix& a, const LabeledMatrix& b);
    LabeledMatrix operator-() const;

    bool operator==(const LabeledMatrix& rhs) const;

private:
    FieldDescriptor desc_;
    LabelSet rows_;
    LabelSet cols_;
    std::vector<FieldValue> entries_; // row-major in canonical order
};

/// Rank of the span of a family of vectors over a common label set.
std::size_t span_rank(const std::vector<LabeledVector>& vectors);

/// Whether two families of vectors over the same label set span the same
/// subspace (decided by exact ranks of each family and of their union).
bool same_span(const std::vector<LabeledVector>& a, const std::vector<LabeledVector>& b);

} // namespace pivot
