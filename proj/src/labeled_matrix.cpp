#include "pivot/labeled_matrix.hpp"

#include <sstream>
#include <type_traits>
#include <utility>

#include "pivot/errors.hpp"
#include "elim.hpp"

namespace pivot {

// ---- LabeledVector ---------------------------------------------------------

void LabeledVector::set(const Label& l, FieldValue v) {
    set_entry(labels_.index_of(l), std::move(v));
}

void LabeledVector::set_entry(std::size_t i, FieldValue v) {
    if (!(v.field() == desc_))
        throw DescriptorMismatch("vector entry field " + v.field().str() +
                                 " does not match vector field " + desc_.str());
    entries_[i] = std::move(v);
}

bool LabeledVector::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool LabeledVector::operator==(const LabeledVector& rhs) const {
    return desc_ == rhs.desc_ && labels_ == rhs.labels_ && entries_ == rhs.entries_;
}

std::string LabeledVector::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i != 0) out << ", ";
        out << labels_.at(i).name() << '=' << entries_[i].str();
    }
    out << ')';
    return out.str();
}

LabeledVector pad(const LabeledVector& w, const LabelSet& into) {
    LabeledVector out(w.field(), into);
    for (std::size_t i = 0; i < w.labels().size(); ++i)
        out.set(w.labels().at(i), w.entry(i));
    return out;
}

LabeledVector project(const LabeledVector& v, const LabelSet& onto) {
    LabeledVector out(v.field(), onto);
    for (std::size_t i = 0; i < onto.size(); ++i)
        out.set_entry(i, v.at(onto.at(i)));
    return out;
}

// ---- LabeledMatrix ---------------------------------------------------------

LabeledMatrix::LabeledMatrix(FieldDescriptor field, LabelSet rows, LabelSet cols)
    : desc_(field), rows_(std::move(rows)), cols_(std::move(cols)),
      entries_(rows_.size() * cols_.size(), FieldValue::zero(field)) {}

LabeledMatrix LabeledMatrix::identity_on(const LabelSet& X, const LabelSet& V,
                                         const FieldDescriptor& field) {
    if (!X.subset_of(V))
        throw ShapeMismatch("identity support " + X.str() + " is not contained in " + V.str());
    LabeledMatrix m(field, V, V);
    for (const Label& l : X) m.set(l, l, FieldValue::one(field));
    return m;
}

const FieldValue& LabeledMatrix::at(const Label& r, const Label& c) const {
    return entries_[rows_.index_of(r) * cols_.size() + cols_.index_of(c)];
}

void LabeledMatrix::set(const Label& r, const Label& c, FieldValue v) {
    set_entry(rows_.index_of(r), cols_.index_of(c), std::move(v));
}

void LabeledMatrix::set_entry(std::size_t i, std::size_t j, FieldValue v) {
    if (!(v.field() == desc_))
        throw DescriptorMismatch("matrix entry field " + v.field().str() +
                                 " does not match matrix field " + desc_.str());
    entries_[i * cols_.size() + j] = std::move(v);
}

LabeledMatrix LabeledMatrix::submatrix(const LabelSet& X, const LabelSet& Y) const {
    LabeledMatrix out(desc_, X, Y);
    for (std::size_t i = 0; i < X.size(); ++i) {
        std::size_t src_i = rows_.index_of(X.at(i));
        for (std::size_t j = 0; j < Y.size(); ++j)
            out.entries_[i * Y.size() + j] =
                entries_[src_i * cols_.size() + cols_.index_of(Y.at(j))];
    }
    return out;
}

std::size_t LabeledMatrix::rank() const {
    if (desc_.kind() == FieldKind::Rational) {
        detail::RatOps ops;
        detail::Dense<detail::RatOps> m;
        detail::to_rationals(*this, m, ops);
        return detail::rank_in_place(m, ops);
    }
    if (desc_.kind() == FieldKind::GF2 && cols_.size() <= 64) {
        std::vector<std::uint64_t> rows = detail::to_bit_rows(*this);
        return detail::rank_bits(rows);
    }
    detail::GfOps ops{desc_.modulus()};
    detail::Dense<detail::GfOps> m;
    detail::to_residues(*this, m, ops);
    return detail::rank_in_place(m, ops);
}

namespace {

FieldValue from_elem(const FieldDescriptor& d, std::uint64_t residue) {
    return FieldValue::residue(d, residue);
}

FieldValue from_elem(const FieldDescriptor&, const mpq_class& q) {
    return FieldValue::from_mpq(q);
}

template <class Ops>
KernelBasis kernel_from_rref(const FieldDescriptor& desc, const LabelSet& cols,
                             detail::Dense<Ops>& m, const Ops& ops) {
    detail::RrefShape shape = detail::rref_in_place(m, ops);
    std::vector<bool> is_pivot(cols.size(), false);
    for (std::size_t c : shape.pivot_cols) is_pivot[c] = true;

    KernelBasis basis;
    basis.column_labels = cols;
    for (std::size_t f = 0; f < cols.size(); ++f) {
        if (is_pivot[f]) continue;
        LabeledVector v(desc, cols);
        v.set_entry(f, FieldValue::one(desc));
        for (std::size_t i = 0; i < shape.rank; ++i) {
            const auto& coeff = m.at(i, f);
            if (ops.is_zero(coeff)) continue;
            v.set_entry(shape.pivot_cols[i], -from_elem(desc, coeff));
        }
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

} // namespace

KernelBasis LabeledMatrix::kernel_basis() const {
    if (desc_.kind() == FieldKind::Rational) {
        detail::RatOps ops;
        detail::Dense<detail::RatOps> m;
        detail::to_rationals(*this, m, ops);
        return kernel_from_rref(desc_, cols_, m, ops);
    }
    detail::GfOps ops{desc_.modulus()};
    detail::Dense<detail::GfOps> m;
    detail::to_residues(*this, m, ops);
    return kernel_from_rref(desc_, cols_, m, ops);
}

LabeledMatrix LabeledMatrix::inverse() const {
    if (!is_square())
        throw NotSquare("cannot invert a " + std::to_string(rows_.size()) + "x" +
                        std::to_string(cols_.size()) + " matrix over distinct index sets");
    const std::size_t n = rows_.size();
    LabeledMatrix out(desc_, rows_, cols_);

    auto run = [&](auto ops) {
        detail::Dense<decltype(ops)> aug;
        aug.resize(n, 2 * n, ops);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < 2 * n; ++j) aug.at(i, j) = ops.zero();
        if constexpr (std::is_same_v<decltype(ops), detail::RatOps>) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = entry(i, j).rational_value();
            for (std::size_t i = 0; i < n; ++i) aug.at(i, n + i) = mpq_class(1);
        } else {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = entry(i, j).residue_value();
            for (std::size_t i = 0; i < n; ++i) aug.at(i, n + i) = 1;
        }
        if (!detail::invert_in_place(aug, n, ops))
            throw Singular("matrix of rank " + std::to_string(rank()) + " on " +
                           std::to_string(n) + " labels is not invertible");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out.set_entry(i, j, from_elem(desc_, aug.at(i, n + j)));
    };

    if (desc_.kind() == FieldKind::Rational)
        run(detail::RatOps{});
    else
        run(detail::GfOps{desc_.modulus()});
    return out;
}

LabeledVector LabeledMatrix::apply(const LabeledVector& v) const {
    if (!(v.field() == desc_))
        throw DescriptorMismatch("vector over " + v.field().str() + " applied to matrix over " +
                                 desc_.str());
    if (!(v.labels() == cols_))
        throw ShapeMismatch("vector over " + v.labels().str() +
                            " applied to matrix with columns " + cols_.str());
    LabeledVector out(desc_, rows_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        FieldValue acc = FieldValue::zero(desc_);
        for (std::size_t j = 0; j < cols_.size(); ++j) acc = acc + entry(i, j) * v.entry(j);
        out.set_entry(i, acc);
    }
    return out;
}

LabeledMatrix operator*(const LabeledMatrix& a, const LabeledMatrix& b) {
    if (!(a.desc_ == b.desc_))
        throw DescriptorMismatch("product of matrices over " + a.desc_.str() + " and " +
                                 b.desc_.str());
    if (!(a.cols_ == b.rows_))
        throw ShapeMismatch("inner index sets differ: " + a.cols_.str() + " vs " + b.rows_.str());
    LabeledMatrix out(a.desc_, a.rows_, b.cols_);
    const std::size_t inner = a.cols_.size();
    for (std::size_t i = 0; i < a.rows_.size(); ++i)
        for (std::size_t j = 0; j < b.cols_.size(); ++j) {
            FieldValue acc = FieldValue::zero(a.desc_);
            for (std::size_t k = 0; k < inner; ++k) acc = acc + a.entry(i, k) * b.entry(k, j);
            out.set_entry(i, j, acc);
        }
    return out;
}

LabeledMatrix operator+(const LabeledMatrix& a, const LabeledMatrix& b) {
    if (!(a.desc_ == b.desc_))
        throw DescriptorMismatch("sum of matrices over " + a.desc_.str() + " and " +
                                 b.desc_.str());
    if (!(a.rows_ == b.rows_) || !(a.cols_ == b.cols_))
        throw ShapeMismatch("sum of matrices indexed by " + a.rows_.str() + "x" + a.cols_.str() +
                            " and " + b.rows_.str() + "x" + b.cols_.str());
    LabeledMatrix out(a.desc_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_.size(); ++i)
        for (std::size_t j = 0; j < a.cols_.size(); ++j)
            out.set_entry(i, j, a.entry(i, j) + b.entry(i, j));
    return out;
}

LabeledMatrix LabeledMatrix::operator-() const {
    LabeledMatrix out(desc_, rows_, cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < cols_.size(); ++j) out.set_entry(i, j, -entry(i, j));
    return out;
}

bool LabeledMatrix::operator==(const LabeledMatrix& rhs) const {
    return desc_ == rhs.desc_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
           entries_ == rhs.entries_;
}

// ---- span utilities ---------------------------------------------------------

std::size_t span_rank(const std::vector<LabeledVector>& vectors) {
    if (vectors.empty()) return 0;
    const FieldDescriptor d = vectors.front().field();
    const LabelSet& labels = vectors.front().labels();
    for (const auto& v : vectors)
        if (!(v.labels() == labels))
            throw ShapeMismatch("span over mixed label sets " + labels.str() + " and " +
                                v.labels().str());

    const std::size_t n = labels.size();
    if (d.kind() == FieldKind::Rational) {
        detail::RatOps ops;
        detail::Dense<detail::RatOps> m;
        m.resize(vectors.size(), n, ops);
        for (std::size_t i = 0; i < vectors.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = vectors[i].entry(j).rational_value();
        return detail::rank_in_place(m, ops);
    }
    if (d.kind() == FieldKind::GF2 && n <= 64) {
        std::vector<std::uint64_t> rows(vectors.size(), 0);
        for (std::size_t i = 0; i < vectors.size(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!vectors[i].entry(j).is_zero()) rows[i] |= std::uint64_t(1) << j;
        return detail::rank_bits(rows);
    }
    detail::GfOps ops{d.modulus()};
    detail::Dense<detail::GfOps> m;
    m.resize(vectors.size(), n, ops);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = vectors[i].entry(j).residue_value();
    return detail::rank_in_place(m, ops);
}

bool same_span(const std::vector<LabeledVector>& a, const std::vector<LabeledVector>& b) {
    if (a.empty() && b.empty()) return true;
    if (!a.empty() && !b.empty() && !(a.front().labels() == b.front().labels()))
        throw ShapeMismatch("span comparison over different label sets " +
                            a.front().labels().str() + " and " + b.front().labels().str());
    std::size_t ra = span_rank(a);
    std::size_t rb = span_rank(b);
    if (ra != rb) return false;
    std::vector<LabeledVector> joint = a;
    joint.insert(joint.end(), b.begin(), b.end());
    return span_rank(joint) == ra;
}

} // namespace pivot
