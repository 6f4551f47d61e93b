#include "pivot/ppt.hpp"

#include "pivot/errors.hpp"

namespace pivot {

namespace {

void require_square_on(const LabeledMatrix& A, const LabelSet& Z) {
    if (!A.is_square())
        throw NotSquare("pivot operations need equal row and column index sets, got " +
                        A.row_labels().str() + " x " + A.col_labels().str());
    for (const Label& l : Z) (void)A.row_labels().index_of(l);
}

/// Inverse of the principal block A[Z,Z], or PivotSingular.
LabeledMatrix pivot_block_inverse(const LabeledMatrix& A, const LabelSet& Z) {
    LabeledMatrix block = A.submatrix(Z, Z);
    try {
        return block.inverse();
    } catch (const Singular&) {
        throw PivotSingular("principal block on " + Z.str() + " has rank " +
                                std::to_string(block.rank()) + " < " + std::to_string(Z.size()),
                            Z.str(), block.rank(), Z.size());
    }
}

/// Copies every entry of a block into the matching positions of `into`.
void paste(LabeledMatrix& into, const LabeledMatrix& block) {
    for (std::size_t i = 0; i < block.row_labels().size(); ++i)
        for (std::size_t j = 0; j < block.col_labels().size(); ++j)
            into.set(block.row_labels().at(i), block.col_labels().at(j), block.entry(i, j));
}

} // namespace

LabeledMatrix ppt(const LabeledMatrix& A, const LabelSet& Z) {
    require_square_on(A, Z);
    const LabelSet& V = A.row_labels();
    const LabelSet W = V.set_difference(Z);

    LabeledMatrix inv = pivot_block_inverse(A, Z);
    LabeledMatrix top_right = inv * A.submatrix(Z, W);
    LabeledMatrix bottom_left = A.submatrix(W, Z) * inv;

    LabeledMatrix out(A.field(), V, V);
    paste(out, inv);
    paste(out, -top_right);
    paste(out, bottom_left);
    paste(out, A.submatrix(W, W) + (-(A.submatrix(W, Z) * top_right)));
    return out;
}

LabeledMatrix schur_complement(const LabeledMatrix& A, const LabelSet& Z) {
    require_square_on(A, Z);
    const LabelSet W = A.row_labels().set_difference(Z);
    LabeledMatrix inv = pivot_block_inverse(A, Z);
    return A.submatrix(W, W) + (-(A.submatrix(W, Z) * (inv * A.submatrix(Z, W))));
}

LabeledMatrix sharp(const LabeledMatrix& A, const LabelSet& Z) {
    require_square_on(A, Z);
    const LabelSet& V = A.row_labels();
    LabeledMatrix out = LabeledMatrix::identity_on(V.set_difference(Z), V, A.field());
    paste(out, A.submatrix(Z, V));
    return out;
}

bool partial_inverse_holds(const LabeledMatrix& A, const LabeledMatrix& B, const LabelSet& Z,
                           const LabeledVector& x) {
    require_square_on(A, Z);
    const LabelSet& V = A.row_labels();
    LabeledVector y = A.apply(x);

    LabeledVector swapped_in(A.field(), V);
    LabeledVector swapped_out(A.field(), V);
    for (std::size_t i = 0; i < V.size(); ++i) {
        const Label& l = V.at(i);
        if (Z.contains(l)) {
            swapped_in.set_entry(i, y.at(l));
            swapped_out.set_entry(i, x.at(l));
        } else {
            swapped_in.set_entry(i, x.at(l));
            swapped_out.set_entry(i, y.at(l));
        }
    }
    return B.apply(swapped_in) == swapped_out;
}

bool check_partial_inverse(const LabeledMatrix& A, const LabelSet& Z, const LabeledVector& x) {
    return partial_inverse_holds(A, ppt(A, Z), Z, x);
}

} // namespace pivot
