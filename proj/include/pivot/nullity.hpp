#pragma once

#include <utility>

#include "pivot/labeled_matrix.hpp"
#include "pivot/ppt.hpp"

namespace pivot {

/// The correspondence set R = Z \ (X symdiff Y).
LabelSet compute_R(const LabelSet& X, const LabelSet& Y, const LabelSet& Z);

/// The pair correspondence (X symdiff R, Y symdiff R); a self-inverse
/// bijection on pairs of subsets for each fixed Z.
std::pair<LabelSet, LabelSet> f_Z(const LabelSet& X, const LabelSet& Y, const LabelSet& Z);

/// Whether n(ppt(A,Z)[X,Y]) = n(A[X symdiff R, Y symdiff R]); true for every
/// square A with nonsingular A[Z,Z] and all X, Y.
bool check_nullity_equality(const LabeledMatrix& A, const LabelSet& Z, const LabelSet& X,
                            const LabelSet& Y);

/// The (Y symdiff R) x Y matrix inverse(sharp(A,Z))[Y symdiff R, Y]. It maps
/// ker(ppt(A,Z)[X,Y]) bijectively onto ker(A[X symdiff R, Y symdiff R]).
LabeledMatrix kernel_transport_map(const LabeledMatrix& A, const LabelSet& Z, const LabelSet& X,
                                   const LabelSet& Y);

/// Whether the transport map carries ker(ppt(A,Z)[X,Y]) exactly onto
/// ker(A[X symdiff R, Y symdiff R]): equal dimensions and equal spans of the
/// transported basis and the directly computed basis. True for every valid
/// input.
bool check_kernel_equality(const LabeledMatrix& A, const LabelSet& Z, const LabelSet& X,
                           const LabelSet& Y);

/// Whether ker(A[X,Y]) is contained in
/// ker(ppt(A,Z)[X symdiff R, Y symdiff R] * sharp(A,Z)[Y symdiff R, Y]),
/// checked on a kernel basis. True for every valid input.
bool check_first_inclusion(const LabeledMatrix& A, const LabelSet& Z, const LabelSet& X,
                           const LabelSet& Y);

} // namespace pivot
