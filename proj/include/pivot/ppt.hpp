#pragma once

#include "pivot/labeled_matrix.hpp"

namespace pivot {

/// Principal pivot transform of A on Z: the partial inverse that swaps the
/// roles of the Z-coordinates of input and output. Requires A square on V and
/// A[Z,Z] nonsingular; ppt(A, {}) = A.
LabeledMatrix ppt(const LabeledMatrix& A, const LabelSet& Z);

/// A[V\Z, V\Z] - A[V\Z, Z] A[Z,Z]^{-1} A[Z, V\Z]; the bottom-right block of
/// ppt(A, Z). schur_complement(A, {}) = A.
LabeledMatrix schur_complement(const LabeledMatrix& A, const LabelSet& Z);

/// A with every row outside Z replaced by the corresponding unit row. Defined
/// for every square A; no nonsingularity needed.
LabeledMatrix sharp(const LabeledMatrix& A, const LabelSet& Z);

/// The defining property of ppt(A, Z) on a concrete vector x: with y = A x,
/// the candidate B must map (y on Z, x off Z) to (x on Z, y off Z). Split out
/// so tests can feed a corrupted candidate and watch the check fail.
bool partial_inverse_holds(const LabeledMatrix& A, const LabeledMatrix& B, const LabelSet& Z,
                           const LabeledVector& x);

/// partial_inverse_holds with B = ppt(A, Z); true for every valid input.
bool check_partial_inverse(const LabeledMatrix& A, const LabelSet& Z, const LabeledVector& x);

} // namespace pivot
