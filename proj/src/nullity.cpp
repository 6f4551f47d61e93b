#include "pivot/nullity.hpp"

#include "pivot/errors.hpp"

namespace pivot {

LabelSet compute_R(const LabelSet& X, const LabelSet& Y, const LabelSet& Z) {
    return Z.set_difference(X.sym_difference(Y));
}

std::pair<LabelSet, LabelSet> f_Z(const LabelSet& X, const LabelSet& Y, const LabelSet& Z) {
    LabelSet R = compute_R(X, Y, Z);
    return {X.sym_difference(R), Y.sym_difference(R)};
}

bool check_nullity_equality(const LabeledMatrix& A, const LabelSet& Z, const LabelSet& X,
                            const LabelSet& Y) {
    auto [Xr, Yr] = f_Z(X, Y, Z);
    return ppt(A, Z).submatrix(X, Y).nullity() == A.submatrix(Xr, Yr).nullity();
}

LabeledMatrix kernel_transport_map(const LabeledMatrix& A, const LabelSet& Z, const LabelSet& X,
                                   const LabelSet& Y) {
    LabeledMatrix sh = sharp(A, Z);
    std::size_t block_rank = A.submatrix(Z, Z).rank();
    if (block_rank < Z.size())
        throw PivotSingular("principal block on " + Z.str() + " has rank " +
                                std::to_string(block_rank) + " < " + std::to_string(Z.size()),
                            Z.str(), block_rank, Z.size());
    LabelSet R = compute_R(X, Y, Z);
    return sh.inverse().submatrix(Y.sym_difference(R), Y);
}

bool check_kernel_equality(const LabeledMatrix& A, const LabelSet& Z, const LabelSet& X,
                           const LabelSet& Y) {
    auto [Xr, Yr] = f_Z(X, Y, Z);
    KernelBasis lhs = ppt(A, Z).submatrix(X, Y).kernel_basis();
    KernelBasis rhs = A.submatrix(Xr, Yr).kernel_basis();
    if (lhs.dimension() != rhs.dimension()) return false;

    LabeledMatrix T = kernel_transport_map(A, Z, X, Y);
    std::vector<LabeledVector> transported;
    transported.reserve(lhs.vectors.size());
    for (const auto& v : lhs.vectors) transported.push_back(T.apply(v));
    return same_span(transported, rhs.vectors);
}

bool check_first_inclusion(const LabeledMatrix& A, const LabelSet& Z, const LabelSet& X,
                           const LabelSet& Y) {
    auto [Xr, Yr] = f_Z(X, Y, Z);
    LabeledMatrix composite = ppt(A, Z).submatrix(Xr, Yr) * sharp(A, Z).submatrix(Yr, Y);
    for (const auto& v : A.submatrix(X, Y).kernel_basis().vectors)
        if (!composite.apply(v).is_zero()) return false;
    return true;
}

} // namespace pivot
