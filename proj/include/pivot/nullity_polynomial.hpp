#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pivot/labeled_matrix.hpp"

namespace pivot {

/// Hard ceiling on |V| for the polynomial enumerations: 4^|V| rank
/// computations stop being desk scale shortly after this.
inline constexpr std::size_t kPolynomialHardCap = 16;

/// A univariate counting polynomial in y with 64-bit coefficients;
/// coefficient d counts index-set choices yielding nullity d.
class NullityPolynomial {
public:
    NullityPolynomial() = default;
    explicit NullityPolynomial(std::vector<std::uint64_t> coeffs);

    /// Coefficients c0..c_deg with trailing zeros trimmed.
    const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }

    std::uint64_t coefficient(std::size_t d) const {
        return d < coeffs_.size() ? coeffs_[d] : 0;
    }

    /// Sum of all coefficients: 4^|V| for p, 2^|V| for q.
    std::uint64_t total_mass() const;

    /// "2 + 2*y", "1 + y", "4", "y^2"; ascending powers, zero terms omitted.
    std::string str() const;

    bool operator==(const NullityPolynomial& rhs) const = default;

private:
    std::vector<std::uint64_t> coeffs_;
};

/// p(A): over all pairs X, Y of subsets of V, count y^{n(A[X,Y])}.
/// Throws SizeCapExceeded when |V| exceeds the cap.
NullityPolynomial nullity_polynomial(const LabeledMatrix& A,
                                     std::size_t cap = kPolynomialHardCap);

/// q(A): the diagonal restriction, over principal submatrices only.
NullityPolynomial q_polynomial(const LabeledMatrix& A, std::size_t cap = kPolynomialHardCap);

/// Whether p(A) = p(ppt(A, Z)); true whenever the pivot is defined.
bool check_p_invariance(const LabeledMatrix& A, const LabelSet& Z,
                        std::size_t cap = kPolynomialHardCap);

/// Whether q(A) = q(ppt(A, Z)); true whenever the pivot is defined.
bool check_q_invariance(const LabeledMatrix& A, const LabelSet& Z,
                        std::size_t cap = kPolynomialHardCap);

} // namespace pivot
