#include "pivot/nullity_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "pivot/errors.hpp"
#include "pivot/ppt.hpp"
#include "elim.hpp"

namespace pivot {

NullityPolynomial::NullityPolynomial(std::vector<std::uint64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t NullityPolynomial::total_mass() const {
    std::uint64_t mass = 0;
    for (std::uint64_t c : coeffs_) mass += c;
    return mass;
}

std::string NullityPolynomial::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (coeffs_[d] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (d == 0) {
            out << coeffs_[d];
            continue;
        }
        if (coeffs_[d] != 1) out << coeffs_[d] << '*';
        out << 'y';
        if (d > 1) out << '^' << d;
    }
    if (first) out << '0';
    return out.str();
}

namespace {

void require_within_cap(const LabeledMatrix& A, std::size_t cap) {
    if (!A.is_square())
        throw NotSquare("nullity polynomials are defined for square matrices, got " +
                        A.row_labels().str() + " x " + A.col_labels().str());
    std::size_t limit = std::min(cap, kPolynomialHardCap);
    if (A.row_labels().size() > limit)
        throw SizeCapExceeded("matrix on " + std::to_string(A.row_labels().size()) +
                              " labels exceeds the polynomial size cap " +
                              std::to_string(limit));
}

} // namespace

NullityPolynomial nullity_polynomial(const LabeledMatrix& A, std::size_t cap) {
    require_within_cap(A, cap);
    std::vector<std::uint64_t> coeffs(A.row_labels().size() + 1, 0);
    detail::for_each_submatrix_nullity(
        A, [&](std::uint64_t, std::uint64_t, std::size_t nullity) { ++coeffs[nullity]; });
    return NullityPolynomial(std::move(coeffs));
}

NullityPolynomial q_polynomial(const LabeledMatrix& A, std::size_t cap) {
    require_within_cap(A, cap);
    std::vector<std::uint64_t> coeffs(A.row_labels().size() + 1, 0);
    detail::for_each_principal_nullity(
        A, [&](std::uint64_t, std::size_t nullity) { ++coeffs[nullity]; });
    return NullityPolynomial(std::move(coeffs));
}

bool check_p_invariance(const LabeledMatrix& A, const LabelSet& Z, std::size_t cap) {
    return nullity_polynomial(A, cap) == nullity_polynomial(ppt(A, Z), cap);
}

bool check_q_invariance(const LabeledMatrix& A, const LabelSet& Z, std::size_t cap) {
    return q_polynomial(A, cap) == q_polynomial(ppt(A, Z), cap);
}

} // namespace pivot
