#pragma once

// Dense elimination kernels shared by the matrix layer, the polynomial
// builders, and the verification harness. Everything here works on scratch
// buffers in canonical label order; callers own the mapping back to labels.

#include <bit>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pivot/field.hpp"
#include "pivot/labeled_matrix.hpp"

namespace pivot::detail {

// ---- element policies -------------------------------------------------

/// Residues in [0, p) with arithmetic mod p. p fits in 16 bits, so products
/// fit comfortably in 64.
struct GfOps {
    std::uint64_t p;
    using Elem = std::uint64_t;

    Elem zero() const { return 0; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem inv(Elem a) const { return invert_mod(a, p); }
};

/// Exact rationals.
struct RatOps {
    using Elem = mpq_class;

    Elem zero() const { return mpq_class(0); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    Elem neg(const Elem& a) const { return mpq_class(-a); }
    Elem add(const Elem& a, const Elem& b) const { return mpq_class(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return mpq_class(a - b); }
    Elem mul(const Elem& a, const Elem& b) const { return mpq_class(a * b); }
    Elem inv(const Elem& a) const { return mpq_class(1 / a); }
};

// ---- dense scratch matrix ----------------------------------------------

template <class Ops>
struct Dense {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<typename Ops::Elem> a;

    void resize(std::size_t r, std::size_t c, const Ops& ops) {
        rows = r;
        cols = c;
        if (a.size() < r * c) a.resize(r * c, ops.zero());
    }
    typename Ops::Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const typename Ops::Elem& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// ---- forward elimination (rank only) ------------------------------------

template <class Ops>
std::size_t rank_in_place(Dense<Ops>& m, const Ops& ops) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && ops.is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (std::size_t j = col; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(piv, j));
        auto inv_p = ops.inv(m.at(rank, col));
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            if (ops.is_zero(m.at(r, col))) continue;
            auto f = ops.mul(m.at(r, col), inv_p);
            m.at(r, col) = ops.zero();
            for (std::size_t j = col + 1; j < m.cols; ++j)
                m.at(r, j) = ops.sub(m.at(r, j), ops.mul(f, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

// ---- reduced row echelon form -------------------------------------------

struct RrefShape {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols; // pivot column of row i, for i < rank
};

template <class Ops>
RrefShape rref_in_place(Dense<Ops>& m, const Ops& ops) {
    RrefShape s;
    for (std::size_t col = 0; col < m.cols && s.rank < m.rows; ++col) {
        std::size_t piv = s.rank;
        while (piv < m.rows && ops.is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows) continue;
        if (piv != s.rank)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(s.rank, j), m.at(piv, j));
        auto inv_p = ops.inv(m.at(s.rank, col));
        for (std::size_t j = col; j < m.cols; ++j)
            m.at(s.rank, j) = ops.mul(m.at(s.rank, j), inv_p);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == s.rank || ops.is_zero(m.at(r, col))) continue;
            auto f = m.at(r, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(r, j) = ops.sub(m.at(r, j), ops.mul(f, m.at(s.rank, j)));
        }
        s.pivot_cols.push_back(col);
        ++s.rank;
    }
    return s;
}

// ---- Gauss-Jordan inverse -------------------------------------------------

/// Inverts the square matrix held in the left half of an n x 2n augmented
/// scratch. Returns false when singular (caller reports rank separately).
template <class Ops>
bool invert_in_place(Dense<Ops>& aug, std::size_t n, const Ops& ops) {
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && ops.is_zero(aug.at(piv, col))) ++piv;
        if (piv == n) return false;
        if (piv != col)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(col, j), aug.at(piv, j));
        auto inv_p = ops.inv(aug.at(col, col));
        for (std::size_t j = 0; j < 2 * n; ++j)
            aug.at(col, j) = ops.mul(aug.at(col, j), inv_p);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || ops.is_zero(aug.at(r, col))) continue;
            auto f = aug.at(r, col);
            for (std::size_t j = 0; j < 2 * n; ++j)
                aug.at(r, j) = ops.sub(aug.at(r, j), ops.mul(f, aug.at(col, j)));
        }
    }
    return true;
}

// ---- GF(2) bit rows --------------------------------------------------------

/// Rank of rows given as bitmasks (column j = bit j).
inline std::size_t rank_bits(const std::vector<std::uint64_t>& rows) {
    std::uint64_t basis[64] = {};
    std::size_t rank = 0;
    for (std::uint64_t row : rows) {
        while (row != 0) {
            unsigned b = 63u - unsigned(std::countl_zero(row));
            if (basis[b] == 0) {
                basis[b] = row;
                ++rank;
                break;
            }
            row ^= basis[b];
        }
    }
    return rank;
}

/// Submatrix of bit rows: keeps rows whose index bit is in row_mask and
/// columns in col_mask, compacting both to the low bits.
inline void compact_bits(const std::vector<std::uint64_t>& rows, std::uint64_t row_mask,
                         std::uint64_t col_mask, std::vector<std::uint64_t>& out) {
    out.clear();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if ((row_mask >> i & 1) == 0) continue;
        std::uint64_t packed = 0;
        unsigned k = 0;
        for (std::uint64_t m = col_mask; m != 0; m &= m - 1)
            packed |= (rows[i] >> std::countr_zero(m) & 1) << k++;
        out.push_back(packed);
    }
}

inline std::vector<std::uint64_t> compact_bits(const std::vector<std::uint64_t>& rows,
                                               std::uint64_t row_mask, std::uint64_t col_mask) {
    std::vector<std::uint64_t> out;
    compact_bits(rows, row_mask, col_mask, out);
    return out;
}

/// y = A x over GF(2); x and y are bitmasks over columns resp. rows.
inline std::uint64_t apply_bits(const std::vector<std::uint64_t>& rows, std::uint64_t x) {
    std::uint64_t y = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        y |= std::uint64_t(std::popcount(rows[i] & x) & 1) << i;
    return y;
}

/// X * Y over GF(2), bit j of an X row selecting row j of Y.
inline std::vector<std::uint64_t> mul_bits(const std::vector<std::uint64_t>& x,
                                           const std::vector<std::uint64_t>& y) {
    std::vector<std::uint64_t> out(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::uint64_t m = x[i]; m != 0; m &= m - 1)
            out[i] ^= y[std::size_t(std::countr_zero(m))];
    return out;
}

/// Inverse of a square bit matrix (n <= 32), empty optional if singular.
inline std::optional<std::vector<std::uint64_t>> invert_bits(std::vector<std::uint64_t> m,
                                                             std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) m[i] |= std::uint64_t(1) << (n + i);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && (m[piv] >> col & 1) == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        for (std::size_t r = 0; r < n; ++r)
            if (r != col && (m[r] >> col & 1)) m[r] ^= m[col];
    }
    for (std::size_t i = 0; i < n; ++i) m[i] >>= n;
    return m;
}

/// Principal pivot transform of an n x n GF(2) bit matrix on the pivot set
/// z_mask, empty optional if the pivot block is singular.
inline std::optional<std::vector<std::uint64_t>> ppt_bits(const std::vector<std::uint64_t>& rows,
                                                          std::size_t n, std::uint64_t z_mask) {
    std::uint64_t w_mask = ((n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1)) & ~z_mask;
    auto block = compact_bits(rows, z_mask, z_mask);
    auto inv = invert_bits(block, block.size());
    if (!inv) return std::nullopt;
    auto top_right = mul_bits(*inv, compact_bits(rows, z_mask, w_mask));
    auto bottom_left = mul_bits(compact_bits(rows, w_mask, z_mask), *inv);
    auto bottom_right = compact_bits(rows, w_mask, w_mask);
    {
        auto schur = mul_bits(bottom_left, compact_bits(rows, z_mask, w_mask));
        for (std::size_t i = 0; i < bottom_right.size(); ++i) bottom_right[i] ^= schur[i];
    }
    std::vector<std::size_t> zpos, wpos;
    for (std::size_t j = 0; j < n; ++j) (z_mask >> j & 1 ? zpos : wpos).push_back(j);
    auto scatter = [](std::uint64_t packed, const std::vector<std::size_t>& pos) {
        std::uint64_t out = 0;
        for (std::size_t k = 0; k < pos.size(); ++k) out |= (packed >> k & 1) << pos[k];
        return out;
    };
    std::vector<std::uint64_t> out(n, 0);
    for (std::size_t i = 0; i < zpos.size(); ++i)
        out[zpos[i]] = scatter((*inv)[i], zpos) | scatter(top_right[i], wpos);
    for (std::size_t i = 0; i < wpos.size(); ++i)
        out[wpos[i]] = scatter(bottom_left[i], zpos) | scatter(bottom_right[i], wpos);
    return out;
}

// ---- extraction from LabeledMatrix ----------------------------------------

/// Residue rows of a prime-field matrix in canonical order.
inline void to_residues(const LabeledMatrix& A, Dense<GfOps>& out, const GfOps& ops) {
    out.resize(A.row_labels().size(), A.col_labels().size(), ops);
    for (std::size_t i = 0; i < out.rows; ++i)
        for (std::size_t j = 0; j < out.cols; ++j)
            out.at(i, j) = A.entry(i, j).residue_value();
}

inline void to_rationals(const LabeledMatrix& A, Dense<RatOps>& out, const RatOps& ops) {
    out.resize(A.row_labels().size(), A.col_labels().size(), ops);
    for (std::size_t i = 0; i < out.rows; ++i)
        for (std::size_t j = 0; j < out.cols; ++j)
            out.at(i, j) = A.entry(i, j).rational_value();
}

/// GF(2) rows as bitmasks. Requires at most 64 columns.
inline std::vector<std::uint64_t> to_bit_rows(const LabeledMatrix& A) {
    std::vector<std::uint64_t> rows(A.row_labels().size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < A.col_labels().size(); ++j)
            if (!A.entry(i, j).is_zero()) rows[i] |= std::uint64_t(1) << j;
    return rows;
}

// ---- all-pairs submatrix nullity -------------------------------------------

/// Calls visit(x_mask, nullity(A[X, X])) for every subset of the (square)
/// label set, masks over canonical order.
template <class Fn>
void for_each_principal_nullity(const LabeledMatrix& A, Fn&& visit);

/// Calls visit(x_mask, y_mask, nullity(A[X, Y])) for every pair of subsets of
/// the row and column label sets, masks taken over canonical label order.
/// One scratch buffer per call; entries of A are read once up front.
template <class Fn>
void for_each_submatrix_nullity(const LabeledMatrix& A, Fn&& visit) {
    const std::size_t nr = A.row_labels().size();
    const std::size_t nc = A.col_labels().size();
    const std::uint64_t xlim = std::uint64_t(1) << nr;
    const std::uint64_t ylim = std::uint64_t(1) << nc;

    if (A.field().kind() == FieldKind::GF2) {
        std::vector<std::uint64_t> base = to_bit_rows(A);
        std::vector<std::uint64_t> scratch;
        scratch.reserve(nr);
        for (std::uint64_t x = 0; x < xlim; ++x) {
            for (std::uint64_t y = 0; y < ylim; ++y) {
                scratch.clear();
                for (std::size_t i = 0; i < nr; ++i)
                    if (x & (std::uint64_t(1) << i)) scratch.push_back(base[i] & y);
                std::size_t r = rank_bits(scratch);
                visit(x, y, std::size_t(std::popcount(y)) - r);
            }
        }
        return;
    }

    if (A.field().kind() == FieldKind::GFp) {
        GfOps ops{A.field().modulus()};
        Dense<GfOps> base;
        to_residues(A, base, ops);
        Dense<GfOps> scratch;
        scratch.a.reserve(nr * nc);
        for (std::uint64_t x = 0; x < xlim; ++x) {
            for (std::uint64_t y = 0; y < ylim; ++y) {
                std::size_t sr = std::size_t(std::popcount(x));
                std::size_t sc = std::size_t(std::popcount(y));
                scratch.resize(sr, sc, ops);
                std::size_t si = 0;
                for (std::size_t i = 0; i < nr; ++i) {
                    if (!(x & (std::uint64_t(1) << i))) continue;
                    std::size_t sj = 0;
                    for (std::size_t j = 0; j < nc; ++j) {
                        if (!(y & (std::uint64_t(1) << j))) continue;
                        scratch.at(si, sj) = base.at(i, j);
                        ++sj;
                    }
                    ++si;
                }
                visit(x, y, sc - rank_in_place(scratch, ops));
            }
        }
        return;
    }

    RatOps ops;
    Dense<RatOps> base;
    to_rationals(A, base, ops);
    Dense<RatOps> scratch;
    scratch.resize(nr, nc, ops); // allocate limbs once, then only assign
    for (std::uint64_t x = 0; x < xlim; ++x) {
        for (std::uint64_t y = 0; y < ylim; ++y) {
            std::size_t sr = std::size_t(std::popcount(x));
            std::size_t sc = std::size_t(std::popcount(y));
            scratch.rows = sr;
            scratch.cols = sc;
            std::size_t si = 0;
            for (std::size_t i = 0; i < nr; ++i) {
                if (!(x & (std::uint64_t(1) << i))) continue;
                std::size_t sj = 0;
                for (std::size_t j = 0; j < nc; ++j) {
                    if (!(y & (std::uint64_t(1) << j))) continue;
                    scratch.a[si * sc + sj] = base.at(i, j);
                    ++sj;
                }
                ++si;
            }
            visit(x, y, sc - rank_in_place(scratch, ops));
        }
    }
}

template <class Fn>
void for_each_principal_nullity(const LabeledMatrix& A, Fn&& visit) {
    const std::size_t n = A.row_labels().size();
    const std::uint64_t lim = std::uint64_t(1) << n;

    if (A.field().kind() == FieldKind::GF2) {
        std::vector<std::uint64_t> base = to_bit_rows(A);
        std::vector<std::uint64_t> scratch;
        scratch.reserve(n);
        for (std::uint64_t x = 0; x < lim; ++x) {
            scratch.clear();
            for (std::size_t i = 0; i < n; ++i)
                if (x & (std::uint64_t(1) << i)) scratch.push_back(base[i] & x);
            visit(x, std::size_t(std::popcount(x)) - rank_bits(scratch));
        }
        return;
    }

    auto run = [&](auto ops) {
        Dense<decltype(ops)> base;
        Dense<decltype(ops)> scratch;
        if constexpr (std::is_same_v<decltype(ops), RatOps>)
            to_rationals(A, base, ops);
        else
            to_residues(A, base, ops);
        scratch.resize(n, n, ops);
        for (std::uint64_t x = 0; x < lim; ++x) {
            std::size_t s = std::size_t(std::popcount(x));
            scratch.rows = s;
            scratch.cols = s;
            std::size_t si = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (!(x & (std::uint64_t(1) << i))) continue;
                std::size_t sj = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (!(x & (std::uint64_t(1) << j))) continue;
                    scratch.a[si * s + sj] = base.at(i, j);
                    ++sj;
                }
                ++si;
            }
            visit(x, s - rank_in_place(scratch, ops));
        }
    };
    if (A.field().kind() == FieldKind::Rational)
        run(RatOps{});
    else
        run(GfOps{A.field().modulus()});
}

} // namespace pivot::detail
