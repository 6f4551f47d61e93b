#include "pivot/harness.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pivot/errors.hpp"
#include "pivot/graph.hpp"
#include "pivot/labeled_matrix.hpp"
#include "pivot/nullity.hpp"
#include "pivot/nullity_polynomial.hpp"
#include "pivot/ppt.hpp"
#include "pivot/text_format.hpp"

#include "elim.hpp"

namespace pivot {

// splitmix64: tiny, fully specified, identical stream on every platform.
std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    std::uint64_t skip = (std::uint64_t(0) - bound) % bound;
    std::uint64_t r;
    do {
        r = next();
    } while (r < skip);
    return r % bound;
}

long Rng::integer(long lo, long hi) {
    return lo + long(below(std::uint64_t(hi - lo) + 1));
}

namespace {

using detail::apply_bits;
using detail::ppt_bits;
using detail::rank_bits;

std::uint64_t mix_seed(std::uint64_t seed, std::string_view name) {
    std::uint64_t h = 14695981039346656037ull;
    for (char c : name) {
        h ^= std::uint64_t(static_cast<unsigned char>(c));
        h *= 1099511628211ull;
    }
    return h ^ seed;
}

LabelSet letters(std::size_t n) {
    std::vector<Label> ls;
    ls.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ls.emplace_back(std::string(1, char('a' + i)));
    return LabelSet(std::move(ls));
}

std::uint64_t full_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
}

LabelSet mask_subset(const LabelSet& V, std::uint64_t mask) {
    std::vector<Label> ls;
    for (std::size_t i = 0; i < V.size(); ++i)
        if (mask >> i & 1) ls.push_back(V.at(i));
    return LabelSet(std::move(ls));
}

std::uint64_t mask_of(const LabelSet& V, const LabelSet& S) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < V.size(); ++i)
        if (S.contains(V.at(i))) m |= std::uint64_t(1) << i;
    return m;
}

std::string mask_str(std::size_t n, std::uint64_t mask) {
    return mask_subset(letters(n), mask).str();
}

std::size_t size_cap(const HarnessConfig& cfg, std::size_t fallback) {
    return cfg.max_size == 0 ? fallback : std::min(fallback, cfg.max_size);
}

std::size_t sample_count(const HarnessConfig& cfg, std::size_t fallback) {
    return cfg.samples == 0 ? fallback : cfg.samples;
}

bool has_gf2(const HarnessConfig& cfg) {
    return std::find(cfg.fields.begin(), cfg.fields.end(), FieldDescriptor::gf2()) !=
           cfg.fields.end();
}

// ---- random instances ------------------------------------------------------

FieldValue random_value(Rng& rng, const FieldDescriptor& d) {
    if (d.kind() == FieldKind::Rational)
        return FieldValue::fraction(rng.integer(-4, 4), rng.integer(1, 4));
    return FieldValue::residue(d, rng.below(d.modulus()));
}

LabeledMatrix random_matrix(Rng& rng, const FieldDescriptor& d, const LabelSet& rows,
                            const LabelSet& cols) {
    LabeledMatrix A(d, rows, cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) A.set_entry(i, j, random_value(rng, d));
    return A;
}

LabeledVector random_vector(Rng& rng, const FieldDescriptor& d, const LabelSet& labels) {
    LabeledVector v(d, labels);
    for (std::size_t i = 0; i < labels.size(); ++i) v.set_entry(i, random_value(rng, d));
    return v;
}

SimpleGraph random_graph(Rng& rng, std::size_t n) {
    LabelSet V = letters(n);
    std::vector<std::pair<Label, Label>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.flip()) edges.emplace_back(V.at(i), V.at(j));
    return SimpleGraph(V, edges);
}

/// Masks Z with nonsingular A[Z,Z], ascending.
std::vector<std::uint64_t> valid_pivot_masks(const LabeledMatrix& A) {
    std::vector<std::uint64_t> out;
    detail::for_each_principal_nullity(A, [&](std::uint64_t x, std::size_t nul) {
        if (nul == 0) out.push_back(x);
    });
    std::sort(out.begin(), out.end());
    return out;
}

LabelSet random_valid_pivot(Rng& rng, const LabeledMatrix& A) {
    const LabelSet& V = A.row_labels();
    for (int t = 0; t < 32; ++t) {
        LabelSet Z = mask_subset(V, rng.below(full_mask(V.size()) + 1));
        if (A.submatrix(Z, Z).rank() == Z.size()) return Z;
    }
    return LabelSet();
}

/// nullity(A[X,Y]) for every mask pair, indexed (x << n) | y.
std::vector<std::uint8_t> nullity_table(const LabeledMatrix& A) {
    std::size_t n = A.row_labels().size();
    std::vector<std::uint8_t> t(std::size_t(1) << (2 * n), 0);
    detail::for_each_submatrix_nullity(A, [&](std::uint64_t x, std::uint64_t y, std::size_t nul) {
        t[(x << n) | y] = std::uint8_t(nul);
    });
    return t;
}

std::optional<LabeledMatrix> try_ppt(const LabeledMatrix& A, const LabelSet& Z) {
    try {
        return ppt(A, Z);
    } catch (const PivotSingular&) {
        return std::nullopt;
    }
}

std::optional<LabeledMatrix> try_inverse(const LabeledMatrix& M) {
    try {
        return M.inverse();
    } catch (const Singular&) {
        return std::nullopt;
    }
}

// ---- counterexample rendering ----------------------------------------------

void put_line(std::string& out, std::string_view key, const std::string& value) {
    out += key;
    out += ": ";
    out += value;
    out += '\n';
}

void put_block(std::string& out, std::string_view key, const std::string& body) {
    out += key;
    out += ":\n";
    std::istringstream in(body);
    for (std::string line; std::getline(in, line);) {
        out += "  ";
        out += line;
        out += '\n';
    }
}

std::string join_labels(const std::vector<Label>& ls) {
    std::string out;
    for (const Label& l : ls) {
        if (!out.empty()) out += ' ';
        out += l.name();
    }
    return out.empty() ? std::string("(none)") : out;
}

template <class Render>
void record(SuiteResult& res, bool ok, Render&& render) {
    ++res.total;
    if (ok) {
        ++res.passed;
        return;
    }
    if (res.counterexamples.size() < 3) res.counterexamples.push_back(render());
}

// ---- GF(2) bit-level plumbing ----------------------------------------------

LabeledMatrix matrix_from_bits(const std::vector<std::uint64_t>& rows, std::size_t r,
                               std::size_t c) {
    auto gf2 = FieldDescriptor::gf2();
    LabeledMatrix A(gf2, letters(r), letters(c));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rows[i] >> j & 1) A.set_entry(i, j, FieldValue::one(gf2));
    return A;
}

LabeledVector vector_from_bits(std::uint64_t x, std::size_t n) {
    auto gf2 = FieldDescriptor::gf2();
    LabeledVector v(gf2, letters(n));
    for (std::size_t i = 0; i < n; ++i)
        if (x >> i & 1) v.set_entry(i, FieldValue::one(gf2));
    return v;
}

/// All n x n GF(2) matrices as bit rows, n from 0 through max_n.
template <class Fn>
void for_each_bit_matrix(std::size_t max_n, Fn&& fn) {
    for (std::size_t n = 0; n <= max_n; ++n) {
        std::uint64_t count = std::uint64_t(1) << (n * n);
        std::vector<std::uint64_t> rows(n, 0);
        for (std::uint64_t m = 0; m < count; ++m) {
            for (std::size_t i = 0; i < n; ++i) rows[i] = (m >> (i * n)) & full_mask(n);
            fn(n, rows);
        }
    }
}

struct BitScratch {
    std::vector<std::uint64_t> sub;

    bool valid_pivot(const std::vector<std::uint64_t>& rows, std::uint64_t z) {
        detail::compact_bits(rows, z, z, sub);
        return rank_bits(sub) == sub.size();
    }

    std::size_t nullity(const std::vector<std::uint64_t>& rows, std::uint64_t x,
                        std::uint64_t y) {
        detail::compact_bits(rows, x, y, sub);
        return std::size_t(std::popcount(y)) - rank_bits(sub);
    }
};

// ---- rank oracle -------------------------------------------------------

template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

FieldValue minor_det(const LabeledMatrix& A, const std::vector<std::size_t>& rs,
                     const std::vector<std::size_t>& cs) {
    std::size_t k = rs.size();
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    FieldValue acc = FieldValue::zero(A.field());
    do {
        FieldValue term = FieldValue::one(A.field());
        for (std::size_t i = 0; i < k; ++i) term = term * A.entry(rs[i], cs[perm[i]]);
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inversions;
        acc = inversions % 2 == 0 ? acc + term : acc - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

/// Largest order of a nonzero minor, determinants by permutation expansion.
/// Shares nothing with the elimination code, so it can referee it.
std::size_t oracle_rank(const LabeledMatrix& A) {
    std::size_t nr = A.row_labels().size();
    std::size_t nc = A.col_labels().size();
    for (std::size_t k = std::min(nr, nc); k >= 1; --k) {
        bool found = false;
        for_each_combination(nr, k, [&](const std::vector<std::size_t>& rs) {
            if (found) return;
            for_each_combination(nc, k, [&](const std::vector<std::size_t>& cs) {
                if (!found && !minor_det(A, rs, cs).is_zero()) found = true;
            });
        });
        if (found) return k;
    }
    return 0;
}

/// GF(2) oracle: a column set is independent iff no nonempty subset XORs
/// to zero; the rank is the largest independent set.
std::size_t oracle_rank_bits(const std::vector<std::uint64_t>& rows, std::size_t ncols) {
    std::vector<std::uint64_t> cols(ncols, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            if (rows[i] >> j & 1) cols[j] |= std::uint64_t(1) << i;
    std::size_t best = 0;
    std::uint64_t all = full_mask(ncols);
    for (std::uint64_t s = 0;; ++s) {
        if (std::size_t(std::popcount(s)) > best) {
            bool indep = true;
            for (std::uint64_t t = s; t != 0; t = (t - 1) & s) {
                std::uint64_t acc = 0;
                for (std::uint64_t m = t; m != 0; m &= m - 1)
                    acc ^= cols[std::size_t(std::countr_zero(m))];
                if (acc == 0) {
                    indep = false;
                    break;
                }
            }
            if (indep) best = std::size_t(std::popcount(s));
        }
        if (s == all) break;
    }
    return best;
}

// ---- suites ------------------------------------------------------------

void suite_rank_oracle(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    std::size_t dim = size_cap(cfg, 4);
    if (has_gf2(cfg)) {
        std::vector<std::uint64_t> rows;
        for (std::size_t r = 0; r <= dim; ++r) {
            for (std::size_t c = 0; c <= dim; ++c) {
                std::uint64_t count = std::uint64_t(1) << (r * c);
                rows.assign(r, 0);
                for (std::uint64_t m = 0; m < count; ++m) {
                    for (std::size_t i = 0; i < r; ++i) rows[i] = (m >> (i * c)) & full_mask(c);
                    record(res, rank_bits(rows) == oracle_rank_bits(rows, c), [&] {
                        std::string ce;
                        put_block(ce, "matrix", print_matrix(matrix_from_bits(rows, r, c)));
                        put_line(ce, "elimination rank", std::to_string(rank_bits(rows)));
                        put_line(ce, "oracle rank", std::to_string(oracle_rank_bits(rows, c)));
                        return ce;
                    });
                }
            }
        }
    }
    for (const auto& d : cfg.fields) {
        if (d == FieldDescriptor::gf2()) continue;
        std::size_t count = sample_count(cfg, 200);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t r = 1 + std::size_t(rng.below(dim));
            std::size_t c = 1 + std::size_t(rng.below(dim));
            LabeledMatrix A = random_matrix(rng, d, letters(r), letters(c));
            record(res, A.rank() == oracle_rank(A), [&] {
                std::string ce;
                put_block(ce, "matrix", print_matrix(A));
                put_line(ce, "elimination rank", std::to_string(A.rank()));
                put_line(ce, "oracle rank", std::to_string(oracle_rank(A)));
                return ce;
            });
        }
    }
}

void suite_partial_inverse(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    if (has_gf2(cfg)) {
        BitScratch bs;
        for_each_bit_matrix(size_cap(cfg, 3), [&](std::size_t n,
                                                  const std::vector<std::uint64_t>& rows) {
            std::uint64_t all = full_mask(n);
            for (std::uint64_t z = 0;; ++z) {
                if (bs.valid_pivot(rows, z)) {
                    auto B = ppt_bits(rows, n, z);
                    for (std::uint64_t x = 0;; ++x) {
                        std::uint64_t y = apply_bits(rows, x);
                        std::uint64_t in = (y & z) | (x & ~z);
                        std::uint64_t out = (x & z) | (y & ~z);
                        record(res, B && apply_bits(*B, in) == out, [&] {
                            std::string ce;
                            put_block(ce, "matrix", print_matrix(matrix_from_bits(rows, n, n)));
                            put_line(ce, "Z", mask_str(n, z));
                            put_line(ce, "x", vector_from_bits(x, n).str());
                            return ce;
                        });
                        if (x == all) break;
                    }
                }
                if (z == all) break;
            }
        });
    }
    for (const auto& d : cfg.fields) {
        std::size_t count = sample_count(cfg, 500);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t n = 1 + std::size_t(rng.below(size_cap(cfg, 6)));
            LabelSet V = letters(n);
            LabeledMatrix A = random_matrix(rng, d, V, V);
            LabelSet Z = random_valid_pivot(rng, A);
            LabeledVector x = random_vector(rng, d, V);
            record(res, check_partial_inverse(A, Z, x), [&] {
                std::string ce;
                put_block(ce, "matrix", print_matrix(A));
                put_line(ce, "Z", Z.str());
                put_line(ce, "x", x.str());
                return ce;
            });
        }
    }
}

void suite_ppt_involution(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    if (has_gf2(cfg)) {
        BitScratch bs;
        for_each_bit_matrix(size_cap(cfg, 3), [&](std::size_t n,
                                                  const std::vector<std::uint64_t>& rows) {
            std::uint64_t all = full_mask(n);
            LabeledMatrix A = matrix_from_bits(rows, n, n);
            for (std::uint64_t z = 0;; ++z) {
                if (bs.valid_pivot(rows, z)) {
                    auto B = ppt_bits(rows, n, z);
                    // also pin the bit path to the label-level implementation
                    auto lm = try_ppt(A, mask_subset(A.row_labels(), z));
                    bool mirror = B && lm && detail::to_bit_rows(*lm) == *B;
                    std::optional<std::vector<std::uint64_t>> C;
                    if (B) C = ppt_bits(*B, n, z);
                    record(res, mirror && C && *C == rows, [&] {
                        std::string ce;
                        put_block(ce, "matrix", print_matrix(A));
                        put_line(ce, "Z", mask_str(n, z));
                        return ce;
                    });
                }
                if (z == all) break;
            }
        });
    }
    for (const auto& d : cfg.fields) {
        std::size_t count = sample_count(cfg, 200);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t n = 1 + std::size_t(rng.below(size_cap(cfg, 6)));
            LabelSet V = letters(n);
            LabeledMatrix A = random_matrix(rng, d, V, V);
            LabelSet Z = random_valid_pivot(rng, A);
            auto B = try_ppt(A, Z);
            std::optional<LabeledMatrix> C;
            if (B) C = try_ppt(*B, Z);
            record(res, C && *C == A, [&] {
                std::string ce;
                put_block(ce, "matrix", print_matrix(A));
                put_line(ce, "Z", Z.str());
                return ce;
            });
        }
    }
}

void suite_ppt_composition(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    if (has_gf2(cfg)) {
        BitScratch bs;
        for_each_bit_matrix(size_cap(cfg, 3), [&](std::size_t n,
                                                  const std::vector<std::uint64_t>& rows) {
            std::uint64_t all = full_mask(n);
            for (std::uint64_t x = 0;; ++x) {
                if (bs.valid_pivot(rows, x)) {
                    auto B = ppt_bits(rows, n, x);
                    for (std::uint64_t y = 0;; ++y) {
                        if (B && bs.valid_pivot(*B, y)) {
                            auto C = ppt_bits(*B, n, y);
                            auto D = ppt_bits(rows, n, x ^ y);
                            record(res, C && D && *C == *D, [&] {
                                std::string ce;
                                put_block(ce, "matrix",
                                          print_matrix(matrix_from_bits(rows, n, n)));
                                put_line(ce, "X", mask_str(n, x));
                                put_line(ce, "Y", mask_str(n, y));
                                return ce;
                            });
                        }
                        if (y == all) break;
                    }
                }
                if (x == all) break;
            }
        });
    }
    for (const auto& d : cfg.fields) {
        std::size_t count = sample_count(cfg, 200);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t n = 1 + std::size_t(rng.below(size_cap(cfg, 6)));
            LabelSet V = letters(n);
            LabeledMatrix A = random_matrix(rng, d, V, V);
            LabelSet X = random_valid_pivot(rng, A);
            auto B = try_ppt(A, X);
            if (!B) {
                record(res, false, [&] {
                    std::string ce;
                    put_block(ce, "matrix", print_matrix(A));
                    put_line(ce, "X", X.str());
                    return ce;
                });
                continue;
            }
            LabelSet Y = random_valid_pivot(rng, *B);
            auto C = try_ppt(*B, Y);
            auto D = try_ppt(A, X.sym_difference(Y));
            record(res, C && D && *C == *D, [&] {
                std::string ce;
                put_block(ce, "matrix", print_matrix(A));
                put_line(ce, "X", X.str());
                put_line(ce, "Y", Y.str());
                return ce;
            });
        }
    }
}

void suite_sharp_inverse(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    auto check_one = [&](const LabeledMatrix& A, const LabelSet& Z) {
        auto lhs = try_inverse(sharp(A, Z));
        auto B = try_ppt(A, Z);
        record(res, lhs && B && *lhs == sharp(*B, Z), [&] {
            std::string ce;
            put_block(ce, "matrix", print_matrix(A));
            put_line(ce, "Z", Z.str());
            return ce;
        });
    };
    if (has_gf2(cfg)) {
        BitScratch bs;
        for_each_bit_matrix(size_cap(cfg, 3), [&](std::size_t n,
                                                  const std::vector<std::uint64_t>& rows) {
            std::uint64_t all = full_mask(n);
            LabeledMatrix A = matrix_from_bits(rows, n, n);
            for (std::uint64_t z = 0;; ++z) {
                if (bs.valid_pivot(rows, z)) check_one(A, mask_subset(A.row_labels(), z));
                if (z == all) break;
            }
        });
    }
    for (const auto& d : cfg.fields) {
        std::size_t count = sample_count(cfg, 200);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t n = 1 + std::size_t(rng.below(size_cap(cfg, 6)));
            LabelSet V = letters(n);
            LabeledMatrix A = random_matrix(rng, d, V, V);
            check_one(A, random_valid_pivot(rng, A));
        }
    }
}

void suite_full_inverse(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    auto check_one = [&](const LabeledMatrix& A) {
        const LabelSet& V = A.row_labels();
        auto B = try_ppt(A, V);
        auto inv = try_inverse(A);
        record(res,
               B && inv && *B == *inv && A * *B == LabeledMatrix::identity(V, A.field()),
               [&] {
                   std::string ce;
                   put_block(ce, "matrix", print_matrix(A));
                   return ce;
               });
    };
    if (has_gf2(cfg)) {
        for_each_bit_matrix(size_cap(cfg, 3), [&](std::size_t n,
                                                  const std::vector<std::uint64_t>& rows) {
            if (rank_bits(rows) == n) check_one(matrix_from_bits(rows, n, n));
        });
    }
    for (const auto& d : cfg.fields) {
        std::size_t count = sample_count(cfg, 200);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t n = 1 + std::size_t(rng.below(size_cap(cfg, 6)));
            LabelSet V = letters(n);
            for (int t = 0; t < 32; ++t) {
                LabeledMatrix A = random_matrix(rng, d, V, V);
                if (A.rank() == n) {
                    check_one(A);
                    break;
                }
            }
        }
    }
}

void suite_pair_correspondence(const HarnessConfig& cfg, Rng&, SuiteResult& res) {
    for (std::size_t n = 0; n <= size_cap(cfg, 4); ++n) {
        LabelSet V = letters(n);
        std::uint64_t all = full_mask(n);
        std::vector<char> seen;
        for (std::uint64_t z = 0;; ++z) {
            LabelSet Z = mask_subset(V, z);
            seen.assign(std::size_t(1) << (2 * n), 0);
            bool ok = true;
            std::string detail_line;
            std::uint64_t bad_x = 0, bad_y = 0;
            for (std::uint64_t x = 0; ok;) {
                for (std::uint64_t y = 0; ok;) {
                    LabelSet X = mask_subset(V, x);
                    LabelSet Y = mask_subset(V, y);
                    auto [X2, Y2] = f_Z(X, Y, Z);
                    auto [X3, Y3] = f_Z(X2, Y2, Z);
                    std::uint64_t key = (mask_of(V, X2) << n) | mask_of(V, Y2);
                    if (X3 != X || Y3 != Y) {
                        ok = false;
                        detail_line = "applying the correspondence twice does not return "
                                      "the original pair";
                        bad_x = x;
                        bad_y = y;
                    } else if (seen[key]) {
                        ok = false;
                        detail_line = "two pairs map to the same image";
                        bad_x = x;
                        bad_y = y;
                    }
                    seen[key] = 1;
                    if (y == all) break;
                    ++y;
                }
                if (x == all) break;
                ++x;
            }
            record(res, ok, [&] {
                std::string ce;
                put_line(ce, "V", V.str());
                put_line(ce, "Z", Z.str());
                put_line(ce, "X", mask_str(n, bad_x));
                put_line(ce, "Y", mask_str(n, bad_y));
                put_line(ce, "reason", detail_line);
                return ce;
            });
            if (z == all) break;
        }
    }
}

void suite_nullity_equality(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    for (const auto& d : cfg.fields) {
        std::size_t count = sample_count(cfg, 50);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t n = 1 + std::size_t(rng.below(size_cap(cfg, 5)));
            LabelSet V = letters(n);
            LabeledMatrix A = random_matrix(rng, d, V, V);
            auto TA = nullity_table(A);
            std::uint64_t all = full_mask(n);
            for (std::uint64_t z = 0;; ++z) {
                if (TA[(z << n) | z] != 0) {
                    if (z == all) break;
                    continue;
                }
                LabelSet Z = mask_subset(V, z);
                auto B = try_ppt(A, Z);
                if (!B) {
                    record(res, false, [&] {
                        std::string ce;
                        put_block(ce, "matrix", print_matrix(A));
                        put_line(ce, "Z", Z.str());
                        put_line(ce, "reason", "pivot reported singular on a nonsingular block");
                        return ce;
                    });
                    if (z == all) break;
                    continue;
                }
                auto TB = nullity_table(*B);
                bool ok = true;
                std::uint64_t bad_x = 0, bad_y = 0;
                for (std::uint64_t x = 0; ok;) {
                    for (std::uint64_t y = 0; ok;) {
                        std::uint64_t r = z & ~(x ^ y);
                        if (TB[(x << n) | y] != TA[((x ^ r) << n) | (y ^ r)]) {
                            ok = false;
                            bad_x = x;
                            bad_y = y;
                        }
                        if (y == all) break;
                        ++y;
                    }
                    if (x == all) break;
                    ++x;
                }
                for (int k = 0; k < 3 && ok; ++k) {
                    std::uint64_t x = rng.below(all + 1);
                    std::uint64_t y = rng.below(all + 1);
                    if (!check_nullity_equality(A, Z, mask_subset(V, x), mask_subset(V, y))) {
                        ok = false;
                        bad_x = x;
                        bad_y = y;
                    }
                }
                record(res, ok, [&] {
                    std::uint64_t r = z & ~(bad_x ^ bad_y);
                    std::string ce;
                    put_block(ce, "matrix", print_matrix(A));
                    put_line(ce, "Z", Z.str());
                    put_line(ce, "X", mask_str(n, bad_x));
                    put_line(ce, "Y", mask_str(n, bad_y));
                    put_line(ce, "lhs nullity", std::to_string(TB[(bad_x << n) | bad_y]));
                    put_line(ce, "rhs nullity",
                             std::to_string(TA[((bad_x ^ r) << n) | (bad_y ^ r)]));
                    return ce;
                });
                if (z == all) break;
            }
        }
    }
}

void suite_kernel_equality(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    for (const auto& d : cfg.fields) {
        std::size_t count = sample_count(cfg, 50);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t n = 1 + std::size_t(rng.below(size_cap(cfg, 4)));
            LabelSet V = letters(n);
            LabeledMatrix A = random_matrix(rng, d, V, V);
            std::uint64_t all = full_mask(n);
            for (std::uint64_t z : valid_pivot_masks(A)) {
                LabelSet Z = mask_subset(V, z);
                auto B = try_ppt(A, Z);
                std::optional<LabeledMatrix> SHI;
                if (B) SHI = try_inverse(sharp(A, Z));
                if (!B || !SHI) {
                    record(res, false, [&] {
                        std::string ce;
                        put_block(ce, "matrix", print_matrix(A));
                        put_line(ce, "Z", Z.str());
                        put_line(ce, "reason", "pivot or sharp inverse undefined");
                        return ce;
                    });
                    continue;
                }
                bool ok = true;
                std::uint64_t bad_x = 0, bad_y = 0;
                std::string reason;
                for (std::uint64_t x = 0; ok;) {
                    for (std::uint64_t y = 0; ok;) {
                        std::uint64_t r = z & ~(x ^ y);
                        LabelSet X = mask_subset(V, x);
                        LabelSet Y = mask_subset(V, y);
                        LabelSet Xr = mask_subset(V, x ^ r);
                        LabelSet Yr = mask_subset(V, y ^ r);
                        auto lhs = B->submatrix(X, Y).kernel_basis();
                        auto rhs = A.submatrix(Xr, Yr).kernel_basis();
                        if (lhs.dimension() != rhs.dimension()) {
                            ok = false;
                            reason = "kernel dimensions differ";
                            bad_x = x;
                            bad_y = y;
                        } else {
                            LabeledMatrix T = SHI->submatrix(Yr, Y);
                            std::vector<LabeledVector> moved;
                            moved.reserve(lhs.vectors.size());
                            for (const auto& v : lhs.vectors) moved.push_back(T.apply(v));
                            if (!same_span(moved, rhs.vectors)) {
                                ok = false;
                                reason = "transported kernel basis spans a different space";
                                bad_x = x;
                                bad_y = y;
                            }
                        }
                        if (y == all) break;
                        ++y;
                    }
                    if (x == all) break;
                    ++x;
                }
                for (int k = 0; k < 2 && ok; ++k) {
                    std::uint64_t x = rng.below(all + 1);
                    std::uint64_t y = rng.below(all + 1);
                    if (!check_kernel_equality(A, Z, mask_subset(V, x), mask_subset(V, y))) {
                        ok = false;
                        reason = "check_kernel_equality rejected the pair";
                        bad_x = x;
                        bad_y = y;
                    }
                }
                record(res, ok, [&] {
                    std::string ce;
                    put_block(ce, "matrix", print_matrix(A));
                    put_line(ce, "Z", Z.str());
                    put_line(ce, "X", mask_str(n, bad_x));
                    put_line(ce, "Y", mask_str(n, bad_y));
                    put_line(ce, "reason", reason);
                    return ce;
                });
            }
        }
    }
}

void suite_kernel_inclusion(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    if (has_gf2(cfg)) {
        BitScratch bs;
        for_each_bit_matrix(size_cap(cfg, 3), [&](std::size_t n,
                                                  const std::vector<std::uint64_t>& rows) {
            std::uint64_t all = full_mask(n);
            LabeledMatrix A = matrix_from_bits(rows, n, n);
            const LabelSet& V = A.row_labels();
            for (std::uint64_t z = 0;; ++z) {
                if (bs.valid_pivot(rows, z)) {
                    LabelSet Z = mask_subset(V, z);
                    auto B = try_ppt(A, Z);
                    LabeledMatrix SH = sharp(A, Z);
                    bool ok = bool(B);
                    std::uint64_t bad_x = 0, bad_y = 0;
                    for (std::uint64_t x = 0; ok;) {
                        for (std::uint64_t y = 0; ok;) {
                            std::uint64_t r = z & ~(x ^ y);
                            LabelSet X = mask_subset(V, x);
                            LabelSet Y = mask_subset(V, y);
                            LabelSet Xr = mask_subset(V, x ^ r);
                            LabelSet Yr = mask_subset(V, y ^ r);
                            LabeledMatrix comp = B->submatrix(Xr, Yr) * SH.submatrix(Yr, Y);
                            for (const auto& v : A.submatrix(X, Y).kernel_basis().vectors) {
                                if (!comp.apply(v).is_zero()) {
                                    ok = false;
                                    bad_x = x;
                                    bad_y = y;
                                    break;
                                }
                            }
                            if (y == all) break;
                            ++y;
                        }
                        if (x == all) break;
                        ++x;
                    }
                    record(res, ok, [&] {
                        std::string ce;
                        put_block(ce, "matrix", print_matrix(A));
                        put_line(ce, "Z", Z.str());
                        put_line(ce, "X", mask_str(n, bad_x));
                        put_line(ce, "Y", mask_str(n, bad_y));
                        return ce;
                    });
                }
                if (z == all) break;
            }
        });
    }
    for (const auto& d : cfg.fields) {
        std::size_t count = sample_count(cfg, 10);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t n = 1 + std::size_t(rng.below(size_cap(cfg, 4)));
            LabelSet V = letters(n);
            LabeledMatrix A = random_matrix(rng, d, V, V);
            LabelSet Z = random_valid_pivot(rng, A);
            std::uint64_t all = full_mask(n);
            bool ok = true;
            std::uint64_t bad_x = 0, bad_y = 0;
            for (std::uint64_t x = 0; ok;) {
                for (std::uint64_t y = 0; ok;) {
                    if (!check_first_inclusion(A, Z, mask_subset(V, x), mask_subset(V, y))) {
                        ok = false;
                        bad_x = x;
                        bad_y = y;
                    }
                    if (y == all) break;
                    ++y;
                }
                if (x == all) break;
                ++x;
            }
            record(res, ok, [&] {
                std::string ce;
                put_block(ce, "matrix", print_matrix(A));
                put_line(ce, "Z", Z.str());
                put_line(ce, "X", mask_str(n, bad_x));
                put_line(ce, "Y", mask_str(n, bad_y));
                return ce;
            });
        }
    }
}

void suite_nullity_principal(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    if (has_gf2(cfg)) {
        BitScratch bs;
        for_each_bit_matrix(size_cap(cfg, 4), [&](std::size_t n,
                                                  const std::vector<std::uint64_t>& rows) {
            std::uint64_t all = full_mask(n);
            for (std::uint64_t z = 0;; ++z) {
                if (bs.valid_pivot(rows, z)) {
                    auto B = ppt_bits(rows, n, z);
                    bool ok = bool(B);
                    std::uint64_t bad_x = 0;
                    for (std::uint64_t x = 0; ok;) {
                        if (bs.nullity(*B, x, x) != bs.nullity(rows, x ^ z, x ^ z)) {
                            ok = false;
                            bad_x = x;
                        }
                        if (x == all) break;
                        ++x;
                    }
                    record(res, ok, [&] {
                        std::string ce;
                        put_block(ce, "matrix", print_matrix(matrix_from_bits(rows, n, n)));
                        put_line(ce, "Z", mask_str(n, z));
                        put_line(ce, "X", mask_str(n, bad_x));
                        return ce;
                    });
                }
                if (z == all) break;
            }
        });
    }
    for (const auto& d : cfg.fields) {
        if (d == FieldDescriptor::gf2()) continue;
        std::size_t count = sample_count(cfg, 25);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t n = 1 + std::size_t(rng.below(size_cap(cfg, 4)));
            LabelSet V = letters(n);
            LabeledMatrix A = random_matrix(rng, d, V, V);
            LabelSet Z = random_valid_pivot(rng, A);
            std::uint64_t all = full_mask(n);
            bool ok = true;
            std::uint64_t bad_x = 0;
            for (std::uint64_t x = 0; ok;) {
                LabelSet X = mask_subset(V, x);
                if (!check_nullity_equality(A, Z, X, X)) {
                    ok = false;
                    bad_x = x;
                }
                if (x == all) break;
                ++x;
            }
            record(res, ok, [&] {
                std::string ce;
                put_block(ce, "matrix", print_matrix(A));
                put_line(ce, "Z", Z.str());
                put_line(ce, "X", mask_str(n, bad_x));
                return ce;
            });
        }
    }
}

void suite_nullity_inverse(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    if (has_gf2(cfg)) {
        BitScratch bs;
        for_each_bit_matrix(size_cap(cfg, 4), [&](std::size_t n,
                                                  const std::vector<std::uint64_t>& rows) {
            if (rank_bits(rows) != n) return;
            auto B = detail::invert_bits(rows, n);
            std::uint64_t all = full_mask(n);
            bool ok = bool(B);
            std::uint64_t bad_x = 0, bad_y = 0;
            for (std::uint64_t x = 0; ok;) {
                for (std::uint64_t y = 0; ok;) {
                    if (bs.nullity(*B, x, y) != bs.nullity(rows, all & ~y, all & ~x)) {
                        ok = false;
                        bad_x = x;
                        bad_y = y;
                    }
                    if (y == all) break;
                    ++y;
                }
                if (x == all) break;
                ++x;
            }
            record(res, ok, [&] {
                std::string ce;
                put_block(ce, "matrix", print_matrix(matrix_from_bits(rows, n, n)));
                put_line(ce, "X", mask_str(n, bad_x));
                put_line(ce, "Y", mask_str(n, bad_y));
                return ce;
            });
        });
    }
    for (const auto& d : cfg.fields) {
        if (d == FieldDescriptor::gf2()) continue;
        std::size_t count = sample_count(cfg, 25);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t n = 1 + std::size_t(rng.below(size_cap(cfg, 4)));
            LabelSet V = letters(n);
            std::optional<LabeledMatrix> A;
            for (int t = 0; t < 32 && !A; ++t) {
                LabeledMatrix cand = random_matrix(rng, d, V, V);
                if (cand.rank() == n) A = std::move(cand);
            }
            if (!A) continue;
            auto TA = nullity_table(*A);
            auto TB = nullity_table(A->inverse());
            std::uint64_t all = full_mask(n);
            bool ok = true;
            std::uint64_t bad_x = 0, bad_y = 0;
            for (std::uint64_t x = 0; ok;) {
                for (std::uint64_t y = 0; ok;) {
                    if (TB[(x << n) | y] != TA[((all & ~y) << n) | (all & ~x)]) {
                        ok = false;
                        bad_x = x;
                        bad_y = y;
                    }
                    if (y == all) break;
                    ++y;
                }
                if (x == all) break;
                ++x;
            }
            record(res, ok, [&] {
                std::string ce;
                put_block(ce, "matrix", print_matrix(*A));
                put_line(ce, "X", mask_str(n, bad_x));
                put_line(ce, "Y", mask_str(n, bad_y));
                return ce;
            });
        }
    }
}

void suite_nullity_complementary(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    if (has_gf2(cfg)) {
        BitScratch bs;
        for_each_bit_matrix(size_cap(cfg, 4), [&](std::size_t n,
                                                  const std::vector<std::uint64_t>& rows) {
            std::uint64_t all = full_mask(n);
            for (std::uint64_t z = 0;; ++z) {
                if (bs.valid_pivot(rows, z)) {
                    auto B = ppt_bits(rows, n, z);
                    bool ok = bool(B);
                    std::uint64_t bad_x = 0;
                    for (std::uint64_t x = 0; ok;) {
                        if (bs.nullity(*B, x, all ^ x) != bs.nullity(rows, x, all ^ x)) {
                            ok = false;
                            bad_x = x;
                        }
                        if (x == all) break;
                        ++x;
                    }
                    record(res, ok, [&] {
                        std::string ce;
                        put_block(ce, "matrix", print_matrix(matrix_from_bits(rows, n, n)));
                        put_line(ce, "Z", mask_str(n, z));
                        put_line(ce, "X", mask_str(n, bad_x));
                        return ce;
                    });
                }
                if (z == all) break;
            }
        });
    }
    for (const auto& d : cfg.fields) {
        if (d == FieldDescriptor::gf2()) continue;
        std::size_t count = sample_count(cfg, 25);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t n = 1 + std::size_t(rng.below(size_cap(cfg, 4)));
            LabelSet V = letters(n);
            LabeledMatrix A = random_matrix(rng, d, V, V);
            auto TA = nullity_table(A);
            std::uint64_t all = full_mask(n);
            for (std::uint64_t z = 0;; ++z) {
                if (TA[(z << n) | z] == 0) {
                    auto B = try_ppt(A, mask_subset(V, z));
                    std::optional<std::vector<std::uint8_t>> TB;
                    if (B) TB = nullity_table(*B);
                    bool ok = bool(TB);
                    std::uint64_t bad_x = 0;
                    for (std::uint64_t x = 0; ok;) {
                        std::uint64_t yc = all ^ x;
                        if ((*TB)[(x << n) | yc] != TA[(x << n) | yc]) {
                            ok = false;
                            bad_x = x;
                        }
                        if (x == all) break;
                        ++x;
                    }
                    record(res, ok, [&] {
                        std::string ce;
                        put_block(ce, "matrix", print_matrix(A));
                        put_line(ce, "Z", mask_str(n, z));
                        put_line(ce, "X", mask_str(n, bad_x));
                        return ce;
                    });
                }
                if (z == all) break;
            }
        }
    }
}

void suite_p_invariance(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    for (const auto& d : cfg.fields) {
        std::size_t count = sample_count(cfg, 25);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t n = 1 + std::size_t(rng.below(size_cap(cfg, 6)));
            LabelSet V = letters(n);
            LabeledMatrix A = random_matrix(rng, d, V, V);
            NullityPolynomial pA = nullity_polynomial(A);
            bool first = true;
            for (std::uint64_t z : valid_pivot_masks(A)) {
                LabelSet Z = mask_subset(V, z);
                auto B = try_ppt(A, Z);
                bool ok = B && nullity_polynomial(*B) == pA;
                if (ok && first) {
                    ok = check_p_invariance(A, Z);
                    first = false;
                }
                record(res, ok, [&] {
                    std::string ce;
                    put_block(ce, "matrix", print_matrix(A));
                    put_line(ce, "Z", Z.str());
                    put_line(ce, "p before", pA.str());
                    put_line(ce, "p after", B ? nullity_polynomial(*B).str() : "(undefined)");
                    return ce;
                });
            }
        }
    }
}

void suite_q_invariance(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    for (const auto& d : cfg.fields) {
        std::size_t count = sample_count(cfg, 25);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t n = 1 + std::size_t(rng.below(size_cap(cfg, 6)));
            LabelSet V = letters(n);
            LabeledMatrix A = random_matrix(rng, d, V, V);
            NullityPolynomial qA = q_polynomial(A);
            bool first = true;
            for (std::uint64_t z : valid_pivot_masks(A)) {
                LabelSet Z = mask_subset(V, z);
                auto B = try_ppt(A, Z);
                bool ok = B && q_polynomial(*B) == qA;
                if (ok && first) {
                    ok = check_q_invariance(A, Z);
                    first = false;
                }
                record(res, ok, [&] {
                    std::string ce;
                    put_block(ce, "matrix", print_matrix(A));
                    put_line(ce, "Z", Z.str());
                    put_line(ce, "q before", qA.str());
                    put_line(ce, "q after", B ? q_polynomial(*B).str() : "(undefined)");
                    return ce;
                });
            }
        }
    }
}

void suite_nullity_witness(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    for (const auto& d : cfg.fields) {
        std::size_t count = sample_count(cfg, 10);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t n = 1 + std::size_t(rng.below(size_cap(cfg, 5)));
            LabelSet V = letters(n);
            LabeledMatrix A = random_matrix(rng, d, V, V);
            auto TA = nullity_table(A);
            std::uint64_t all = full_mask(n);
            std::vector<char> seen;
            for (std::uint64_t z = 0;; ++z) {
                if (TA[(z << n) | z] == 0) {
                    auto B = try_ppt(A, mask_subset(V, z));
                    std::optional<std::vector<std::uint8_t>> TB;
                    if (B) TB = nullity_table(*B);
                    bool ok = bool(TB);
                    std::uint64_t bad_x = 0, bad_y = 0;
                    seen.assign(std::size_t(1) << (2 * n), 0);
                    for (std::uint64_t x = 0; ok;) {
                        for (std::uint64_t y = 0; ok;) {
                            std::uint64_t r = z & ~(x ^ y);
                            std::uint64_t key = ((x ^ r) << n) | (y ^ r);
                            if (seen[key] || (*TB)[key] != TA[(x << n) | y]) {
                                ok = false;
                                bad_x = x;
                                bad_y = y;
                            }
                            seen[key] = 1;
                            if (y == all) break;
                            ++y;
                        }
                        if (x == all) break;
                        ++x;
                    }
                    record(res, ok, [&] {
                        std::string ce;
                        put_block(ce, "matrix", print_matrix(A));
                        put_line(ce, "Z", mask_str(n, z));
                        put_line(ce, "X", mask_str(n, bad_x));
                        put_line(ce, "Y", mask_str(n, bad_y));
                        return ce;
                    });
                }
                if (z == all) break;
            }
        }
    }
}

void suite_lc_ppt_identity(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    auto check_graph = [&](const SimpleGraph& G) {
        for (const Label& v : G.vertices()) {
            bool ok = adjacency_matrix(local_complement(G, v)) == lc_via_ppt(G, v);
            record(res, ok, [&] {
                std::string ce;
                put_block(ce, "graph", print_graph(G));
                put_line(ce, "v", v.name());
                return ce;
            });
        }
    };
    for (std::size_t n = 0; n <= size_cap(cfg, 4); ++n) {
        LabelSet V = letters(n);
        std::vector<std::pair<Label, Label>> slots;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(V.at(i), V.at(j));
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << slots.size()); ++m) {
            std::vector<std::pair<Label, Label>> edges;
            for (std::size_t k = 0; k < slots.size(); ++k)
                if (m >> k & 1) edges.push_back(slots[k]);
            check_graph(SimpleGraph(V, edges));
        }
    }
    std::size_t count = sample_count(cfg, 200);
    for (std::size_t i = 0; i < count; ++i)
        check_graph(random_graph(rng, 1 + std::size_t(rng.below(size_cap(cfg, 8)))));
}

void suite_cut_rank_invariance(const HarnessConfig& cfg, Rng& rng, SuiteResult& res) {
    std::size_t count = sample_count(cfg, 200);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t n = 1 + std::size_t(rng.below(size_cap(cfg, 8)));
        SimpleGraph G = random_graph(rng, n);
        std::size_t len = std::size_t(rng.below(size_cap(cfg, 8) + 1));
        std::vector<Label> seq;
        for (std::size_t k = 0; k < len; ++k)
            seq.push_back(G.vertices().at(std::size_t(rng.below(n))));
        record(res, check_cut_rank_invariance(G, seq), [&] {
            std::string ce;
            put_block(ce, "graph", print_graph(G));
            put_line(ce, "sequence", join_labels(seq));
            return ce;
        });
    }
}

struct SuiteSpec {
    const char* name;
    void (*run)(const HarnessConfig&, Rng&, SuiteResult&);
};

constexpr SuiteSpec kSuites[] = {
    {"rank-oracle", suite_rank_oracle},
    {"partial-inverse", suite_partial_inverse},
    {"ppt-involution", suite_ppt_involution},
    {"ppt-composition", suite_ppt_composition},
    {"sharp-inverse", suite_sharp_inverse},
    {"full-inverse", suite_full_inverse},
    {"pair-correspondence", suite_pair_correspondence},
    {"nullity-equality", suite_nullity_equality},
    {"kernel-equality", suite_kernel_equality},
    {"kernel-inclusion", suite_kernel_inclusion},
    {"nullity-principal", suite_nullity_principal},
    {"nullity-inverse", suite_nullity_inverse},
    {"nullity-complementary", suite_nullity_complementary},
    {"p-invariance", suite_p_invariance},
    {"q-invariance", suite_q_invariance},
    {"nullity-witness", suite_nullity_witness},
    {"lc-ppt-identity", suite_lc_ppt_identity},
    {"cut-rank-invariance", suite_cut_rank_invariance},
};

}  // namespace

const std::vector<std::string>& harness_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : kSuites) v.emplace_back(s.name);
        return v;
    }();
    return names;
}

bool Report::all_ok() const {
    return std::all_of(suites.begin(), suites.end(),
                       [](const SuiteResult& s) { return s.ok(); });
}

std::string Report::str() const {
    std::string out;
    for (const auto& s : suites) {
        out += s.name;
        out += ": ";
        out += std::to_string(s.passed);
        out += '/';
        out += std::to_string(s.total);
        out += s.ok() ? " ok" : " FAILED";
        out += '\n';
        for (const auto& ce : s.counterexamples) {
            std::istringstream in(ce);
            for (std::string line; std::getline(in, line);) {
                out += "  ";
                out += line;
                out += '\n';
            }
        }
    }
    return out;
}

Report run_harness(const HarnessConfig& config) {
    for (const auto& name : config.suites) {
        bool known = std::any_of(std::begin(kSuites), std::end(kSuites),
                                 [&](const SuiteSpec& s) { return name == s.name; });
        if (!known) throw ParseError("unknown suite \"" + name + "\"");
    }
    Report rep;
    for (const auto& s : kSuites) {
        if (!config.suites.empty() &&
            std::find(config.suites.begin(), config.suites.end(), s.name) ==
                config.suites.end())
            continue;
        SuiteResult res;
        res.name = s.name;
        Rng rng(mix_seed(config.seed, s.name));
        s.run(config, rng, res);
        rep.suites.push_back(std::move(res));
    }
    return rep;
}

}  // namespace pivot
