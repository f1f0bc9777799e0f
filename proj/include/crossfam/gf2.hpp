#pragma once

// GF(2) linear algebra over bit-packed subsets of [n], n <= 64.
//
// Conventions used throughout the library:
//   - element i of the ground set [n] is bit i-1 of a 64-bit mask;
//   - vector addition is XOR, the inner product is popcount(AND) mod 2;
//   - a basis is kept in reduced row-echelon form with the pivot of a row
//     being its lowest set bit, rows ordered by pivot. This makes every
//     basis (and everything derived from one) deterministic.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "crossfam/errors.hpp"
#include "crossfam/util.hpp"

namespace crossfam {

// Characteristic vector of a subset of [n].
struct BitVector {
    int n = 1;
    std::uint64_t bits = 0;

    BitVector() = default;
    BitVector(int n_, std::uint64_t bits_) : n(n_), bits(bits_) {
        if (n < 1 || n > kMaxGroundSize) {
            throw invalid_input("ground-set size must be in [1, 64], got " + std::to_string(n));
        }
        if (bits & ~full_mask(n)) {
            throw invalid_input("bit set beyond ground-set size " + std::to_string(n));
        }
    }

    int weight() const { return std::popcount(bits); }
    bool contains(int element) const {  // 1-based
        return element >= 1 && element <= n && ((bits >> (element - 1)) & 1);
    }

    friend bool operator==(const BitVector&, const BitVector&) = default;
};

inline void require_same_ground(const BitVector& u, const BitVector& v, const char* what) {
    if (u.n != v.n) {
        throw invalid_input(std::string(what) + ": ground-set sizes differ (" +
                            std::to_string(u.n) + " vs " + std::to_string(v.n) + ")");
    }
}

inline BitVector operator^(const BitVector& u, const BitVector& v) {
    require_same_ground(u, v, "xor");
    return BitVector(u.n, u.bits ^ v.bits);
}

inline BitVector operator&(const BitVector& u, const BitVector& v) {
    require_same_ground(u, v, "and");
    return BitVector(u.n, u.bits & v.bits);
}

// <u, v> over F_2: parity of |U intersect V|.
inline int inner_product(const BitVector& u, const BitVector& v) {
    require_same_ground(u, v, "inner_product");
    return std::popcount(u.bits & v.bits) & 1;
}

inline int inner_product_masks(std::uint64_t u, std::uint64_t v) {
    return std::popcount(u & v) & 1;
}

// Reduced row-echelon basis of the span of `vectors`. Pivot columns are
// chosen lowest-index-first; the result is unique for a given span.
inline std::vector<std::uint64_t> reduced_basis(const std::vector<std::uint64_t>& vectors) {
    std::vector<std::uint64_t> rows;  // invariant: RREF, ascending pivots
    for (std::uint64_t v : vectors) {
        for (const std::uint64_t r : rows) {
            if (v & lowest_bit(r)) v ^= r;
        }
        if (v == 0) continue;
        const std::uint64_t pivot = lowest_bit(v);
        for (std::uint64_t& r : rows) {
            if (r & pivot) r ^= v;
        }
        rows.push_back(v);
        std::sort(rows.begin(), rows.end(),
                  [](std::uint64_t a, std::uint64_t b) { return lowest_bit(a) < lowest_bit(b); });
    }
    return rows;
}

// Span-closed code with an explicit word list. |words| = 2^dim always holds
// for values produced by span()/dual(); tests may build corrupted instances
// by hand to exercise the consistency checks.
struct LinearCode {
    int n = 1;
    std::vector<std::uint64_t> words;  // sorted ascending, contains 0
    std::vector<std::uint64_t> basis;  // RREF, ascending pivots
    int dim = 0;
};

namespace detail {

// Word lists grow as 2^dim; past ~2^20 the explicit representation stops
// being the right tool.
inline constexpr int kMaxMaterializedDim = 20;

inline std::vector<std::uint64_t> enumerate_words(const std::vector<std::uint64_t>& basis) {
    if (static_cast<int>(basis.size()) > kMaxMaterializedDim) {
        throw capacity_error("code dimension " + std::to_string(basis.size()) +
                             " too large to materialize (limit " +
                             std::to_string(kMaxMaterializedDim) + ")");
    }
    std::vector<std::uint64_t> words{0};
    words.reserve(std::size_t{1} << basis.size());
    for (const std::uint64_t row : basis) {
        const std::size_t sz = words.size();
        for (std::size_t i = 0; i < sz; ++i) words.push_back(words[i] ^ row);
    }
    std::sort(words.begin(), words.end());
    return words;
}

}  // namespace detail

inline LinearCode span_masks(const std::vector<std::uint64_t>& vectors, int n) {
    if (n < 1 || n > kMaxGroundSize) {
        throw invalid_input("span: ground-set size must be in [1, 64]");
    }
    for (const std::uint64_t v : vectors) {
        if (v & ~full_mask(n)) throw invalid_input("span: vector exceeds ground set");
    }
    LinearCode code;
    code.n = n;
    code.basis = reduced_basis(vectors);
    code.dim = static_cast<int>(code.basis.size());
    code.words = detail::enumerate_words(code.basis);
    return code;
}

inline LinearCode span(const std::vector<BitVector>& vectors, int n) {
    std::vector<std::uint64_t> masks;
    masks.reserve(vectors.size());
    for (const BitVector& v : vectors) {
        if (v.n != n) {
            throw invalid_input("span: vector ground-set size " + std::to_string(v.n) +
                                " != " + std::to_string(n));
        }
        masks.push_back(v.bits);
    }
    return span_masks(masks, n);
}

// Dual code: all vectors orthogonal to every codeword. Computed as the
// kernel of the RREF basis; dim(C) + dim(dual(C)) = n by construction, and
// the test suite re-derives small duals by brute force to keep this honest.
inline LinearCode dual(const LinearCode& code) {
    if (code.n < 1 || code.n > kMaxGroundSize) {
        throw invalid_input("dual: invalid ground-set size");
    }
    std::uint64_t pivot_cols = 0;
    for (const std::uint64_t row : code.basis) pivot_cols |= lowest_bit(row);

    std::vector<std::uint64_t> generators;
    for (int f = 0; f < code.n; ++f) {
        const std::uint64_t fbit = std::uint64_t{1} << f;
        if (pivot_cols & fbit) continue;
        std::uint64_t x = fbit;
        for (const std::uint64_t row : code.basis) {
            if (row & fbit) x |= lowest_bit(row);
        }
        generators.push_back(x);
    }
    LinearCode d = span_masks(generators, code.n);
    if (d.dim + static_cast<int>(code.basis.size()) != code.n) {
        throw consistency_error("dual: dimension identity violated");
    }
    return d;
}

// True iff every pair of codewords (a word with itself included) has even
// intersection. Equivalent to: basis rows pairwise orthogonal, each of even
// weight.
inline bool is_self_orthogonal(const LinearCode& code) {
    for (std::size_t i = 0; i < code.basis.size(); ++i) {
        for (std::size_t j = i; j < code.basis.size(); ++j) {
            if (inner_product_masks(code.basis[i], code.basis[j])) return false;
        }
    }
    return true;
}

enum class ColumnTag { all_zero, balanced };

// Per-column structure of a linear code: each column is either identically
// zero or set in exactly half of the words. Any other count means the word
// list is not actually span-closed.
inline std::vector<ColumnTag> column_profile(const LinearCode& code) {
    if (code.words.empty()) {
        throw invalid_input("column_profile: code has no words");
    }
    std::vector<ColumnTag> tags(static_cast<std::size_t>(code.n));
    const std::size_t half = code.words.size() / 2;
    for (int j = 0; j < code.n; ++j) {
        std::size_t count = 0;
        for (const std::uint64_t w : code.words) count += (w >> j) & 1;
        if (count == 0) {
            tags[static_cast<std::size_t>(j)] = ColumnTag::all_zero;
        } else if (count == half && half > 0) {
            tags[static_cast<std::size_t>(j)] = ColumnTag::balanced;
        } else {
            throw consistency_error("column_profile: column " + std::to_string(j + 1) +
                                    " has " + std::to_string(count) + " of " +
                                    std::to_string(code.words.size()) +
                                    " ones; word list is not a linear code");
        }
    }
    return tags;
}

}  // namespace crossfam
