#pragma once

// Set families over [n], the c/d-cross-intersection predicate, the weight
// partition of B, and the bit-append construction behind the 2^n product
// bound.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "crossfam/errors.hpp"
#include "crossfam/gf2.hpp"
#include "crossfam/util.hpp"

namespace crossfam {

// Irreducible c/d in [0, 1]. 0 is 0/1, 1 is 1/1.
struct Fraction {
    int c = 0;
    int d = 1;

    Fraction() = default;
    Fraction(int c_, int d_) : c(c_), d(d_) {
        if (d < 1 || c < 0 || c > d) {
            throw invalid_input("fraction must satisfy 0 <= c <= d, d >= 1");
        }
        if (std::gcd(c, d) != 1) {
            throw invalid_input("fraction " + std::to_string(c) + "/" + std::to_string(d) +
                                " is not irreducible");
        }
    }

    bool is_zero() const { return c == 0; }
    bool is_one() const { return c == d; }
    bool is_half() const { return c == 1 && d == 2; }

    std::string str() const { return std::to_string(c) + "/" + std::to_string(d); }

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Duplicate-free collection of subsets of [n], kept sorted by mask value.
struct SetFamily {
    int n = 1;
    std::vector<std::uint64_t> sets;

    SetFamily() = default;
    explicit SetFamily(int n_) : SetFamily(n_, {}) {}
    SetFamily(int n_, std::vector<std::uint64_t> sets_) : n(n_), sets(std::move(sets_)) {
        if (n < 1 || n > kMaxGroundSize) {
            throw invalid_input("ground-set size must be in [1, 64], got " + std::to_string(n));
        }
        for (const std::uint64_t s : sets) {
            if (s & ~full_mask(n)) {
                throw invalid_input("family member exceeds ground set of size " + std::to_string(n));
            }
        }
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    }

    std::size_t size() const { return sets.size(); }
    bool empty() const { return sets.empty(); }
    bool contains(std::uint64_t mask) const {
        return std::binary_search(sets.begin(), sets.end(), mask);
    }
    BitVector at(std::size_t i) const { return BitVector(n, sets[i]); }

    friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

// All subsets of `support`, as a family over [n].
inline SetFamily power_family(int n, std::uint64_t support) {
    return SetFamily(n, subsets_of(support));
}

inline LinearCode span_of(const SetFamily& family) {
    return span_masks(family.sets, family.n);
}

// A pair of families over a common ground set with a declared fraction.
// Nothing is verified at construction; is_cross_intersecting is the check.
struct CrossPair {
    int n = 1;
    Fraction frac;
    SetFamily a;
    SetFamily b;

    CrossPair() = default;
    CrossPair(int n_, Fraction frac_, SetFamily a_, SetFamily b_)
        : n(n_), frac(frac_), a(std::move(a_)), b(std::move(b_)) {
        if (a.n != n || b.n != n) {
            throw invalid_input("cross pair: families must share the ground set");
        }
    }

    std::uint64_t product() const {
        return static_cast<std::uint64_t>(a.size()) * static_cast<std::uint64_t>(b.size());
    }

    friend bool operator==(const CrossPair&, const CrossPair&) = default;
};

// d * |A n B| == c * |B| for every A in the first family, B in the second.
// Pure integer arithmetic; a B-member whose size is not divisible by d just
// makes the predicate false (when the A side is non-empty).
inline bool is_cross_intersecting(const CrossPair& pair) {
    const int c = pair.frac.c, d = pair.frac.d;
    for (const std::uint64_t b : pair.b.sets) {
        const int rhs = c * std::popcount(b);
        for (const std::uint64_t a : pair.a.sets) {
            if (d * std::popcount(a & b) != rhs) return false;
        }
    }
    return true;
}

// 2 |A n B| == |B|.
inline bool bisects(const BitVector& a, const BitVector& b) {
    require_same_ground(a, b, "bisects");
    return 2 * std::popcount(a.bits & b.bits) == std::popcount(b.bits);
}

inline bool bisects_masks(std::uint64_t a, std::uint64_t b) {
    return 2 * std::popcount(a & b) == std::popcount(b);
}

// Weight classes of a candidate B family: members of size 0 mod 2d and of
// size d mod 2d. Any other residue rules the family out for this d.
struct PartitionedFamily {
    SetFamily b1;  // |B| = 0 (mod 2d)
    SetFamily b2;  // |B| = d (mod 2d)
};

inline PartitionedFamily partition_by_weight(const SetFamily& family, const Fraction& frac) {
    const int two_d = 2 * frac.d;
    std::vector<std::uint64_t> lo, hi;
    for (const std::uint64_t s : family.sets) {
        const int r = std::popcount(s) % two_d;
        if (r == 0) {
            lo.push_back(s);
        } else if (r == frac.d) {
            hi.push_back(s);
        } else {
            throw invalid_input("member of size " + std::to_string(std::popcount(s)) +
                                " is neither 0 nor " + std::to_string(frac.d) + " (mod " +
                                std::to_string(two_d) + "); no " + frac.str() +
                                "-cross-intersecting family can contain it");
        }
    }
    return PartitionedFamily{SetFamily(family.n, std::move(lo)), SetFamily(family.n, std::move(hi))};
}

// The append construction: one fresh coordinate is added on the left of the
// ground set (stored internally as the new highest bit). Every A member gets
// the new coordinate; B members of the second weight class get it exactly
// when c is odd, which is what makes every primed inner product vanish.
struct PrimedPair {
    int n = 2;  // original n + 1
    SetFamily a_prime;
    SetFamily b_prime;
    SetFamily b1_prime;
    SetFamily b2_prime;
};

inline PrimedPair append_construction(const CrossPair& pair) {
    if (!is_cross_intersecting(pair)) {
        throw invalid_input("append construction requires a cross-intersecting pair");
    }
    if (pair.n >= kMaxGroundSize) {
        throw capacity_error("append construction needs one spare coordinate; n must be < 64");
    }
    const int np = pair.n + 1;
    const std::uint64_t fresh = std::uint64_t{1} << pair.n;
    const std::uint64_t b2_bit = (pair.frac.c % 2 == 1) ? fresh : 0;

    const PartitionedFamily parts = partition_by_weight(pair.b, pair.frac);

    std::vector<std::uint64_t> ap, b1p, b2p;
    ap.reserve(pair.a.size());
    for (const std::uint64_t a : pair.a.sets) ap.push_back(a | fresh);
    for (const std::uint64_t b : parts.b1.sets) b1p.push_back(b);
    for (const std::uint64_t b : parts.b2.sets) b2p.push_back(b | b2_bit);

    PrimedPair out;
    out.n = np;
    out.a_prime = SetFamily(np, std::move(ap));
    out.b1_prime = SetFamily(np, b1p);
    out.b2_prime = SetFamily(np, b2p);
    b1p.insert(b1p.end(), b2p.begin(), b2p.end());
    out.b_prime = SetFamily(np, std::move(b1p));

    for (const std::uint64_t a : out.a_prime.sets) {
        for (const std::uint64_t b : out.b_prime.sets) {
            if (inner_product_masks(a, b) != 0) {
                throw consistency_error("append construction produced a non-orthogonal pair");
            }
        }
    }
    return out;
}

inline std::string set_to_string(const BitVector& v) {
    std::string out = "{";
    for (int e = 1; e <= v.n; ++e) {
        if ((v.bits >> (e - 1)) & 1) {
            if (out.size() > 1) out += ",";
            out += std::to_string(e);
        }
    }
    return out + "}";
}

// Human-readable rendering of a primed family; the fresh coordinate is
// written as 0, to the left of the original elements.
inline std::string primed_set_to_string(const BitVector& v) {
    std::string out = "{";
    if (v.bits >> (v.n - 1)) out += "0";
    for (int e = 1; e < v.n; ++e) {
        if ((v.bits >> (e - 1)) & 1) {
            if (out.size() > 1) out += ",";
            out += std::to_string(e);
        }
    }
    return out + "}";
}

// The chain of counts behind |A||B| <= 2^n: spans of the primed families are
// orthogonal subspaces of F_2^{n+1}, and the primed A-span doubles |A|.
struct ProductBoundAudit {
    std::uint64_t family_product = 0;  // |A| |B|
    int span_a_dim = 0;
    int span_b_dim = 0;
    std::uint64_t span_a_size = 0;  // 2^span_a_dim
    std::uint64_t span_b_size = 0;
    std::uint64_t span_product = 0;    // |span A'| |span B'|
    std::uint64_t bound_next = 0;      // 2^{n+1}
    std::uint64_t bound = 0;           // 2^n
    bool doubling_holds = false;       // |span A'| >= 2 |A|
    bool span_product_within = false;  // span_product <= 2^{n+1}
    bool product_within = false;       // |A||B| <= 2^n
    bool tight = false;                // |A||B| == 2^n
};

inline ProductBoundAudit product_bound_audit(const CrossPair& pair) {
    if (pair.n > 62) {
        throw capacity_error("product bound audit requires n <= 62 for exact 64-bit counts");
    }
    const PrimedPair primed = append_construction(pair);  // also enforces the precondition

    ProductBoundAudit audit;
    audit.family_product = pair.product();
    audit.span_a_dim = static_cast<int>(reduced_basis(primed.a_prime.sets).size());
    audit.span_b_dim = static_cast<int>(reduced_basis(primed.b_prime.sets).size());
    audit.span_a_size = pow2(audit.span_a_dim);
    audit.span_b_size = pow2(audit.span_b_dim);
    audit.span_product = audit.span_a_size * audit.span_b_size;
    audit.bound_next = pow2(pair.n + 1);
    audit.bound = pow2(pair.n);
    audit.doubling_holds = audit.span_a_size >= 2 * static_cast<std::uint64_t>(pair.a.size());
    audit.span_product_within = audit.span_product <= audit.bound_next;
    audit.product_within = audit.family_product <= audit.bound;
    audit.tight = audit.family_product == audit.bound;
    if (!audit.doubling_holds || !audit.span_product_within || !audit.product_within) {
        throw consistency_error("product bound chain failed on a cross-intersecting pair");
    }
    return audit;
}

// The unique largest A compatible with a fixed B: every subset of [n] whose
// intersections satisfy the declared fraction against all members of B.
// Plain scan over 2^n candidates.
inline SetFamily max_compatible_a(const SetFamily& b, const Fraction& frac) {
    if (b.n > kMaxEnumerationBits) {
        throw capacity_error("max_compatible_a scans 2^n subsets; n <= " +
                             std::to_string(kMaxEnumerationBits) + " required");
    }
    std::vector<int> rhs;
    rhs.reserve(b.size());
    for (const std::uint64_t m : b.sets) rhs.push_back(frac.c * std::popcount(m));

    std::vector<std::uint64_t> out;
    const std::uint64_t limit = std::uint64_t{1} << b.n;
    for (std::uint64_t a = 0; a < limit; ++a) {
        bool ok = true;
        for (std::size_t i = 0; i < b.sets.size(); ++i) {
            if (frac.d * std::popcount(a & b.sets[i]) != rhs[i]) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(a);
    }
    return SetFamily(b.n, std::move(out));
}

}  // namespace crossfam
