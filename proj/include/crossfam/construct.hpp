#pragma once

// Generators for the extremal families: the trivial maximal pairs at c/d in
// {0, 1}, the matched-pairs maximal bisecting families, and the k-uniform
// extremal shapes together with their exact product bound.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossfam/errors.hpp"
#include "crossfam/family.hpp"
#include "crossfam/util.hpp"

namespace crossfam {

// The k-th canonical maximal cross-bisecting pair on [n], 0 <= k <= n/2.
//   k = 0: A = 2^[n], B = {{}}.
//   k >= 1: A picks exactly one element of each couple {2i-1, 2i}, i <= k,
//           and is free elsewhere; B is a union of whole couples inside [2k].
// |A| = 2^{n-k}, |B| = 2^k, so the product is exactly 2^n. (CLI kind: thm12)
inline CrossPair maximal_bisecting_pair(int n, int k) {
    if (n < 1 || n > kMaxGroundSize) {
        throw invalid_input("maximal bisecting pair: n must be in [1, 64]");
    }
    if (k < 0 || 2 * k > n) {
        throw invalid_input("maximal bisecting pair: need 0 <= k <= n/2, got k=" +
                            std::to_string(k) + ", n=" + std::to_string(n));
    }
    if (n - k > kMaxEnumerationBits) {
        throw capacity_error("maximal bisecting pair: |A| = 2^" + std::to_string(n - k) +
                             " is too large to materialize");
    }

    const std::uint64_t free_support = range_mask(2 * k + 1, n);
    const std::vector<std::uint64_t> free_parts = subsets_of(free_support);

    std::vector<std::uint64_t> a_masks;
    a_masks.reserve((std::size_t{1} << k) * free_parts.size());
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << k); ++choice) {
        std::uint64_t base = 0;
        for (int i = 0; i < k; ++i) {
            // couple {2i+1, 2i+2}: bit 2i or bit 2i+1
            base |= std::uint64_t{1} << (2 * i + (((choice >> i) & 1) ? 1 : 0));
        }
        for (const std::uint64_t f : free_parts) a_masks.push_back(base | f);
    }

    std::vector<std::uint64_t> b_masks;
    b_masks.reserve(std::size_t{1} << k);
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
        std::uint64_t m = 0;
        for (int i = 0; i < k; ++i) {
            if ((pick >> i) & 1) m |= std::uint64_t{0b11} << (2 * i);
        }
        b_masks.push_back(m);
    }

    return CrossPair(n, Fraction(1, 2), SetFamily(n, std::move(a_masks)),
                     SetFamily(n, std::move(b_masks)));
}

// Maximal pairs at the endpoint fractions, parameterized by the split point k.
//   c/d = 0: A = 2^[k], B = all subsets of {k+1..n}.
//   c/d = 1: B = 2^[k], A = [k] together with any subset of {k+1..n}.
// Product 2^n in both cases.
inline CrossPair trivial_pair(int n, const Fraction& frac, int k) {
    if (n < 1 || n > kMaxGroundSize) {
        throw invalid_input("trivial pair: n must be in [1, 64]");
    }
    if (!frac.is_zero() && !frac.is_one()) {
        throw invalid_input("trivial pair: fraction must be 0/1 or 1/1, got " + frac.str());
    }
    if (k < 0 || k > n) {
        throw invalid_input("trivial pair: need 0 <= k <= n");
    }
    const std::uint64_t head = range_mask(1, k);
    const std::uint64_t tail = range_mask(k + 1, n);
    if (frac.is_zero()) {
        return CrossPair(n, frac, power_family(n, head), power_family(n, tail));
    }
    std::vector<std::uint64_t> a_masks;
    for (const std::uint64_t t : subsets_of(tail)) a_masks.push_back(head | t);
    return CrossPair(n, frac, SetFamily(n, std::move(a_masks)), power_family(n, head));
}

// Parameters of a k-uniform extremal pair. Exactly one of kappa/tau is
// meaningful depending on the shape (containment vs halving).
struct UniformParams {
    int n = 1;
    int k = 1;
    Fraction frac;
    int l = 0;  // ck/d, the forced intersection size
    std::optional<int> kappa;
    std::optional<int> tau;
};

// Containment shape, c/d = 1: every A contains [kappa] and hence every B.
// (CLI kind: thm13a)
inline UniformParams containment_params(int n, int k, int kappa) {
    if (n < 1 || n > kMaxGroundSize || k < 1) {
        throw invalid_input("containment pair: need n in [1, 64] and k >= 1");
    }
    if (kappa != 2 * k - 1 && kappa != 2 * k) {
        throw invalid_input("containment pair: kappa must be 2k-1 or 2k");
    }
    if (kappa > n) {
        throw invalid_input("containment pair: kappa exceeds n");
    }
    UniformParams p;
    p.n = n;
    p.k = k;
    p.frac = Fraction(1, 1);
    p.l = k;
    p.kappa = kappa;
    return p;
}

inline CrossPair uniform_containment_pair(const UniformParams& p) {
    if (!p.kappa) throw invalid_input("containment pair: kappa missing");
    const int n = p.n, k = p.k, kappa = *p.kappa;
    if (binomial(kappa, k) > (std::uint64_t{1} << kMaxEnumerationBits)) {
        throw capacity_error("containment pair: C(kappa, k) members is too large to materialize");
    }
    const std::uint64_t head = range_mask(1, kappa);
    const std::uint64_t tail = range_mask(kappa + 1, n);

    std::vector<std::uint64_t> a_masks;
    for (const std::uint64_t t : subsets_of(tail)) a_masks.push_back(head | t);

    std::vector<std::uint64_t> b_masks = fixed_weight_masks(kappa, k);

    return CrossPair(n, p.frac, SetFamily(n, std::move(a_masks)), SetFamily(n, std::move(b_masks)));
}

inline CrossPair uniform_containment_pair(int n, int k, int kappa) {
    return uniform_containment_pair(containment_params(n, k, kappa));
}

// Halving shape, c/d != 1. The fraction is forced by the parity of k:
// even k pairs with 1/2, odd k with ((k+1)/2)/k; either way the forced
// intersection is l = ceil(k/2).
//
// Ground layout (canonical labeling): tau couples {i, k+i} for i in [tau],
// singletons {tau+1}..{k}, and a free zone X = {k+tau+1..n}. A unions any
// l of the k blocks and anything from X; B picks one side of each couple
// plus the fixed block {tau+1..k}, so B is k-uniform with 2^tau members.
// (CLI kind: thm13b)
inline UniformParams halving_params(int n, int k, int tau) {
    if (n < 1 || n > kMaxGroundSize || k < 1) {
        throw invalid_input("halving pair: need n in [1, 64] and k >= 1");
    }
    if (k == 1) {
        throw invalid_input("halving pair: k = 1 forces the fraction to 1/1; "
                            "use the containment shape instead");
    }
    if (tau < 0 || tau > k || k + tau > n) {
        throw invalid_input("halving pair: need 0 <= tau <= k and k + tau <= n");
    }
    UniformParams p;
    p.n = n;
    p.k = k;
    p.frac = (k % 2 == 0) ? Fraction(1, 2) : Fraction((k + 1) / 2, k);
    p.l = (k + 1) / 2;
    p.tau = tau;
    return p;
}

inline CrossPair uniform_halving_pair(const UniformParams& p) {
    if (!p.tau) throw invalid_input("halving pair: tau missing");
    const int n = p.n, k = p.k, tau = *p.tau, l = p.l;
    if (tau > kMaxEnumerationBits ||
        binomial(k, l) > (std::uint64_t{1} << kMaxEnumerationBits)) {
        throw capacity_error("halving pair: family too large to materialize");
    }

    std::vector<std::uint64_t> blocks;
    blocks.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= tau; ++i) {
        blocks.push_back((std::uint64_t{1} << (i - 1)) | (std::uint64_t{1} << (k + i - 1)));
    }
    for (int j = tau + 1; j <= k; ++j) {
        blocks.push_back(std::uint64_t{1} << (j - 1));
    }

    const std::uint64_t x_zone = range_mask(k + tau + 1, n);
    const std::vector<std::uint64_t> x_parts = subsets_of(x_zone);

    std::vector<std::uint64_t> a_masks;
    for (const std::uint64_t pick : fixed_weight_masks(k, l)) {
        std::uint64_t u = 0;
        for (int i = 0; i < k; ++i) {
            if ((pick >> i) & 1) u |= blocks[static_cast<std::size_t>(i)];
        }
        for (const std::uint64_t x : x_parts) a_masks.push_back(u | x);
    }

    const std::uint64_t fixed = range_mask(tau + 1, k);
    std::vector<std::uint64_t> b_masks;
    b_masks.reserve(std::size_t{1} << tau);
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << tau); ++choice) {
        std::uint64_t m = fixed;
        for (int i = 1; i <= tau; ++i) {
            m |= std::uint64_t{1} << ((((choice >> (i - 1)) & 1) ? k + i : i) - 1);
        }
        b_masks.push_back(m);
    }

    return CrossPair(n, p.frac, SetFamily(n, std::move(a_masks)), SetFamily(n, std::move(b_masks)));
}

inline CrossPair uniform_halving_pair(int n, int k, int tau) {
    return uniform_halving_pair(halving_params(n, k, tau));
}

// The exact product ceiling for a k-uniform B: C(2l, l) * 2^{n-2l} with
// l = ck/d. Requires d | k and 2l <= n.
inline std::uint64_t uniform_product_bound(int n, int k, const Fraction& frac) {
    if (n < 1 || n > 62 || k < 1 || k > n) {
        throw invalid_input("uniform product bound: need 1 <= k <= n <= 62");
    }
    if (k % frac.d != 0) {
        throw invalid_input("uniform product bound: " + std::to_string(frac.d) +
                            " does not divide k = " + std::to_string(k));
    }
    const int l = frac.c * (k / frac.d);
    if (2 * l > n) {
        throw invalid_input("uniform product bound: 2l = " + std::to_string(2 * l) +
                            " exceeds n = " + std::to_string(n));
    }
    return binomial(2 * l, l) * pow2(n - 2 * l);
}

}  // namespace crossfam
