#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "crossfam/errors.hpp"

namespace crossfam {

inline constexpr int kMaxGroundSize = 64;

// Largest subset count we materialize as an explicit list of masks.
inline constexpr int kMaxEnumerationBits = 24;

inline std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

inline std::uint64_t pow2(int e) {
    if (e < 0 || e > 63) {
        throw capacity_error("2^" + std::to_string(e) + " does not fit in 64 bits");
    }
    return std::uint64_t{1} << e;
}

inline std::uint64_t lowest_bit(std::uint64_t m) {
    return m == 0 ? 0 : (std::uint64_t{1} << std::countr_zero(m));
}

// Exact C(n, k). The running value r equals C(n-k+i, i) after step i, so the
// division is always exact.
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        const auto num = static_cast<std::uint64_t>(n - k + i);
        if (r > std::numeric_limits<std::uint64_t>::max() / num) {
            throw capacity_error("binomial coefficient overflows 64 bits");
        }
        r = r * num / static_cast<std::uint64_t>(i);
    }
    return r;
}

// All subsets of `support`, ascending by mask value.
inline std::vector<std::uint64_t> subsets_of(std::uint64_t support) {
    const int bits = std::popcount(support);
    if (bits > kMaxEnumerationBits) {
        throw capacity_error("refusing to materialize 2^" + std::to_string(bits) + " subsets");
    }
    std::vector<std::uint64_t> out;
    out.reserve(std::size_t{1} << bits);
    std::uint64_t s = support;
    while (true) {  // (s - 1) & support walks subsets in descending order
        out.push_back(s);
        if (s == 0) break;
        s = (s - 1) & support;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// All weight-k masks inside [0, 2^n), ascending (Gosper's hack).
inline std::vector<std::uint64_t> fixed_weight_masks(int n, int k) {
    if (n < 0 || n > kMaxGroundSize || k < 0 || k > n) {
        throw invalid_input("fixed_weight_masks: need 0 <= k <= n <= 64");
    }
    if (k == 0) return {0};
    std::vector<std::uint64_t> out;
    const std::uint64_t limit = full_mask(n);
    std::uint64_t x = (std::uint64_t{1} << k) - 1;
    while (x <= limit) {
        out.push_back(x);
        const std::uint64_t c = x & (~x + 1);
        const std::uint64_t r = x + c;
        if (r == 0) break;  // would shift past bit 63
        x = (((r ^ x) >> 2) / c) | r;
    }
    return out;
}

// Mask of elements lo..hi inclusive, 1-based; empty when lo > hi.
inline std::uint64_t range_mask(int lo, int hi) {
    if (lo > hi) return 0;
    return full_mask(hi) & ~full_mask(lo - 1);
}

}  // namespace crossfam
