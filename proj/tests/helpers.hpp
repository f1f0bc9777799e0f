#pragma once

// Shared test helpers: readable construction of masks and families from
// 1-based element lists.

#include <cstdint>
#include <initializer_list>

#include "crossfam/family.hpp"
#include "crossfam/gf2.hpp"

namespace testutil {

inline std::uint64_t mask_of(std::initializer_list<int> elements) {
    std::uint64_t m = 0;
    for (const int e : elements) m |= std::uint64_t{1} << (e - 1);
    return m;
}

inline crossfam::BitVector bv(int n, std::initializer_list<int> elements) {
    return crossfam::BitVector(n, mask_of(elements));
}

inline crossfam::SetFamily fam(int n,
                               std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<std::uint64_t> masks;
    for (const auto& s : sets) masks.push_back(mask_of(s));
    return crossfam::SetFamily(n, std::move(masks));
}

}  // namespace testutil
