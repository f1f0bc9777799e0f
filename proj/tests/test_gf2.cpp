#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "crossfam/gf2.hpp"
#include "helpers.hpp"

using namespace crossfam;
using testutil::bv;
using testutil::mask_of;

namespace {

// Oracle: the dual computed by scanning all 2^n vectors against all words.
std::vector<std::uint64_t> brute_force_dual(const LinearCode& code) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << code.n); ++x) {
        bool ok = true;
        for (const std::uint64_t w : code.words) {
            if (inner_product_masks(x, w)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

// Oracle: close a generating set under XOR by fixpoint iteration.
std::vector<std::uint64_t> brute_force_span(const std::vector<std::uint64_t>& gens) {
    std::set<std::uint64_t> closed{0};
    closed.insert(gens.begin(), gens.end());
    bool growing = true;
    while (growing) {
        growing = false;
        std::vector<std::uint64_t> snapshot(closed.begin(), closed.end());
        for (const std::uint64_t x : snapshot) {
            for (const std::uint64_t y : snapshot) {
                if (closed.insert(x ^ y).second) growing = true;
            }
        }
    }
    return {closed.begin(), closed.end()};
}

LinearCode random_code(std::mt19937& rng, int n) {
    const int gens = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    std::vector<std::uint64_t> masks;
    for (int i = 0; i < gens; ++i) masks.push_back(rng() & full_mask(n));
    return span_masks(masks, n);
}

}  // namespace

TEST_CASE("bit vector invariants") {
    CHECK(BitVector(3, 0b101).weight() == 2);
    CHECK(BitVector(3, 0b101).contains(1));
    CHECK_FALSE(BitVector(3, 0b101).contains(2));
    CHECK_THROWS_AS(BitVector(3, 0b1000), invalid_input);
    CHECK_THROWS_AS(BitVector(0, 0), invalid_input);
    CHECK_THROWS_AS(BitVector(65, 0), invalid_input);
    CHECK(BitVector(64, ~std::uint64_t{0}).weight() == 64);
}

TEST_CASE("inner product") {
    CHECK(inner_product(bv(2, {1, 2}), bv(2, {1, 2})) == 0);
    CHECK(inner_product(bv(2, {1}), bv(2, {1, 2})) == 1);
    // <101101, 011011> written as characteristic strings, elements left to right
    CHECK(inner_product(bv(6, {1, 3, 4, 6}), bv(6, {2, 3, 5, 6})) == 0);
    CHECK_THROWS_AS(inner_product(bv(2, {1}), bv(3, {1})), invalid_input);
}

TEST_CASE("span: frozen examples") {
    const LinearCode zero = span({}, 3);
    CHECK(zero.words == std::vector<std::uint64_t>{0});
    CHECK(zero.dim == 0);

    const LinearCode c = span({bv(4, {1, 2}), bv(4, {2, 3})}, 4);
    CHECK(c.words == std::vector<std::uint64_t>{0, mask_of({1, 2}), mask_of({1, 3}), mask_of({2, 3})});
    CHECK(c.dim == 2);

    const LinearCode rep = span({bv(2, {1, 2})}, 2);
    CHECK(rep.words == std::vector<std::uint64_t>{0, 3});
    CHECK(rep.dim == 1);

    CHECK_THROWS_AS(span({bv(3, {1})}, 4), invalid_input);
}

TEST_CASE("span matches the closure oracle on random inputs") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        std::vector<std::uint64_t> gens;
        const int count = static_cast<int>(rng() % 5);
        for (int i = 0; i < count; ++i) gens.push_back(rng() & full_mask(n));
        const LinearCode code = span_masks(gens, n);
        CHECK(code.words == brute_force_span(gens));
        CHECK(code.words.size() == pow2(code.dim));
        for (const std::uint64_t g : gens) {
            CHECK(std::binary_search(code.words.begin(), code.words.end(), g));
        }
    }
}

TEST_CASE("span closure property") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const LinearCode code = random_code(rng, n);
        for (const std::uint64_t v : code.words) {
            for (const std::uint64_t w : code.words) {
                CHECK(std::binary_search(code.words.begin(), code.words.end(), v ^ w));
            }
        }
    }
}

TEST_CASE("dual: frozen examples") {
    CHECK(dual(span({bv(2, {1, 2})}, 2)).words == std::vector<std::uint64_t>{0, 3});

    const LinearCode everything = dual(span({}, 3));
    CHECK(everything.words.size() == 8);
    CHECK(everything.dim == 3);

    const LinearCode d = dual(span({bv(4, {1, 2}), bv(4, {3, 4})}, 4));
    CHECK(d.dim == 2);
    CHECK(std::binary_search(d.words.begin(), d.words.end(), mask_of({1, 2})));
    CHECK(std::binary_search(d.words.begin(), d.words.end(), mask_of({3, 4})));
}

TEST_CASE("dual matches brute force; involution and dimension identity") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const LinearCode code = random_code(rng, n);
        const LinearCode d = dual(code);
        CHECK(d.words == brute_force_dual(code));
        CHECK(code.dim + d.dim == n);
        CHECK(dual(d).words == code.words);
    }
    // involution at the top of the exhaustible range
    for (int trial = 0; trial < 25; ++trial) {
        const LinearCode code = random_code(rng, 16);
        CHECK(dual(dual(code)).words == code.words);
    }
}

TEST_CASE("self-orthogonality") {
    CHECK(is_self_orthogonal(span({bv(2, {1, 2})}, 2)));
    CHECK_FALSE(is_self_orthogonal(span({bv(1, {1})}, 1)));
    CHECK(is_self_orthogonal(span({bv(4, {1, 2}), bv(4, {3, 4})}, 4)));

    // all-pairs oracle agrees on random codes
    std::mt19937 rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const LinearCode code = random_code(rng, n);
        bool oracle = true;
        for (const std::uint64_t v : code.words) {
            for (const std::uint64_t w : code.words) {
                if (inner_product_masks(v, w)) oracle = false;
            }
        }
        CHECK(is_self_orthogonal(code) == oracle);
    }
}

TEST_CASE("self-orthogonal codes have dimension at most n/2") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 13);
        // grow a self-orthogonal generating set greedily
        std::vector<std::uint64_t> gens;
        for (int attempt = 0; attempt < 3 * n; ++attempt) {
            const std::uint64_t candidate = rng() & full_mask(n);
            if (std::popcount(candidate) % 2 != 0) continue;
            bool ok = true;
            for (const std::uint64_t g : gens) {
                if (inner_product_masks(candidate, g)) ok = false;
            }
            if (ok) gens.push_back(candidate);
        }
        const LinearCode code = span_masks(gens, n);
        REQUIRE(is_self_orthogonal(code));
        CHECK(code.dim <= n / 2);
    }
}

TEST_CASE("column profile: frozen examples") {
    const auto rep = column_profile(span({bv(2, {1, 2})}, 2));
    CHECK(rep == std::vector<ColumnTag>{ColumnTag::balanced, ColumnTag::balanced});

    const auto zero = column_profile(span({}, 4));
    CHECK(zero == std::vector<ColumnTag>(4, ColumnTag::all_zero));

    const auto mixed = column_profile(span({bv(4, {1, 2}), bv(4, {2, 3})}, 4));
    CHECK(mixed == std::vector<ColumnTag>{ColumnTag::balanced, ColumnTag::balanced,
                                          ColumnTag::balanced, ColumnTag::all_zero});
}

TEST_CASE("column profile counts are 0 or |C|/2 on any linear code") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const LinearCode code = random_code(rng, n);
        const auto tags = column_profile(code);
        REQUIRE(tags.size() == static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            std::size_t count = 0;
            for (const std::uint64_t w : code.words) count += (w >> j) & 1;
            if (tags[static_cast<std::size_t>(j)] == ColumnTag::all_zero) {
                CHECK(count == 0);
            } else {
                CHECK(count == code.words.size() / 2);
            }
        }
    }
}

TEST_CASE("column profile flags corrupted word lists") {
    // {0, 11, 101} is not span-closed: column 1 has 2 of 3 ones.
    LinearCode corrupted;
    corrupted.n = 3;
    corrupted.words = {0, mask_of({1, 2}), mask_of({1, 3})};
    corrupted.basis = {mask_of({1, 2}), mask_of({1, 3})};
    corrupted.dim = 2;
    CHECK_THROWS_AS(column_profile(corrupted), consistency_error);
}

TEST_CASE("reduced basis is deterministic and reduced") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const LinearCode code = random_code(rng, n);
        // re-deriving the basis from the full (sorted) word list gives the
        // same rows: the RREF of a span is unique
        CHECK(reduced_basis(code.words) == code.basis);
        std::uint64_t seen_pivots = 0;
        std::uint64_t prev_pivot = 0;
        for (const std::uint64_t row : code.basis) {
            const std::uint64_t pivot = lowest_bit(row);
            CHECK(pivot > prev_pivot);
            prev_pivot = pivot;
            seen_pivots |= pivot;
        }
        for (const std::uint64_t row : code.basis) {
            // no row touches another row's pivot
            CHECK((row & seen_pivots) == lowest_bit(row));
        }
    }
}
