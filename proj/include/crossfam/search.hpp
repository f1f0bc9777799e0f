#pragma once

// Exhaustive verification engine. For a fixed B the best possible partner is
// the full compatible family, so the search enumerates every non-empty B
// drawn from the d-divisible-weight subsets of [n] and reads off the product
// |max_compatible_a(B)| * |B|.
//
// Determinism contract: the family index space is split into contiguous
// ranges, workers share no mutable state, and partial results merge in range
// order, so the output is bit-identical for any worker count.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "crossfam/construct.hpp"
#include "crossfam/errors.hpp"
#include "crossfam/family.hpp"
#include "crossfam/structure.hpp"
#include "crossfam/util.hpp"

namespace crossfam {

struct SearchOptions {
    int workers = 1;
    bool force = false;  // lift the default ground-list ceiling
};

// Default refusal point: more than 24 admissible-weight subsets means more
// than 2^24 candidate families.
inline constexpr int kDefaultGroundCeiling = 24;
inline constexpr int kHardGroundCeiling = 28;
inline constexpr int kMaxSearchGroundSize = 24;  // compat bitsets hold 2^n bits

struct SearchResult {
    int n = 1;
    Fraction frac;
    std::uint64_t max_product = 0;
    std::vector<CrossPair> witnesses;  // ascending family-index order
    std::uint64_t families_scanned = 0;
};

namespace detail {

struct SearchSpace {
    int n;
    Fraction frac;
    std::vector<std::uint64_t> ground;                // admissible B members, ascending
    std::vector<std::vector<std::uint64_t>> compat;   // per member: bitset over all 2^n masks
    std::size_t words;                                // bitset length in 64-bit words

    SearchSpace(int n_, Fraction frac_, const SearchOptions& opt) : n(n_), frac(frac_) {
        if (n < 1) {
            throw invalid_input("search: n must be positive");
        }
        if (n > kMaxSearchGroundSize) {
            throw capacity_error("exhaustive search supports n <= " +
                                 std::to_string(kMaxSearchGroundSize) + ", got n = " +
                                 std::to_string(n));
        }
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t m = 0; m < limit; ++m) {
            if (std::popcount(m) % frac.d == 0) ground.push_back(m);
        }
        const int g = static_cast<int>(ground.size());
        if (g > kDefaultGroundCeiling && !opt.force) {
            throw capacity_error("search space has " + std::to_string(g) +
                                 " admissible subsets (2^" + std::to_string(g) +
                                 " families), above the ceiling of " +
                                 std::to_string(kDefaultGroundCeiling) +
                                 "; pass the override flag to proceed");
        }
        if (g > kHardGroundCeiling) {
            throw capacity_error("search space has " + std::to_string(g) +
                                 " admissible subsets; 2^" + std::to_string(g) +
                                 " families is beyond the hard ceiling");
        }

        words = static_cast<std::size_t>((limit + 63) / 64);
        compat.assign(ground.size(), std::vector<std::uint64_t>(words, 0));
        for (std::size_t i = 0; i < ground.size(); ++i) {
            const int rhs = frac.c * std::popcount(ground[i]);
            for (std::uint64_t a = 0; a < limit; ++a) {
                if (frac.d * std::popcount(a & ground[i]) == rhs) {
                    compat[i][a >> 6] |= std::uint64_t{1} << (a & 63);
                }
            }
        }
    }

    // Count of compatible partners for the family encoded by `f`
    // (bit i of f selects ground[i]); `acc` is scratch of length `words`.
    std::uint64_t partner_count(std::uint64_t f, std::vector<std::uint64_t>& acc) const {
        std::fill(acc.begin(), acc.end(), ~std::uint64_t{0});
        if (n < 6) {
            // single partial word: mask off candidate bits beyond 2^n
            acc[0] = (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
        }
        for (std::uint64_t rest = f; rest != 0; rest &= rest - 1) {
            const auto i = static_cast<std::size_t>(std::countr_zero(rest));
            const std::vector<std::uint64_t>& row = compat[i];
            for (std::size_t w = 0; w < words; ++w) acc[w] &= row[w];
        }
        std::uint64_t count = 0;
        for (const std::uint64_t w : acc) count += static_cast<std::uint64_t>(std::popcount(w));
        return count;
    }

    CrossPair materialize(std::uint64_t f) const {
        std::vector<std::uint64_t> b_masks;
        for (std::uint64_t rest = f; rest != 0; rest &= rest - 1) {
            b_masks.push_back(ground[static_cast<std::size_t>(std::countr_zero(rest))]);
        }
        std::vector<std::uint64_t> acc(words);
        partner_count(f, acc);
        std::vector<std::uint64_t> a_masks;
        for (std::size_t w = 0; w < words; ++w) {
            for (std::uint64_t bits = acc[w]; bits != 0; bits &= bits - 1) {
                a_masks.push_back(static_cast<std::uint64_t>(w) * 64 +
                                  static_cast<std::uint64_t>(std::countr_zero(bits)));
            }
        }
        return CrossPair(n, frac, SetFamily(n, std::move(a_masks)), SetFamily(n, std::move(b_masks)));
    }
};

struct ShardResult {
    std::uint64_t best = 0;
    std::vector<std::uint64_t> winners;  // family indices achieving `best`, ascending
};

inline ShardResult scan_range(const SearchSpace& space, std::uint64_t lo, std::uint64_t hi) {
    ShardResult out;
    std::vector<std::uint64_t> acc(space.words);
    for (std::uint64_t f = lo; f < hi; ++f) {
        const std::uint64_t partners = space.partner_count(f, acc);
        if (partners == 0) continue;
        const std::uint64_t product =
            partners * static_cast<std::uint64_t>(std::popcount(f));
        if (product > out.best) {
            out.best = product;
            out.winners.clear();
        }
        if (product == out.best) out.winners.push_back(f);
    }
    return out;
}

}  // namespace detail

// Exact maximum of |A||B| over all c/d-cross-intersecting pairs with both
// families non-empty, plus every B (with its full compatible A) achieving it.
inline SearchResult max_product(int n, const Fraction& frac, const SearchOptions& opt = {}) {
    const detail::SearchSpace space(n, frac, opt);
    const int g = static_cast<int>(space.ground.size());
    const std::uint64_t total = std::uint64_t{1} << g;  // family indices 1..total-1

    const std::uint64_t count = total - 1;
    const int workers = static_cast<int>(
        std::min<std::uint64_t>(count, static_cast<std::uint64_t>(std::max(1, opt.workers))));

    std::vector<detail::ShardResult> shards(static_cast<std::size_t>(workers));
    {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t lo = 1 + count * static_cast<std::uint64_t>(w) /
                                             static_cast<std::uint64_t>(workers);
            const std::uint64_t hi = 1 + count * static_cast<std::uint64_t>(w + 1) /
                                             static_cast<std::uint64_t>(workers);
            pool.emplace_back([&space, &shards, w, lo, hi] {
                shards[static_cast<std::size_t>(w)] = detail::scan_range(space, lo, hi);
            });
        }
        for (std::thread& t : pool) t.join();
    }

    SearchResult result;
    result.n = n;
    result.frac = frac;
    result.families_scanned = count;
    for (const detail::ShardResult& s : shards) result.max_product = std::max(result.max_product, s.best);
    if (result.max_product > pow2(n)) {
        throw consistency_error("search found a product above 2^n");
    }
    for (const detail::ShardResult& s : shards) {
        if (s.best != result.max_product) continue;
        for (const std::uint64_t f : s.winners) result.witnesses.push_back(space.materialize(f));
    }
    return result;
}

// All labeled pairs with product exactly 2^n, the A side maximal for its B.
// The trivial family {{}} always reaches 2^n, so this is max_product's
// witness list.
inline std::vector<CrossPair> enumerate_maximal(int n, const Fraction& frac,
                                                const SearchOptions& opt = {}) {
    SearchResult result = max_product(n, frac, opt);
    if (result.max_product != pow2(n)) {
        throw consistency_error("maximum product is not 2^n");
    }
    return std::move(result.witnesses);
}

// ---- isomorphism quotient ----------------------------------------------

inline constexpr int kMaxCanonicalGroundSize = 8;  // n! relabelings scanned

// Lexicographically minimal serialization of a pair over all relabelings of
// [n], applied to both families at once. The key compares as
// (n, c, d, |B|, B masks ascending, |A|, A masks ascending).
struct CanonicalForm {
    std::vector<std::uint64_t> key;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm& x, const CanonicalForm& y) {
        return x.key <=> y.key;
    }
};

namespace detail {

inline void permuted_sorted_masks(const std::vector<std::uint64_t>& masks,
                                  const std::vector<int>& perm,
                                  std::vector<std::uint64_t>& out) {
    out.clear();
    for (const std::uint64_t m : masks) {
        std::uint64_t image = 0;
        for (std::uint64_t rest = m; rest != 0; rest &= rest - 1) {
            image |= std::uint64_t{1}
                     << perm[static_cast<std::size_t>(std::countr_zero(rest))];
        }
        out.push_back(image);
    }
    std::sort(out.begin(), out.end());
}

}  // namespace detail

inline CanonicalForm canonical_form(const CrossPair& pair) {
    if (pair.n > kMaxCanonicalGroundSize) {
        throw capacity_error("canonical form scans n! relabelings; n <= " +
                             std::to_string(kMaxCanonicalGroundSize) + " required");
    }
    std::vector<int> perm(static_cast<std::size_t>(pair.n));
    for (int i = 0; i < pair.n; ++i) perm[static_cast<std::size_t>(i)] = i;

    std::vector<std::uint64_t> best;
    std::vector<std::uint64_t> key;
    std::vector<std::uint64_t> scratch;
    do {
        key.clear();
        key.push_back(static_cast<std::uint64_t>(pair.n));
        key.push_back(static_cast<std::uint64_t>(pair.frac.c));
        key.push_back(static_cast<std::uint64_t>(pair.frac.d));
        key.push_back(pair.b.size());
        detail::permuted_sorted_masks(pair.b.sets, perm, scratch);
        key.insert(key.end(), scratch.begin(), scratch.end());
        key.push_back(pair.a.size());
        detail::permuted_sorted_masks(pair.a.sets, perm, scratch);
        key.insert(key.end(), scratch.begin(), scratch.end());
        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));

    return CanonicalForm{std::move(best)};
}

inline CrossPair relabel(const CrossPair& pair, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != pair.n) {
        throw invalid_input("relabel: permutation length must equal n");
    }
    std::vector<std::uint64_t> a_masks, b_masks;
    detail::permuted_sorted_masks(pair.a.sets, perm, a_masks);
    detail::permuted_sorted_masks(pair.b.sets, perm, b_masks);
    return CrossPair(pair.n, pair.frac, SetFamily(pair.n, std::move(a_masks)),
                     SetFamily(pair.n, std::move(b_masks)));
}

// Which canonical maximal bisecting pair a maximal pair is isomorphic to.
// nullopt means no k matches; by the characterization of maximal bisecting
// pairs that would be a counterexample alarm.
inline std::optional<int> classify_maximal(const CrossPair& pair) {
    if (!pair.frac.is_half() || !is_cross_intersecting(pair) || pair.product() != pow2(pair.n)) {
        throw invalid_input("classify_maximal requires a maximal cross-bisecting pair");
    }
    const CanonicalForm form = canonical_form(pair);
    for (int k = 0; 2 * k <= pair.n; ++k) {
        if (form == canonical_form(maximal_bisecting_pair(pair.n, k))) return k;
    }
    return std::nullopt;
}

// ---- witness classification for reports ----------------------------------

struct ClassEntry {
    std::optional<int> k;  // nullopt renders as "nonstandard"
    CrossPair representative;
};

namespace detail {

// Structural fallback when n is past the canonicalization limit: a maximal
// bisecting B decomposes into dim-many atoms of size 2.
inline std::optional<int> structural_class(const CrossPair& pair) {
    if (pair.b.size() == 1 && pair.b.sets[0] == 0) return 0;
    if (!pair.frac.is_half() || pair.product() != pow2(pair.n)) return std::nullopt;
    try {
        const DecompositionReport report = extract_atoms(pair.b);
        for (const int half : report.half_sizes) {
            if (half != 1) return std::nullopt;
        }
        if (report.product_audit != pow2(pair.n)) return std::nullopt;
        return report.dim;
    } catch (const error&) {
        return std::nullopt;
    }
}

}  // namespace detail

// One entry per isomorphism class of witnesses, represented by the witness
// with the lowest enumeration index. Classes are ordered by k, alarms last.
inline std::vector<ClassEntry> classify_witnesses(const SearchResult& result) {
    std::vector<ClassEntry> classes;
    const bool maximal = result.max_product == pow2(result.n);
    if (result.n <= kMaxCanonicalGroundSize) {
        std::map<CanonicalForm, std::size_t> seen;
        for (const CrossPair& witness : result.witnesses) {
            CanonicalForm form = canonical_form(witness);
            if (seen.contains(form)) continue;
            seen.emplace(std::move(form), classes.size());
            std::optional<int> k;
            if (witness.frac.is_half() && maximal) {
                k = classify_maximal(witness);
            } else if (witness.b.size() == 1 && witness.b.sets[0] == 0) {
                k = 0;
            }
            classes.push_back(ClassEntry{k, witness});
        }
    } else {
        std::vector<std::optional<int>> seen;
        for (const CrossPair& witness : result.witnesses) {
            const std::optional<int> k = detail::structural_class(witness);
            if (k && std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
            if (k) seen.push_back(k);
            classes.push_back(ClassEntry{k, witness});
        }
    }
    std::stable_sort(classes.begin(), classes.end(), [](const ClassEntry& x, const ClassEntry& y) {
        if (x.k.has_value() != y.k.has_value()) return x.k.has_value();
        if (x.k && y.k && *x.k != *y.k) return *x.k < *y.k;
        return false;
    });
    return classes;
}

// ---- fraction sweep -------------------------------------------------------

struct SweepRow {
    Fraction frac;
    std::uint64_t max_product = 0;
    std::uint64_t families_scanned = 0;
    std::uint64_t witness_count = 0;
    std::uint64_t class_count = 0;  // 0 when n is past the canonical limit
    bool nontrivial_witness = false;  // some witness B other than {{}}
};

inline std::vector<Fraction> irreducible_fractions(int n) {
    std::vector<Fraction> fractions{Fraction(0, 1)};
    std::vector<std::pair<int, int>> mid;
    for (int d = 2; d <= n; ++d) {
        for (int c = 1; c < d; ++c) {
            if (std::gcd(c, d) == 1) mid.emplace_back(c, d);
        }
    }
    std::sort(mid.begin(), mid.end(), [](const auto& x, const auto& y) {
        return x.first * y.second < y.first * x.second;
    });
    for (const auto& [c, d] : mid) fractions.emplace_back(c, d);
    fractions.emplace_back(1, 1);
    return fractions;
}

// max_product for every irreducible c/d with d <= n, in ascending fraction
// order; flags whether anything beyond the trivial witness reaches 2^n.
inline std::vector<SweepRow> sweep_fractions(int n, const SearchOptions& opt = {}) {
    std::vector<SweepRow> rows;
    for (const Fraction& frac : irreducible_fractions(n)) {
        const SearchResult result = max_product(n, frac, opt);
        SweepRow row;
        row.frac = frac;
        row.max_product = result.max_product;
        row.families_scanned = result.families_scanned;
        row.witness_count = result.witnesses.size();
        for (const CrossPair& w : result.witnesses) {
            if (w.b.size() != 1 || w.b.sets[0] != 0) row.nontrivial_witness = true;
        }
        if (n <= kMaxCanonicalGroundSize) {
            row.class_count = classify_witnesses(result).size();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace crossfam
