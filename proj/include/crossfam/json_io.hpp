#pragma once

// Canonical JSON forms for the shared file formats. Key order is fixed,
// sets are sorted by mask value inside a family, elements ascending inside
// a set, so serialization is byte-stable across runs and worker counts.
//
//   family: {"n": <int>, "sets": [[<elements, 1-based, ascending>], ...]}
//   pair:   {"n":, "c":, "d":, "A": <family>, "B": <family>}

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crossfam/errors.hpp"
#include "crossfam/family.hpp"
#include "crossfam/search.hpp"
#include "crossfam/structure.hpp"

namespace crossfam {

using json = nlohmann::ordered_json;

inline json elements_of(std::uint64_t mask) {
    json out = json::array();
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        out.push_back(std::countr_zero(rest) + 1);
    }
    return out;
}

inline json family_to_json(const SetFamily& family) {
    json sets = json::array();
    for (const std::uint64_t m : family.sets) sets.push_back(elements_of(m));
    return json{{"n", family.n}, {"sets", std::move(sets)}};
}

inline json pair_to_json(const CrossPair& pair) {
    return json{{"n", pair.n},
                {"c", pair.frac.c},
                {"d", pair.frac.d},
                {"A", family_to_json(pair.a)},
                {"B", family_to_json(pair.b)}};
}

namespace detail {

inline int require_int(const json& j, const char* key, int lo, int hi) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw invalid_input(std::string("expected integer field \"") + key + "\"");
    }
    const auto v = j[key].get<long long>();
    if (v < lo || v > hi) {
        throw invalid_input(std::string("field \"") + key + "\" out of range");
    }
    return static_cast<int>(v);
}

}  // namespace detail

inline SetFamily family_from_json(const json& j) {
    if (!j.is_object()) throw invalid_input("family must be a JSON object");
    const int n = detail::require_int(j, "n", 1, kMaxGroundSize);
    if (!j.contains("sets") || !j["sets"].is_array()) {
        throw invalid_input("family needs a \"sets\" array");
    }
    std::vector<std::uint64_t> masks;
    masks.reserve(j["sets"].size());
    for (const json& set : j["sets"]) {
        if (!set.is_array()) throw invalid_input("each set must be an array of elements");
        std::uint64_t m = 0;
        for (const json& e : set) {
            if (!e.is_number_integer()) throw invalid_input("elements must be integers");
            const auto v = e.get<long long>();
            if (v < 1 || v > n) {
                throw invalid_input("element " + std::to_string(v) + " outside [1, " +
                                    std::to_string(n) + "]");
            }
            m |= std::uint64_t{1} << (v - 1);
        }
        masks.push_back(m);
    }
    return SetFamily(n, std::move(masks));
}

inline CrossPair pair_from_json(const json& j) {
    if (!j.is_object()) throw invalid_input("pair must be a JSON object");
    const int n = detail::require_int(j, "n", 1, kMaxGroundSize);
    const int c = detail::require_int(j, "c", 0, kMaxGroundSize);
    const int d = detail::require_int(j, "d", 1, kMaxGroundSize);
    if (!j.contains("A") || !j.contains("B")) {
        throw invalid_input("pair needs \"A\" and \"B\" families");
    }
    SetFamily a = family_from_json(j["A"]);
    SetFamily b = family_from_json(j["B"]);
    if (a.n != n || b.n != n) {
        throw invalid_input("family ground sets disagree with the pair's n");
    }
    return CrossPair(n, Fraction(c, d), std::move(a), std::move(b));
}

inline json report_to_json(const DecompositionReport& report) {
    json atoms = json::array();
    for (const std::uint64_t atom : report.atoms) atoms.push_back(elements_of(atom));
    json halves = json::array();
    for (const int h : report.half_sizes) halves.push_back(h);
    return json{{"atoms", std::move(atoms)},
                {"half_sizes", std::move(halves)},
                {"zero_part", elements_of(report.zero_part)},
                {"n0", report.n0},
                {"dim", report.dim},
                {"product_audit", report.product_audit}};
}

inline json class_entry_to_json(const ClassEntry& entry) {
    json out;
    if (entry.k) {
        out["k_or_nonstandard"] = *entry.k;
    } else {
        out["k_or_nonstandard"] = "nonstandard";
    }
    out["representative"] = pair_to_json(entry.representative);
    return out;
}

inline json search_result_to_json(const SearchResult& result,
                                  const std::vector<ClassEntry>& classes,
                                  bool include_witnesses = false) {
    json cls = json::array();
    for (const ClassEntry& entry : classes) cls.push_back(class_entry_to_json(entry));
    json out{{"n", result.n},
             {"c", result.frac.c},
             {"d", result.frac.d},
             {"max_product", result.max_product},
             {"classes", std::move(cls)},
             {"families_scanned", result.families_scanned}};
    if (include_witnesses) {
        json ws = json::array();
        for (const CrossPair& w : result.witnesses) ws.push_back(pair_to_json(w));
        out["witnesses"] = std::move(ws);
    }
    return out;
}

inline json sweep_to_json(int n, const std::vector<SweepRow>& rows) {
    json out{{"n", n}, {"rows", json::array()}};
    for (const SweepRow& row : rows) {
        out["rows"].push_back(json{{"c", row.frac.c},
                                   {"d", row.frac.d},
                                   {"max_product", row.max_product},
                                   {"families_scanned", row.families_scanned},
                                   {"witness_count", row.witness_count},
                                   {"class_count", row.class_count},
                                   {"nontrivial_witness", row.nontrivial_witness}});
    }
    return out;
}

inline std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace crossfam
