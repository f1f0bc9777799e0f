// Acceptance suite: one line of output per criterion, exit 0 iff all pass.

#include <bit>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "crossfam/crossfam.hpp"

using namespace crossfam;

namespace {

struct Criterion {
    std::string label;
    std::function<void(std::ostringstream&)> run;  // throws or appends detail on failure
};

struct Failure {
    std::string detail;
};

void expect(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

// ---- criterion 1: exhaustive maximum is exactly 2^n ------------------------

void criterion_max_product(std::ostringstream& note) {
    int runs = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const Fraction& frac : irreducible_fractions(n)) {
            const SearchResult result = max_product(n, frac);
            expect(result.max_product == pow2(n),
                   "n=" + std::to_string(n) + " c/d=" + frac.str() + " gave " +
                       std::to_string(result.max_product));
            ++runs;
        }
    }
    const SearchResult five = max_product(5, Fraction(1, 2));
    expect(five.max_product == 32, "n=5 c/d=1/2 gave " + std::to_string(five.max_product));
    ++runs;
    note << runs << " searches, all exactly 2^n";
}

// ---- criterion 2: the maximal bisecting classes are complete ---------------

void criterion_classification(std::ostringstream& note) {
    int classes_seen = 0;
    for (int n = 2; n <= 5; ++n) {
        const std::vector<CrossPair> maximal = enumerate_maximal(n, Fraction(1, 2));
        std::set<CanonicalForm> forms;
        for (const CrossPair& pair : maximal) {
            const auto k = classify_maximal(pair);
            expect(k.has_value(), "nonstandard maximal pair at n=" + std::to_string(n));
            expect(canonical_form(pair) == canonical_form(maximal_bisecting_pair(n, *k)),
                   "class mismatch at n=" + std::to_string(n));
            forms.insert(canonical_form(pair));
        }
        expect(forms.size() == static_cast<std::size_t>(n / 2 + 1),
               "n=" + std::to_string(n) + " produced " + std::to_string(forms.size()) +
                   " classes, expected " + std::to_string(n / 2 + 1));
        // every k in 0..n/2 is realized
        for (int k = 0; 2 * k <= n; ++k) {
            expect(forms.contains(canonical_form(maximal_bisecting_pair(n, k))),
                   "missing class k=" + std::to_string(k) + " at n=" + std::to_string(n));
        }
        classes_seen += n / 2 + 1;
    }
    note << classes_seen << " classes over n=2..5, zero nonstandard";
}

// ---- criterion 3: uniform constructions are tight ---------------------------

void criterion_uniform_tightness(std::ostringstream& note) {
    int built = 0;
    for (int n = 1; n <= 12; ++n) {
        for (int k = 2; k <= 5; ++k) {
            if (k > n) continue;
            // halving shape: fraction forced by the parity of k
            for (int tau = 0; tau <= k && k + tau <= n; ++tau) {
                const UniformParams params = halving_params(n, k, tau);
                if (2 * params.l > n) continue;  // bound undefined here
                const CrossPair pair = uniform_halving_pair(params);
                expect(is_cross_intersecting(pair),
                       "halving pair not cross-intersecting at n=" + std::to_string(n));
                for (const std::uint64_t b : pair.b.sets) {
                    expect(std::popcount(b) == k, "halving B not k-uniform");
                }
                expect(pair.product() == uniform_product_bound(n, k, params.frac),
                       "halving product misses the bound at n=" + std::to_string(n) +
                           " k=" + std::to_string(k) + " tau=" + std::to_string(tau));
                ++built;
            }
            // containment shape, both kappa values
            if (2 * k > n) continue;
            for (const int kappa : {2 * k - 1, 2 * k}) {
                const CrossPair pair = uniform_containment_pair(n, k, kappa);
                expect(is_cross_intersecting(pair), "containment pair not cross-intersecting");
                for (const std::uint64_t b : pair.b.sets) {
                    expect(std::popcount(b) == k, "containment B not k-uniform");
                }
                expect(pair.product() == uniform_product_bound(n, k, Fraction(1, 1)),
                       "containment product misses the bound at n=" + std::to_string(n) +
                           " k=" + std::to_string(k) + " kappa=" + std::to_string(kappa));
                ++built;
            }
        }
    }
    note << built << " constructions, every product equal to the bound";
}

// ---- criterion 4: structure of maximal pairs + random code laws -------------

void criterion_structure(std::ostringstream& note) {
    int pairs_checked = 0;
    for (int n = 2; n <= 5; ++n) {
        for (const CrossPair& pair : enumerate_maximal(n, Fraction(1, 2))) {
            expect(check_linearity(pair.b), "linearity failed");
            expect(check_parity_closure(pair.b, pair.frac), "parity closure failed");
            expect(check_self_orthogonal_family(pair.b), "self-orthogonality failed");
            expect(check_intersection_closure(pair.b), "intersection closure failed");
            expect(pair.b.size() <= pow2(n / 2), "|B| exceeds 2^(n/2)");
            const DecompositionReport report = extract_atoms(pair.b);
            for (const int half : report.half_sizes) {
                expect(half == 1, "maximal pair with an atom larger than a couple");
            }
            expect(report.product_audit == pow2(n), "audit != 2^n on a maximal pair");
            ++pairs_checked;
        }
    }

    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        std::vector<std::uint64_t> gens;
        const int count = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
        for (int i = 0; i < count; ++i) gens.push_back(rng() & full_mask(n));
        const LinearCode code = span_masks(gens, n);

        // column counts are 0 or half
        const auto tags = column_profile(code);
        for (int j = 0; j < n; ++j) {
            std::size_t ones = 0;
            for (const std::uint64_t w : code.words) ones += (w >> j) & 1;
            expect(ones == 0 || ones == code.words.size() / 2, "column count law failed");
            expect((ones == 0) == (tags[static_cast<std::size_t>(j)] == ColumnTag::all_zero),
                   "column tag mismatch");
        }

        // dimension identity, with the dual size recounted by brute force
        const LinearCode d = dual(code);
        expect(code.dim + d.dim == n, "dim(C) + dim(dual) != n");
        std::size_t orthogonal = 0;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            bool ok = true;
            for (const std::uint64_t row : code.basis) {
                if (inner_product_masks(x, row)) ok = false;
            }
            orthogonal += ok;
        }
        expect(orthogonal == d.words.size(), "brute-force dual size disagrees");

        expect(dual(d).words == code.words, "dual involution failed");
    }
    note << pairs_checked << " maximal pairs and 200 random codes verified";
}

// ---- criterion 5: bisection lattice on random premise triples ---------------

void criterion_lattice(std::ostringstream& note) {
    std::mt19937 rng(5150);
    int hits = 0;
    long long attempts = 0;
    while (hits < 10000) {
        ++attempts;
        const int n = 2 + static_cast<int>(rng() % 11);
        const std::uint64_t a = rng() & full_mask(n);
        const std::uint64_t b1 = rng() & full_mask(n);
        const std::uint64_t b2 = rng() & full_mask(n);
        if (!bisects_masks(a, b1) || !bisects_masks(a, b2) || !bisects_masks(a, b1 ^ b2)) {
            continue;
        }
        ++hits;
        expect(check_bisection_lattice(BitVector(n, a), BitVector(n, b1), BitVector(n, b2)),
               "bisected intersection failed");
    }
    note << "10000 premise-satisfying triples (from " << attempts << " samples), all bisected";
}

// ---- criterion 6: the decomposition audit is a literal count ----------------

void criterion_counting_identity(std::ostringstream& note) {
    std::mt19937 rng(6174);
    std::set<std::vector<std::uint64_t>> seen;
    int checked = 0;
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 600; ++trial) {
            std::vector<std::uint64_t> gens;
            for (int i = 0; i < 3; ++i) {
                std::uint64_t m = rng() & full_mask(n);
                if (std::popcount(m) % 2) m &= m - 1;  // make the weight even
                gens.push_back(m);
            }
            const LinearCode code = span_masks(gens, n);
            const SetFamily b(n, code.words);
            if (!check_self_orthogonal_family(b) || !check_intersection_closure(b)) continue;
            if (!seen.insert(code.words).second) continue;
            const DecompositionReport report = extract_atoms(b);
            const SetFamily best = max_compatible_a(b, Fraction(1, 2));
            expect(best.size() * b.size() == report.product_audit,
                   "audit != |max A| * |B| at n=" + std::to_string(n));
            ++checked;
        }
    }
    expect(checked >= 20, "too few admissible families generated");
    note << checked << " distinct admissible families, identity exact";
}

// ---- criterion 7: reports are byte-identical across worker counts -----------

std::string report_for(int n, const Fraction& frac, int workers) {
    SearchOptions opt;
    opt.workers = workers;
    const SearchResult result = max_product(n, frac, opt);
    return dump_report(search_result_to_json(result, classify_witnesses(result)));
}

void criterion_determinism(std::ostringstream& note) {
    int compared = 0;
    std::vector<std::pair<int, Fraction>> runs;
    for (int n = 1; n <= 4; ++n) {
        for (const Fraction& frac : irreducible_fractions(n)) runs.emplace_back(n, frac);
    }
    runs.emplace_back(5, Fraction(1, 2));  // covers the criterion-2 enumerations as well
    for (int n = 2; n <= 4; ++n) runs.emplace_back(n, Fraction(1, 2));
    for (const auto& [n, frac] : runs) {
        const std::string base = report_for(n, frac, 1);
        expect(base == report_for(n, frac, 2),
               "2-worker report differs at n=" + std::to_string(n) + " c/d=" + frac.str());
        expect(base == report_for(n, frac, 8),
               "8-worker report differs at n=" + std::to_string(n) + " c/d=" + frac.str());
        ++compared;
    }
    note << compared << " reports identical for 1, 2 and 8 workers";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"criterion 1 (exhaustive max product equals 2^n)", criterion_max_product},
        {"criterion 2 (maximal bisecting classes complete)", criterion_classification},
        {"criterion 3 (uniform constructions reach the bound)", criterion_uniform_tightness},
        {"criterion 4 (structure suite on maximal pairs and random codes)", criterion_structure},
        {"criterion 5 (bisection lattice property)", criterion_lattice},
        {"criterion 6 (decomposition audit counting identity)", criterion_counting_identity},
        {"criterion 7 (worker-count determinism)", criterion_determinism},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        std::ostringstream note;
        try {
            criterion.run(note);
            std::cout << "PASS " << criterion.label;
            if (!note.str().empty()) std::cout << " -- " << note.str();
            std::cout << "\n";
        } catch (const Failure& f) {
            ++failures;
            std::cout << "FAIL " << criterion.label << " -- " << f.detail << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL " << criterion.label << " -- unexpected error: " << e.what()
                      << "\n";
        }
    }
    return failures == 0 ? 0 : 1;
}
