// crossfam: verify, construct, search and decompose cross-intersecting
// set families.
//
// Exit codes: 0 = verified / success, 1 = a checked property is violated or
// a nonstandard maximal pair was found, 2 = invalid input or capacity.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crossfam/crossfam.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInvalid = 2;

crossfam::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw crossfam::invalid_input("cannot open file: " + path);
    }
    try {
        return crossfam::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw crossfam::invalid_input("malformed JSON in " + path + ": " + e.what());
    }
}

void emit(const crossfam::json& j) { std::cout << crossfam::dump_report(j); }

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string file;
    std::optional<int> c, d;
    bool as_json = false;
};

int run_verify(const VerifyArgs& args) {
    using namespace crossfam;
    CrossPair pair = pair_from_json(load_json_file(args.file));
    if (args.c.has_value() != args.d.has_value()) {
        throw invalid_input("--c and --d must be given together");
    }
    if (args.c) {
        pair = CrossPair(pair.n, Fraction(*args.c, *args.d), pair.a, pair.b);
    }

    const bool cross = is_cross_intersecting(pair);
    std::optional<ProductBoundAudit> audit;
    if (cross) audit = product_bound_audit(pair);

    // The structural requirements below are forced only on maximal
    // bisecting pairs; for anything else they are reported as information.
    const bool tight = audit && audit->tight;
    std::optional<bool> lin, parity, self_orth, closure;
    if (cross && pair.frac.is_half()) {
        lin = check_linearity(pair.b);
        parity = *lin ? check_parity_closure(pair.b, pair.frac) : false;
        self_orth = check_self_orthogonal_family(pair.b);
        closure = check_intersection_closure(pair.b);
    }
    const bool structure_ok = !tight || !pair.frac.is_half() ||
                              (*lin && *parity && *self_orth && *closure);
    const bool verdict = cross && structure_ok;

    if (args.as_json) {
        json out{{"n", pair.n},
                 {"c", pair.frac.c},
                 {"d", pair.frac.d},
                 {"cross_intersecting", cross}};
        if (audit) {
            out["audit"] = json{{"product", audit->family_product},
                                {"bound", audit->bound},
                                {"span_a_dim", audit->span_a_dim},
                                {"span_b_dim", audit->span_b_dim},
                                {"doubling_holds", audit->doubling_holds},
                                {"span_product_within", audit->span_product_within},
                                {"product_within", audit->product_within},
                                {"tight", audit->tight}};
        }
        if (lin) {
            out["structure"] = json{{"required", tight},
                                    {"LINEARITY", *lin},
                                    {"PARITY", *parity},
                                    {"SELF_ORTHOGONAL", *self_orth},
                                    {"INTERSECTION_CLOSURE", *closure}};
        }
        out["verdict"] = verdict ? "PASS" : "FAIL";
        emit(out);
    } else {
        std::cout << "pair: n=" << pair.n << " c/d=" << pair.frac.str()
                  << " |A|=" << pair.a.size() << " |B|=" << pair.b.size()
                  << " product=" << pair.product() << "\n";
        std::cout << "cross-intersection: " << pass_fail(cross) << "\n";
        if (audit) {
            std::cout << "bound chain: |span A'|=" << audit->span_a_size
                      << " >= 2|A|=" << 2 * pair.a.size() << ": "
                      << pass_fail(audit->doubling_holds) << "\n";
            std::cout << "bound chain: |span A'||span B'|=" << audit->span_product
                      << " <= 2^(n+1)=" << audit->bound_next << ": "
                      << pass_fail(audit->span_product_within) << "\n";
            std::cout << "bound chain: |A||B|=" << audit->family_product
                      << " <= 2^n=" << audit->bound << ": " << pass_fail(audit->product_within)
                      << (audit->tight ? " (tight)" : "") << "\n";
        }
        if (lin) {
            const char* mode = tight ? "required" : "informational";
            std::cout << "structure (" << mode << ") LINEARITY: " << pass_fail(*lin) << "\n";
            std::cout << "structure (" << mode << ") PARITY: " << pass_fail(*parity) << "\n";
            std::cout << "structure (" << mode << ") SELF_ORTHOGONAL: " << pass_fail(*self_orth)
                      << "\n";
            std::cout << "structure (" << mode << ") INTERSECTION_CLOSURE: "
                      << pass_fail(*closure) << "\n";
        }
        std::cout << "verdict: " << pass_fail(verdict) << "\n";
    }
    return verdict ? kExitOk : kExitViolated;
}

// ---- construct --------------------------------------------------------------

struct ConstructArgs {
    std::string kind;
    int n = 0;
    int k = 0;
    int tau = 0;
    std::optional<int> kappa;
    std::optional<int> c, d;
    bool as_text = false;
};

int run_construct(const ConstructArgs& args) {
    using namespace crossfam;
    CrossPair pair;
    std::uint64_t expected = 0;
    if (args.kind == "thm12") {
        pair = maximal_bisecting_pair(args.n, args.k);
        expected = pow2(args.n);
    } else if (args.kind == "trivial") {
        if (!args.c || !args.d) {
            throw invalid_input("construct trivial needs --c and --d (0/1 or 1/1)");
        }
        pair = trivial_pair(args.n, Fraction(*args.c, *args.d), args.k);
        expected = pow2(args.n);
    } else if (args.kind == "thm13a") {
        const int kappa = args.kappa.value_or(2 * args.k);
        pair = uniform_containment_pair(args.n, args.k, kappa);
        expected = binomial(kappa, args.k) * pow2(args.n - kappa);
    } else if (args.kind == "thm13b") {
        const UniformParams params = halving_params(args.n, args.k, args.tau);
        if (args.c || args.d) {
            if (!args.c || !args.d || Fraction(*args.c, *args.d) != params.frac) {
                throw invalid_input("construct thm13b: the fraction is forced to " +
                                    params.frac.str() + " by the parity of k");
            }
        }
        pair = uniform_halving_pair(params);
        expected = binomial(args.k, params.l) * pow2(args.n - args.k);
    } else {
        throw invalid_input("unknown construction kind: " + args.kind);
    }

    if (!is_cross_intersecting(pair) || pair.product() != expected) {
        throw consistency_error("constructed pair failed self-verification");
    }

    if (args.as_text) {
        std::cout << "kind=" << args.kind << " n=" << pair.n << " c/d=" << pair.frac.str()
                  << " |A|=" << pair.a.size() << " |B|=" << pair.b.size()
                  << " product=" << pair.product() << "\n";
    } else {
        emit(pair_to_json(pair));
    }
    return kExitOk;
}

// ---- search -----------------------------------------------------------------

struct SearchArgs {
    int n = 0;
    std::optional<int> c, d;
    bool sweep = false;
    bool check_classification = false;
    bool all_witnesses = false;
    bool force = false;
    int workers = 1;
    bool as_text = false;
};

int run_search(const SearchArgs& args) {
    using namespace crossfam;
    SearchOptions opt;
    opt.workers = args.workers;
    opt.force = args.force;

    if (args.sweep) {
        if (args.c || args.d) {
            throw invalid_input("--sweep runs every fraction; omit --c/--d");
        }
        const std::vector<SweepRow> rows = sweep_fractions(args.n, opt);
        if (args.as_text) {
            std::cout << "n=" << args.n << "\n";
            std::cout << std::left << std::setw(7) << "frac" << std::right << std::setw(12)
                      << "max_product" << std::setw(10) << "families" << std::setw(11)
                      << "witnesses" << std::setw(9) << "classes" << "  nontrivial\n";
            for (const SweepRow& row : rows) {
                std::cout << std::left << std::setw(7) << row.frac.str() << std::right
                          << std::setw(12) << row.max_product << std::setw(10)
                          << row.families_scanned << std::setw(11) << row.witness_count
                          << std::setw(9) << row.class_count << "  "
                          << (row.nontrivial_witness ? "yes" : "no") << "\n";
            }
        } else {
            emit(sweep_to_json(args.n, rows));
        }
        return kExitOk;
    }

    if (!args.c || !args.d) {
        throw invalid_input("search needs --c and --d (or --sweep)");
    }
    const Fraction frac(*args.c, *args.d);
    if (args.check_classification && !frac.is_half()) {
        throw invalid_input("--check-thm12 applies to c/d = 1/2 only");
    }

    const SearchResult result = max_product(args.n, frac, opt);
    const std::vector<ClassEntry> classes = classify_witnesses(result);

    bool nonstandard = false;
    for (const ClassEntry& entry : classes) {
        if (!entry.k) nonstandard = true;
    }

    if (args.as_text) {
        std::cout << "n=" << result.n << " c/d=" << frac.str()
                  << " max_product=" << result.max_product
                  << " families_scanned=" << result.families_scanned
                  << " witnesses=" << result.witnesses.size() << " classes=" << classes.size()
                  << "\n";
        for (const ClassEntry& entry : classes) {
            std::cout << "class "
                      << (entry.k ? std::string("k=") + std::to_string(*entry.k)
                                  : std::string("NONSTANDARD"))
                      << ": |A|=" << entry.representative.a.size()
                      << " |B|=" << entry.representative.b.size() << "\n";
        }
    } else {
        emit(search_result_to_json(result, classes, args.all_witnesses));
    }

    if (args.check_classification && nonstandard) {
        std::cerr << "NONSTANDARD maximal pair found: counterexample alarm\n";
        return kExitViolated;
    }
    return kExitOk;
}

// ---- decompose ----------------------------------------------------------------

int run_decompose(const std::string& file, bool as_text) {
    using namespace crossfam;
    const SetFamily family = family_from_json(load_json_file(file));
    const DecompositionReport report = extract_atoms(family);
    if (as_text) {
        std::cout << "n=" << report.n << " dim=" << report.dim << " n0=" << report.n0
                  << " product_audit=" << report.product_audit << "\n";
        for (std::size_t i = 0; i < report.atoms.size(); ++i) {
            std::cout << "atom " << i + 1 << ": "
                      << set_to_string(BitVector(report.n, report.atoms[i]))
                      << " half=" << report.half_sizes[i] << "\n";
        }
    } else {
        emit(report_to_json(report));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cross-intersecting set family toolkit"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    int verify_c = -1, verify_d = -1;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "check a pair file against its declared fraction");
    verify->add_option("file", verify_args.file, "pair JSON file")->required();
    auto* vc = verify->add_option("--c", verify_c, "override fraction numerator");
    auto* vd = verify->add_option("--d", verify_d, "override fraction denominator");
    verify->add_flag("--json", verify_json, "emit a JSON report instead of text");

    ConstructArgs construct_args;
    bool construct_text = false;
    int construct_c = -1, construct_d = -1, construct_kappa = -1;
    auto* construct =
        app.add_subcommand("construct", "emit a named extremal pair as JSON on stdout");
    construct->add_option("kind", construct_args.kind, "thm12 | thm13a | thm13b | trivial")
        ->required();
    construct->add_option("--n", construct_args.n, "ground-set size")->required();
    construct->add_option("--k", construct_args.k, "construction parameter k");
    construct->add_option("--tau", construct_args.tau, "tau (thm13b)");
    auto* ck = construct->add_option("--kappa", construct_kappa, "kappa (thm13a; default 2k)");
    auto* cc = construct->add_option("--c", construct_c, "fraction numerator (trivial)");
    auto* cd = construct->add_option("--d", construct_d, "fraction denominator (trivial)");
    construct->add_flag("--text", construct_text, "print a summary instead of JSON");

    SearchArgs search_args;
    int search_c = -1, search_d = -1;
    auto* search = app.add_subcommand("search", "exhaustive max-product search");
    search->add_option("--n", search_args.n, "ground-set size")->required();
    auto* sc = search->add_option("--c", search_c, "fraction numerator");
    auto* sd = search->add_option("--d", search_d, "fraction denominator");
    search->add_flag("--sweep", search_args.sweep, "run every irreducible fraction with d <= n");
    search->add_flag("--check-thm12", search_args.check_classification,
                     "classify every maximal pair; exit 1 on any nonstandard class");
    search->add_flag("--all-witnesses", search_args.all_witnesses,
                     "include the full labeled witness list in the report");
    search->add_flag("--force", search_args.force, "override the family-count ceiling");
    search->add_option("--workers", search_args.workers, "worker thread count (default 1)");
    search->add_flag("--text", search_args.as_text, "print a summary instead of JSON");

    std::string decompose_file;
    bool decompose_text = false;
    auto* decompose =
        app.add_subcommand("decompose", "split a family into atoms and audit the product");
    decompose->add_option("file", decompose_file, "family JSON file")->required();
    decompose->add_flag("--text", decompose_text, "print a summary instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (verify->parsed()) {
            if (vc->count()) verify_args.c = verify_c;
            if (vd->count()) verify_args.d = verify_d;
            verify_args.as_json = verify_json;
            return run_verify(verify_args);
        }
        if (construct->parsed()) {
            if (cc->count()) construct_args.c = construct_c;
            if (cd->count()) construct_args.d = construct_d;
            if (ck->count()) construct_args.kappa = construct_kappa;
            construct_args.as_text = construct_text;
            return run_construct(construct_args);
        }
        if (search->parsed()) {
            if (sc->count()) search_args.c = search_c;
            if (sd->count()) search_args.d = search_d;
            return run_search(search_args);
        }
        if (decompose->parsed()) {
            return run_decompose(decompose_file, decompose_text);
        }
    } catch (const crossfam::structure_error& e) {
        std::cerr << "structure violation: " << e.what() << "\n";
        return kExitViolated;
    } catch (const crossfam::consistency_error& e) {
        std::cerr << "consistency alarm: " << e.what() << "\n";
        return kExitViolated;
    } catch (const crossfam::invalid_input& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const crossfam::capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
