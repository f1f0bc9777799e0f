#pragma once

// Structural checks for the B side of a maximal cross-bisecting pair, and
// the decomposition of such a family into disjoint atoms.
//
// For a bisecting pair with |A||B| = 2^n the B family is forced to be a
// linear code that is self-orthogonal and closed under intersection, with
// XOR respecting the two weight classes. extract_atoms takes any family
// with those three closure properties and splits its support into disjoint
// atoms whose unions are exactly the members.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "crossfam/errors.hpp"
#include "crossfam/family.hpp"
#include "crossfam/gf2.hpp"
#include "crossfam/util.hpp"

namespace crossfam {

// Closed under symmetric difference and contains the empty set.
inline bool check_linearity(const SetFamily& b) {
    if (!b.contains(0)) return false;
    for (std::size_t i = 0; i < b.sets.size(); ++i) {
        for (std::size_t j = i + 1; j < b.sets.size(); ++j) {
            if (!b.contains(b.sets[i] ^ b.sets[j])) return false;
        }
    }
    return true;
}

// XOR lands in the 0 (mod 2d) class exactly when the operands share a weight
// class, and in the d (mod 2d) class otherwise. Members with any other
// weight residue make partition_by_weight throw; a non-linear family simply
// fails the check.
inline bool check_parity_closure(const SetFamily& b, const Fraction& frac) {
    if (!check_linearity(b)) return false;
    partition_by_weight(b, frac);  // escalates bad weights to an error
    const int two_d = 2 * frac.d;
    auto cls = [two_d, &frac](std::uint64_t m) { return std::popcount(m) % two_d == frac.d; };
    for (std::size_t i = 0; i < b.sets.size(); ++i) {
        for (std::size_t j = i; j < b.sets.size(); ++j) {
            const bool same = cls(b.sets[i]) == cls(b.sets[j]);
            if (cls(b.sets[i] ^ b.sets[j]) != !same) return false;
        }
    }
    return true;
}

// Every pairwise intersection (a member with itself included) is even; the
// family spans a self-orthogonal code. Checked on the reduced basis.
inline bool check_self_orthogonal_family(const SetFamily& b) {
    const std::vector<std::uint64_t> basis = reduced_basis(b.sets);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            if (inner_product_masks(basis[i], basis[j])) return false;
        }
    }
    return true;
}

inline bool check_intersection_closure(const SetFamily& b) {
    for (std::size_t i = 0; i < b.sets.size(); ++i) {
        for (std::size_t j = i + 1; j < b.sets.size(); ++j) {
            if (!b.contains(b.sets[i] & b.sets[j])) return false;
        }
    }
    return true;
}

// If A bisects B1, B2 and their symmetric difference, it bisects B1 n B2.
// The premises are enforced; the conclusion is returned so tests can probe
// the arithmetic, but a false return would mean a fault, not a valid input.
inline bool check_bisection_lattice(const BitVector& a, const BitVector& b1, const BitVector& b2) {
    require_same_ground(a, b1, "bisection lattice");
    require_same_ground(a, b2, "bisection lattice");
    if (!bisects(a, b1) || !bisects(a, b2) || !bisects_masks(a.bits, b1.bits ^ b2.bits)) {
        throw invalid_input("bisection lattice: premises not satisfied "
                            "(A must bisect B1, B2 and their symmetric difference)");
    }
    return bisects_masks(a.bits, b1.bits & b2.bits);
}

// Atoms B_1..B_k, their half sizes, the untouched columns P, and the exact
// count 2^{n0} * prod C(2 i_j, i_j) * 2^k of the best product any compatible
// A can reach with this B.
struct DecompositionReport {
    int n = 1;
    std::vector<std::uint64_t> atoms;  // pairwise disjoint, in extraction order
    std::vector<int> half_sizes;       // |atom_j| / 2
    std::uint64_t zero_part = 0;       // columns contained in no member
    int n0 = 0;                        // |zero_part|
    int dim = 0;                       // number of atoms = dim of the family
    std::uint64_t product_audit = 0;
};

inline DecompositionReport extract_atoms(const SetFamily& b) {
    if (b.empty()) {
        throw invalid_input("extract_atoms: family is empty");
    }
    if (b.n > 62) {
        throw capacity_error("extract_atoms: product audit requires n <= 62");
    }
    if (!check_linearity(b)) {
        throw structure_error(structure_violation::linearity,
                              "family is not closed under symmetric difference");
    }
    if (!check_self_orthogonal_family(b)) {
        throw structure_error(structure_violation::self_orthogonality,
                              "family has an odd pairwise intersection");
    }
    if (!check_intersection_closure(b)) {
        throw structure_error(structure_violation::intersection_closure,
                              "family is not closed under intersection");
    }

    std::uint64_t support = 0;
    for (const std::uint64_t m : b.sets) support |= m;

    DecompositionReport report;
    report.n = b.n;
    report.zero_part = full_mask(b.n) & ~support;
    report.n0 = std::popcount(report.zero_part);

    // Lowest uncovered supported element; the intersection of all members
    // containing it is the next atom.
    std::uint64_t covered = 0;
    while (covered != support) {
        const std::uint64_t seed = lowest_bit(support & ~covered);
        std::uint64_t atom = full_mask(b.n);
        for (const std::uint64_t m : b.sets) {
            if (m & seed) atom &= m;
        }
        if ((atom & covered) != 0 || !b.contains(atom) || std::popcount(atom) % 2 != 0) {
            throw consistency_error("extract_atoms: atom invariant failed");
        }
        report.atoms.push_back(atom);
        report.half_sizes.push_back(std::popcount(atom) / 2);
        covered |= atom;
    }

    // Every member must be a union of whole atoms.
    for (const std::uint64_t m : b.sets) {
        std::uint64_t rebuilt = 0;
        for (const std::uint64_t atom : report.atoms) {
            const std::uint64_t part = m & atom;
            if (part == atom) {
                rebuilt |= atom;
            } else if (part != 0) {
                throw consistency_error("extract_atoms: member cuts an atom");
            }
        }
        if (rebuilt != m) {
            throw consistency_error("extract_atoms: member is not a union of atoms");
        }
    }

    report.dim = static_cast<int>(report.atoms.size());
    if (b.size() != pow2(report.dim)) {
        throw consistency_error("extract_atoms: family size is not 2^dim");
    }

    std::uint64_t audit = pow2(report.n0);
    for (const int half : report.half_sizes) audit *= binomial(2 * half, half);
    report.product_audit = audit * pow2(report.dim);
    return report;
}

// Every member of A bisects every atom. Because members of B are disjoint
// unions of atoms, this is equivalent to bisecting all of B; that
// equivalence is asserted as a test property rather than here.
inline bool check_basis_bisection(const SetFamily& a, const DecompositionReport& report) {
    if (a.n != report.n) {
        throw invalid_input("basis bisection: ground-set sizes differ");
    }
    for (const std::uint64_t m : a.sets) {
        for (const std::uint64_t atom : report.atoms) {
            if (!bisects_masks(m, atom)) return false;
        }
    }
    return true;
}

}  // namespace crossfam
