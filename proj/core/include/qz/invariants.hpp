#pragma once

// Elementary-divisor invariants of lattice tuples and the homothety-shift
// invariants attached to a cocentral grading: the descent encoding nu, the
// minimal delta-power m~1 (computed both by direct search and by the closed
// valuation formula), and the maximal-tuple invariant m_2.

#include <vector>

#include "qz/lattice.hpp"
#include "qz/structure.hpp"

namespace qz {

// Descent encoding of the elementary divisor type: exponents sorted
// descending, descent positions I (1-based), jump sizes at each descent,
// and the trailing exponent lambda_n.
struct NuInvariant {
    int n = 0;
    std::vector<int> exponents;  // descending
    std::vector<int> descents;   // positions with exponents[i-1] > exponents[i]
    std::vector<int> jumps;      // parallel to descents
    int trailing = 0;

    // I* = I together with n; jumps_star appends the trailing exponent.
    std::vector<int> descents_star() const;
    std::vector<int> jumps_star() const;
    int tau() const { return n == 0 ? 0 : exponents.front(); }
    int index_exponent() const;                   // sum over I* of position * jump
    std::vector<int> reconstructed_exponents() const;
    bool trailing_zero() const { return trailing == 0; }
};

NuInvariant nu_invariant(const LocalLattice& L);

// Everything needed to evaluate the delta-shift invariants repeatedly:
// grading data, arrow matrices in graded coordinates, per-vertex delta
// matrices. Construction validates the grading and requires homogeneity of
// the arrow generators.
struct DeltaContext {
    long p = 2;
    Grading grading;
    Representation graded;      // arrows rewritten in graded coordinates
    std::vector<MatZ> delta;    // per vertex, diagonal p^{c-j} on layer j

    int num_vertices() const { return graded.num_vertices(); }
};

DeltaContext make_delta_context(const Representation& rep, const Grading& g, long p);

// The tuple rewritten in graded coordinates (basis * U^{-1}, re-reduced).
LatticeTuple to_graded(const DeltaContext& ctx, const LatticeTuple& T);

// Scales every part of a graded tuple by delta^m and re-reduces.
LatticeTuple scale_by_delta(const DeltaContext& ctx, const LatticeTuple& graded_tuple,
                            int m);

// tau(M) = sum over vertices of the largest elementary divisor exponent.
int tau_of_tuple(const LatticeTuple& graded_tuple);

// Smallest m >= 0 such that T * delta^m is a subrepresentation; guaranteed
// to be at most tau(M). Direct search.
int m_tilde_1_search(const DeltaContext& ctx, const LatticeTuple& T);

// The same number from the closed valuation formula: tau(M) - m_1, where
// m_1 minimizes, over vertex pairs and generators, the sum of trailing jump
// weights at the source, leading jump weights at the target, and the minimal
// valuation of the conjugated generator blocks.
int m_tilde_1_formula(const DeltaContext& ctx, const LatticeTuple& T);

// Computes both ways and insists they agree.
int m_tilde_1(const DeltaContext& ctx, const LatticeTuple& T);

// Minimal valuation over the trailing-layer columns of the graded HNF bases;
// defined for maximal tuples only (some vertex with trailing exponent 0).
int m_2(const DeltaContext& ctx, const LatticeTuple& T);

// Minimal entry valuation over all parts of a tuple (basis independent).
int min_valuation(const LatticeTuple& T, long p);

// If T is a subrepresentation, the minimal entry valuation is unchanged by
// one delta scaling. Returns true when the implication holds (vacuously true
// for non-subrepresentations).
bool lemma_mc_check(const DeltaContext& ctx, const LatticeTuple& T);

// The set {m >= 0 : T * delta^m is a subrepresentation} is exactly the ray
// {m >= m~1}; verified up to m~1 + extra.
bool delta_ray_check(const DeltaContext& ctx, const LatticeTuple& T, int extra);

}  // namespace qz
