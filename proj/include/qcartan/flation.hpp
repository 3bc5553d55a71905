#pragma once

#include <utility>
#include <vector>

#include "qcartan/core.hpp"

namespace qcartan {

/// One elementary transformation, acting at vertex pair (s, r).
struct FlationStep {
    Vertex s, r;

    friend auto operator<=>(const FlationStep&, const FlationStep&) = default;
};

/// Ordered step sequence together with the accumulated unimodular matrix:
/// applying the steps to A yields accumulated^T * A * accumulated.
struct FlationWitness {
    std::vector<FlationStep> steps;
    IntMatrix accumulated;

    static FlationWitness identity(int n) { return {{}, IntMatrix::identity(n)}; }
};

/// The n x n matrix I + sigma * e_s * e_r^T; always has determinant 1.
IntMatrix elementary_matrix(int n, int s, int r, long long sigma);

/// Congruence of A by the elementary matrix with sigma = -A[s][r],
/// computed by the closed-form column update: the entry at (s,r) flips
/// sign, entries (i,r) for i outside {s,r} become A[i][r] - A[s][r]*A[i][s],
/// and everything away from row/column r is unchanged. Requires
/// |A[s][r]| <= 1.
QuasiCartanMatrix flate_matrix(const QuasiCartanMatrix& a, const FlationStep& step);

/// Graph-level form of the same transformation. If {s,r} is not an edge
/// the graph is returned unchanged. Otherwise the style of {s,r} flips,
/// and for every neighbor i of s (i != r) an edge {i,r} is added carrying
/// the style of {i,s} when {s,r} was solid and the opposite style when it
/// was dotted; opposite parallel pairs on {i,r} then cancel.
///
/// The input must have multiplicity at most one on every pair incident to
/// s (in particular any simple bigraph is accepted); away from s, net
/// multiplicities are handled, which makes the transformation an exact
/// involution even when a step leaves the simple range.
Bigraph flate_graph(const Bigraph& g, const FlationStep& step);

/// Left-to-right application of a step sequence with witness accumulation.
/// Throws Error with the failing step index in the message if a step is
/// invalid at its point of application.
std::pair<QuasiCartanMatrix, FlationWitness> apply_sequence(const QuasiCartanMatrix& a,
                                                            const std::vector<FlationStep>& steps);
std::pair<Bigraph, FlationWitness> apply_sequence(const Bigraph& g,
                                                  const std::vector<FlationStep>& steps);

}  // namespace qcartan
