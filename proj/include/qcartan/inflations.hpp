#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qcartan/core.hpp"
#include "qcartan/flation.hpp"

namespace qcartan {

/// Outcome of a classification run. `types` lists one Dynkin type per
/// connected component of the canonical bigraph, ordered by the smallest
/// vertex of each component. `witness` carries the input to `canonical`
/// by congruence, and `permutation` (1-indexed) relabels `canonical`
/// onto the block-diagonal stack of the standard matrices of `types`.
struct ClassificationResult {
    std::vector<DynkinType> types;
    FlationWitness witness;
    QuasiCartanMatrix canonical;
    std::vector<Vertex> permutation;

    std::vector<DynkinType> sorted_types() const;
};

enum class PivotRule { lexicographic, reverse_lexicographic };

/// Iteratively flips positive off-diagonal entries until none remains,
/// then identifies the resulting Cartan matrix per component. Requires
/// a positive definite input with off-diagonal entries in {-1,0,1}.
/// Deterministic: the pivot is the first +1 entry in the chosen scan
/// order (lexicographic over pairs s < r by default). A step-count guard
/// of 4*n^3 turns a hypothetical non-termination into an internal error.
ClassificationResult inflations_method(const QuasiCartanMatrix& a,
                                       PivotRule rule = PivotRule::lexicographic);

/// Recognizes an all-solid simple bigraph as a disjoint union of Dynkin
/// diagrams: per component a path is A_n, a tree with one degree-3 vertex
/// and arm lengths (1,1,k) is D_n, arm lengths (1,2,2..4) are E_6..E_8.
/// Returns the types (component order by smallest vertex) and a 1-indexed
/// relabeling onto the standard block-diagonal layout. Throws
/// Error(not_a_dynkin_diagram) on any other shape or on dotted edges.
struct DiagramRecognition {
    std::vector<DynkinType> types;
    std::vector<Vertex> permutation;
};
DiagramRecognition recognize_diagram(const Bigraph& g);

/// Exact witness check: recomputes the step-by-step product from A_in,
/// and accepts iff it matches w.accumulated, the accumulated matrix is
/// unimodular, and accumulated^T * A_in * accumulated = A_out.
struct VerifyResult {
    enum class Reason {
        ok,
        dimension_mismatch,
        step_invalid,
        pivot_out_of_range,
        accumulated_mismatch,
        not_unimodular,
        result_mismatch,
    };
    bool ok = false;
    Reason reason = Reason::ok;

    explicit operator bool() const { return ok; }
};
VerifyResult verify_witness(const QuasiCartanMatrix& a_in, const QuasiCartanMatrix& a_out,
                            const FlationWitness& w);

/// Standard matrix of a Dynkin type: A_n is the solid path v_1..v_n;
/// D_n has edges {v_1,v_3}, {v_2,v_3} plus the path v_3..v_n; E_n is the
/// path v_1..v_{n-1} plus the edge {v_3,v_n}.
QuasiCartanMatrix canonical_cartan(const DynkinType& t);

}  // namespace qcartan
