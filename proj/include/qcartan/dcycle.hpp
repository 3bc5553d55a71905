#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qcartan/blocks.hpp"
#include "qcartan/core.hpp"
#include "qcartan/flation.hpp"
#include "qcartan/inflations.hpp"

namespace qcartan {

/// One piece of a cycle gluing, kept in ambient vertex labels. The
/// vertex set is the (sorted) support of the edges.
struct GluingPiece {
    std::vector<Vertex> vertices;
    std::vector<StyledEdge> edges;

    friend auto operator<=>(const GluingPiece&, const GluingPiece&) = default;
};

/// Cycle x_1..x_h (h >= 2) with per-edge styles (edge i joins x_i and
/// x_{i+1}, indices wrapping) glued from type-A pieces F_1..F_h, where
/// piece i contains edge i with the cycle's style, its attachment
/// vertices are non-separating in it, and consecutive pieces overlap in
/// exactly the shared attachment vertex. The styles carry an odd number
/// of dotted entries. For h = 2 the two parallel cycle edges have
/// opposite styles and cancel in the glued graph.
struct DCycleGluing {
    int ambient_n = 0;
    std::vector<Vertex> cycle;        // x_1..x_h
    std::vector<LineStyle> styles;    // style of {x_i, x_{i+1}}
    std::vector<GluingPiece> pieces;  // F_1..F_h

    int length() const { return static_cast<int>(cycle.size()); }

    /// Canonical form: x_1 is the smallest cycle vertex and the
    /// orientation is the lexicographically smaller of the two.
    DCycleGluing normalized() const;

    friend bool operator==(const DCycleGluing&, const DCycleGluing&) = default;
};

/// Throws Error(invariant_violation) naming the first failing clause.
void validate(const DCycleGluing& d);

/// Union of all pieces with opposite parallel pairs erased; always simple
/// for a valid gluing.
Bigraph glue(const DCycleGluing& d);

/// Merges two distinct nonadjacent vertices: the merged vertex takes
/// label min(u,v), labels above max(u,v) shift down by one, and opposite
/// parallel pairs are erased afterwards (same-style parallels remain).
Bigraph identify_vertices(const Bigraph& j, Vertex u, Vertex v);

/// Inverse of identification: vertex w splits into w (keeping the edges
/// to `side_u`) and a new vertex n+1 (taking the edges to `side_v`).
/// The two sides must be nonempty and partition the neighbors of w.
Bigraph split_vertex(const Bigraph& g, Vertex w, const std::vector<Vertex>& side_u,
                     const std::vector<Vertex>& side_v);

/// Unique shortest path in a type-A bigraph, endpoints included. Its
/// interior consists exactly of the separation vertices between x and y.
std::vector<Vertex> shortest_path_A(const Bigraph& g, Vertex x, Vertex y);

/// Certificate that G is an identification of a type-A bigraph: J is
/// simple of type A_{n+1}, u and v are non-separating and nonadjacent in
/// J with distance >= 2, the unique shortest path u..v carries an odd
/// number of dotted edges, and identifying u with v in J gives back G.
struct SplitWitness {
    Vertex w = 0;                     // merged vertex in G
    std::vector<Vertex> side_u;       // neighbors of w kept by u = w
    std::vector<Vertex> side_v;       // neighbors of w moved to v = n+1
    // A canceled opposite pair: common neighbor of u and v in J absent
    // from G, with the style of the edge at u.
    std::optional<std::pair<Vertex, LineStyle>> cancel;
    Bigraph j;
    Vertex u = 0, v = 0;
};

/// Exhaustive search for a split certificate over every vertex w, every
/// partition of its incident edges, and every single canceled opposite
/// pair at a non-neighbor of w (a type-A graph never allows two common
/// neighbors of u and v, so one canceled pair is the general case).
/// Success certifies Dynkin type D_n; exhaustion certifies its absence.
/// Requires a connected simple input with n >= 4.
std::optional<SplitWitness> recognize_D(const Bigraph& g);

/// Reads the shortest path u = x_1 .. x_{h+1} = v off the witness, peels
/// J into pieces along the interior separation vertices, re-identifies
/// x_{h+1} with x_1, and returns the normalized gluing whose glue is G.
DCycleGluing decomposition_from_split(const Bigraph& g, const SplitWitness& witness);

/// Forward construction: replaces x_1 by a fresh vertex n+1 in the last
/// piece and returns the union J with u = x_1, v = n+1, so that
/// identify_vertices(J, u, v) reproduces glue(d).
std::pair<Bigraph, std::pair<Vertex, Vertex>> split_of_gluing(const DCycleGluing& d);

/// Constructive reduction of a glued graph (n >= 4) to the standard D_n:
/// grows the cycle until it spans all vertices, pushes dotted styles onto
/// the closing edge, then fans the cycle down onto the path. Returns the
/// witness and the relabeling perm[x_i] = i under which the transformed
/// graph equals the standard D_n bigraph.
std::pair<FlationWitness, std::vector<Vertex>> reduce_to_Dn(const Bigraph& g,
                                                            const DCycleGluing& d);

/// Top-level classification: per connected component, the structural
/// type-A and type-D recognizers run first and produce reduction
/// witnesses; remaining components fall back to the inflations method.
/// Throws Error(entry_out_of_range) on non-simple inputs and
/// Error(not_positive_definite) when the form is not positive definite.
ClassificationResult classify(const Bigraph& g);

}  // namespace qcartan
