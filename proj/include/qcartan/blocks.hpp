#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qcartan/core.hpp"
#include "qcartan/flation.hpp"

namespace qcartan {

/// Decomposition of a simple graph into blocks (maximal 2-connected
/// subgraphs, bridges, or isolated vertices) and separation vertices,
/// with the bipartite tree edges {B,s} for s in V(B).
struct BlockTree {
    std::vector<std::vector<Vertex>> blocks;       // sorted vertex lists
    std::vector<Vertex> separators;                // sorted
    std::vector<std::pair<int, int>> tree_edges;   // (block index, separator index)

    bool is_separator(Vertex v) const;
    /// Number of blocks containing v; for a separator this equals the
    /// number of connected components left after removing it.
    int tree_degree(Vertex v) const;
};

/// Standard biconnected-components decomposition; line styles are ignored.
/// Requires a simple bigraph.
BlockTree block_tree(const Bigraph& g);

/// Builds the complete bigraph on X and Y with solid edges across the
/// parts and dotted edges within each part, on ambient vertices 1..n.
Bigraph f_bigraph(int n, const std::vector<Vertex>& x, const std::vector<Vertex>& y);

/// The two-sided decomposition of a complete styled block: solid across
/// X-Y, dotted within X and within Y. X holds the smallest vertex.
struct FDecomposition {
    std::vector<Vertex> x, y;  // sorted
};

struct FRecognition {
    std::optional<FDecomposition> value;
    enum class Failure { none, not_complete, not_two_colorable } failure = Failure::none;

    explicit operator bool() const { return value.has_value(); }
};

/// Succeeds iff the connected simple graph is complete and its styles
/// admit the two-sided decomposition above. A single vertex yields
/// ({v}, {}); a fully dotted block puts every vertex into X.
FRecognition recognize_F(const Bigraph& block);

/// True iff the graph is connected, every block admits an F
/// decomposition, and every separation vertex joins exactly two blocks.
bool is_A_block_tree(const Bigraph& g);

/// Same predicate under its semantic reading: a true answer means the
/// graph has Dynkin type A_n.
bool classify_A(const Bigraph& g);

/// Constructive reduction of a type-A bigraph to the standard path:
/// leaf blocks are repeatedly absorbed into their neighbor block through
/// the shared separation vertex, and the final complete block is
/// linearized. Returns the witness plus a relabeling perm (1-indexed,
/// perm[v] = position) under which the transformed graph equals the
/// standard A_n bigraph exactly.
std::pair<FlationWitness, std::vector<Vertex>> reduce_to_An(const Bigraph& g);

/// Ordered separation vertices strictly between x and y on the unique
/// route through the tree of blocks and vertices. Requires a connected
/// simple input.
std::vector<Vertex> separator_route(const Bigraph& g, Vertex x, Vertex y);

}  // namespace qcartan
