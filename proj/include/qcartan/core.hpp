#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcartan {

using BigInt = boost::multiprecision::cpp_int;

/// Vertices are 1-indexed integers 1..n throughout the public API.
using Vertex = int;

enum class ErrorCode {
    entry_out_of_range,
    not_positive_definite,
    guard_exceeded,
    not_a_dynkin_diagram,
    invalid_rank,
    not_a_type,
    not_connected,
    vertices_adjacent,
    empty_side,
    invalid_witness,
    invalid_decomposition,
    invariant_violation,
    too_large,
    bad_argument,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// ---------------------------------------------------------------------------
// Line styles

enum class LineStyle { solid, dotted };

constexpr LineStyle opposite(LineStyle s) {
    return s == LineStyle::solid ? LineStyle::dotted : LineStyle::solid;
}

std::string to_string(LineStyle s);

// ---------------------------------------------------------------------------
// Dense integer matrices (1-indexed accessors, matching vertex labels)

class IntMatrix {
public:
    IntMatrix() : n_(0) {}
    explicit IntMatrix(int n) : n_(n), data_(static_cast<size_t>(n) * n, 0) {}
    IntMatrix(int n, std::vector<long long> entries);

    static IntMatrix identity(int n);

    int size() const { return n_; }

    long long at(int i, int j) const { return data_[index(i, j)]; }
    long long& at(int i, int j) { return data_[index(i, j)]; }

    bool is_symmetric() const;

    /// Right-multiplies by the elementary matrix I + sigma*e_s*e_r^T,
    /// i.e. column r += sigma * column s.
    void mul_elementary_right(int s, int r, long long sigma);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    size_t index(int i, int j) const;

    int n_;
    std::vector<long long> data_;
};

/// Exact determinant (fraction-free elimination with row pivoting).
BigInt determinant(const IntMatrix& m);

/// Leading principal minors det(A[1..k][1..k]) for k = 1..n, computed
/// exactly. Stops early after a zero pivot; the remaining entries are
/// then unspecified and `complete` is false.
struct LeadingMinors {
    std::vector<BigInt> minors;
    bool complete;
};
LeadingMinors leading_principal_minors(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Quasi-Cartan matrices

/// Symmetric integer matrix with all diagonal entries equal to 2.
class QuasiCartanMatrix {
public:
    explicit QuasiCartanMatrix(IntMatrix m);
    QuasiCartanMatrix(int n, std::vector<long long> entries)
        : QuasiCartanMatrix(IntMatrix(n, std::move(entries))) {}

    int size() const { return mat_.size(); }
    long long at(int i, int j) const { return mat_.at(i, j); }
    const IntMatrix& mat() const { return mat_; }

    /// True iff every off-diagonal entry lies in {-1,0,1}.
    bool entries_in_unit_range() const;

    friend bool operator==(const QuasiCartanMatrix&, const QuasiCartanMatrix&) = default;

private:
    IntMatrix mat_;
};

/// Sylvester's criterion over exact integers: positive definite iff all
/// leading principal minors are strictly positive.
bool is_positive_definite(const QuasiCartanMatrix& a);

// ---------------------------------------------------------------------------
// Bigraphs

struct StyledEdge {
    Vertex u, v;  // u < v
    LineStyle style;

    friend auto operator<=>(const StyledEdge&, const StyledEdge&) = default;
};

/// Loop-free multigraph on vertices 1..n whose edges carry a solid or
/// dotted line style. Most of the library requires simple bigraphs (at
/// most one edge per vertex pair); multiplicities exist so that edge
/// cancellation and matrix round trips work on the boundary cases.
class Bigraph {
public:
    Bigraph() : n_(0) {}
    explicit Bigraph(int n);

    int vertex_count() const { return n_; }

    void add_edge(Vertex u, Vertex v, LineStyle style, int count = 1);
    void remove_edge(Vertex u, Vertex v, LineStyle style, int count = 1);

    int multiplicity(Vertex u, Vertex v) const;
    int multiplicity(Vertex u, Vertex v, LineStyle style) const;
    bool has_edge(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }

    /// Style of the unique edge between u and v; requires multiplicity
    /// one at that pair.
    std::optional<LineStyle> style_of(Vertex u, Vertex v) const;

    /// At most one edge per vertex pair.
    bool is_simple() const;

    int edge_count() const;

    /// Expanded edge list, sorted, with parallel edges repeated.
    std::vector<StyledEdge> edges() const;

    std::vector<Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const;

    friend bool operator==(const Bigraph&, const Bigraph&) = default;

private:
    void check_vertex(Vertex v) const;

    int n_;
    // pair -> {solid count, dotted count}
    std::map<std::pair<Vertex, Vertex>, std::array<int, 2>> edges_;
};

/// Repeatedly erases one solid + one dotted parallel edge on the same
/// vertex pair until no opposite pair remains. Idempotent.
Bigraph simplify(const Bigraph& g);

/// Bigraph of a quasi-Cartan matrix: |A[i][j]| parallel edges between i
/// and j, dotted iff A[i][j] > 0.
Bigraph matrix_to_bigraph(const QuasiCartanMatrix& a);

/// Quasi-Cartan matrix of a bigraph; the entry at {i,j} is the net
/// multiplicity (#dotted - #solid).
QuasiCartanMatrix bigraph_to_matrix(const Bigraph& g);

// ---------------------------------------------------------------------------
// Graph utilities

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Bigraph& g);

bool is_connected(const Bigraph& g);

struct InducedSubgraph {
    Bigraph graph;                  // on compact labels 1..k
    std::vector<Vertex> to_global;  // to_global[local] = original label (1-indexed)
    std::map<Vertex, Vertex> to_local;
};

/// Subgraph induced by `vertices`, relabeled to 1..k preserving label order.
InducedSubgraph induced_subgraph(const Bigraph& g, const std::vector<Vertex>& vertices);

/// Applies a vertex relabeling; perm[v] is the new label of v (a bijection
/// of 1..n given as a vector indexed from 1).
Bigraph relabel(const Bigraph& g, const std::vector<Vertex>& perm);

// ---------------------------------------------------------------------------
// Dynkin types

enum class DynkinFamily { A, D, E };

struct DynkinType {
    DynkinFamily family;
    int rank;

    friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
};

/// Validates the side conditions: A_n needs n >= 1, D_n needs n >= 4,
/// E_n needs n in {6,7,8}.
bool is_valid_dynkin_type(const DynkinType& t);

std::string to_string(const DynkinType& t);

/// Parses strings like "A6", "D4", "E8".
std::optional<DynkinType> parse_dynkin_type(const std::string& text);

}  // namespace qcartan
