#pragma once

#include <initializer_list>
#include <tuple>
#include <vector>

#include "qcartan/blocks.hpp"
#include "qcartan/core.hpp"
#include "qcartan/inflations.hpp"

namespace qctest {

using namespace qcartan;

// 's' = solid, 'd' = dotted
inline Bigraph graph(int n, std::initializer_list<std::tuple<int, int, char>> edges) {
    Bigraph g(n);
    for (const auto& [u, v, c] : edges)
        g.add_edge(u, v, c == 'd' ? LineStyle::dotted : LineStyle::solid);
    return g;
}

inline QuasiCartanMatrix matrix(int n, std::initializer_list<long long> entries) {
    return QuasiCartanMatrix(n, std::vector<long long>(entries));
}

inline Bigraph canonical_bigraph(DynkinFamily family, int rank) {
    return matrix_to_bigraph(canonical_cartan({family, rank}));
}

// Six-vertex worked example: two complete styled blocks joined at vertex 1,
// before and after the transformation at (1, 2).
// Labels: 1 and 2 are the transformation pair; {3,1} x {4,2} and
// {5,1} x {6} are the two block decompositions.
inline Bigraph two_blocks_before() {
    return graph(6, {{5, 6, 's'},
                     {1, 6, 's'},
                     {1, 2, 's'},
                     {2, 3, 's'},
                     {3, 4, 's'},
                     {1, 4, 's'},
                     {1, 5, 'd'},
                     {1, 3, 'd'},
                     {2, 4, 'd'}});
}

inline Bigraph two_blocks_after() {
    return graph(6, {{2, 6, 's'},
                     {1, 6, 's'},
                     {1, 4, 's'},
                     {3, 4, 's'},
                     {5, 6, 's'},
                     {1, 2, 'd'},
                     {2, 5, 'd'},
                     {1, 5, 'd'},
                     {1, 3, 'd'}});
}

// Union of edge-disjoint bigraphs on a shared ambient vertex set.
inline Bigraph graph_union(const Bigraph& a, const Bigraph& b) {
    Bigraph out = a;
    for (const auto& e : b.edges()) out.add_edge(e.u, e.v, e.style);
    return out;
}

template <typename Fn>
std::optional<ErrorCode> thrown_code(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace qctest
