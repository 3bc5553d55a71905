#include "qcartan/blocks.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace qcartan {

bool BlockTree::is_separator(Vertex v) const {
    return std::binary_search(separators.begin(), separators.end(), v);
}

int BlockTree::tree_degree(Vertex v) const {
    int d = 0;
    for (const auto& blk : blocks)
        if (std::binary_search(blk.begin(), blk.end(), v)) ++d;
    return d;
}

namespace {

struct BlockDfs {
    const Bigraph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<Vertex, Vertex>> estack;
    std::set<Vertex> articulation;
    std::vector<std::set<Vertex>> blocks;
    int timer = 0;

    explicit BlockDfs(const Bigraph& graph)
        : g(graph), disc(graph.vertex_count() + 1, 0), low(graph.vertex_count() + 1, 0) {}

    void run(Vertex u, Vertex parent) {
        disc[u] = low[u] = ++timer;
        int children = 0;
        for (Vertex w : g.neighbors(u)) {
            if (w == parent) continue;
            if (disc[w] == 0) {
                estack.push_back({u, w});
                ++children;
                run(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    if (parent != 0) articulation.insert(u);
                    std::set<Vertex> blk;
                    for (;;) {
                        auto e = estack.back();
                        estack.pop_back();
                        blk.insert(e.first);
                        blk.insert(e.second);
                        if (e.first == u && e.second == w) break;
                    }
                    blocks.push_back(std::move(blk));
                }
            } else if (disc[w] < disc[u]) {
                estack.push_back({u, w});
                low[u] = std::min(low[u], disc[w]);
            }
        }
        if (parent == 0 && children >= 2) articulation.insert(u);
    }
};

}  // namespace

BlockTree block_tree(const Bigraph& g) {
    if (!g.is_simple())
        throw Error(ErrorCode::bad_argument, "block decomposition needs a simple bigraph");
    BlockDfs dfs(g);
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        if (dfs.disc[v] != 0) continue;
        if (g.degree(v) == 0)
            dfs.blocks.push_back({v});
        else
            dfs.run(v, 0);
    }

    BlockTree out;
    for (auto& blk : dfs.blocks) out.blocks.emplace_back(blk.begin(), blk.end());
    std::sort(out.blocks.begin(), out.blocks.end());
    out.separators.assign(dfs.articulation.begin(), dfs.articulation.end());
    for (size_t b = 0; b < out.blocks.size(); ++b)
        for (Vertex v : out.blocks[b]) {
            auto it = std::lower_bound(out.separators.begin(), out.separators.end(), v);
            if (it != out.separators.end() && *it == v)
                out.tree_edges.push_back({static_cast<int>(b),
                                          static_cast<int>(it - out.separators.begin())});
        }
    return out;
}

Bigraph f_bigraph(int n, const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
    Bigraph g(n);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j) g.add_edge(x[i], x[j], LineStyle::dotted);
    for (size_t i = 0; i < y.size(); ++i)
        for (size_t j = i + 1; j < y.size(); ++j) g.add_edge(y[i], y[j], LineStyle::dotted);
    for (Vertex a : x)
        for (Vertex b : y) g.add_edge(a, b, LineStyle::solid);
    return g;
}

FRecognition recognize_F(const Bigraph& block) {
    FRecognition out;
    const int n = block.vertex_count();
    if (n == 0) {
        out.failure = FRecognition::Failure::not_complete;
        return out;
    }
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (block.multiplicity(u, v) != 1) {
                out.failure = FRecognition::Failure::not_complete;
                return out;
            }

    // vertex 1 anchors X; a dotted edge means same side, solid means across
    std::vector<bool> in_x(n + 1, false);
    in_x[1] = true;
    for (Vertex v = 2; v <= n; ++v)
        in_x[v] = (*block.style_of(1, v) == LineStyle::dotted);
    for (Vertex u = 2; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) {
            bool same = (*block.style_of(u, v) == LineStyle::dotted);
            if (same != (in_x[u] == in_x[v])) {
                out.failure = FRecognition::Failure::not_two_colorable;
                return out;
            }
        }

    FDecomposition fd;
    for (Vertex v = 1; v <= n; ++v) (in_x[v] ? fd.x : fd.y).push_back(v);
    out.value = std::move(fd);
    return out;
}

bool is_A_block_tree(const Bigraph& g) {
    if (!g.is_simple())
        throw Error(ErrorCode::bad_argument, "type-A recognition needs a simple bigraph");
    if (g.vertex_count() == 0 || !is_connected(g)) return false;
    BlockTree bt = block_tree(g);
    for (const auto& blk : bt.blocks) {
        if (!recognize_F(induced_subgraph(g, blk).graph)) return false;
    }
    for (Vertex s : bt.separators)
        if (bt.tree_degree(s) != 2) return false;
    return true;
}

bool classify_A(const Bigraph& g) { return is_A_block_tree(g); }

std::pair<FlationWitness, std::vector<Vertex>> reduce_to_An(const Bigraph& g) {
    if (!is_A_block_tree(g))
        throw Error(ErrorCode::not_a_type, "input does not have Dynkin type A");
    const int n = g.vertex_count();
    Bigraph cur = g;
    std::vector<FlationStep> steps;

    // Merge phase: absorb the lexicographically smallest leaf block into
    // its neighbor block through the shared separation vertex.
    for (;;) {
        BlockTree bt = block_tree(cur);
        if (bt.blocks.size() <= 1) break;
        int leaf = -1;
        for (size_t b = 0; b < bt.blocks.size(); ++b) {
            int seps = 0;
            for (Vertex v : bt.blocks[b])
                if (bt.is_separator(v)) ++seps;
            if (seps == 1 && (leaf < 0 || bt.blocks[b] < bt.blocks[leaf]))
                leaf = static_cast<int>(b);
        }
        assert(leaf >= 0);
        Vertex s = 0;
        for (Vertex v : bt.blocks[leaf])
            if (bt.is_separator(v)) s = v;
        for (Vertex v : bt.blocks[leaf]) {
            if (v == s) continue;
            FlationStep step{s, v};
            cur = flate_graph(cur, step);
            steps.push_back(step);
        }
    }

    // Linearization phase: the remaining graph is one complete block.
    FRecognition fr = recognize_F(cur);
    assert(fr);
    const auto& x = fr.value->x;
    const auto& y = fr.value->y;
    for (size_t j = y.size(); j >= 2; --j) {
        FlationStep step{y[j - 2], y[j - 1]};
        cur = flate_graph(cur, step);
        steps.push_back(step);
    }
    for (size_t i = 2; i <= x.size(); ++i) {
        FlationStep step{x[i - 1], x[i - 2]};
        cur = flate_graph(cur, step);
        steps.push_back(step);
    }

    std::vector<Vertex> perm(n + 1, 0);
    for (size_t i = 0; i < x.size(); ++i) perm[x[i]] = static_cast<int>(i) + 1;
    for (size_t j = 0; j < y.size(); ++j) perm[y[j]] = static_cast<int>(x.size() + j) + 1;

    auto [result, witness] = apply_sequence(g, steps);
    assert(result == cur);
    return {std::move(witness), std::move(perm)};
}

std::vector<Vertex> separator_route(const Bigraph& g, Vertex x, Vertex y) {
    if (!is_connected(g)) throw Error(ErrorCode::not_connected, "graph is not connected");
    if (x == y) return {};
    const int n = g.vertex_count();
    BlockTree bt = block_tree(g);

    // Incidence tree on vertex nodes 1..n and block nodes n+1..n+B.
    const int total = n + static_cast<int>(bt.blocks.size());
    std::vector<std::vector<int>> adj(total + 1);
    for (size_t b = 0; b < bt.blocks.size(); ++b)
        for (Vertex v : bt.blocks[b]) {
            adj[v].push_back(n + 1 + static_cast<int>(b));
            adj[n + 1 + static_cast<int>(b)].push_back(v);
        }

    std::vector<int> prev(total + 1, 0);
    std::deque<int> queue{x};
    prev[x] = x;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == y) break;
        for (int w : adj[u])
            if (prev[w] == 0) {
                prev[w] = u;
                queue.push_back(w);
            }
    }
    assert(prev[y] != 0);
    std::vector<Vertex> route;
    for (int u = prev[y]; u != x; u = prev[u])
        if (u <= n) route.push_back(u);
    std::reverse(route.begin(), route.end());
    return route;
}

}  // namespace qcartan
