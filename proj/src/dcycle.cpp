#include "qcartan/dcycle.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <string>

namespace qcartan {

namespace {

GluingPiece make_piece(std::vector<StyledEdge> edges) {
    GluingPiece p;
    p.edges = std::move(edges);
    std::sort(p.edges.begin(), p.edges.end());
    std::set<Vertex> support;
    for (const auto& e : p.edges) {
        support.insert(e.u);
        support.insert(e.v);
    }
    p.vertices.assign(support.begin(), support.end());
    return p;
}

InducedSubgraph piece_graph(const GluingPiece& p) {
    // compact bigraph of the piece, plus the label maps
    InducedSubgraph out;
    out.graph = Bigraph(static_cast<int>(p.vertices.size()));
    out.to_global = p.vertices;
    for (size_t i = 0; i < p.vertices.size(); ++i)
        out.to_local[p.vertices[i]] = static_cast<Vertex>(i) + 1;
    for (const auto& e : p.edges)
        out.graph.add_edge(out.to_local.at(e.u), out.to_local.at(e.v), e.style);
    return out;
}

void fail_invariant(const std::string& clause) {
    throw Error(ErrorCode::invariant_violation, "cycle gluing invariant failed: " + clause);
}

}  // namespace

// ---------------------------------------------------------------------------
// DCycleGluing

DCycleGluing DCycleGluing::normalized() const {
    const int h = length();
    if (h == 0) return *this;

    auto build = [&](int start, int direction) {
        DCycleGluing out;
        out.ambient_n = ambient_n;
        out.cycle.resize(h);
        out.styles.resize(h);
        out.pieces.resize(h);
        for (int i = 0; i < h; ++i) {
            if (direction > 0) {
                out.cycle[i] = cycle[(start + i) % h];
                out.styles[i] = styles[(start + i) % h];
                out.pieces[i] = pieces[(start + i) % h];
            } else {
                out.cycle[i] = cycle[((start - i) % h + h) % h];
                out.styles[i] = styles[((start - 1 - i) % h + h) % h];
                out.pieces[i] = pieces[((start - 1 - i) % h + h) % h];
            }
        }
        return out;
    };

    int min_pos = 0;
    for (int i = 1; i < h; ++i)
        if (cycle[i] < cycle[min_pos]) min_pos = i;

    DCycleGluing fwd = build(min_pos, +1);
    DCycleGluing bwd = build(min_pos, -1);
    auto key = [](const DCycleGluing& d) {
        std::vector<int> k;
        for (Vertex v : d.cycle) k.push_back(v);
        for (LineStyle s : d.styles) k.push_back(s == LineStyle::dotted ? 1 : 0);
        return std::make_pair(k, d.pieces);
    };
    return key(fwd) <= key(bwd) ? fwd : bwd;
}

void validate(const DCycleGluing& d) {
    const int h = d.length();
    if (h < 2) fail_invariant("cycle length must be at least 2");
    if (static_cast<int>(d.styles.size()) != h || static_cast<int>(d.pieces.size()) != h)
        fail_invariant("styles and pieces must match the cycle length");
    if (d.ambient_n < 1) fail_invariant("ambient vertex count must be positive");

    std::set<Vertex> on_cycle;
    for (Vertex v : d.cycle) {
        if (v < 1 || v > d.ambient_n) fail_invariant("cycle vertex out of range");
        if (!on_cycle.insert(v).second) fail_invariant("cycle vertices must be distinct");
    }

    int dotted = 0;
    for (LineStyle s : d.styles)
        if (s == LineStyle::dotted) ++dotted;
    if (dotted % 2 == 0) fail_invariant("cycle must carry an odd number of dotted edges");

    std::set<Vertex> covered;
    for (int i = 0; i < h; ++i) {
        const GluingPiece& p = d.pieces[i];
        const Vertex xi = d.cycle[i];
        const Vertex xj = d.cycle[(i + 1) % h];
        if (p.edges.empty()) fail_invariant("piece has no edges");
        GluingPiece renorm = make_piece(p.edges);
        if (renorm.vertices != p.vertices || renorm.edges != p.edges)
            fail_invariant("piece is not in normal form");
        InducedSubgraph sub = piece_graph(p);
        if (!sub.graph.is_simple()) fail_invariant("piece has parallel edges");
        int count = 0;
        for (const auto& e : p.edges)
            if ((e.u == std::min(xi, xj)) && (e.v == std::max(xi, xj))) {
                ++count;
                if (e.style != d.styles[i])
                    fail_invariant("piece carries its cycle edge with the wrong style");
            }
        if (count != 1) fail_invariant("piece must contain its cycle edge");
        if (!is_A_block_tree(sub.graph)) fail_invariant("piece is not of Dynkin type A");
        BlockTree bt = block_tree(sub.graph);
        if (bt.is_separator(sub.to_local.at(xi)) || bt.is_separator(sub.to_local.at(xj)))
            fail_invariant("attachment vertices must be non-separating in their piece");
        covered.insert(p.vertices.begin(), p.vertices.end());
    }

    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j) {
            std::set<Vertex> expected;
            if (j == i + 1) expected.insert(d.cycle[j]);
            if (i == 0 && j == h - 1) expected.insert(d.cycle[0]);
            std::vector<Vertex> inter;
            std::set_intersection(d.pieces[i].vertices.begin(), d.pieces[i].vertices.end(),
                                  d.pieces[j].vertices.begin(), d.pieces[j].vertices.end(),
                                  std::back_inserter(inter));
            if (std::set<Vertex>(inter.begin(), inter.end()) != expected)
                fail_invariant("pieces overlap outside their shared attachment vertices");
        }

    if (static_cast<int>(covered.size()) != d.ambient_n)
        fail_invariant("pieces must cover every vertex");
}

Bigraph glue(const DCycleGluing& d) {
    validate(d);
    Bigraph out(d.ambient_n);
    for (const auto& p : d.pieces)
        for (const auto& e : p.edges) out.add_edge(e.u, e.v, e.style);
    out = simplify(out);
    if (!out.is_simple()) fail_invariant("glued graph is not simple");
    return out;
}

// ---------------------------------------------------------------------------
// Identification and splitting

Bigraph identify_vertices(const Bigraph& j, Vertex u, Vertex v) {
    const int n = j.vertex_count();
    if (u == v || u < 1 || v < 1 || u > n || v > n)
        throw Error(ErrorCode::bad_argument, "identification needs two distinct vertices");
    if (j.has_edge(u, v))
        throw Error(ErrorCode::vertices_adjacent, "cannot identify adjacent vertices");
    const Vertex keep = std::min(u, v);
    const Vertex drop = std::max(u, v);
    auto map = [&](Vertex w) -> Vertex {
        if (w == drop) return keep;
        return w > drop ? w - 1 : w;
    };
    Bigraph out(n - 1);
    for (const auto& e : j.edges()) out.add_edge(map(e.u), map(e.v), e.style);
    return simplify(out);
}

Bigraph split_vertex(const Bigraph& g, Vertex w, const std::vector<Vertex>& side_u,
                     const std::vector<Vertex>& side_v) {
    const int n = g.vertex_count();
    if (w < 1 || w > n) throw Error(ErrorCode::bad_argument, "vertex out of range");
    if (!g.is_simple()) throw Error(ErrorCode::bad_argument, "splitting needs a simple bigraph");
    if (side_u.empty() || side_v.empty())
        throw Error(ErrorCode::empty_side, "both sides of a split must take at least one edge");
    std::set<Vertex> su(side_u.begin(), side_u.end());
    std::set<Vertex> sv(side_v.begin(), side_v.end());
    auto nbrs = g.neighbors(w);
    std::set<Vertex> all(nbrs.begin(), nbrs.end());
    if (su.size() != side_u.size() || sv.size() != side_v.size())
        throw Error(ErrorCode::bad_argument, "split sides contain duplicates");
    std::set<Vertex> merged = su;
    merged.insert(sv.begin(), sv.end());
    if (merged.size() != su.size() + sv.size() || merged != all)
        throw Error(ErrorCode::bad_argument, "split sides must partition the edges at w");

    Bigraph out(n + 1);
    for (const auto& e : g.edges()) {
        if (e.u == w || e.v == w) continue;
        out.add_edge(e.u, e.v, e.style);
    }
    for (Vertex t : side_u) out.add_edge(w, t, *g.style_of(w, t));
    for (Vertex t : side_v) out.add_edge(n + 1, t, *g.style_of(w, t));
    return out;
}

// ---------------------------------------------------------------------------
// Shortest paths in type-A bigraphs

namespace {

struct UniquePath {
    std::vector<Vertex> path;  // empty if unreachable
    long long count = 0;
};

UniquePath bfs_unique_shortest_path(const Bigraph& g, Vertex x, Vertex y) {
    const int n = g.vertex_count();
    std::vector<int> dist(n + 1, -1);
    std::vector<long long> count(n + 1, 0);
    std::vector<Vertex> pred(n + 1, 0);
    std::deque<Vertex> queue{x};
    dist[x] = 0;
    count[x] = 1;
    while (!queue.empty()) {
        Vertex a = queue.front();
        queue.pop_front();
        for (Vertex b : g.neighbors(a)) {
            if (dist[b] < 0) {
                dist[b] = dist[a] + 1;
                count[b] = count[a];
                pred[b] = a;
                queue.push_back(b);
            } else if (dist[b] == dist[a] + 1) {
                count[b] += count[a];
            }
        }
    }
    UniquePath out;
    out.count = count[y];
    if (dist[y] < 0 || count[y] != 1) return out;
    for (Vertex a = y; a != 0; a = pred[a]) {
        out.path.push_back(a);
        if (a == x) break;
    }
    std::reverse(out.path.begin(), out.path.end());
    return out;
}

}  // namespace

std::vector<Vertex> shortest_path_A(const Bigraph& g, Vertex x, Vertex y) {
    if (x == y) throw Error(ErrorCode::bad_argument, "endpoints must differ");
    if (!is_connected(g)) throw Error(ErrorCode::not_connected, "graph is not connected");
    if (!classify_A(g)) throw Error(ErrorCode::not_a_type, "graph does not have Dynkin type A");
    UniquePath up = bfs_unique_shortest_path(g, x, y);
    if (up.count != 1)
        throw Error(ErrorCode::invariant_violation,
                    "expected exactly one shortest path, found " + std::to_string(up.count));
    return up.path;
}

// ---------------------------------------------------------------------------
// Type-D recognition via vertex splitting

namespace {

bool split_candidate_certifies(const Bigraph& j, Vertex u, Vertex v,
                               std::vector<Vertex>* path_out) {
    if (!is_connected(j)) return false;
    if (!is_A_block_tree(j)) return false;
    BlockTree bt = block_tree(j);
    if (bt.is_separator(u) || bt.is_separator(v)) return false;
    UniquePath up = bfs_unique_shortest_path(j, u, v);
    if (up.count != 1 || up.path.size() < 3) return false;
    int dotted = 0;
    for (size_t i = 0; i + 1 < up.path.size(); ++i)
        if (*j.style_of(up.path[i], up.path[i + 1]) == LineStyle::dotted) ++dotted;
    if (dotted % 2 == 0) return false;
    if (path_out) *path_out = up.path;
    return true;
}

}  // namespace

std::optional<SplitWitness> recognize_D(const Bigraph& g) {
    const int n = g.vertex_count();
    if (!g.is_simple())
        throw Error(ErrorCode::bad_argument, "type-D recognition needs a simple bigraph");
    if (n < 4) throw Error(ErrorCode::bad_argument, "type-D recognition needs at least 4 vertices");
    if (!is_connected(g)) throw Error(ErrorCode::bad_argument, "graph is not connected");

    // In a type-A preimage the endpoints are non-separating, so they lie
    // in a single complete block; their neighborhoods must therefore be
    // cliques already in g. This prunes most partitions before any block
    // decomposition runs.
    auto clique_in_g = [&](const std::vector<Vertex>& verts, Vertex extra) {
        for (size_t i = 0; i < verts.size(); ++i) {
            if (extra != 0 && !g.has_edge(verts[i], extra)) return false;
            for (size_t k = i + 1; k < verts.size(); ++k)
                if (!g.has_edge(verts[i], verts[k])) return false;
        }
        return true;
    };

    for (Vertex w = 1; w <= n; ++w) {
        const std::vector<Vertex> nbrs = g.neighbors(w);
        const int deg = static_cast<int>(nbrs.size());

        // plain splits: partition the edges at w, lowest edge staying with u
        if (deg >= 2) {
            for (unsigned mask = 1; mask < (1u << (deg - 1)); ++mask) {
                std::vector<Vertex> side_u{nbrs[0]}, side_v;
                for (int k = 0; k < deg - 1; ++k)
                    ((mask >> k) & 1u ? side_v : side_u).push_back(nbrs[k + 1]);
                if (!clique_in_g(side_u, 0) || !clique_in_g(side_v, 0)) continue;
                Bigraph j = split_vertex(g, w, side_u, side_v);
                if (split_candidate_certifies(j, w, n + 1, nullptr))
                    return SplitWitness{w, side_u, side_v, std::nullopt, std::move(j), w, n + 1};
            }
        }

        // splits with one canceled opposite pair at a non-neighbor of w:
        // u and v were both adjacent to it in the preimage, with opposite
        // styles, so the pair vanished under identification. A common
        // neighbor pins the distance to 2, and type A forbids a second
        // one, so a single canceled pair is fully general.
        for (Vertex a = 1; a <= n; ++a) {
            if (a == w || g.has_edge(w, a)) continue;
            for (LineStyle style_at_u : {LineStyle::dotted, LineStyle::solid}) {
                for (unsigned mask = 0; mask < (1u << deg); ++mask) {
                    std::vector<Vertex> side_u, side_v;
                    for (int k = 0; k < deg; ++k)
                        ((mask >> k) & 1u ? side_v : side_u).push_back(nbrs[k]);
                    if (!clique_in_g(side_u, a) || !clique_in_g(side_v, a)) continue;
                    Bigraph j(n + 1);
                    for (const auto& e : g.edges()) {
                        if (e.u == w || e.v == w) continue;
                        j.add_edge(e.u, e.v, e.style);
                    }
                    for (Vertex t : side_u) j.add_edge(w, t, *g.style_of(w, t));
                    for (Vertex t : side_v) j.add_edge(n + 1, t, *g.style_of(w, t));
                    j.add_edge(w, a, style_at_u);
                    j.add_edge(n + 1, a, opposite(style_at_u));
                    if (split_candidate_certifies(j, w, n + 1, nullptr))
                        return SplitWitness{w,
                                            side_u,
                                            side_v,
                                            std::make_pair(a, style_at_u),
                                            std::move(j),
                                            w,
                                            n + 1};
                }
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// From a split certificate to a cycle gluing

DCycleGluing decomposition_from_split(const Bigraph& g, const SplitWitness& witness) {
    const int n = g.vertex_count();
    auto reject = [](const std::string& why) {
        throw Error(ErrorCode::invalid_witness, "invalid split witness: " + why);
    };
    if (witness.j.vertex_count() != n + 1) reject("preimage must have one extra vertex");
    if (witness.u != witness.w || witness.v != n + 1)
        reject("expected u = w and v = n+1 labeling");
    if (witness.u < 1 || witness.u > n) reject("merged vertex out of range");
    if (!witness.j.is_simple()) reject("preimage is not simple");
    if (witness.j.has_edge(witness.u, witness.v)) reject("endpoints are adjacent");
    if (identify_vertices(witness.j, witness.u, witness.v) != g)
        reject("identification does not reproduce the graph");
    std::vector<Vertex> path;
    if (!split_candidate_certifies(witness.j, witness.u, witness.v, &path))
        reject("preimage fails the type-A, endpoint or parity conditions");

    const int h = static_cast<int>(path.size()) - 1;  // x_1..x_{h+1}
    DCycleGluing d;
    d.ambient_n = n;
    d.cycle.assign(path.begin(), path.end() - 1);
    for (int i = 0; i < h; ++i)
        d.styles.push_back(*witness.j.style_of(path[i], path[i + 1]));

    // Peel the preimage along the interior separation vertices: the piece
    // at step i is the side of x_{i+1} containing x_i.
    std::set<Vertex> remaining;
    for (Vertex v = 1; v <= n + 1; ++v) remaining.insert(v);
    for (int i = 0; i < h - 1; ++i) {
        const Vertex cut = path[i + 1];
        std::set<Vertex> side;  // vertices reachable from x_i without crossing the cut
        std::deque<Vertex> queue{path[i]};
        side.insert(path[i]);
        while (!queue.empty()) {
            Vertex a = queue.front();
            queue.pop_front();
            for (Vertex b : witness.j.neighbors(a)) {
                if (b == cut || !remaining.count(b) || side.count(b)) continue;
                side.insert(b);
                queue.push_back(b);
            }
        }
        if (side.count(path[i + 2])) reject("interior path vertex does not separate");
        std::vector<StyledEdge> piece_edges;
        for (const auto& e : witness.j.edges())
            if ((side.count(e.u) || e.u == cut) && (side.count(e.v) || e.v == cut) &&
                remaining.count(e.u) && remaining.count(e.v))
                piece_edges.push_back(e);
        d.pieces.push_back(make_piece(std::move(piece_edges)));
        for (Vertex v : side) remaining.erase(v);
    }
    // Last piece: whatever is left, with the fresh endpoint folded back
    // onto x_1.
    std::vector<StyledEdge> last_edges;
    for (const auto& e : witness.j.edges()) {
        if (!remaining.count(e.u) || !remaining.count(e.v)) continue;
        Vertex a = e.u == witness.v ? path[0] : e.u;
        Vertex b = e.v == witness.v ? path[0] : e.v;
        last_edges.push_back({std::min(a, b), std::max(a, b), e.style});
    }
    d.pieces.push_back(make_piece(std::move(last_edges)));

    d = d.normalized();
    validate(d);
    if (glue(d) != g) reject("reconstructed gluing does not glue back to the graph");
    return d;
}

std::pair<Bigraph, std::pair<Vertex, Vertex>> split_of_gluing(const DCycleGluing& d) {
    validate(d);
    const int n = d.ambient_n;
    const Vertex x1 = d.cycle[0];
    const Vertex fresh = n + 1;
    Bigraph j(n + 1);
    for (int i = 0; i < d.length(); ++i) {
        const bool last = (i == d.length() - 1);
        for (const auto& e : d.pieces[i].edges) {
            Vertex a = e.u, b = e.v;
            if (last) {
                if (a == x1) a = fresh;
                if (b == x1) b = fresh;
            }
            j.add_edge(a, b, e.style);
        }
    }
    return {std::move(j), {x1, fresh}};
}

// ---------------------------------------------------------------------------
// Reduction to the standard D_n

std::pair<FlationWitness, std::vector<Vertex>> reduce_to_Dn(const Bigraph& g,
                                                            const DCycleGluing& d) {
    const int n = g.vertex_count();
    auto reject = [](const std::string& why) {
        throw Error(ErrorCode::invalid_decomposition, "invalid cycle gluing: " + why);
    };
    validate(d);
    if (n < 4) reject("reduction needs at least 4 vertices");
    if (glue(d) != g) reject("gluing does not produce the graph");

    Bigraph cur = g;
    std::vector<FlationStep> steps;
    std::vector<Vertex> cycle = d.cycle;
    auto apply = [&](Vertex s, Vertex r) {
        cur = flate_graph(cur, {s, r});
        steps.push_back({s, r});
    };

    // Growth: absorb off-cycle vertices adjacent to a consecutive pair.
    while (static_cast<int>(cycle.size()) < n) {
        const int h = static_cast<int>(cycle.size());
        std::vector<bool> on_cycle(n + 1, false);
        for (Vertex v : cycle) on_cycle[v] = true;
        Vertex s = 0;
        int at = -1;
        for (Vertex cand = 1; cand <= n && s == 0; ++cand) {
            if (on_cycle[cand]) continue;
            for (int i = 0; i < h; ++i) {
                if (cur.has_edge(cand, cycle[i]) && cur.has_edge(cand, cycle[(i + 1) % h])) {
                    s = cand;
                    at = i;
                    break;
                }
            }
        }
        if (s == 0) reject("no absorbable vertex next to the cycle");
        apply(s, cycle[at]);

        auto cycle_exists = [&](const std::vector<Vertex>& c) {
            for (size_t i = 0; i < c.size(); ++i)
                if (!cur.has_edge(c[i], c[(i + 1) % c.size()])) return false;
            return true;
        };
        std::vector<Vertex> after = cycle, before = cycle;
        after.insert(after.begin() + at + 1, s);
        before.insert(before.begin() + at, s);
        if (cycle_exists(after))
            cycle = std::move(after);
        else if (cycle_exists(before))
            cycle = std::move(before);
        else
            reject("absorption did not extend the cycle");
    }
    if (cur.edge_count() != n) reject("grown graph is not a plain cycle");

    // Style pushing: walk around the cycle and flip dotted edges forward;
    // odd parity leaves exactly the closing edge dotted.
    for (int i = 1; i < n; ++i) {
        if (*cur.style_of(cycle[i - 1], cycle[i]) == LineStyle::dotted) {
            apply(cycle[i], cycle[i - 1]);
            apply(cycle[i], cycle[(i + 1) % n]);
        }
    }
    for (int i = 1; i < n; ++i)
        if (*cur.style_of(cycle[i - 1], cycle[i]) != LineStyle::solid)
            reject("style pushing left a dotted edge inside the cycle");
    if (*cur.style_of(cycle[n - 1], cycle[0]) != LineStyle::dotted)
        reject("style pushing lost the closing dotted edge");

    // Fan: collapse the cycle onto the standard D_n layout.
    for (int i = n - 1; i >= 2; --i) apply(cycle[i], cycle[0]);

    std::vector<Vertex> perm(n + 1, 0);
    for (int i = 0; i < n; ++i) perm[cycle[i]] = i + 1;
    assert(relabel(cur, perm) ==
           matrix_to_bigraph(canonical_cartan({DynkinFamily::D, n})));

    auto [result, witness] = apply_sequence(g, steps);
    assert(result == cur);
    return {std::move(witness), std::move(perm)};
}

// ---------------------------------------------------------------------------
// Top-level classification

ClassificationResult classify(const Bigraph& g) {
    const int n = g.vertex_count();
    if (!g.is_simple())
        throw Error(ErrorCode::entry_out_of_range,
                    "classification needs a simple bigraph (off-diagonal entries in {-1,0,1})");
    QuasiCartanMatrix a = bigraph_to_matrix(g);
    if (!is_positive_definite(a))
        throw Error(ErrorCode::not_positive_definite, "matrix is not positive definite");

    std::vector<DynkinType> types;
    std::vector<FlationStep> all_steps;
    std::vector<Vertex> perm(n + 1, 0);
    int offset = 0;

    for (const auto& comp : connected_components(g)) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        const int k = sub.graph.vertex_count();
        std::vector<FlationStep> local_steps;
        std::vector<Vertex> local_positions;
        int local_span = 0;

        if (is_A_block_tree(sub.graph)) {
            auto [witness, relab] = reduce_to_An(sub.graph);
            local_steps = witness.steps;
            local_positions = relab;
            types.push_back({DynkinFamily::A, k});
            local_span = k;
        } else {
            std::optional<SplitWitness> sw;
            if (k >= 4) sw = recognize_D(sub.graph);
            if (sw) {
                DCycleGluing d = decomposition_from_split(sub.graph, *sw);
                auto [witness, relab] = reduce_to_Dn(sub.graph, d);
                local_steps = witness.steps;
                local_positions = relab;
                types.push_back({DynkinFamily::D, k});
                local_span = k;
            } else {
                ClassificationResult res = inflations_method(bigraph_to_matrix(sub.graph));
                local_steps = res.witness.steps;
                local_positions = res.permutation;
                for (const auto& t : res.types) types.push_back(t);
                local_span = k;
            }
        }

        for (const auto& step : local_steps)
            all_steps.push_back({sub.to_global[step.s - 1], sub.to_global[step.r - 1]});
        for (Vertex v = 1; v <= k; ++v) perm[sub.to_global[v - 1]] = offset + local_positions[v];
        offset += local_span;
    }

    auto [canonical, witness] = apply_sequence(a, all_steps);
    return ClassificationResult{std::move(types), std::move(witness), std::move(canonical),
                                std::move(perm)};
}

}  // namespace qcartan
