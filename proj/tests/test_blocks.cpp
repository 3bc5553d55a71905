#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "qcartan/blocks.hpp"
#include "qcartan/inflations.hpp"
#include "qcartan/oracle.hpp"

using namespace qctest;

TEST_CASE("block tree of a path") {
    Bigraph path = canonical_bigraph(DynkinFamily::A, 5);
    BlockTree bt = block_tree(path);
    REQUIRE(bt.blocks.size() == 4);
    CHECK(bt.blocks[0] == std::vector<Vertex>{1, 2});
    CHECK(bt.blocks[3] == std::vector<Vertex>{4, 5});
    CHECK(bt.separators == std::vector<Vertex>{2, 3, 4});
    for (Vertex s : bt.separators) CHECK(bt.tree_degree(s) == 2);
    CHECK(bt.tree_edges.size() == 6);  // each separator joins two blocks
}

TEST_CASE("block tree of a triangle and of two joined triangles") {
    Bigraph triangle = graph(3, {{1, 2, 's'}, {2, 3, 's'}, {1, 3, 's'}});
    BlockTree one = block_tree(triangle);
    CHECK(one.blocks == std::vector<std::vector<Vertex>>{{1, 2, 3}});
    CHECK(one.separators.empty());

    Bigraph two = graph(5, {{1, 2, 's'}, {2, 3, 's'}, {1, 3, 's'},
                            {3, 4, 's'}, {4, 5, 's'}, {3, 5, 's'}});
    BlockTree bt = block_tree(two);
    REQUIRE(bt.blocks.size() == 2);
    CHECK(bt.separators == std::vector<Vertex>{3});
    CHECK(bt.tree_degree(3) == 2);
}

TEST_CASE("block tree handles isolated vertices and forests") {
    Bigraph g = graph(4, {{2, 3, 's'}});
    BlockTree bt = block_tree(g);
    CHECK(bt.blocks == std::vector<std::vector<Vertex>>{{1}, {2, 3}, {4}});
    CHECK(bt.separators.empty());
}

TEST_CASE("separator tree degree equals the component count after removal") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 3 + static_cast<int>(rng.below(4));
        Bigraph g(n);
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v)
                if (rng.below(2)) g.add_edge(u, v, rng.below(2) ? LineStyle::dotted : LineStyle::solid);
        if (!is_connected(g)) continue;
        BlockTree bt = block_tree(g);

        // blocks partition the edge set (two blocks never share a pair)
        int covered = 0;
        for (const auto& blk : bt.blocks) {
            auto sub = induced_subgraph(g, blk);
            covered += sub.graph.edge_count();
        }
        CHECK(covered == g.edge_count());
        for (Vertex v = 1; v <= n; ++v) {
            std::vector<Vertex> rest;
            for (Vertex u = 1; u <= n; ++u)
                if (u != v) rest.push_back(u);
            auto comps = connected_components(induced_subgraph(g, rest).graph);
            if (bt.is_separator(v)) {
                CHECK(bt.tree_degree(v) == static_cast<int>(comps.size()));
                CHECK(comps.size() >= 2);
            } else if (n > 1) {
                CHECK(comps.size() == 1);
            }
        }
    }
}

TEST_CASE("two-sided recognition of complete styled blocks") {
    FRecognition tri = recognize_F(graph(3, {{1, 2, 'd'}, {1, 3, 's'}, {2, 3, 's'}}));
    REQUIRE(tri);
    CHECK(tri.value->x == std::vector<Vertex>{1, 2});
    CHECK(tri.value->y == std::vector<Vertex>{3});

    FRecognition solid_tri = recognize_F(graph(3, {{1, 2, 's'}, {1, 3, 's'}, {2, 3, 's'}}));
    CHECK_FALSE(solid_tri);
    CHECK(solid_tri.failure == FRecognition::Failure::not_two_colorable);

    FRecognition incomplete = recognize_F(graph(3, {{1, 2, 's'}, {2, 3, 's'}}));
    CHECK_FALSE(incomplete);
    CHECK(incomplete.failure == FRecognition::Failure::not_complete);

    FRecognition single = recognize_F(Bigraph(1));
    REQUIRE(single);
    CHECK(single.value->x == std::vector<Vertex>{1});
    CHECK(single.value->y.empty());

    FRecognition dotted_edge = recognize_F(graph(2, {{1, 2, 'd'}}));
    REQUIRE(dotted_edge);
    CHECK(dotted_edge.value->x == std::vector<Vertex>{1, 2});
    CHECK(dotted_edge.value->y.empty());

    FRecognition solid_edge = recognize_F(graph(2, {{1, 2, 's'}}));
    REQUIRE(solid_edge);
    CHECK(solid_edge.value->x == std::vector<Vertex>{1});
    CHECK(solid_edge.value->y == std::vector<Vertex>{2});
}

TEST_CASE("the worked example restricted to one block decomposes as expected") {
    auto sub = induced_subgraph(two_blocks_before(), {1, 2, 3, 4});
    FRecognition fr = recognize_F(sub.graph);
    REQUIRE(fr);
    CHECK(fr.value->x == std::vector<Vertex>{1, 3});
    CHECK(fr.value->y == std::vector<Vertex>{2, 4});
}

TEST_CASE("two-sided blocks match their defining construction") {
    Bigraph f = f_bigraph(5, {1, 4}, {2, 3, 5});
    FRecognition fr = recognize_F(f);
    REQUIRE(fr);
    CHECK(fr.value->x == std::vector<Vertex>{1, 4});
    CHECK(fr.value->y == std::vector<Vertex>{2, 3, 5});
}

TEST_CASE("type-A predicate on reference graphs") {
    CHECK(is_A_block_tree(canonical_bigraph(DynkinFamily::A, 6)));
    CHECK(is_A_block_tree(Bigraph(1)));
    CHECK(is_A_block_tree(two_blocks_before()));
    CHECK_FALSE(is_A_block_tree(canonical_bigraph(DynkinFamily::D, 4)));  // 3 blocks at center
    CHECK_FALSE(is_A_block_tree(graph(4, {{1, 2, 'd'}, {2, 3, 's'}, {3, 4, 's'}, {1, 4, 's'}})));
    CHECK_FALSE(is_A_block_tree(graph(3, {{1, 2, 's'}})));  // disconnected
}

TEST_CASE("classify_A agrees with the inflations oracle on the named cases") {
    Bigraph dotted_triangle = graph(3, {{1, 2, 'd'}, {1, 3, 's'}, {2, 3, 's'}});
    CHECK(classify_A(dotted_triangle));
    CHECK(inflations_method(bigraph_to_matrix(dotted_triangle)).types ==
          std::vector<DynkinType>{{DynkinFamily::A, 3}});

    Bigraph square = graph(4, {{1, 2, 'd'}, {2, 3, 's'}, {3, 4, 's'}, {1, 4, 's'}});
    CHECK_FALSE(classify_A(square));
    CHECK(inflations_method(bigraph_to_matrix(square)).types ==
          std::vector<DynkinType>{{DynkinFamily::D, 4}});

    CHECK(classify_A(Bigraph(1)));
}

TEST_CASE("type-A recognition implies positive definiteness") {
    EnumerationSpec spec;
    spec.n = 4;
    spec.connected_only = true;
    BigraphEnumerator stream(spec);
    while (auto g = stream.next())
        if (is_A_block_tree(*g)) CHECK(is_positive_definite(bigraph_to_matrix(*g)));
}

TEST_CASE("reduction of the standard path is witnessed and exact") {
    Bigraph path = canonical_bigraph(DynkinFamily::A, 5);
    auto [witness, perm] = reduce_to_An(path);
    auto [result, w2] = apply_sequence(path, witness.steps);
    CHECK(relabel(result, perm) == canonical_bigraph(DynkinFamily::A, 5));
    CHECK(verify_witness(bigraph_to_matrix(path), bigraph_to_matrix(result), witness).ok);
}

TEST_CASE("reduction of a single two-sided triangle") {
    Bigraph tri = graph(3, {{1, 2, 'd'}, {1, 3, 's'}, {2, 3, 's'}});
    auto [witness, perm] = reduce_to_An(tri);
    CHECK(witness.steps == std::vector<FlationStep>{{2, 1}});
    auto [result, w2] = apply_sequence(tri, witness.steps);
    CHECK(relabel(result, perm) == canonical_bigraph(DynkinFamily::A, 3));
}

TEST_CASE("reduction of the worked example reaches the path") {
    Bigraph g = two_blocks_before();
    auto [witness, perm] = reduce_to_An(g);
    CHECK(witness.steps.size() >= 3);
    auto [result, w2] = apply_sequence(g, witness.steps);
    CHECK(relabel(result, perm) == canonical_bigraph(DynkinFamily::A, 6));
    CHECK(verify_witness(bigraph_to_matrix(g), bigraph_to_matrix(result), witness).ok);
}

TEST_CASE("reduction rejects non-type-A inputs") {
    CHECK(thrown_code([] { reduce_to_An(canonical_bigraph(DynkinFamily::D, 4)); }) ==
          ErrorCode::not_a_type);
}

TEST_CASE("moving a vertex between two joined blocks") {
    // G = F[X,Y] u F[X',Y'] with X n X' = {s}: the transformation at
    // (s, r) moves r across, keeping both sides two-sided complete.
    for (int xs = 1; xs <= 3; ++xs)
        for (int ys = 0; ys <= 3; ++ys)
            for (int xs2 = 1; xs2 <= 3; ++xs2)
                for (int ys2 = 0; ys2 <= 3; ++ys2) {
                    const Vertex s = 1;
                    std::vector<Vertex> x{s}, y, x2{s}, y2;
                    Vertex next = 2;
                    for (int k = 1; k < xs; ++k) x.push_back(next++);
                    for (int k = 0; k < ys; ++k) y.push_back(next++);
                    for (int k = 1; k < xs2; ++k) x2.push_back(next++);
                    for (int k = 0; k < ys2; ++k) y2.push_back(next++);
                    const int n = next - 1;
                    if (n < 2) continue;
                    Bigraph g = graph_union(f_bigraph(n, x, y), f_bigraph(n, x2, y2));

                    for (Vertex r : y) {
                        std::vector<Vertex> y_rest;
                        for (Vertex t : y)
                            if (t != r) y_rest.push_back(t);
                        std::vector<Vertex> x2_grown = x2;
                        x2_grown.push_back(r);
                        Bigraph expected =
                            graph_union(f_bigraph(n, x, y_rest), f_bigraph(n, x2_grown, y2));
                        CHECK(flate_graph(g, {s, r}) == expected);
                    }
                    for (Vertex r : x) {
                        if (r == s) continue;
                        std::vector<Vertex> x_rest;
                        for (Vertex t : x)
                            if (t != r) x_rest.push_back(t);
                        std::vector<Vertex> y2_grown = y2;
                        y2_grown.push_back(r);
                        Bigraph expected =
                            graph_union(f_bigraph(n, x_rest, y), f_bigraph(n, x2, y2_grown));
                        CHECK(flate_graph(g, {s, r}) == expected);
                    }
                }
}

TEST_CASE("the type-A predicate is closed under flations") {
    SplitMix64 rng(91);
    for (int trial = 0; trial < 150; ++trial) {
        DynkinType base{DynkinFamily::A, 4 + static_cast<int>(rng.below(3))};
        auto [g, w] = random_walk({base, 25, rng.next()});
        REQUIRE(is_A_block_tree(g));
        const int n = g.vertex_count();
        Vertex s = 1 + static_cast<Vertex>(rng.below(n));
        Vertex t = 1 + static_cast<Vertex>(rng.below(n - 1));
        Vertex r = t >= s ? t + 1 : t;
        CHECK(is_A_block_tree(flate_graph(g, {s, r})));
    }
}

TEST_CASE("separator routes through the block structure") {
    Bigraph path = canonical_bigraph(DynkinFamily::A, 5);
    CHECK(separator_route(path, 1, 5) == std::vector<Vertex>{2, 3, 4});
    CHECK(separator_route(path, 2, 4) == std::vector<Vertex>{3});
    CHECK(separator_route(path, 1, 2).empty());

    Bigraph tri = graph(3, {{1, 2, 'd'}, {1, 3, 's'}, {2, 3, 's'}});
    CHECK(separator_route(tri, 1, 2).empty());

    CHECK(separator_route(two_blocks_before(), 5, 3) == std::vector<Vertex>{1});
}
