#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "qcartan/dcycle.hpp"
#include "qcartan/oracle.hpp"

using namespace qctest;

TEST_CASE("enumeration counts") {
    EnumerationSpec one;
    one.n = 1;
    BigraphEnumerator s1(one);
    int count = 0;
    while (s1.next()) ++count;
    CHECK(count == 1);

    EnumerationSpec two;
    two.n = 2;
    BigraphEnumerator s2(two);
    count = 0;
    while (s2.next()) ++count;
    CHECK(count == 3);

    EnumerationSpec three;
    three.n = 3;
    BigraphEnumerator s3(three);
    CHECK(s3.total_assignments() == 27);
    count = 0;
    while (s3.next()) ++count;
    CHECK(count == 27);

    EnumerationSpec connected;
    connected.n = 3;
    connected.connected_only = true;
    BigraphEnumerator sc(connected);
    count = 0;
    while (sc.next()) ++count;
    CHECK(count == 20);  // 27 minus the empty graph and the six single-edge graphs

    CHECK(thrown_code([] { BigraphEnumerator s(EnumerationSpec{8, false, false}); }) ==
          ErrorCode::too_large);
}

TEST_CASE("enumeration is deterministic") {
    EnumerationSpec spec;
    spec.n = 3;
    BigraphEnumerator a(spec), b(spec);
    for (;;) {
        auto ga = a.next();
        auto gb = b.next();
        CHECK(ga == gb);
        if (!ga) break;
    }
}

TEST_CASE("degree sequence census at n = 3") {
    EnumerationSpec spec;
    spec.n = 3;
    BigraphEnumerator stream(spec);
    std::map<std::vector<int>, int> census;
    while (auto g = stream.next()) {
        std::vector<int> degrees;
        for (Vertex v = 1; v <= 3; ++v) degrees.push_back(g->degree(v));
        std::sort(degrees.begin(), degrees.end());
        ++census[degrees];
    }
    std::map<std::vector<int>, int> expected{
        {{0, 0, 0}, 1}, {{0, 1, 1}, 6}, {{1, 1, 2}, 12}, {{2, 2, 2}, 8}};
    CHECK(census == expected);
}

TEST_CASE("a zero-step walk returns the standard diagram with the identity witness") {
    auto [g, w] = random_walk({{DynkinFamily::D, 5}, 0, 42});
    CHECK(g == canonical_bigraph(DynkinFamily::D, 5));
    CHECK(w.steps.empty());
    CHECK(w.accumulated == IntMatrix::identity(5));
}

TEST_CASE("walks preserve the base type and carry valid witnesses") {
    for (DynkinType base : {DynkinType{DynkinFamily::A, 4}, DynkinType{DynkinFamily::D, 4},
                            DynkinType{DynkinFamily::E, 6}}) {
        auto [g, w] = random_walk({base, 50, 7});
        CHECK(verify_witness(canonical_cartan(base), bigraph_to_matrix(g), w).ok);
        ClassificationResult res = classify(g);
        CHECK(res.types == std::vector<DynkinType>{base});
    }
}

TEST_CASE("walks are reproducible") {
    WalkSpec spec{{DynkinFamily::A, 5}, 40, 12345};
    auto [g1, w1] = random_walk(spec);
    auto [g2, w2] = random_walk(spec);
    CHECK(g1 == g2);
    CHECK(w1.steps == w2.steps);
    CHECK(w1.accumulated == w2.accumulated);

    auto [g3, w3] = random_walk({{DynkinFamily::A, 5}, 40, 54321});
    CHECK(w1.steps != w3.steps);
}

TEST_CASE("the fixed generator matches its frozen stream") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 16294208416658607535ULL);
    CHECK(rng.next() == 7960286522194355700ULL);
    CHECK(rng.next() == 487617019471545679ULL);
}

TEST_CASE("differential sweep at n = 3 finds no disagreements") {
    EnumerationSpec spec;
    spec.n = 3;
    DifferentialReport report = differential_test(spec);
    CHECK(report.ok());
    CHECK(report.connected == 20);
    CHECK(report.assignments == 27);
    CHECK(report.positive_definite > 0);
    CHECK(report.type_d == 0);  // the D family needs four vertices
    CHECK(report.type_e == 0);
}
