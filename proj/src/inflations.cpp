#include "qcartan/inflations.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace qcartan {

std::vector<DynkinType> ClassificationResult::sorted_types() const {
    auto out = types;
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Canonical matrices

QuasiCartanMatrix canonical_cartan(const DynkinType& t) {
    if (!is_valid_dynkin_type(t))
        throw Error(ErrorCode::invalid_rank, "invalid rank for " + to_string(t));
    const int n = t.rank;
    IntMatrix m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 2;
    auto join = [&](int i, int j) {
        m.at(i, j) = -1;
        m.at(j, i) = -1;
    };
    switch (t.family) {
        case DynkinFamily::A:
            for (int i = 1; i < n; ++i) join(i, i + 1);
            break;
        case DynkinFamily::D:
            join(1, 3);
            join(2, 3);
            for (int i = 3; i < n; ++i) join(i, i + 1);
            break;
        case DynkinFamily::E:
            for (int i = 1; i < n - 1; ++i) join(i, i + 1);
            join(3, n);
            break;
    }
    return QuasiCartanMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// Diagram recognition

namespace {

// Walks from `from` away from `prev` along a path of degree-<=2 vertices;
// returns the visited vertices in order.
std::vector<Vertex> walk_arm(const Bigraph& g, Vertex prev, Vertex from) {
    std::vector<Vertex> arm;
    Vertex before = prev;
    Vertex cur = from;
    for (;;) {
        arm.push_back(cur);
        std::vector<Vertex> nbrs = g.neighbors(cur);
        Vertex next = 0;
        for (Vertex w : nbrs)
            if (w != before) next = w;
        if (next == 0) break;
        before = cur;
        cur = next;
    }
    return arm;
}

struct ComponentRecognition {
    DynkinType type;
    std::map<Vertex, int> position;  // vertex -> 1..rank in the standard layout
};

ComponentRecognition recognize_component(const Bigraph& g, const std::vector<Vertex>& comp) {
    ComponentRecognition out{{DynkinFamily::A, 1}, {}};
    const int k = static_cast<int>(comp.size());
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::not_a_dynkin_diagram, "component is not a Dynkin diagram: " + why);
    };

    int edge_count = 0;
    std::vector<Vertex> degree3;
    for (Vertex v : comp) {
        int d = 0;
        for (Vertex w : g.neighbors(v)) {
            if (g.multiplicity(v, w) > 1) fail("parallel edges");
            if (g.multiplicity(v, w, LineStyle::dotted) > 0) fail("dotted edge");
            ++d;
            if (w > v) ++edge_count;
        }
        if (d > 3) fail("vertex of degree > 3");
        if (d == 3) degree3.push_back(v);
    }
    if (edge_count != k - 1) fail("component is not a tree");
    if (degree3.size() > 1) fail("more than one degree-3 vertex");

    if (degree3.empty()) {
        // path (possibly a single vertex)
        std::vector<Vertex> ends;
        for (Vertex v : comp)
            if (g.degree(v) <= 1) ends.push_back(v);
        if (k == 1) {
            out.type = {DynkinFamily::A, 1};
            out.position[comp.front()] = 1;
            return out;
        }
        if (ends.size() != 2) fail("not a path");
        Vertex start = std::min(ends[0], ends[1]);
        std::vector<Vertex> path = walk_arm(g, 0, start);
        if (static_cast<int>(path.size()) != k) fail("not a path");
        out.type = {DynkinFamily::A, k};
        for (int i = 0; i < k; ++i) out.position[path[i]] = i + 1;
        return out;
    }

    Vertex center = degree3.front();
    std::vector<std::vector<Vertex>> arms;
    for (Vertex w : g.neighbors(center)) arms.push_back(walk_arm(g, center, w));
    std::sort(arms.begin(), arms.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    size_t covered = 1 + arms[0].size() + arms[1].size() + arms[2].size();
    if (covered != static_cast<size_t>(k)) fail("branch vertex off the arms");

    const size_t l1 = arms[0].size(), l2 = arms[1].size(), l3 = arms[2].size();
    if (l1 == 1 && l2 == 1) {
        // D_k: the two short leaves take positions 1 and 2 (sorted), the
        // center is 3, the long arm runs 4..k.
        out.type = {DynkinFamily::D, k};
        Vertex a = arms[0][0], b = arms[1][0];
        std::vector<Vertex> leaves{a, b};
        std::vector<Vertex> long_arm = arms[2];
        if (k == 4) {
            // three leaves: smallest two take 1,2, the last takes 4
            std::vector<Vertex> all{arms[0][0], arms[1][0], arms[2][0]};
            std::sort(all.begin(), all.end());
            leaves = {all[0], all[1]};
            long_arm = {all[2]};
        } else if (leaves[0] > leaves[1]) {
            std::swap(leaves[0], leaves[1]);
        }
        out.position[leaves[0]] = 1;
        out.position[leaves[1]] = 2;
        out.position[center] = 3;
        for (size_t i = 0; i < long_arm.size(); ++i)
            out.position[long_arm[i]] = 4 + static_cast<int>(i);
        return out;
    }
    if (l1 == 1 && l2 == 2 && l3 >= 2 && l3 <= 4) {
        // E_k: the 1-arm leaf takes position k, one 2-arm runs (2,1)
        // outward, the remaining arm runs 4..k-1 outward.
        out.type = {DynkinFamily::E, k};
        std::vector<Vertex> short_arm = arms[1];
        std::vector<Vertex> long_arm = arms[2];
        if (l3 == 2 && long_arm.back() < short_arm.back()) std::swap(short_arm, long_arm);
        out.position[arms[0][0]] = k;
        out.position[center] = 3;
        out.position[short_arm[0]] = 2;
        out.position[short_arm[1]] = 1;
        for (size_t i = 0; i < long_arm.size(); ++i)
            out.position[long_arm[i]] = 4 + static_cast<int>(i);
        return out;
    }
    fail("arm lengths match no Dynkin diagram");
    return out;  // unreachable
}

}  // namespace

DiagramRecognition recognize_diagram(const Bigraph& g) {
    DiagramRecognition out;
    out.permutation.assign(g.vertex_count() + 1, 0);
    int offset = 0;
    for (const auto& comp : connected_components(g)) {
        ComponentRecognition rec = recognize_component(g, comp);
        out.types.push_back(rec.type);
        for (const auto& [v, pos] : rec.position) out.permutation[v] = offset + pos;
        offset += rec.type.rank;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Inflations method

ClassificationResult inflations_method(const QuasiCartanMatrix& a, PivotRule rule) {
    const int n = a.size();
    if (!a.entries_in_unit_range())
        throw Error(ErrorCode::entry_out_of_range,
                    "inflations method needs off-diagonal entries in {-1,0,1}");
    if (!is_positive_definite(a))
        throw Error(ErrorCode::not_positive_definite, "matrix is not positive definite");

    auto find_pivot = [&](const QuasiCartanMatrix& m) -> std::optional<FlationStep> {
        if (rule == PivotRule::lexicographic) {
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (m.at(i, j) == 1) return FlationStep{i, j};
        } else {
            for (int i = n; i >= 1; --i)
                for (int j = n; j > i; --j)
                    if (m.at(i, j) == 1) return FlationStep{j, i};
        }
        return std::nullopt;
    };

    const long long guard = 4LL * n * n * n;
    std::vector<FlationStep> steps;
    QuasiCartanMatrix cur = a;
    long long iterations = 0;
    while (auto pivot = find_pivot(cur)) {
        if (++iterations > guard)
            throw Error(ErrorCode::guard_exceeded, "inflation step guard exceeded");
        cur = flate_matrix(cur, *pivot);
        steps.push_back(*pivot);
    }

    auto [canonical, witness] = apply_sequence(a, steps);
    assert(canonical == cur);
    DiagramRecognition rec = recognize_diagram(matrix_to_bigraph(canonical));
    return ClassificationResult{rec.types, std::move(witness), std::move(canonical),
                                rec.permutation};
}

// ---------------------------------------------------------------------------
// Witness verification

VerifyResult verify_witness(const QuasiCartanMatrix& a_in, const QuasiCartanMatrix& a_out,
                            const FlationWitness& w) {
    using Reason = VerifyResult::Reason;
    auto failed = [](Reason r) { return VerifyResult{false, r}; };
    const int n = a_in.size();
    if (a_out.size() != n || w.accumulated.size() != n) return failed(Reason::dimension_mismatch);

    QuasiCartanMatrix cur = a_in;
    IntMatrix product = IntMatrix::identity(n);
    for (const auto& step : w.steps) {
        if (step.s < 1 || step.s > n || step.r < 1 || step.r > n || step.s == step.r)
            return failed(Reason::step_invalid);
        long long pivot = cur.at(step.s, step.r);
        if (pivot < -1 || pivot > 1) return failed(Reason::pivot_out_of_range);
        product.mul_elementary_right(step.s, step.r, -pivot);
        cur = flate_matrix(cur, step);
    }
    if (product != w.accumulated) return failed(Reason::accumulated_mismatch);

    BigInt det = determinant(w.accumulated);
    if (det != 1 && det != -1) return failed(Reason::not_unimodular);

    // accumulated^T * A_in * accumulated, in exact wide arithmetic
    std::vector<BigInt> tmp(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            BigInt acc = 0;
            for (int k = 1; k <= n; ++k)
                acc += BigInt(w.accumulated.at(k, i)) * a_in.at(k, j);
            tmp[static_cast<size_t>(i - 1) * n + (j - 1)] = acc;
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            BigInt acc = 0;
            for (int k = 1; k <= n; ++k)
                acc += tmp[static_cast<size_t>(i - 1) * n + (k - 1)] * w.accumulated.at(k, j);
            if (acc != a_out.at(i, j)) return failed(Reason::result_mismatch);
        }
    if (cur != a_out) return failed(Reason::result_mismatch);
    return VerifyResult{true, Reason::ok};
}

}  // namespace qcartan
