#include "qcartan/flation.hpp"

#include <cassert>
#include <cstdlib>
#include <string>

namespace qcartan {

namespace {

void check_step(int n, const FlationStep& step) {
    if (step.s < 1 || step.s > n || step.r < 1 || step.r > n)
        throw Error(ErrorCode::bad_argument, "step vertex out of range");
    if (step.s == step.r)
        throw Error(ErrorCode::bad_argument, "step needs two distinct vertices");
}

#ifndef NDEBUG
IntMatrix congruence_by_elementary(const IntMatrix& a, int s, int r, long long sigma) {
    const int n = a.size();
    IntMatrix m = elementary_matrix(n, s, r, sigma);
    IntMatrix tmp(n);  // m^T * a
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            long long acc = 0;
            for (int k = 1; k <= n; ++k) acc += m.at(k, i) * a.at(k, j);
            tmp.at(i, j) = acc;
        }
    IntMatrix out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            long long acc = 0;
            for (int k = 1; k <= n; ++k) acc += tmp.at(i, k) * m.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}
#endif

}  // namespace

IntMatrix elementary_matrix(int n, int s, int r, long long sigma) {
    check_step(n, {s, r});
    IntMatrix m = IntMatrix::identity(n);
    m.at(s, r) = sigma;
    return m;
}

QuasiCartanMatrix flate_matrix(const QuasiCartanMatrix& a, const FlationStep& step) {
    const int n = a.size();
    check_step(n, step);
    const long long pivot = a.at(step.s, step.r);
    if (std::llabs(pivot) > 1)
        throw Error(ErrorCode::entry_out_of_range,
                    "flation requires |A[s][r]| <= 1, got " + std::to_string(pivot));
    IntMatrix m = a.mat();
    m.at(step.s, step.r) = -pivot;
    m.at(step.r, step.s) = -pivot;
    for (int i = 1; i <= n; ++i) {
        if (i == step.s || i == step.r) continue;
        long long e = a.at(i, step.r) - pivot * a.at(i, step.s);
        m.at(i, step.r) = e;
        m.at(step.r, i) = e;
    }
    assert(m == congruence_by_elementary(a.mat(), step.s, step.r, -pivot));
    return QuasiCartanMatrix(std::move(m));
}

Bigraph flate_graph(const Bigraph& g, const FlationStep& step) {
    const int n = g.vertex_count();
    check_step(n, step);
    for (int v = 1; v <= n; ++v)
        if (v != step.s && g.multiplicity(step.s, v) > 1)
            throw Error(ErrorCode::bad_argument,
                        "graph flation needs multiplicity <= 1 on every pair at s");

    auto style_sr = g.style_of(step.s, step.r);
    if (!style_sr) return g;

    Bigraph out(n);
    for (const auto& e : g.edges()) {
        if ((e.u == std::min(step.s, step.r)) && (e.v == std::max(step.s, step.r))) continue;
        out.add_edge(e.u, e.v, e.style);
    }
    out.add_edge(step.s, step.r, opposite(*style_sr));

    for (Vertex i : g.neighbors(step.s)) {
        if (i == step.r) continue;
        LineStyle base = *g.style_of(i, step.s);
        LineStyle added = (*style_sr == LineStyle::solid) ? base : opposite(base);
        out.add_edge(i, step.r, added);
        int cancel = std::min(out.multiplicity(i, step.r, LineStyle::solid),
                              out.multiplicity(i, step.r, LineStyle::dotted));
        if (cancel > 0) {
            out.remove_edge(i, step.r, LineStyle::solid, cancel);
            out.remove_edge(i, step.r, LineStyle::dotted, cancel);
        }
    }
    return out;
}

std::pair<QuasiCartanMatrix, FlationWitness> apply_sequence(const QuasiCartanMatrix& a,
                                                            const std::vector<FlationStep>& steps) {
    QuasiCartanMatrix cur = a;
    FlationWitness w = FlationWitness::identity(a.size());
    w.steps = steps;
    for (size_t k = 0; k < steps.size(); ++k) {
        try {
            long long sigma = -cur.at(steps[k].s, steps[k].r);
            QuasiCartanMatrix next = flate_matrix(cur, steps[k]);
            w.accumulated.mul_elementary_right(steps[k].s, steps[k].r, sigma);
            cur = std::move(next);
        } catch (const Error& e) {
            throw Error(e.code(), "step " + std::to_string(k + 1) + ": " + e.what());
        }
    }
    return {std::move(cur), std::move(w)};
}

std::pair<Bigraph, FlationWitness> apply_sequence(const Bigraph& g,
                                                  const std::vector<FlationStep>& steps) {
    Bigraph cur = g;
    QuasiCartanMatrix a = bigraph_to_matrix(g);
    FlationWitness w = FlationWitness::identity(g.vertex_count());
    w.steps = steps;
    for (size_t k = 0; k < steps.size(); ++k) {
        try {
            long long sigma = -a.at(steps[k].s, steps[k].r);
            Bigraph next = flate_graph(cur, steps[k]);
            a = flate_matrix(a, steps[k]);
            w.accumulated.mul_elementary_right(steps[k].s, steps[k].r, sigma);
            cur = std::move(next);
        } catch (const Error& e) {
            throw Error(e.code(), "step " + std::to_string(k + 1) + ": " + e.what());
        }
    }
    assert(bigraph_to_matrix(cur) == a);
    return {std::move(cur), std::move(w)};
}

}  // namespace qcartan
