#include "qcartan/oracle.hpp"

#include <sstream>

#include "qcartan/blocks.hpp"
#include "qcartan/dcycle.hpp"
#include "qcartan/inflations.hpp"

namespace qcartan {

uint64_t SplitMix64::next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t SplitMix64::below(uint64_t bound) {
    if (bound == 0) throw Error(ErrorCode::bad_argument, "empty draw range");
    return next() % bound;
}

// ---------------------------------------------------------------------------
// Enumeration

BigraphEnumerator::BigraphEnumerator(const EnumerationSpec& spec) : spec_(spec) {
    if (spec.n < 1) throw Error(ErrorCode::bad_argument, "enumeration needs n >= 1");
    if (spec.n > 7) throw Error(ErrorCode::too_large, "enumeration is guarded to n <= 7");
    for (Vertex u = 1; u <= spec.n; ++u)
        for (Vertex v = u + 1; v <= spec.n; ++v) pairs_.push_back({u, v});
    for (size_t k = 0; k < pairs_.size(); ++k) total_ *= 3;
}

std::optional<Bigraph> BigraphEnumerator::next() {
    while (index_ < total_) {
        uint64_t code = index_++;
        Bigraph g(spec_.n);
        for (const auto& [u, v] : pairs_) {
            switch (code % 3) {
                case 1: g.add_edge(u, v, LineStyle::solid); break;
                case 2: g.add_edge(u, v, LineStyle::dotted); break;
                default: break;
            }
            code /= 3;
        }
        if (spec_.connected_only && !is_connected(g)) continue;
        if (spec_.positive_definite_only && !is_positive_definite(bigraph_to_matrix(g))) continue;
        return g;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Seeded walks

std::pair<Bigraph, FlationWitness> random_walk(const WalkSpec& spec) {
    if (!is_valid_dynkin_type(spec.base))
        throw Error(ErrorCode::invalid_rank, "invalid walk base type");
    if (spec.steps < 0) throw Error(ErrorCode::bad_argument, "negative step count");
    const int n = spec.base.rank;
    Bigraph start = matrix_to_bigraph(canonical_cartan(spec.base));
    SplitMix64 rng(spec.seed);
    std::vector<FlationStep> steps;
    steps.reserve(static_cast<size_t>(spec.steps));
    for (int k = 0; k < spec.steps; ++k) {
        if (n < 2) {
            // only the trivial walk exists on a single vertex
            break;
        }
        Vertex s = 1 + static_cast<Vertex>(rng.below(n));
        Vertex t = 1 + static_cast<Vertex>(rng.below(n - 1));
        Vertex r = t >= s ? t + 1 : t;
        steps.push_back({s, r});
    }
    return apply_sequence(start, steps);
}

// ---------------------------------------------------------------------------
// Differential testing

namespace {

std::string one_line_document(const Bigraph& g) {
    std::ostringstream os;
    os << "bigraph " << g.vertex_count();
    for (const auto& e : g.edges()) os << "; " << e.u << " " << e.v << " " << to_string(e.style);
    return os.str();
}

}  // namespace

DifferentialReport differential_test(const EnumerationSpec& spec) {
    DifferentialReport report;
    BigraphEnumerator stream(spec);
    const int n = spec.n;
    auto disagree = [&](const Bigraph& g, const std::string& why) {
        report.disagreements.push_back(why + "\t" + one_line_document(g));
    };

    while (auto g = stream.next()) {
        ++report.assignments;
        if (!is_connected(*g)) continue;
        ++report.connected;

        QuasiCartanMatrix a = bigraph_to_matrix(*g);
        const bool pd = is_positive_definite(a);
        const bool says_a = is_A_block_tree(*g);
        const bool says_d = n >= 4 && recognize_D(*g).has_value();

        if (!pd) {
            if (says_a) disagree(*g, "type-A recognizer accepted a non-positive-definite graph");
            if (says_d) disagree(*g, "type-D recognizer accepted a non-positive-definite graph");
            continue;
        }
        ++report.positive_definite;

        ClassificationResult res = inflations_method(a);
        if (!verify_witness(a, res.canonical, res.witness))
            disagree(*g, "inflations witness failed verification");
        const bool oracle_a =
            res.types.size() == 1 && res.types[0] == DynkinType{DynkinFamily::A, n};
        const bool oracle_d =
            res.types.size() == 1 && res.types[0] == DynkinType{DynkinFamily::D, n};
        for (const auto& t : res.types) {
            if (t.family == DynkinFamily::A) ++report.type_a;
            if (t.family == DynkinFamily::D) ++report.type_d;
            if (t.family == DynkinFamily::E) ++report.type_e;
        }
        if (says_a != oracle_a)
            disagree(*g, says_a ? "type-A recognizer accepted but the oracle classified otherwise"
                                : "oracle found type A but the recognizer declined");
        if (says_d != oracle_d)
            disagree(*g, says_d ? "type-D recognizer accepted but the oracle classified otherwise"
                                : "oracle found type D but the recognizer declined");
    }
    return report;
}

}  // namespace qcartan
