#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcartan/core.hpp"
#include "qcartan/flation.hpp"

namespace qcartan {

/// Fixed, portable pseudo-random generator so that seeds behave as golden
/// test vectors across platforms. Bounded draws use plain modulo.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next();
    uint64_t below(uint64_t bound);

private:
    uint64_t state_;
};

struct EnumerationSpec {
    int n = 1;
    bool connected_only = false;
    bool positive_definite_only = false;
};

/// Streams every style assignment (absent / solid / dotted per vertex
/// pair) on n vertices in increasing counter order: the counter is read
/// in base 3 with the pair (1,2) as the least significant digit and pairs
/// ordered lexicographically. Guarded to n <= 7.
class BigraphEnumerator {
public:
    explicit BigraphEnumerator(const EnumerationSpec& spec);

    std::optional<Bigraph> next();

    uint64_t total_assignments() const { return total_; }

private:
    EnumerationSpec spec_;
    std::vector<std::pair<Vertex, Vertex>> pairs_;
    uint64_t index_ = 0;
    uint64_t total_ = 1;
};

struct WalkSpec {
    DynkinType base;
    int steps = 0;
    uint64_t seed = 0;
};

/// Applies `steps` uniformly drawn transformations (any ordered pair
/// s != r; steps on nonadjacent pairs are no-ops) to the standard diagram
/// of the base type. The result keeps the base Dynkin type, and the
/// returned witness carries the standard matrix onto the result.
std::pair<Bigraph, FlationWitness> random_walk(const WalkSpec& spec);

struct DifferentialReport {
    uint64_t assignments = 0;       // style assignments enumerated
    uint64_t connected = 0;         // connected graphs examined
    uint64_t positive_definite = 0;
    uint64_t type_a = 0;
    uint64_t type_d = 0;
    uint64_t type_e = 0;
    std::vector<std::string> disagreements;  // one line per counterexample

    bool ok() const { return disagreements.empty(); }
};

/// Sweeps every connected graph from the enumeration and cross-checks the
/// structural type-A and type-D recognizers against the inflations
/// method; non-positive-definite graphs must be rejected by both
/// recognizers. Returns the disagreements (empty on success).
DifferentialReport differential_test(const EnumerationSpec& spec);

}  // namespace qcartan
