#include "qcartan/core.hpp"

#include <algorithm>
#include <cstdlib>

namespace qcartan {

std::string to_string(LineStyle s) {
    return s == LineStyle::solid ? "solid" : "dotted";
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(int n, std::vector<long long> entries) : n_(n), data_(std::move(entries)) {
    if (n < 0 || data_.size() != static_cast<size_t>(n) * n)
        throw Error(ErrorCode::bad_argument, "matrix entry count does not match dimension");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
    return m;
}

size_t IntMatrix::index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw Error(ErrorCode::bad_argument, "matrix index out of range");
    return static_cast<size_t>(i - 1) * n_ + (j - 1);
}

bool IntMatrix::is_symmetric() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

void IntMatrix::mul_elementary_right(int s, int r, long long sigma) {
    if (s == r) throw Error(ErrorCode::bad_argument, "elementary factor needs s != r");
    if (sigma == 0) return;
    for (int i = 1; i <= n_; ++i) at(i, r) += sigma * at(i, s);
}

namespace {

std::vector<BigInt> to_big(const IntMatrix& m) {
    const int n = m.size();
    std::vector<BigInt> w(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) w[static_cast<size_t>(i - 1) * n + (j - 1)] = m.at(i, j);
    return w;
}

}  // namespace

BigInt determinant(const IntMatrix& m) {
    const int n = m.size();
    if (n == 0) return 1;
    auto w = to_big(m);
    auto at = [&](int i, int j) -> BigInt& { return w[static_cast<size_t>(i) * n + j]; };

    // Bareiss elimination with row pivoting; exact integer divisions.
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

LeadingMinors leading_principal_minors(const IntMatrix& m) {
    const int n = m.size();
    LeadingMinors out;
    out.complete = true;
    if (n == 0) return out;
    auto w = to_big(m);
    auto at = [&](int i, int j) -> BigInt& { return w[static_cast<size_t>(i) * n + j]; };

    // Pivots of fraction-free elimination without row exchanges are the
    // leading principal minors; a zero pivot stops the recursion.
    BigInt prev = 1;
    for (int k = 0; k < n; ++k) {
        out.minors.push_back(at(k, k));
        if (at(k, k) == 0) {
            out.complete = (k == n - 1);
            return out;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return out;
}

// ---------------------------------------------------------------------------
// QuasiCartanMatrix

QuasiCartanMatrix::QuasiCartanMatrix(IntMatrix m) : mat_(std::move(m)) {
    if (mat_.size() < 1)
        throw Error(ErrorCode::bad_argument, "quasi-Cartan matrix needs at least one vertex");
    for (int i = 1; i <= mat_.size(); ++i)
        if (mat_.at(i, i) != 2)
            throw Error(ErrorCode::bad_argument, "quasi-Cartan matrix needs 2 on the diagonal");
    if (!mat_.is_symmetric())
        throw Error(ErrorCode::bad_argument, "quasi-Cartan matrix must be symmetric");
}

bool QuasiCartanMatrix::entries_in_unit_range() const {
    for (int i = 1; i <= size(); ++i)
        for (int j = i + 1; j <= size(); ++j)
            if (std::abs(at(i, j)) > 1) return false;
    return true;
}

bool is_positive_definite(const QuasiCartanMatrix& a) {
    auto lm = leading_principal_minors(a.mat());
    for (size_t k = 0; k < lm.minors.size(); ++k)
        if (lm.minors[k] <= 0) return false;
    return lm.complete;
}

// ---------------------------------------------------------------------------
// Bigraph

Bigraph::Bigraph(int n) : n_(n) {
    if (n < 0) throw Error(ErrorCode::bad_argument, "negative vertex count");
}

void Bigraph::check_vertex(Vertex v) const {
    if (v < 1 || v > n_) throw Error(ErrorCode::bad_argument, "vertex out of range");
}

void Bigraph::add_edge(Vertex u, Vertex v, LineStyle style, int count) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(ErrorCode::bad_argument, "loops are not allowed");
    if (count < 0) throw Error(ErrorCode::bad_argument, "negative multiplicity");
    if (count == 0) return;
    auto key = std::minmax(u, v);
    edges_[{key.first, key.second}][style == LineStyle::dotted ? 1 : 0] += count;
}

void Bigraph::remove_edge(Vertex u, Vertex v, LineStyle style, int count) {
    check_vertex(u);
    check_vertex(v);
    if (count < 0) throw Error(ErrorCode::bad_argument, "negative multiplicity");
    if (count == 0) return;
    auto key = std::minmax(u, v);
    auto it = edges_.find({key.first, key.second});
    int idx = style == LineStyle::dotted ? 1 : 0;
    if (it == edges_.end() || it->second[idx] < count)
        throw Error(ErrorCode::bad_argument, "removing more edges than present");
    it->second[idx] -= count;
    if (it->second[0] + it->second[1] == 0) edges_.erase(it);
}

int Bigraph::multiplicity(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    auto key = std::minmax(u, v);
    auto it = edges_.find({key.first, key.second});
    if (it == edges_.end()) return 0;
    return it->second[0] + it->second[1];
}

int Bigraph::multiplicity(Vertex u, Vertex v, LineStyle style) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    auto key = std::minmax(u, v);
    auto it = edges_.find({key.first, key.second});
    if (it == edges_.end()) return 0;
    return it->second[style == LineStyle::dotted ? 1 : 0];
}

std::optional<LineStyle> Bigraph::style_of(Vertex u, Vertex v) const {
    int s = multiplicity(u, v, LineStyle::solid);
    int d = multiplicity(u, v, LineStyle::dotted);
    if (s + d == 0) return std::nullopt;
    if (s + d > 1) throw Error(ErrorCode::bad_argument, "style_of on a multi-edge pair");
    return s == 1 ? LineStyle::solid : LineStyle::dotted;
}

bool Bigraph::is_simple() const {
    for (const auto& [pair, counts] : edges_)
        if (counts[0] + counts[1] > 1) return false;
    return true;
}

int Bigraph::edge_count() const {
    int total = 0;
    for (const auto& [pair, counts] : edges_) total += counts[0] + counts[1];
    return total;
}

std::vector<StyledEdge> Bigraph::edges() const {
    std::vector<StyledEdge> out;
    for (const auto& [pair, counts] : edges_) {
        for (int k = 0; k < counts[0]; ++k) out.push_back({pair.first, pair.second, LineStyle::solid});
        for (int k = 0; k < counts[1]; ++k) out.push_back({pair.first, pair.second, LineStyle::dotted});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> Bigraph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for (const auto& [pair, counts] : edges_) {
        if (counts[0] + counts[1] == 0) continue;
        if (pair.first == v) out.push_back(pair.second);
        else if (pair.second == v) out.push_back(pair.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Bigraph::degree(Vertex v) const {
    check_vertex(v);
    int d = 0;
    for (const auto& [pair, counts] : edges_)
        if (pair.first == v || pair.second == v) d += counts[0] + counts[1];
    return d;
}

Bigraph simplify(const Bigraph& g) {
    Bigraph out(g.vertex_count());
    for (int u = 1; u <= g.vertex_count(); ++u) {
        for (int v = u + 1; v <= g.vertex_count(); ++v) {
            int s = g.multiplicity(u, v, LineStyle::solid);
            int d = g.multiplicity(u, v, LineStyle::dotted);
            int cancel = std::min(s, d);
            out.add_edge(u, v, LineStyle::solid, s - cancel);
            out.add_edge(u, v, LineStyle::dotted, d - cancel);
        }
    }
    return out;
}

Bigraph matrix_to_bigraph(const QuasiCartanMatrix& a) {
    Bigraph g(a.size());
    for (int i = 1; i <= a.size(); ++i) {
        for (int j = i + 1; j <= a.size(); ++j) {
            long long e = a.at(i, j);
            if (e == 0) continue;
            g.add_edge(i, j, e > 0 ? LineStyle::dotted : LineStyle::solid,
                       static_cast<int>(std::llabs(e)));
        }
    }
    return g;
}

QuasiCartanMatrix bigraph_to_matrix(const Bigraph& g) {
    const int n = g.vertex_count();
    IntMatrix m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 2;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            long long e = g.multiplicity(u, v, LineStyle::dotted) -
                          g.multiplicity(u, v, LineStyle::solid);
            m.at(u, v) = e;
            m.at(v, u) = e;
        }
    }
    return QuasiCartanMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// Graph utilities

std::vector<std::vector<Vertex>> connected_components(const Bigraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n + 1, 0);
    int next = 0;
    for (int start = 1; start <= n; ++start) {
        if (comp[start] != 0) continue;
        ++next;
        std::vector<Vertex> stack{start};
        comp[start] = next;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (comp[w] == 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
    }
    std::vector<std::vector<Vertex>> out(next);
    for (int v = 1; v <= n; ++v) out[comp[v] - 1].push_back(v);
    return out;
}

bool is_connected(const Bigraph& g) {
    return connected_components(g).size() <= 1;
}

InducedSubgraph induced_subgraph(const Bigraph& g, const std::vector<Vertex>& vertices) {
    InducedSubgraph out;
    std::vector<Vertex> verts = vertices;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    out.graph = Bigraph(static_cast<int>(verts.size()));
    out.to_global = verts;
    for (size_t i = 0; i < verts.size(); ++i) out.to_local[verts[i]] = static_cast<Vertex>(i) + 1;
    for (const auto& e : g.edges()) {
        auto iu = out.to_local.find(e.u);
        auto iv = out.to_local.find(e.v);
        if (iu != out.to_local.end() && iv != out.to_local.end())
            out.graph.add_edge(iu->second, iv->second, e.style);
    }
    return out;
}

Bigraph relabel(const Bigraph& g, const std::vector<Vertex>& perm) {
    const int n = g.vertex_count();
    if (perm.size() != static_cast<size_t>(n) + 1)
        throw Error(ErrorCode::bad_argument, "relabeling must map every vertex (1-indexed)");
    std::vector<bool> seen(n + 1, false);
    for (int v = 1; v <= n; ++v) {
        if (perm[v] < 1 || perm[v] > n || seen[perm[v]])
            throw Error(ErrorCode::bad_argument, "relabeling is not a bijection");
        seen[perm[v]] = true;
    }
    Bigraph out(n);
    for (const auto& e : g.edges()) out.add_edge(perm[e.u], perm[e.v], e.style);
    return out;
}

// ---------------------------------------------------------------------------
// Dynkin types

bool is_valid_dynkin_type(const DynkinType& t) {
    switch (t.family) {
        case DynkinFamily::A: return t.rank >= 1;
        case DynkinFamily::D: return t.rank >= 4;
        case DynkinFamily::E: return t.rank >= 6 && t.rank <= 8;
    }
    return false;
}

std::string to_string(const DynkinType& t) {
    char f = t.family == DynkinFamily::A ? 'A' : t.family == DynkinFamily::D ? 'D' : 'E';
    return f + std::to_string(t.rank);
}

std::optional<DynkinType> parse_dynkin_type(const std::string& text) {
    if (text.size() < 2) return std::nullopt;
    DynkinFamily family;
    switch (text[0]) {
        case 'A': family = DynkinFamily::A; break;
        case 'D': family = DynkinFamily::D; break;
        case 'E': family = DynkinFamily::E; break;
        default: return std::nullopt;
    }
    int rank = 0;
    for (size_t i = 1; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') return std::nullopt;
        rank = rank * 10 + (text[i] - '0');
        if (rank > 1000000) return std::nullopt;
    }
    DynkinType t{family, rank};
    if (!is_valid_dynkin_type(t)) return std::nullopt;
    return t;
}

}  // namespace qcartan
