#include "qcartan/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace qcartan {

namespace {

struct Line {
    int number;
    std::string text;
    std::vector<std::string> tokens;
};

std::vector<Line> effective_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream is(text);
    std::string raw;
    int number = 0;
    while (std::getline(is, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        Line line{number, raw, {}};
        std::istringstream ls(raw);
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

long long parse_integer(const std::string& tok, int line) {
    size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(ParseError::Kind::syntax, line, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(ParseError::Kind::syntax, line, "expected an integer, got '" + tok + "'");
    return value;
}

}  // namespace

int InputDocument::size() const {
    if (kind == Kind::matrix) return std::get<QuasiCartanMatrix>(payload).size();
    return std::get<Bigraph>(payload).vertex_count();
}

Bigraph InputDocument::as_bigraph() const {
    if (kind == Kind::bigraph) return std::get<Bigraph>(payload);
    return matrix_to_bigraph(std::get<QuasiCartanMatrix>(payload));
}

QuasiCartanMatrix InputDocument::as_matrix() const {
    if (kind == Kind::matrix) return std::get<QuasiCartanMatrix>(payload);
    return bigraph_to_matrix(std::get<Bigraph>(payload));
}

InputDocument parse_input(const std::string& text) {
    auto lines = effective_lines(text);
    if (lines.empty())
        throw ParseError(ParseError::Kind::syntax, 1, "empty document");

    const Line& head = lines.front();
    if (head.tokens.size() != 2 || (head.tokens[0] != "matrix" && head.tokens[0] != "bigraph"))
        throw ParseError(ParseError::Kind::syntax, head.number,
                         "expected 'matrix <n>' or 'bigraph <n>'");
    long long n = parse_integer(head.tokens[1], head.number);
    if (n < 1 || n > 1000)
        throw ParseError(ParseError::Kind::dimension_mismatch, head.number,
                         "vertex count out of range");

    if (head.tokens[0] == "matrix") {
        std::vector<long long> entries;
        size_t row = 0;
        size_t idx = 1;
        for (; row < static_cast<size_t>(n); ++row, ++idx) {
            if (idx >= lines.size())
                throw ParseError(ParseError::Kind::dimension_mismatch, head.number,
                                 "matrix body has too few rows");
            const Line& line = lines[idx];
            if (line.tokens.size() != static_cast<size_t>(n))
                throw ParseError(ParseError::Kind::dimension_mismatch, line.number,
                                 "expected " + std::to_string(n) + " entries in the row");
            for (const auto& tok : line.tokens) entries.push_back(parse_integer(tok, line.number));
        }
        IntMatrix m(static_cast<int>(n), std::move(entries));
        for (int i = 1; i <= m.size(); ++i)
            if (m.at(i, i) != 2)
                throw ParseError(ParseError::Kind::diagonal_not_two, head.number,
                                 "diagonal entry at " + std::to_string(i) + " is not 2");
        if (!m.is_symmetric())
            throw ParseError(ParseError::Kind::not_symmetric, head.number,
                             "matrix is not symmetric");
        return InputDocument{InputDocument::Kind::matrix, QuasiCartanMatrix(std::move(m))};
    }

    Bigraph g(static_cast<int>(n));
    for (size_t idx = 1; idx < lines.size(); ++idx) {
        const Line& line = lines[idx];
        if (line.tokens.size() == 1 && line.tokens[0] == "witness") break;
        if (line.tokens.size() != 3)
            throw ParseError(ParseError::Kind::syntax, line.number,
                             "expected '<u> <v> solid|dotted'");
        long long u = parse_integer(line.tokens[0], line.number);
        long long v = parse_integer(line.tokens[1], line.number);
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(ParseError::Kind::vertex_out_of_range, line.number,
                             "edge endpoint out of range");
        if (u >= v)
            throw ParseError(ParseError::Kind::syntax, line.number,
                             "edges must be written with u < v");
        LineStyle style;
        if (line.tokens[2] == "solid")
            style = LineStyle::solid;
        else if (line.tokens[2] == "dotted")
            style = LineStyle::dotted;
        else
            throw ParseError(ParseError::Kind::syntax, line.number,
                             "unknown line style '" + line.tokens[2] + "'");
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), style);
    }
    return InputDocument{InputDocument::Kind::bigraph, std::move(g)};
}

std::string serialize(const Bigraph& g) {
    std::ostringstream os;
    os << "bigraph " << g.vertex_count() << "\n";
    for (const auto& e : g.edges()) os << e.u << " " << e.v << " " << to_string(e.style) << "\n";
    return os.str();
}

std::string serialize(const QuasiCartanMatrix& a) {
    std::ostringstream os;
    os << "matrix " << a.size() << "\n";
    for (int i = 1; i <= a.size(); ++i) {
        for (int j = 1; j <= a.size(); ++j) os << (j > 1 ? " " : "") << a.at(i, j);
        os << "\n";
    }
    return os.str();
}

std::string serialize(const InputDocument& doc) {
    if (doc.kind == InputDocument::Kind::matrix)
        return serialize(std::get<QuasiCartanMatrix>(doc.payload));
    return serialize(std::get<Bigraph>(doc.payload));
}

std::string serialize(const WitnessDocument& w) {
    std::ostringstream os;
    for (const auto& step : w.witness.steps) os << "T " << step.s << " " << step.r << "\n";
    os << "M\n";
    const IntMatrix& m = w.witness.accumulated;
    for (int i = 1; i <= m.size(); ++i) {
        for (int j = 1; j <= m.size(); ++j) os << (j > 1 ? " " : "") << m.at(i, j);
        os << "\n";
    }
    os << "canonical\n";
    const QuasiCartanMatrix& c = w.canonical;
    for (int i = 1; i <= c.size(); ++i) {
        for (int j = 1; j <= c.size(); ++j) os << (j > 1 ? " " : "") << c.at(i, j);
        os << "\n";
    }
    return os.str();
}

WitnessDocument parse_witness(const std::string& text, int n) {
    auto lines = effective_lines(text);
    size_t idx = 0;

    // Skip a leading input document, if any.
    if (idx < lines.size() && lines[idx].tokens.size() == 2 &&
        (lines[idx].tokens[0] == "matrix" || lines[idx].tokens[0] == "bigraph")) {
        bool matrix = lines[idx].tokens[0] == "matrix";
        long long k = parse_integer(lines[idx].tokens[1], lines[idx].number);
        ++idx;
        if (matrix) {
            idx += static_cast<size_t>(k);
            if (idx > lines.size())
                throw ParseError(ParseError::Kind::dimension_mismatch, lines.back().number,
                                 "truncated matrix body before witness");
        } else {
            while (idx < lines.size() && lines[idx].tokens.size() == 3) ++idx;
        }
    }
    if (idx < lines.size() && lines[idx].tokens.size() == 1 && lines[idx].tokens[0] == "witness")
        ++idx;

    FlationWitness w = FlationWitness::identity(n);
    while (idx < lines.size() && lines[idx].tokens[0] == "T") {
        const Line& line = lines[idx];
        if (line.tokens.size() != 3)
            throw ParseError(ParseError::Kind::syntax, line.number, "expected 'T <s> <r>'");
        w.steps.push_back({static_cast<Vertex>(parse_integer(line.tokens[1], line.number)),
                           static_cast<Vertex>(parse_integer(line.tokens[2], line.number))});
        ++idx;
    }

    auto read_matrix = [&](const std::string& marker) {
        if (idx >= lines.size() || lines[idx].tokens.size() != 1 ||
            lines[idx].tokens[0] != marker)
            throw ParseError(ParseError::Kind::syntax,
                             idx < lines.size() ? lines[idx].number : (lines.empty() ? 1 : lines.back().number),
                             "expected '" + marker + "'");
        ++idx;
        std::vector<long long> entries;
        for (int row = 0; row < n; ++row, ++idx) {
            if (idx >= lines.size())
                throw ParseError(ParseError::Kind::dimension_mismatch,
                                 lines.empty() ? 1 : lines.back().number,
                                 "truncated matrix after '" + marker + "'");
            const Line& line = lines[idx];
            if (line.tokens.size() != static_cast<size_t>(n))
                throw ParseError(ParseError::Kind::dimension_mismatch, line.number,
                                 "expected " + std::to_string(n) + " entries in the row");
            for (const auto& tok : line.tokens) entries.push_back(parse_integer(tok, line.number));
        }
        return IntMatrix(n, std::move(entries));
    };

    w.accumulated = read_matrix("M");
    IntMatrix canonical = read_matrix("canonical");
    try {
        return WitnessDocument{std::move(w), QuasiCartanMatrix(std::move(canonical))};
    } catch (const Error& e) {
        throw ParseError(ParseError::Kind::syntax, lines.back().number,
                         std::string("canonical matrix: ") + e.what());
    }
}

std::string export_dot(const Bigraph& g) {
    std::ostringstream os;
    os << "graph bigraph {\n";
    for (Vertex v = 1; v <= g.vertex_count(); ++v) os << "  " << v << ";\n";
    for (const auto& e : g.edges()) {
        os << "  " << e.u << " -- " << e.v;
        if (e.style == LineStyle::dotted) os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace qcartan
