#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "qcartan/core.hpp"
#include "qcartan/flation.hpp"

namespace qcartan {

class ParseError : public Error {
public:
    enum class Kind {
        syntax,
        dimension_mismatch,
        diagonal_not_two,
        not_symmetric,
        vertex_out_of_range,
    };

    ParseError(Kind kind, int line, const std::string& message)
        : Error(ErrorCode::bad_argument,
                "line " + std::to_string(line) + ": " + message),
          kind_(kind),
          line_(line) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

/// A parsed input file: either a quasi-Cartan matrix or a bigraph.
struct InputDocument {
    enum class Kind { matrix, bigraph };

    Kind kind;
    std::variant<QuasiCartanMatrix, Bigraph> payload;

    int size() const;
    Bigraph as_bigraph() const;
    QuasiCartanMatrix as_matrix() const;

    friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Grammar: the first effective line is `matrix <n>` or `bigraph <n>`.
/// A matrix body is n lines of n integers; a bigraph body is zero or more
/// lines `<u> <v> solid|dotted` with 1 <= u < v <= n, where duplicate
/// lines accumulate multiplicity. `#` starts a comment, blank lines are
/// skipped, and a line consisting of `witness` ends the document (the
/// remainder is ignored, so combined document+witness streams parse).
InputDocument parse_input(const std::string& text);

std::string serialize(const InputDocument& doc);
std::string serialize(const Bigraph& g);
std::string serialize(const QuasiCartanMatrix& a);

/// Witness file body: one `T <s> <r>` line per step in application
/// order, then `M` followed by the n rows of the accumulated matrix,
/// then `canonical` followed by the n rows of the target matrix.
struct WitnessDocument {
    FlationWitness witness;
    QuasiCartanMatrix canonical;
};

std::string serialize(const WitnessDocument& w);

/// Parses a witness body; a leading input document (as in combined
/// `generate` output) is skipped. The dimension comes from the caller
/// since pure witness files do not repeat it.
WitnessDocument parse_witness(const std::string& text, int n);

/// Graphviz output; dotted edges render dashed.
std::string export_dot(const Bigraph& g);

/// Command-line entry point (subcommands classify, witness, verify,
/// generate, diff, export-dot). Returns the process exit code: 0 on
/// success, 2 for inputs outside the positive definite range, 3 for
/// parse errors, 1 for failed checks and internal errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace qcartan
