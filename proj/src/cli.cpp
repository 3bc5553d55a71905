#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qcartan/dcycle.hpp"
#include "qcartan/inflations.hpp"
#include "qcartan/io.hpp"
#include "qcartan/oracle.hpp"

namespace qcartan {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::bad_argument, "cannot open '" + path + "'");
    std::ostringstream os;
    os << file.rdbuf();
    return os.str();
}

const char* verify_reason(VerifyResult::Reason reason) {
    using Reason = VerifyResult::Reason;
    switch (reason) {
        case Reason::ok: return "ok";
        case Reason::dimension_mismatch: return "dimension mismatch";
        case Reason::step_invalid: return "step out of range";
        case Reason::pivot_out_of_range: return "step applied outside the unit range";
        case Reason::accumulated_mismatch: return "accumulated matrix does not match the steps";
        case Reason::not_unimodular: return "accumulated matrix is not unimodular";
        case Reason::result_mismatch: return "congruence does not reach the claimed matrix";
    }
    return "unknown";
}

int cmd_classify(const std::string& path, std::ostream& out) {
    InputDocument doc = parse_input(read_file(path));
    ClassificationResult res = classify(doc.as_bigraph());
    for (const auto& t : res.types) out << to_string(t) << "\n";
    return 0;
}

int cmd_witness(const std::string& path, std::ostream& out) {
    InputDocument doc = parse_input(read_file(path));
    ClassificationResult res = classify(doc.as_bigraph());
    out << serialize(WitnessDocument{res.witness, res.canonical});
    return 0;
}

int cmd_verify(const std::string& path, const std::string& witness_path, std::ostream& out,
               std::ostream& err) {
    InputDocument doc = parse_input(read_file(path));
    WitnessDocument w = parse_witness(read_file(witness_path), doc.size());
    VerifyResult result = verify_witness(doc.as_matrix(), w.canonical, w.witness);
    if (!result) {
        err << "verification failed: " << verify_reason(result.reason) << "\n";
        return 1;
    }
    out << "ok\n";
    return 0;
}

int cmd_generate(const std::string& type_text, int steps, uint64_t seed,
                 const std::string& witness_out, std::ostream& out) {
    auto base = parse_dynkin_type(type_text);
    if (!base) throw Error(ErrorCode::invalid_rank, "unknown type '" + type_text + "'");
    auto [graph, forward] = random_walk(WalkSpec{*base, steps, seed});

    // The emitted witness runs from the generated graph back to the
    // standard matrix, so `verify <graph> <witness>` accepts it. Each
    // step is an involution, so the reversed sequence is exact.
    std::vector<FlationStep> reversed(forward.steps.rbegin(), forward.steps.rend());
    auto [canonical, back] = apply_sequence(bigraph_to_matrix(graph), reversed);
    WitnessDocument w{back, canonical};

    out << serialize(graph);
    if (witness_out.empty()) {
        out << "witness\n" << serialize(w);
    } else {
        std::ofstream file(witness_out);
        if (!file) throw Error(ErrorCode::bad_argument, "cannot open '" + witness_out + "'");
        file << serialize(w);
    }
    return 0;
}

int cmd_diff(int n, bool connected, std::ostream& out, std::ostream& err) {
    EnumerationSpec spec;
    spec.n = n;
    spec.connected_only = connected;
    DifferentialReport report = differential_test(spec);
    for (const auto& line : report.disagreements) out << line << "\n";
    err << "examined " << report.connected << " connected graphs ("
        << report.positive_definite << " positive definite), "
        << report.disagreements.size() << " disagreements\n";
    return report.ok() ? 0 : 1;
}

int cmd_export_dot(const std::string& path, std::ostream& out) {
    InputDocument doc = parse_input(read_file(path));
    out << export_dot(doc.as_bigraph());
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream&, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Dynkin type classification of symmetric quasi-Cartan matrices"};
    app.require_subcommand(1);

    std::string file, witness_file, type_text, witness_out;
    int steps = 50, n = 4;
    uint64_t seed = 1;
    bool connected = false;

    auto* classify_cmd = app.add_subcommand("classify", "print the Dynkin type per component");
    classify_cmd->add_option("file", file, "matrix or bigraph document")->required();

    auto* witness_cmd = app.add_subcommand("witness", "print the congruence witness");
    witness_cmd->add_option("file", file, "matrix or bigraph document")->required();

    auto* verify_cmd = app.add_subcommand("verify", "check a witness file against an input");
    verify_cmd->add_option("file", file, "matrix or bigraph document")->required();
    verify_cmd->add_option("witnessfile", witness_file, "witness document")->required();

    auto* generate_cmd = app.add_subcommand("generate", "emit a seeded instance of known type");
    generate_cmd->add_option("--type", type_text, "base type, e.g. A6 or D4")->required();
    generate_cmd->add_option("--steps", steps, "number of walk steps");
    generate_cmd->add_option("--seed", seed, "walk seed");
    generate_cmd->add_option("--witness-out", witness_out, "write the witness to this file");

    auto* diff_cmd = app.add_subcommand("diff", "differential sweep against the inflations method");
    diff_cmd->add_option("--n", n, "vertex count")->required();
    diff_cmd->add_flag("--connected", connected, "enumerate connected graphs only");

    auto* export_cmd = app.add_subcommand("export-dot", "emit the graph in dot format");
    export_cmd->add_option("file", file, "matrix or bigraph document")->required();

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    storage.insert(storage.begin(), "qcartan");
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (classify_cmd->parsed()) return cmd_classify(file, out);
        if (witness_cmd->parsed()) return cmd_witness(file, out);
        if (verify_cmd->parsed()) return cmd_verify(file, witness_file, out, err);
        if (generate_cmd->parsed()) return cmd_generate(type_text, steps, seed, witness_out, out);
        if (diff_cmd->parsed()) return cmd_diff(n, connected, out, err);
        if (export_cmd->parsed()) return cmd_export_dot(file, out);
        err << "no subcommand given\n";
        return 1;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::not_positive_definite ||
            e.code() == ErrorCode::entry_out_of_range) {
            err << e.what() << "\n";
            return 2;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qcartan
