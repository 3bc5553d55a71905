#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "qcartan/dcycle.hpp"
#include "qcartan/io.hpp"

using namespace qctest;

namespace {

struct TempFile {
    std::filesystem::path path;

    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("qcartan_test_" + std::to_string(++counter) + "_" +
                std::to_string(::getpid()) + ".txt");
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::istringstream in;
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parsing matrix and bigraph documents") {
    InputDocument m = parse_input("matrix 2\n2 -1\n-1 2\n");
    CHECK(m.kind == InputDocument::Kind::matrix);
    CHECK(m.as_matrix() == matrix(2, {2, -1, -1, 2}));

    InputDocument g = parse_input("bigraph 3\n1 2 dotted\n1 3 solid\n2 3 solid\n");
    CHECK(g.kind == InputDocument::Kind::bigraph);
    CHECK(g.as_bigraph() == graph(3, {{1, 2, 'd'}, {1, 3, 's'}, {2, 3, 's'}}));

    InputDocument commented = parse_input("# heading\nbigraph 2 # size\n\n1 2 solid # an edge\n");
    CHECK(commented.as_bigraph() == graph(2, {{1, 2, 's'}}));

    // duplicate edge lines accumulate multiplicity
    InputDocument multi = parse_input("bigraph 2\n1 2 solid\n1 2 solid\n");
    CHECK(multi.as_bigraph().multiplicity(1, 2) == 2);

    // a witness marker ends the document
    InputDocument trailed = parse_input("bigraph 2\n1 2 solid\nwitness\nT 1 2\n");
    CHECK(trailed.as_bigraph() == graph(2, {{1, 2, 's'}}));
}

TEST_CASE("parse errors carry their kind and line") {
    auto kind_of = [](const std::string& text) {
        try {
            parse_input(text);
        } catch (const ParseError& e) {
            return e.kind();
        }
        throw std::logic_error("expected a parse error");
    };
    CHECK(kind_of("matrix 2\n2 -1\n-1 3\n") == ParseError::Kind::diagonal_not_two);
    CHECK(kind_of("matrix 2\n2 -1\n1 2\n") == ParseError::Kind::not_symmetric);
    CHECK(kind_of("matrix 2\n2 -1 0\n-1 2\n") == ParseError::Kind::dimension_mismatch);
    CHECK(kind_of("matrix 2\n2 -1\n") == ParseError::Kind::dimension_mismatch);
    CHECK(kind_of("bigraph 2\n1 3 solid\n") == ParseError::Kind::vertex_out_of_range);
    CHECK(kind_of("bigraph 2\n2 1 solid\n") == ParseError::Kind::syntax);
    CHECK(kind_of("bigraph 2\n1 2 wavy\n") == ParseError::Kind::syntax);
    CHECK(kind_of("graph 2\n") == ParseError::Kind::syntax);
    CHECK(kind_of("") == ParseError::Kind::syntax);

    try {
        parse_input("bigraph 3\n1 2 solid\n1 2\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("document round trips") {
    InputDocument m{InputDocument::Kind::matrix, bigraph_to_matrix(two_blocks_before())};
    CHECK(parse_input(serialize(m)) == m);

    InputDocument g{InputDocument::Kind::bigraph, two_blocks_before()};
    CHECK(parse_input(serialize(g)) == g);

    std::string text = "bigraph 3\n1 2 dotted\n1 3 solid\n2 3 solid\n";
    CHECK(serialize(parse_input(text)) == text);
}

TEST_CASE("witness document round trip") {
    QuasiCartanMatrix a = bigraph_to_matrix(two_blocks_before());
    ClassificationResult res = classify(two_blocks_before());
    WitnessDocument doc{res.witness, res.canonical};
    std::string text = serialize(doc);
    WitnessDocument back = parse_witness(text, a.size());
    CHECK(back.witness.steps == doc.witness.steps);
    CHECK(back.witness.accumulated == doc.witness.accumulated);
    CHECK(back.canonical == doc.canonical);

    // the same body parses when a document precedes it
    WitnessDocument combined =
        parse_witness(serialize(two_blocks_before()) + "witness\n" + text, a.size());
    CHECK(combined.witness.steps == doc.witness.steps);
}

TEST_CASE("dot export styles dotted edges dashed") {
    std::string dot = export_dot(graph(3, {{1, 2, 's'}, {1, 3, 'd'}}));
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
    CHECK(dot.find("1 -- 3 [style=dashed];") != std::string::npos);
    CHECK(dot.find("3;") != std::string::npos);
}

TEST_CASE("cli classify prints one type per component with the right exit codes") {
    TempFile good(serialize(two_blocks_before()));
    CliRun run = cli({"classify", good.path.string()});
    CHECK(run.exit_code == 0);
    CHECK(run.out == "A6\n");

    TempFile bad("matrix 3\n2 -1 -1\n-1 2 -1\n-1 -1 2\n");
    CliRun rejected = cli({"classify", bad.path.string()});
    CHECK(rejected.exit_code == 2);
    CHECK(rejected.err.find("positive definite") != std::string::npos);

    TempFile wide("matrix 2\n2 -2\n-2 2\n");
    CHECK(cli({"classify", wide.path.string()}).exit_code == 2);

    TempFile broken("matrix 2\n2 -1\n-1 3\n");
    CHECK(cli({"classify", broken.path.string()}).exit_code == 3);

    CHECK(cli({"classify", "/nonexistent/file.txt"}).exit_code == 1);
}

TEST_CASE("cli classify agrees across the two encodings of one form") {
    Bigraph g = graph(4, {{1, 2, 'd'}, {2, 3, 's'}, {3, 4, 's'}, {1, 4, 's'}});
    TempFile as_graph(serialize(g));
    TempFile as_matrix(serialize(bigraph_to_matrix(g)));
    CliRun from_graph = cli({"classify", as_graph.path.string()});
    CliRun from_matrix = cli({"classify", as_matrix.path.string()});
    CHECK(from_graph.exit_code == 0);
    CHECK(from_graph.out == from_matrix.out);
    CHECK(from_graph.out == "D4\n");
}

TEST_CASE("cli witness output passes cli verify") {
    TempFile input(serialize(two_blocks_before()));
    CliRun witness = cli({"witness", input.path.string()});
    REQUIRE(witness.exit_code == 0);
    TempFile witness_file(witness.out);
    CliRun verify = cli({"verify", input.path.string(), witness_file.path.string()});
    CHECK(verify.exit_code == 0);

    // corrupting the target matrix breaks verification
    std::string tampered = witness.out;
    auto pos = tampered.rfind("2");
    tampered.replace(pos, 1, "0");
    TempFile bad(tampered);
    CHECK(cli({"verify", input.path.string(), bad.path.string()}).exit_code != 0);
}

TEST_CASE("cli generate emits a classifiable document with a checkable witness") {
    CliRun gen = cli({"generate", "--type", "D5", "--steps", "30", "--seed", "9"});
    REQUIRE(gen.exit_code == 0);
    TempFile combined(gen.out);
    CliRun classified = cli({"classify", combined.path.string()});
    CHECK(classified.exit_code == 0);
    CHECK(classified.out == "D5\n");
    CHECK(cli({"verify", combined.path.string(), combined.path.string()}).exit_code == 0);

    // the same seed reproduces the same document
    CliRun again = cli({"generate", "--type", "D5", "--steps", "30", "--seed", "9"});
    CHECK(again.out == gen.out);
}

TEST_CASE("cli diff reports a clean sweep at n = 3") {
    CliRun run = cli({"diff", "--n", "3"});
    CHECK(run.exit_code == 0);
    CHECK(run.out.empty());
    CHECK(run.err.find("0 disagreements") != std::string::npos);
}

TEST_CASE("cli export-dot renders both styles") {
    TempFile input("bigraph 3\n1 2 dotted\n1 3 solid\n2 3 solid\n");
    CliRun run = cli({"export-dot", input.path.string()});
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("1 -- 2 [style=dashed];") != std::string::npos);
    CHECK(run.out.find("1 -- 3;") != std::string::npos);
}
