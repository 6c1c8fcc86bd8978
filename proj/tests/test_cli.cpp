#include <doctest.h>

#include <fstream>

#include "cli_runner.hpp"
#include "nilcoh/catalog.hpp"

using namespace nilcoh;

TEST_CASE("hodge subcommand prints the iwasawa diamond") {
    auto res = cli::run({"hodge", "--input", "iwasawa", "--format", "text"});
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("hodge diamond of iwasawa") != std::string::npos);
    CHECK(res.output.find("1 2 2 1") != std::string::npos); // row p = 0
    CHECK(res.output.find("3 6 6 3") != std::string::npos); // row p = 1
}

TEST_CASE("hodge single bidegree") {
    auto res = cli::run({"hodge", "--input", "iwasawa", "--p", "1", "--q", "1",
                         "--format", "text"});
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("h^{1,1}(iwasawa) = 6") != std::string::npos);
}

TEST_CASE("validate rejects a jacobi violation with exit 1") {
    std::string path = "/tmp/nilcoh_bad_doc.json";
    {
        std::ofstream out(path);
        out << R"({
  "schema": 1,
  "name": "bad",
  "dimension": 6,
  "structure_equations": [
    {"form": 5, "terms": [{"i": 1, "j": 3, "c": "1"}, {"i": 2, "j": 4, "c": "-1"}]},
    {"form": 6, "terms": [{"i": 1, "j": 4, "c": "1"}, {"i": 2, "j": 3, "c": "1"}, {"i": 1, "j": 5, "c": "1"}]}
  ],
  "complex_structure": {"holomorphic_span": [
    ["1","1*i","0","0","0","0"],
    ["0","0","1","1*i","0","0"],
    ["0","0","0","0","1","1*i"]
  ]}
})";
    }
    auto res = cli::run({"validate", "--input", path});
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("error: validation:") != std::string::npos);
    CHECK(res.output.find("Jacobi") != std::string::npos);
}

TEST_CASE("validate accepts every catalog entry") {
    for (const auto& name : catalog_names()) {
        auto res = cli::run({"validate", "--input", name});
        CAPTURE(name);
        CHECK(res.exit_code == 0);
        CHECK(res.output.find("ok: " + name) != std::string::npos);
    }
}

TEST_CASE("scan csv marks exactly the sqrt2 row non-rational") {
    auto res = cli::run({"scan", "--input", "iwasawa", "--family", "default", "--t", "0",
                         "--t", "1+1*i", "--t", "s2", "--format", "csv"});
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("t,status,integrable,rational") != std::string::npos);
    CHECK(res.output.find("s2,ok,true,false") != std::string::npos);
    CHECK(res.output.find("1+1*i,ok,true,true") != std::string::npos);
    CHECK(res.output.find("0,ok,true,true") != std::string::npos);
}

TEST_CASE("unknown input is a validation error") {
    auto res = cli::run({"hodge", "--input", "no-such-thing"});
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("error: validation:") != std::string::npos);
}

TEST_CASE("series, basis, betti, classify, spectral run on the catalog") {
    for (const auto& sub : {"series", "basis", "betti", "classify", "spectral"}) {
        auto res = cli::run({sub, "--input", "kodaira-thurston"});
        CAPTURE(sub);
        CHECK(res.exit_code == 0);
    }
}

TEST_CASE("json output parses and carries the schema") {
    for (const auto& sub : {"hodge", "series", "basis", "betti", "classify", "spectral"}) {
        auto res = cli::run({sub, "--input", "iwasawa", "--format", "json"});
        CAPTURE(sub);
        CHECK(res.exit_code == 0);
        CHECK(res.output.find("\"schema\": 1") != std::string::npos);
    }
}

TEST_CASE("check --all passes on the catalog") {
    auto res = cli::run({"check", "--all"});
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("check: all passed") != std::string::npos);
}

TEST_CASE("csv is limited to scan and diamond tables") {
    auto res = cli::run({"betti", "--input", "iwasawa", "--format", "csv"});
    CHECK(res.exit_code == 1);
}

TEST_CASE("scan emits json with constancy in parameter values") {
    auto res = cli::run({"scan", "--input", "iwasawa", "--family", "default", "--t", "1",
                         "--format", "json"});
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"kind\": \"scan\"") != std::string::npos);
    CHECK(res.output.find("\"rule\": \"omega3 -> omega3 + t*conj(omega1)\"") !=
          std::string::npos);
    CHECK(res.output.find("\"constancy\"") != std::string::npos);
}

TEST_CASE("missing required options exit 1 with a validation line") {
    auto res = cli::run({"hodge"});
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("error: validation:") != std::string::npos);
    auto help = cli::run({"--help"});
    CHECK(help.exit_code == 0);
}
