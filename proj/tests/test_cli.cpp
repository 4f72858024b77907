#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gatree/cli.hpp"
#include "gatree/enumerate.hpp"
#include "gatree/limit.hpp"
#include "gatree/stab.hpp"
#include "gatree/trees.hpp"

using namespace gatree;

namespace {

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    REQUIRE(f.good());
    f << content;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

TEST_CASE("euler subcommand") {
    std::string out;
    CHECK(run({"euler", "-s", "P", "-n", "4"}, &out) == 0);
    CHECK(out == "27\n");
    CHECK(run({"euler", "-s", "L", "-n", "5"}, &out) == 0);
    CHECK(out == "120\n");
    CHECK(run({"euler", "-s", "P", "-n", "6"}, &out) == 0);
    CHECK(out == "1390\n");

    std::string err;
    CHECK(run({"euler", "-s", "X", "-n", "2"}, &out, &err) == 2);
    CHECK(run({"euler", "-n", "2"}, &out, &err) == 2);
    CHECK(run({"euler", "-s", "P"}, &out, &err) == 2);
    CHECK(run({"euler", "-s", "P", "-n", "0"}, &out, &err) == 2);
    CHECK(run({"euler", "-s", "P", "-n", "9"}, &out, &err) == 4);
    CHECK(err.find("bound") != std::string::npos);
    CHECK(run({"bogus"}, &out, &err) == 2);
    CHECK(run({}, &out, &err) == 2);
}

TEST_CASE("table matches concatenated euler runs") {
    std::string out;
    CHECK(run({"table", "--max-n", "5"}, &out) == 0);
    CHECK(out ==
          "space,1,2,3,4,5\n"
          "P,1,2,6,27,170\n"
          "L,1,2,6,24,120\n");

    auto lines = split_lines(out);
    REQUIRE(lines.size() == 3);
    for (std::size_t row = 1; row < lines.size(); ++row) {
        std::istringstream ls(lines[row]);
        std::string cell;
        std::getline(ls, cell, ',');
        std::string space = cell;
        int k = 0;
        while (std::getline(ls, cell, ',')) {
            ++k;
            std::string single;
            CHECK(run({"euler", "-s", space, "-n", std::to_string(k)}, &single) == 0);
            CHECK(single == cell + "\n");
        }
        CHECK(k == 5);
    }

    CHECK(run({"table", "--max-n", "0"}, &out) == 2);
    CHECK(run({"table"}, &out) == 2);
}

TEST_CASE("epoly subcommand") {
    std::string out;
    CHECK(run({"epoly", "-s", "P", "-n", "3"}, &out) == 0);
    CHECK(out == total_epoly(StratumType::Space::P, 3).to_string() + "\n");
    CHECK(out.find("q^2") != std::string::npos);
    std::string l3;
    CHECK(run({"epoly", "-s", "L", "-n", "3"}, &l3) == 0);
    CHECK(l3 == out);  // both spaces have E-polynomial q^2 + 4q + 1 at n = 3
}

TEST_CASE("check-universal subcommand") {
    std::string out;
    CHECK(run({"check-universal", "-s", "P", "-n", "3"}, &out) == 0);
    CHECK(out == "27 27 OK\n");
    CHECK(run({"check-universal", "-s", "L", "-n", "4"}, &out) == 0);
    CHECK(out == "120 120 OK\n");
}

TEST_CASE("strata streams match the batch exporters") {
    std::string out;
    CHECK(run({"strata", "-s", "P", "-n", "3"}, &out) == 0);
    CHECK(out == catalog_to_csv(enumerate_types(StratumType::Space::P, 3)));

    std::string out_csv_flag;
    CHECK(run({"strata", "-s", "P", "-n", "3", "--csv"}, &out_csv_flag) == 0);
    CHECK(out_csv_flag == out);

    std::string out_json;
    CHECK(run({"strata", "-s", "L", "-n", "4", "--json"}, &out_json) == 0);
    CHECK(nlohmann::json::parse(out_json) ==
          nlohmann::json::parse(catalog_to_json(enumerate_types(StratumType::Space::L, 4))));

    std::string out_dot;
    CHECK(run({"strata", "-s", "L", "-n", "2", "--dot"}, &out_dot) == 0);
    CHECK(count_occurrences(out_dot, "digraph ") == 3);  // (1,2), (1 | 2), (2 | 1)
    CHECK(count_occurrences(out_dot, "->") == 2);

    std::string again;
    CHECK(run({"strata", "-s", "P", "-n", "4"}, &again) == 0);
    std::string first;
    CHECK(run({"strata", "-s", "P", "-n", "4"}, &first) == 0);
    CHECK(first == again);
}

TEST_CASE("tree export helper") {
    MovingConfiguration cfg;
    cfg.n = 3;
    cfg.marks = {LaurentSeries::zero(), LaurentSeries::one(),
                 LaurentSeries::monomial(1, -1)};
    GaTree tree = stable_limit(cfg);  // two marks together, one escaping
    CHECK(canonical_type(tree).to_string() == "⟨∞: {1,2},{3}⟩");

    CHECK(tree_from_json(export_tree(tree, "json")) == tree);
    std::string dot = export_tree(tree, "dot");
    // Vertices and edges both carry labels (edges show attachment positions).
    CHECK(count_occurrences(dot, "[label=") - count_occurrences(dot, "->") == 3);
    CHECK(count_occurrences(dot, "->") == 2);
    CHECK_THROWS_AS(export_tree(tree, "xml"), std::invalid_argument);
}

TEST_CASE("limit subcommand") {
    std::string out;
    CHECK(run({"limit", "--marks", "0;1"}, &out) == 0);
    nlohmann::json j = nlohmann::json::parse(out);
    CHECK(j.at("type") == "⟨{1,2}⟩");
    CHECK(j.at("dimension") == 1);

    CHECK(run({"limit", "--marks", "0;1;t^-1"}, &out) == 0);
    j = nlohmann::json::parse(out);
    CHECK(j.at("type") == "⟨∞: {1,2},{3}⟩");
    MovingConfiguration cfg;
    cfg.n = 3;
    cfg.marks = {LaurentSeries::zero(), LaurentSeries::one(),
                 LaurentSeries::monomial(1, -1)};
    CHECK(tree_from_json(j.at("tree").dump()) == stable_limit(cfg));

    SUBCASE("multiplicative chart") {
        CHECK(run({"limit", "--marks", "1;2", "--chart", "multiplicative"}, &out) == 0);
        j = nlohmann::json::parse(out);
        CHECK(j.at("type") == "⟨∞: {1},{2}⟩");
    }

    SUBCASE("file input matches flag input byte for byte") {
        std::string flags_out;
        CHECK(run({"limit", "--marks", "0;1;t^-1 + 1"}, &flags_out) == 0);
        const std::string path = "/tmp/gatree_cli_limit_input.json";
        write_file(path, "{\"marks\": [\"0\", \"1\", \"t^-1 + 1\"], \"chart\": \"additive\"}");
        std::string file_out;
        CHECK(run({"limit", "--input", path}, &file_out) == 0);
        CHECK(file_out == flags_out);
    }

    SUBCASE("error paths") {
        std::string err;
        CHECK(run({"limit"}, &out, &err) == 2);
        CHECK(run({"limit", "--marks", "-t^-1"}, &out, &err) == 2);   // at the forbidden point
        CHECK(run({"limit", "--marks", "t^^2"}, &out, &err) == 2);    // malformed series
        CHECK(run({"limit", "--input", "/tmp/gatree_no_such_file.json"}, &out, &err) == 2);
        CHECK(run({"limit", "--marks", "0", "--chart", "polar"}, &out, &err) == 2);
        // Truncation hides the coefficient the window needs: precision failure.
        CHECK(run({"limit", "--marks", "t^-3; t^-3 + t^-1", "--precision", "-2"}, &out, &err) ==
              3);
        CHECK(err.find("precision") != std::string::npos);
    }
}

TEST_CASE("degenerate subcommand") {
    std::string out;
    CHECK(run({"degenerate", "-n", "3", "--stratum", "(1,2|3)"}, &out) == 0);
    auto lines = split_lines(out);
    REQUIRE(lines.size() >= 7);
    CHECK(lines[0] == "# space: L");
    CHECK(lines[1] == "# n: 3");
    CHECK(lines[2] == "# stratum: (1,2 | 3)");
    CHECK(lines[3] == "# seeds: 1,2,3,4,5");
    CHECK(lines[4] == "# exponent_bound: 3");
    CHECK(lines[5] == "# depth: 2");
    CHECK(out.find("⟨∞: {1,2},{3}⟩") != std::string::npos);

    // Body equals the library sample, in catalog order.
    auto attained = degenerate_stratum_sample(StratumType::parse_l(3, "(1,2|3)"),
                                              kDefaultExponentBound, kDefaultPerturbationDepth,
                                              kDefaultSampleSeeds);
    std::vector<std::string> body(lines.begin() + 6, lines.end());
    std::vector<std::string> expect;
    for (const StratumType& s : attained) expect.push_back(s.to_string());
    CHECK(body == expect);

    std::string other;
    CHECK(run({"degenerate", "-n", "3", "--stratum", "(1,2|3)"}, &other) == 0);
    CHECK(other == out);  // deterministic

    CHECK(run({"degenerate", "-n", "2", "--stratum", "(1|2)", "--seeds", "7,8"}, &out) == 0);
    CHECK(split_lines(out)[3] == "# seeds: 7,8");

    std::string err;
    CHECK(run({"degenerate", "-n", "3", "--stratum", "(1,2,3"}, &out, &err) == 2);
    CHECK(run({"degenerate", "-n", "4", "--stratum", "(1,2|3)"}, &out, &err) == 2);
    CHECK(run({"degenerate", "-n", "7", "--stratum", "(1|2|3|4|5|6|7)"}, &out, &err) == 4);
    CHECK(run({"degenerate", "--stratum", "(1|2)"}, &out, &err) == 2);
}

TEST_CASE("insert and forget subcommands") {
    const std::string seed_path = "/tmp/gatree_cli_seed.json";
    FDRTPoint seed = seed_curve(0);
    write_file(seed_path, fdrt_to_json(seed));

    std::string out;
    CHECK(run({"insert", "--input", seed_path, "--location",
               "{\"vertex\": [], \"at\": \"infinity\"}"},
              &out) == 0);
    FDRTPoint grown = insert_mark(seed, CurveLocation::at_infinity());
    CHECK(out == fdrt_to_json(grown) + "\n");

    const std::string grown_path = "/tmp/gatree_cli_grown.json";
    write_file(grown_path, out);
    std::string back;
    CHECK(run({"forget", "--input", grown_path, "--mark", "2"}, &back) == 0);
    CHECK(fdrt_from_json(back) == seed);

    // A chain point passes through the same pipeline.
    const std::string chain_path = "/tmp/gatree_cli_chain.json";
    write_file(chain_path, fdrt_to_json(seed_curve(Rat(1))));
    CHECK(run({"insert", "--input", chain_path, "--location",
               "{\"vertex\": [], \"at\": \"-1\"}"},
              &out) == 0);
    FDRTPoint two = fdrt_from_json(out);
    CHECK(canonical_type(two).to_string() == "(2 | 1)");

    std::string err;
    CHECK(run({"forget", "--input", seed_path, "--mark", "1"}, &out, &err) == 2);  // last mark
    CHECK(run({"forget", "--input", seed_path, "--mark", "0"}, &out, &err) == 2);
    CHECK(run({"insert", "--input", seed_path, "--location", "{\"vertex\": [4], \"at\": 1}"},
              &out, &err) == 2);
    CHECK(run({"insert", "--input", seed_path, "--location", "not json"}, &out, &err) == 2);
    CHECK(run({"insert", "--input", "/tmp/gatree_no_such.json", "--location",
               "{\"vertex\": [], \"at\": 1}"},
              &out, &err) == 2);
}

TEST_CASE("output redirection and jobs flag") {
    const std::string path = "/tmp/gatree_cli_out.txt";
    std::string out;
    CHECK(run({"euler", "-s", "P", "-n", "4", "-o", path}, &out) == 0);
    CHECK(out.empty());
    CHECK(slurp(path) == "27\n");

    std::string seq, par;
    CHECK(run({"strata", "-s", "P", "-n", "4", "--jobs", "1"}, &seq) == 0);
    CHECK(run({"strata", "-s", "P", "-n", "4", "--jobs", "4"}, &par) == 0);
    CHECK(seq == par);

    CHECK(run({"euler", "-s", "P", "-n", "4", "--jobs", "0"}, &out) == 2);

    setenv("GATREE_JOBS", "3", 1);
    CHECK(run({"euler", "-s", "P", "-n", "4"}, &out) == 0);
    CHECK(out == "27\n");
    unsetenv("GATREE_JOBS");
}

TEST_CASE("help exits cleanly") {
    std::string out, err;
    CHECK(run({"--help"}, &out, &err) == 0);
    CHECK((out + err).find("euler") != std::string::npos);
    CHECK(run({"limit", "--help"}, &out, &err) == 0);
}
