#include <doctest.h>

#include "preisach/io.hpp"
#include "test_util.hpp"

using namespace preisach;
using preisach::test::cfg;
using preisach::test::perm;

TEST_CASE("parse_permutation") {
    CHECK(parse_permutation("2,3,1") == perm({2, 3, 1}));
    CHECK(parse_permutation("2 4 3 5 1") == perm({2, 4, 3, 5, 1}));
    CHECK(parse_permutation(" (2, 4,3 ,5,1) ") == perm({2, 4, 3, 5, 1}));
    CHECK_THROWS_WITH_AS(parse_permutation("2,2,1"), "duplicate value 2", Error);
    CHECK_THROWS_WITH_AS(parse_permutation("2,x,1"), "non-integer token 'x'", Error);
    CHECK_THROWS_AS(parse_permutation(""), Error);
    CHECK_THROWS_AS(parse_permutation("1.5,1"), Error);
}

TEST_CASE("parse_config") {
    CHECK(parse_config("---", 3) == SpinConfig::alpha(3));
    CHECK(parse_config("+-+", 3) == SpinConfig(std::vector<std::int8_t>{1, -1, 1}));
    CHECK_THROWS_WITH_AS(parse_config("+0-", 3), "illegal character '0'", Error);
    CHECK_THROWS_WITH_AS(parse_config("+-", 3), "wrong length: expected 3 spins, got 2", Error);
}

TEST_CASE("parse_subsequence") {
    const auto rho = perm({2, 4, 3, 5, 1});
    CHECK(parse_subsequence("2,4,5", rho).values() == std::vector<std::size_t>{2, 4, 5});
    CHECK(parse_subsequence("", rho).empty());
    CHECK(parse_subsequence("()", rho).empty());
    CHECK_THROWS_AS(parse_subsequence("5,4", rho), Error);
}

TEST_CASE("export_dot") {
    CHECK(export_dot(build_bfs(perm({1}))) ==
          "digraph preisach {\n"
          "  \"-\";\n"
          "  \"+\";\n"
          "  \"-\" -> \"+\" [color=black, label=1];\n"
          "  \"+\" -> \"-\" [color=red, label=1];\n"
          "}\n");

    const auto dot = export_dot(build_bfs(perm({2, 3, 1})));
    auto count = [&dot](std::string_view needle) {
        std::size_t c = 0;
        for (auto pos = dot.find(needle); pos != std::string::npos; pos = dot.find(needle, pos + 1)) ++c;
        return c;
    };
    CHECK(count("->") == 8);
    CHECK(count("color=black") == 4);
    CHECK(count("color=red") == 4);
    CHECK(count(";\n") == 13);
    CHECK(dot == export_dot(build_forward(perm({2, 3, 1}))));
}

TEST_CASE("export_json") {
    CHECK(export_json(build_bfs(perm({1}))) ==
          R"({"n":1,"perm":[1],"vertices":["-","+"],"edges":[{"from":"-","to":"+","kind":"U","label":1},)"
          R"({"from":"+","to":"-","kind":"D","label":1}]})");

    const auto g = build_bfs(perm({2, 4, 3, 1}));
    const auto text = export_json(g);
    CHECK(load_json(text) == g);
    CHECK(export_json(load_json(text)) == text);
    CHECK(export_json(g) == text);
}

TEST_CASE("load_json rejects malformed graphs") {
    CHECK_THROWS_AS(load_json("not json"), Error);
    CHECK_THROWS_AS(load_json(R"({"n":2,"perm":[1],"vertices":[],"edges":[]})"), Error);
    // alpha lacks its U-edge
    CHECK_THROWS_AS(load_json(R"({"n":1,"perm":[1],"vertices":["-","+"],)"
                              R"("edges":[{"from":"+","to":"-","kind":"D","label":1}]})"),
                    Error);
    CHECK_THROWS_AS(load_json(R"({"n":1,"perm":[1],"vertices":["-","+"],)"
                              R"("edges":[{"from":"-","to":"+","kind":"X","label":1},)"
                              R"({"from":"+","to":"-","kind":"D","label":1}]})"),
                    Error);
}
