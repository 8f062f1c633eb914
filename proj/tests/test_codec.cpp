#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "rainbow_planar/codec.hpp"

using namespace rpt;
using namespace rpt::testing;

TEST_CASE("graph6 examples") {
    CHECK(decode_graph6("C~") == Graph::complete(4));
    CHECK(decode_graph6("A_") == Graph(2, {{0, 1}}));
    CHECK(decode_graph6("@") == Graph::empty(1));
    CHECK(decode_graph6("?") == Graph::empty(0));
    CHECK(encode_graph6(Graph::complete(4)) == "C~");
    CHECK(encode_graph6(Graph::empty(5)) == "D??");
    CHECK(decode_graph6(">>graph6<<C~\n") == Graph::complete(4));
}

TEST_CASE("graph6 errors") {
    auto kind_of = [](std::string_view s) {
        try {
            decode_graph6(s);
        } catch (const Graph6Error& e) {
            return e.kind();
        }
        FAIL("no error for " << s);
        return Graph6Error::Kind::empty;
    };
    using K = Graph6Error::Kind;
    CHECK(kind_of("") == K::empty);
    CHECK(kind_of("C") == K::truncated);
    CHECK(kind_of("C~~") == K::trailing_data);
    CHECK(kind_of("C\x20") == K::bad_character);
    CHECK(kind_of("C\x7f") == K::bad_character);
    CHECK(kind_of("A`") == K::nonzero_padding);
    CHECK(kind_of("~?@A") == K::too_large);
    CHECK(kind_of(":Fa@x^") == K::sparse6);
    CHECK(kind_of("&C~") == K::digraph6);
    CHECK_THROWS_AS(encode_graph6(Graph::empty(63)), Graph6Error);
}

// Every labeled graph on <= 6 vertices, encoded by networkx
// (tests/oracles/gen_golden.py).
TEST_CASE("graph6 agrees byte for byte with the reference corpus") {
    std::ifstream in(RPT_TEST_DATA "/graph6_labeled_le6.txt");
    REQUIRE(in.good());
    std::string line;
    std::size_t count = 0;
    std::size_t mismatches = 0;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        int n = 0;
        std::uint64_t mask = 0;
        std::string text;
        fields >> n >> mask >> text;
        Graph g = graph_from_mask(n, mask);
        if (encode_graph6(g) != text || !(decode_graph6(text) == g)) {
            ++mismatches;
        }
        ++count;
    }
    CHECK(count == 1 + 2 + 8 + 64 + 1024 + 32768);
    CHECK(mismatches == 0);
}

TEST_CASE("graph6 roundtrip at larger orders") {
    std::mt19937 rng(5);
    for (int n : {7, 13, 30, 62}) {
        for (int trial = 0; trial < 20; ++trial) {
            Graph g = random_graph(rng, n, 0.3);
            std::string text = encode_graph6(g);
            CHECK(decode_graph6(text) == g);
            CHECK(encode_graph6(decode_graph6(text)) == text);
        }
    }
}

TEST_CASE("colored graph documents") {
    auto g5 = colored_g5();
    std::string text = encode_colored(g5, {{"name", "g5"}});
    CHECK(decode_colored(text) == g5);
    CHECK(nlohmann::json::parse(text)["meta"]["name"] == "g5");
    CHECK(text == R"({"edges":[[0,1,1],[0,2,2],[0,3,3],[1,4,4],[2,3,4],[2,4,3],[3,4,2]],"meta":{"name":"g5"},"n":5})");

    CHECK_THROWS_AS(decode_colored(R"({"n":2,"edges":[[0,1,0]]})"), DocumentError);
    CHECK_THROWS_AS(decode_colored(R"({"n":3,"edges":[[2,2,1]]})"), DocumentError);
    CHECK_THROWS_AS(decode_colored(R"({"n":3,"edges":[[0,1]]})"), DocumentError);
    CHECK_THROWS_AS(decode_colored(R"({"n":3,"edges":[[0,1,1],[1,0,2]]})"), DocumentError);
    CHECK_THROWS_AS(decode_colored(R"({"n":3,"edges":[[0,5,1]]})"), DocumentError);
    CHECK_THROWS_AS(decode_colored(R"({"edges":[]})"), DocumentError);
    CHECK_THROWS_AS(decode_colored(R"({"n":3,"edges":)"), DocumentError);
    CHECK_THROWS_AS(decode_colored(R"([1,2])"), DocumentError);
}

TEST_CASE("colored documents roundtrip") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        auto cg = random_coloring(rng, random_graph(rng, 8, 0.4), 6);
        CHECK(decode_colored(encode_colored(cg)) == cg);
    }
}
