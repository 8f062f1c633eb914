#include "rainbow_planar/codec.hpp"

#include <vector>

namespace rpt {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::size_t bit_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

}  // namespace

Graph decode_graph6(std::string_view line) {
    if (line.starts_with(kHeader)) {
        line.remove_prefix(kHeader.size());
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
        line.remove_suffix(1);
    }
    if (line.empty()) {
        throw Graph6Error(Graph6Error::Kind::empty, "empty graph6 line");
    }
    if (line.front() == ':') {
        throw Graph6Error(Graph6Error::Kind::sparse6, "sparse6 input is not supported");
    }
    if (line.front() == '&') {
        throw Graph6Error(Graph6Error::Kind::digraph6, "digraph6 input is not supported");
    }
    for (char ch : line) {
        if (ch < 63 || ch > 126) {
            throw Graph6Error(Graph6Error::Kind::bad_character,
                              "graph6 character " + std::to_string(static_cast<int>(static_cast<unsigned char>(ch))) +
                                  " outside 63..126");
        }
    }
    int n = line.front() - 63;
    if (n > kGraph6MaxOrder) {
        throw Graph6Error(Graph6Error::Kind::too_large, "graph6 long size form (n > 62) is not supported");
    }
    std::size_t bits = bit_count(n);
    std::size_t bytes = (bits + 5) / 6;
    std::string_view body = line.substr(1);
    if (body.size() < bytes) {
        throw Graph6Error(Graph6Error::Kind::truncated, "graph6 bit vector truncated: expected " +
                                                            std::to_string(bytes) + " bytes, got " +
                                                            std::to_string(body.size()));
    }
    if (body.size() > bytes) {
        throw Graph6Error(Graph6Error::Kind::trailing_data, "graph6 line has trailing data");
    }
    auto bit = [&](std::size_t i) { return ((body[i / 6] - 63) >> (5 - i % 6)) & 1; };
    for (std::size_t i = bits; i < bytes * 6; ++i) {
        if (bit(i)) {
            throw Graph6Error(Graph6Error::Kind::nonzero_padding, "graph6 padding bits are not zero");
        }
    }
    std::vector<Edge> edges;
    std::size_t i = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++i) {
            if (bit(i)) {
                edges.push_back({u, v});
            }
        }
    }
    return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) {
        throw Graph6Error(Graph6Error::Kind::too_large, "graph6 encoding limited to n <= 62");
    }
    std::size_t bits = bit_count(n);
    std::vector<unsigned char> packed((bits + 5) / 6, 0);
    std::size_t i = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++i) {
            if (g.has_edge(u, v)) {
                packed[i / 6] |= static_cast<unsigned char>(1u << (5 - i % 6));
            }
        }
    }
    std::string out;
    out.reserve(packed.size() + 1);
    out.push_back(static_cast<char>(n + 63));
    for (unsigned char b : packed) {
        out.push_back(static_cast<char>(b + 63));
    }
    return out;
}

nlohmann::json to_json(const ColoredGraph& cg, const nlohmann::json& meta) {
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t i = 0; i < cg.size(); ++i) {
        const Edge& e = cg.graph().edge(i);
        edges.push_back({e.u, e.v, cg.color(i)});
    }
    nlohmann::json doc = {{"n", cg.order()}, {"edges", std::move(edges)}};
    if (!meta.is_null()) {
        doc["meta"] = meta;
    }
    return doc;
}

std::string encode_colored(const ColoredGraph& cg, const nlohmann::json& meta) { return to_json(cg, meta).dump(); }

ColoredGraph colored_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw DocumentError("colored graph document must be a JSON object");
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer()) {
        throw DocumentError("field \"n\" missing or not an integer");
    }
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        throw DocumentError("field \"edges\" missing or not an array");
    }
    const long long n = doc["n"].get<long long>();
    if (n < 0 || n > 1'000'000) {
        throw DocumentError("field \"n\" out of range");
    }
    std::vector<ColoredGraph::Triple> triples;
    for (const auto& item : doc["edges"]) {
        if (!item.is_array() || item.size() != 3) {
            throw DocumentError("edge entry must be a [u, v, color] triple: " + item.dump());
        }
        for (const auto& x : item) {
            if (!x.is_number_integer()) {
                throw DocumentError("edge entry has a non-integer field: " + item.dump());
            }
        }
        if (item[2].get<long long>() <= 0) {
            throw DocumentError("color must be a positive integer: " + item.dump());
        }
        triples.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<int>()});
    }
    try {
        return ColoredGraph::from_triples(static_cast<int>(n), triples);
    } catch (const GraphError& e) {
        throw DocumentError(e.what());
    }
}

ColoredGraph decode_colored(std::string_view text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw DocumentError("malformed JSON document");
    }
    return colored_from_json(doc);
}

}  // namespace rpt
