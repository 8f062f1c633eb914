#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rainbow_planar/graph.hpp"

namespace rpt {

/// Largest order representable with the one-byte graph6 size field.
inline constexpr int kGraph6MaxOrder = 62;

class Graph6Error : public std::runtime_error {
  public:
    enum class Kind { empty, bad_character, truncated, trailing_data, nonzero_padding, too_large, sparse6, digraph6 };

    Graph6Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// newline are tolerated. Only the short size form (n <= 62) is accepted.
Graph decode_graph6(std::string_view line);

/// Encodes g as graph6 (no header, no newline).
std::string encode_graph6(const Graph& g);

class DocumentError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// {"n": n, "edges": [[u, v, color], ...], "meta": {...}} with edges in
/// canonical order. "meta" is omitted when null.
nlohmann::json to_json(const ColoredGraph& cg, const nlohmann::json& meta = nullptr);
std::string encode_colored(const ColoredGraph& cg, const nlohmann::json& meta = nullptr);

/// Parses a colored-graph document. Throws DocumentError for schema
/// violations and for anything the graph model rejects.
ColoredGraph colored_from_json(const nlohmann::json& doc);
ColoredGraph decode_colored(std::string_view text);

}  // namespace rpt
