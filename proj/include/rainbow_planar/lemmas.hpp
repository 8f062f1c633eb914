#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rainbow_planar/graph.hpp"

namespace rpt {

class LemmaError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Fixed labeled graph; labels[v] is the role name of vertex v.
struct Template {
    std::string id;
    Graph graph;
    std::vector<std::string> labels;

    Vertex vertex(std::string_view label) const;
};

/// bow-tie, fish, medium-pair or heavy-pair.
Template make_template(std::string_view id);
std::vector<std::string> template_ids();

/// One color-renaming class of valid colorings, with the clause flags of
/// every lemma predicate stated on its template.
struct SchemeClass {
    ColoredGraph representative;
    std::map<std::string, bool> flags;
};

/// All color-renaming classes of proper colorings of t.graph without a
/// rainbow path on k vertices, normalized and sorted.
std::vector<SchemeClass> enumerate_schemes(const Template& t, int k);

struct LemmaReport {
    std::string id;
    std::string template_id;
    int k = 5;
    std::vector<SchemeClass> classes;
    std::uint64_t oracle_count = 0;
    std::optional<SchemeClass> counterexample;

    bool pass() const { return !counterexample && classes.size() == oracle_count; }
};

/// bowtie-5.2, fish-5.4, medium-5.5 or heavy-5.7.
std::vector<std::string> lemma_ids();
LemmaReport verify_lemma(std::string_view id);

/// True iff g has no proper coloring free of rainbow P_k.
bool refute(const Graph& g, int k);

nlohmann::json to_json(const LemmaReport& report);

}  // namespace rpt
