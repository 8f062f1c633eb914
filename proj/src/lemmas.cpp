#include "rainbow_planar/lemmas.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "rainbow_planar/codec.hpp"
#include "rainbow_planar/colorer.hpp"

namespace rpt {

Vertex Template::vertex(std::string_view label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw LemmaError("template " + id + " has no vertex " + std::string(label));
    }
    return static_cast<Vertex>(it - labels.begin());
}

Template make_template(std::string_view id) {
    if (id == "bow-tie") {
        return {"bow-tie", Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}), {"u", "u1", "u2", "u3", "u4"}};
    }
    if (id == "fish") {
        return {"fish",
                Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 5}, {4, 5}}),
                {"u", "u1", "u2", "u3", "u4", "w"}};
    }
    if (id == "medium-pair" || id == "heavy-pair") {
        const int arms = id == "medium-pair" ? 3 : 4;
        std::vector<Edge> edges;
        std::vector<std::string> labels{"v", "w"};
        for (int i = 0; i < arms; ++i) {
            edges.push_back({0, 2 + i});
            edges.push_back({1, 2 + i});
            labels.push_back("u" + std::to_string(i + 1));
        }
        return {std::string(id), Graph(2 + arms, edges), labels};
    }
    throw LemmaError("unknown template " + std::string(id));
}

std::vector<std::string> template_ids() { return {"bow-tie", "fish", "medium-pair", "heavy-pair"}; }

namespace {

using Flags = std::map<std::string, bool>;

class Colors {
  public:
    Colors(const Template& t, const ColoredGraph& cg) : t_(t), cg_(cg) {}

    Color operator()(std::string_view a, std::string_view b) const {
        return cg_.color_of(t_.vertex(a), t_.vertex(b));
    }
    std::string u(int i) const { return "u" + std::to_string(i); }

  private:
    const Template& t_;
    const ColoredGraph& cg_;
};

Flags bow_tie_flags(const Colors& c) {
    const Color tips = c("u1", "u2");
    bool fresh = true;
    for (int i = 1; i <= 4; ++i) {
        fresh = fresh && c("u", c.u(i)) != tips;
    }
    return {{"tips_equal", tips == c("u3", "u4")}, {"tip_color_fresh", fresh}};
}

Flags fish_flags(const Colors& c) {
    const Color tail = c("u1", "u2");
    return {{"cycle_swap", c("w", "u3") == c("u", "u4") && c("w", "u4") == c("u", "u3")},
            {"tail_from_cycle", tail == c("u", "u3") || tail == c("u", "u4")}};
}

// c(vu_i) = c(wu_j) and c(vu_j) = c(wu_i)
bool swapped(const Colors& c, int i, int j) {
    return c("v", c.u(i)) == c("w", c.u(j)) && c("v", c.u(j)) == c("w", c.u(i));
}

Flags pair_flags(const Colors& c, int arms, int colors) {
    bool some_swap = false;
    for (int i = 1; i <= arms; ++i) {
        for (int j = i + 1; j <= arms; ++j) {
            some_swap = some_swap || swapped(c, i, j);
        }
    }
    std::set<Color> w_side;
    for (int i = 1; i <= arms; ++i) {
        w_side.insert(c("w", c.u(i)));
    }
    bool v_within_w = true;
    for (int i = 1; i <= arms; ++i) {
        v_within_w = v_within_w && w_side.count(c("v", c.u(i)));
    }
    Flags flags{{"colors_" + std::to_string(colors), true}};
    if (arms == 3) {
        flags["four_color_scheme"] = colors == 4 && some_swap;
        flags["three_color_scheme"] = colors == 3 && v_within_w;
    } else {
        const bool pairing = (swapped(c, 1, 2) && swapped(c, 3, 4)) || (swapped(c, 1, 3) && swapped(c, 2, 4)) ||
                             (swapped(c, 1, 4) && swapped(c, 2, 3));
        flags["four_colors"] = colors == 4;
        flags["full_pairing"] = pairing;
    }
    return flags;
}

Flags flags_for(const Template& t, const ColoredGraph& cg) {
    const Colors c(t, cg);
    if (t.id == "bow-tie") {
        return bow_tie_flags(c);
    }
    if (t.id == "fish") {
        return fish_flags(c);
    }
    return pair_flags(c, t.id == "medium-pair" ? 3 : 4, cg.colors_used());
}

struct LemmaDef {
    std::string_view id;
    std::string_view template_id;
    std::function<bool(const Flags&)> holds;
};

const std::array<LemmaDef, 4>& lemmas() {
    static const std::array<LemmaDef, 4> defs{{
        {"bowtie-5.2", "bow-tie", [](const Flags& f) { return f.at("tips_equal") && f.at("tip_color_fresh"); }},
        {"fish-5.4", "fish", [](const Flags& f) { return f.at("cycle_swap") && f.at("tail_from_cycle"); }},
        {"medium-5.5", "medium-pair",
         [](const Flags& f) { return f.at("four_color_scheme") || f.at("three_color_scheme"); }},
        {"heavy-5.7", "heavy-pair", [](const Flags& f) { return f.at("four_colors") && f.at("full_pairing"); }},
    }};
    return defs;
}

}  // namespace

std::vector<SchemeClass> enumerate_schemes(const Template& t, int k) {
    std::set<std::vector<Color>> seen;
    enumerate_colorings(t.graph, k, static_cast<int>(t.graph.size()), [&](const ColoredGraph& cg) {
        seen.insert(cg.normalized().colors());
        return true;
    });
    std::vector<SchemeClass> classes;
    for (const auto& colors : seen) {
        ColoredGraph cg(t.graph, colors);
        classes.push_back({cg, flags_for(t, cg)});
    }
    return classes;
}

std::vector<std::string> lemma_ids() {
    std::vector<std::string> ids;
    for (const auto& def : lemmas()) {
        ids.emplace_back(def.id);
    }
    return ids;
}

LemmaReport verify_lemma(std::string_view id) {
    for (const auto& def : lemmas()) {
        if (def.id != id) {
            continue;
        }
        const Template t = make_template(def.template_id);
        LemmaReport report;
        report.id = def.id;
        report.template_id = t.id;
        report.classes = enumerate_schemes(t, report.k);
        report.oracle_count = oracle_enumerate(t.graph, report.k);
        for (const auto& cls : report.classes) {
            if (!def.holds(cls.flags)) {
                report.counterexample = cls;
                break;
            }
        }
        return report;
    }
    throw LemmaError("unknown lemma " + std::string(id));
}

bool refute(const Graph& g, int k) {
    const int palette = std::max(1, static_cast<int>(g.size()));
    return find_coloring(g, k, palette).status == SearchStatus::unsat;
}

nlohmann::json to_json(const LemmaReport& report) {
    const Template t = make_template(report.template_id);
    auto scheme_json = [&](const SchemeClass& cls) {
        nlohmann::json meta = {{"flags", cls.flags}, {"labels", t.labels}};
        return rpt::to_json(cls.representative, meta);
    };
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& cls : report.classes) {
        reps.push_back(scheme_json(cls));
    }
    nlohmann::json doc = {{"lemma", report.id},
                          {"template", report.template_id},
                          {"k", report.k},
                          {"class_count", report.classes.size()},
                          {"oracle_count", report.oracle_count},
                          {"status", report.pass() ? "PASS" : "FAIL"},
                          {"representatives", std::move(reps)}};
    if (report.counterexample) {
        doc["counterexample"] = scheme_json(*report.counterexample);
    }
    return doc;
}

}  // namespace rpt
