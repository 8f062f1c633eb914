#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow_planar/codec.hpp"
#include "rainbow_planar/colorer.hpp"
#include "rainbow_planar/constructions.hpp"
#include "rainbow_planar/extremal.hpp"
#include "rainbow_planar/lemmas.hpp"
#include "rainbow_planar/rainbow.hpp"

namespace rpt::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = 0;
    int m = 0;
    int k = 5;
    int copies = 1;
    int max_colors = 0;
    int jobs = 1;
    int expect = -1;
    int expect_edges = -1;
    std::uint64_t budget_nodes = 0;
    std::string input;
    std::string graph6;
    std::string from_graph6;
    std::string family;
    std::string base = "octahedron";
    std::string lemma;
    bool validate = false;
    bool no_reductions = false;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    return {std::istreambuf_iterator<char>(in), {}};
}

std::string trim(std::string s) {
    s.erase(s.find_last_not_of(" \t\r\n") + 1);
    s.erase(0, s.find_first_not_of(" \t\r\n"));
    return s;
}

// A graph from --graph6 text or an --input file holding either a colored
// graph document (colors ignored) or a single graph6 line.
Graph read_graph(const Options& o) {
    if (!o.graph6.empty()) {
        return decode_graph6(o.graph6);
    }
    if (o.input.empty()) {
        throw UsageError("a graph is required: --graph6 or --input");
    }
    const std::string text = trim(slurp(o.input));
    if (!text.empty() && text.front() == '{') {
        return decode_colored(text).graph();
    }
    return decode_graph6(text);
}

// The first colored-graph document in a JSON value, so reports whose
// certificate is nested can be fed back in.
const json* find_colored(const json& doc) {
    if (doc.is_object() && doc.contains("n") && doc.contains("edges")) {
        return &doc;
    }
    if (doc.is_structured()) {
        for (const auto& item : doc) {
            if (const json* hit = find_colored(item)) {
                return hit;
            }
        }
    }
    return nullptr;
}

ColoredGraph read_colored(const Options& o, json* meta = nullptr) {
    if (o.input.empty()) {
        throw UsageError("--input is required");
    }
    const json doc = json::parse(slurp(o.input), nullptr, false);
    if (doc.is_discarded()) {
        throw UsageError("input is not valid JSON");
    }
    const json* colored = find_colored(doc);
    if (!colored) {
        throw UsageError("input holds no colored graph");
    }
    if (meta && colored->contains("meta")) {
        *meta = colored->at("meta");
    }
    return colored_from_json(*colored);
}

json header(const std::string& command, json config) {
    return {{"tool", "rainbow-planar"}, {"version", RPT_VERSION}, {"command", command}, {"config", std::move(config)}};
}

struct Result {
    json report;
    int status = kPass;
    std::string summary;
};

Result detect(const Options& o) {
    const ColoredGraph cg = read_colored(o);
    const bool proper = is_proper(cg);
    const auto witness = find_rainbow_path(cg, PathSpec(o.k));
    json report = {{"proper", proper}, {"rainbow_free", !witness}};
    if (witness) {
        report["witness"] = rpt::to_json(*witness);
    }
    const std::string path = "P" + std::to_string(o.k);
    std::string summary = witness ? "rainbow " + path + " found" : "no rainbow " + path;
    if (!proper) {
        summary += "; coloring is not proper";
    }
    return {report, proper && !witness ? kPass : kFail, summary};
}

Result color(const Options& o) {
    const Graph g = read_graph(o);
    const int palette = o.max_colors > 0 ? o.max_colors : std::max(1, static_cast<int>(g.size()));
    const auto outcome = find_coloring(g, o.k, palette, {.max_nodes = o.budget_nodes});
    const int status = outcome.status == SearchStatus::sat     ? kPass
                       : outcome.status == SearchStatus::unsat ? kFail
                                                               : kBudget;
    return {rpt::to_json(outcome, o.k, palette), status, std::string(to_string(outcome.status))};
}

Result lemma(const Options& o) {
    std::vector<std::string> ids = o.lemma == "all" ? lemma_ids() : std::vector<std::string>{o.lemma};
    json reports = json::array();
    bool pass = true;
    std::string summary;
    for (const auto& id : ids) {
        const LemmaReport r = verify_lemma(id);
        reports.push_back(rpt::to_json(r));
        pass = pass && r.pass();
        summary += (summary.empty() ? "" : ", ") + id + " " + (r.pass() ? "PASS" : "FAIL");
    }
    return {ids.size() == 1 ? reports.front() : reports, pass ? kPass : kFail, summary};
}

ConstructionSpec construction_spec(const Options& o) {
    const auto family = parse_family(o.family);
    const auto base = parse_family(o.base);
    if (!family || !base) {
        throw UsageError("unknown family " + (family ? o.base : o.family));
    }
    return {.family = *family, .n = o.n, .copies = o.copies, .base = *base};
}

Result construct(const Options& o, bool k_given) {
    const ConstructionSpec spec = construction_spec(o);
    const ColoredGraph cg = make(spec);
    const int k = k_given ? o.k : declared_k(spec);
    json meta = {{"family", o.family}, {"k", k}};
    json report = {{"graph", rpt::to_json(cg, meta)}};
    if (!o.validate) {
        return {report, kPass, o.family + ": " + std::to_string(cg.size()) + " edges"};
    }
    const ValidationReport v = validate_construction(cg, k, expected_edges(spec));
    report["validation"] = rpt::to_json(v);
    return {report, v.pass() ? kPass : kFail, o.family + " validation " + (v.pass() ? "PASS" : "FAIL")};
}

ExtremalOptions extremal_options(const Options& o) {
    ExtremalOptions options;
    options.jobs = o.jobs;
    options.budget_nodes = o.budget_nodes;
    options.reductions = !o.no_reductions;
    if (!o.from_graph6.empty()) {
        options.source.graph6_file = o.from_graph6;
    }
    return options;
}

Result extremal(const Options& o) {
    const ExtremalReport r = compute_extremal(o.n, o.k, extremal_options(o));
    int status = kPass;
    if (!r.complete) {
        status = kBudget;
    } else if (o.expect >= 0 && r.value != o.expect) {
        status = kFail;
    }
    std::string summary = "ex*(" + std::to_string(o.n) + ", P" + std::to_string(o.k) + ") = " + std::to_string(r.value);
    if (!r.complete) {
        summary += " (incomplete: budget exceeded)";
    }
    return {rpt::to_json(r), status, summary};
}

Result refute_cmd(const Options& o) {
    if (o.graph6.empty() && o.input.empty()) {
        const LevelReport r = refute_level(o.n, o.m, o.k, extremal_options(o), !o.no_reductions);
        const int status = r.budget_exceeded > 0 ? kBudget : r.pass() ? kPass : kFail;
        return {rpt::to_json(r), status,
                "level (" + std::to_string(o.n) + ", " + std::to_string(o.m) + ") " + (r.pass() ? "refuted" : "not refuted")};
    }
    const Graph g = read_graph(o);
    const bool refuted = refute(g, o.k);
    return {{{"graph6", encode_graph6(g)}, {"refuted", refuted}}, refuted ? kPass : kFail,
            refuted ? "refuted" : "colorable"};
}

Result validate(const Options& o, bool k_given) {
    json meta;
    const ColoredGraph cg = read_colored(o, &meta);
    int k = o.k;
    if (!k_given) {
        if (!meta.is_object() || !meta.contains("k")) {
            throw UsageError("-k is required when the certificate does not record it");
        }
        k = meta.at("k").get<int>();
    }
    const int expected = o.expect_edges >= 0 ? o.expect_edges : static_cast<int>(cg.size());
    const ValidationReport v = validate_construction(cg, k, expected);
    json report = rpt::to_json(v);
    report["k"] = k;
    return {report, v.pass() ? kPass : kFail, std::string("certificate ") + (v.pass() ? "valid" : "invalid")};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exhaustive search and certificate checks for rainbow paths in planar graphs", "rainbow-planar"};
    app.require_subcommand(1);
    app.set_version_flag("--version", RPT_VERSION);
    Options o;

    auto add_k = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("-k", o.k, "path order (vertices)")->check(CLI::Range(2, 64));
        if (required) {
            opt->required();
        }
        return opt;
    };
    auto add_search = [&](CLI::App* sub) {
        sub->add_option("--jobs", o.jobs, "worker threads")->envname("RAINBOW_PLANAR_JOBS")->check(CLI::Range(1, 256));
        sub->add_option("--budget-nodes", o.budget_nodes, "per-graph search node cap, 0 for none")
            ->envname("RAINBOW_PLANAR_BUDGET_NODES");
        sub->add_option("--from-graph6", o.from_graph6, "candidate graphs from a graph6 file")
            ->envname("RAINBOW_PLANAR_FROM_GRAPH6");
        sub->add_flag("--no-reductions", o.no_reductions, "disable the reduced-graph filter");
    };

    auto* detect_cmd = app.add_subcommand("detect", "look for a rainbow path in a colored graph");
    add_k(detect_cmd, true);
    detect_cmd->add_option("--input", o.input, "colored graph JSON, - for stdin")->required();

    auto* color_cmd = app.add_subcommand("color", "search for a coloring with no rainbow path");
    add_k(color_cmd, true);
    color_cmd->add_option("--graph6", o.graph6, "graph as graph6 text");
    color_cmd->add_option("--input", o.input, "graph file (graph6 line or colored JSON)");
    color_cmd->add_option("--max-colors", o.max_colors, "palette size, default e(G)")->check(CLI::PositiveNumber);
    color_cmd->add_option("--budget-nodes", o.budget_nodes, "search node cap, 0 for none")
        ->envname("RAINBOW_PLANAR_BUDGET_NODES");

    auto* lemma_cmd = app.add_subcommand("lemma", "verify a coloring-scheme lemma by enumeration");
    lemma_cmd->add_option("id", o.lemma, "bowtie-5.2, fish-5.4, medium-5.5, heavy-5.7 or all")->required();

    auto* construct_cmd = app.add_subcommand("construct", "emit a colored construction");
    construct_cmd->add_option("family", o.family, "construction family")->required();
    construct_cmd->add_option("-n", o.n, "vertex count");
    construct_cmd->add_option("--copies", o.copies, "copies for disjoint-copies")->check(CLI::PositiveNumber);
    construct_cmd->add_option("--base", o.base, "part family for disjoint-copies");
    auto* construct_k = add_k(construct_cmd, false);
    construct_cmd->add_flag("--validate", o.validate, "run the validation gate");

    auto* extremal_cmd = app.add_subcommand("extremal", "compute ex*(n, P_k) exhaustively");
    extremal_cmd->add_option("-n", o.n, "vertex count")->required()->check(CLI::Range(1, 62));
    add_k(extremal_cmd, true)->check(CLI::Range(3, 64));
    add_search(extremal_cmd);
    extremal_cmd->add_option("--expect", o.expect, "expected value; mismatch exits 1");

    auto* refute_cmd_app = app.add_subcommand("refute", "refute a level (n, m) or a single graph");
    refute_cmd_app->add_option("-n", o.n, "vertex count")->check(CLI::Range(1, 62));
    refute_cmd_app->add_option("-m", o.m, "edge count")->check(CLI::NonNegativeNumber);
    add_k(refute_cmd_app, true)->check(CLI::Range(3, 64));
    refute_cmd_app->add_option("--graph6", o.graph6, "single graph as graph6 text");
    refute_cmd_app->add_option("--input", o.input, "single graph file");
    add_search(refute_cmd_app);

    auto* validate_cmd = app.add_subcommand("validate", "re-check a colored certificate");
    validate_cmd->add_option("--input", o.input, "certificate or report JSON, - for stdin")->required();
    auto* validate_k = add_k(validate_cmd, false);
    validate_cmd->add_option("--expect-edges", o.expect_edges, "required edge count");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::CallForVersion&) {
        out << RPT_VERSION << "\n";
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsage;
    }

    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    try {
        Result result;
        json config = {{"k", o.k}};
        if (sub == detect_cmd) {
            config["input"] = o.input;
            result = detect(o);
        } else if (sub == color_cmd) {
            config.update({{"graph6", o.graph6}, {"input", o.input}, {"max_colors", o.max_colors},
                           {"budget_nodes", o.budget_nodes}});
            result = color(o);
        } else if (sub == lemma_cmd) {
            config = {{"id", o.lemma}};
            result = lemma(o);
        } else if (sub == construct_cmd) {
            config = {{"family", o.family}, {"n", o.n}, {"copies", o.copies}, {"base", o.base},
                      {"validate", o.validate}};
            if (construct_k->count() > 0) {
                config["k"] = o.k;
            }
            result = construct(o, construct_k->count() > 0);
        } else if (sub == extremal_cmd || sub == refute_cmd_app) {
            config.update({{"n", o.n}, {"budget_nodes", o.budget_nodes}, {"from_graph6", o.from_graph6},
                           {"reductions", !o.no_reductions}});
            if (sub == extremal_cmd) {
                config["expect"] = o.expect >= 0 ? json(o.expect) : json(nullptr);
                result = extremal(o);
            } else {
                config.update({{"m", o.m}, {"graph6", o.graph6}, {"input", o.input}});
                result = refute_cmd(o);
            }
        } else {
            config = {{"input", o.input}, {"expect_edges", o.expect_edges}};
            if (validate_k->count() > 0) {
                config["k"] = o.k;
            }
            result = validate(o, validate_k->count() > 0);
        }
        json doc = header(name, std::move(config));
        doc["result"] = std::move(result.report);
        doc["exit_status"] = result.status;
        out << doc.dump(2) << "\n";
        err << name << ": " << result.summary << "\n";
        return result.status;
    } catch (const std::exception& e) {
        // Every library error here stems from bad input or flags.
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace rpt::cli
