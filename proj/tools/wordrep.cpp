// wordrep: generators, transforms, deciders, and verification suites for
// word-representable graphs, composable over the edge-list text format.
//
// Exit codes: 0 success / representable / all checks pass
//             1 non-representable / failed checks
//             2 usage or malformed input
//             3 transform exceeded its vertex budget
//             4 decision unknown (budget exhausted)
//             5 checks skipped for budget (none failed)

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wordrep/decide.hpp"
#include "wordrep/generators.hpp"
#include "wordrep/graph_io.hpp"
#include "wordrep/line_graph.hpp"
#include "wordrep/subgraph.hpp"
#include "wordrep/suites.hpp"
#include "wordrep/word.hpp"

namespace {

using namespace wordrep;

constexpr int kExitOk = 0;
constexpr int kExitNonRepresentable = 1;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;
constexpr int kExitUnknown = 4;
constexpr int kExitSkipped = 5;

std::uint64_t env_budget(const char* name, std::uint64_t fallback) {
    const char* value = std::getenv(name);
    if (!value || !*value) return fallback;
    try {
        return std::stoull(value);
    } catch (const std::exception&) {
        return fallback;
    }
}

std::string read_input(const std::string& source) {
    if (source == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(source, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + source);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& sink, const std::string& text) {
    if (sink == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(sink, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + sink);
    out << text;
}

std::string graph_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    if (g.has_labels()) {
        nlohmann::ordered_json labels = nlohmann::ordered_json::array();
        for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
        j["labels"] = labels;
    } else {
        j["labels"] = nullptr;
    }
    return j.dump(2) + "\n";
}

Graph make_family(const std::string& family, const std::vector<int>& params) {
    auto need = [&](size_t count) {
        if (params.size() != count)
            throw CLI::ValidationError("gen", "family '" + family + "' takes " +
                                                  std::to_string(count) + " parameter(s)");
    };
    if (family == "cycle") {
        need(1);
        return cycle(params[0]);
    }
    if (family == "path") {
        need(1);
        return path(params[0]);
    }
    if (family == "clique") {
        need(1);
        return clique(params[0]);
    }
    if (family == "star") {
        need(1);
        return star(params[0]);
    }
    if (family == "claw") {
        need(0);
        return claw();
    }
    if (family == "wheel") {
        need(1);
        return wheel(params[0]);
    }
    if (family == "petersen") {
        need(0);
        return petersen();
    }
    if (family == "minimal-nonrep") {
        need(1);
        return minimal_nonrep(params[0]);
    }
    if (family == "fig6") {
        need(1);
        return fig6_graph(params[0]);
    }
    throw CLI::ValidationError("gen", "unknown family '" + family + "'");
}

struct GenArgs {
    std::string family;
    std::vector<int> params;
    std::string output = "-";
    bool json = false;
};

struct TransformArgs {
    std::string input = "-";
    std::string output = "-";
    int repetitions = 1;
    int vertex_budget = kDefaultVertexBudget;
    bool json = false;
};

struct AltgraphArgs {
    std::string word;
    std::string output = "-";
    bool json = false;
};

struct DecideArgs {
    std::string input = "-";
    std::string output = "-";
    std::string strategy = "auto";
    int k_max = 3;
    std::uint64_t orientation_budget = 0;
    std::uint64_t word_budget = 0;
    bool json = false;
};

struct VerifyArgs {
    std::string suite = "all";
    std::string output = "-";
    std::uint64_t orientation_budget = 0;
    std::uint64_t word_budget = 0;
    std::uint64_t embed_budget = 0;
    int vertex_budget = kDefaultVertexBudget;
    std::uint64_t trials = 10'000;
    std::uint64_t seed = 20240515;
    int threads = 0;
    bool json = false;
};

int run_gen(const GenArgs& args) {
    Graph g = make_family(args.family, args.params);
    write_output(args.output, args.json ? graph_json(g) : write_edge_list(g));
    return kExitOk;
}

int run_linegraph(const TransformArgs& args) {
    Graph g = parse_edge_list(read_input(args.input));
    Graph result = iterate_line_graph(g, args.repetitions, args.vertex_budget);
    write_output(args.output, args.json ? graph_json(result) : write_edge_list(result));
    return kExitOk;
}

int run_altgraph(const AltgraphArgs& args) {
    std::string text = args.word.empty() || args.word == "-" ? read_input("-") : args.word;
    Word w = parse_word(text);
    Graph g = alternating_graph(w);
    write_output(args.output, args.json ? graph_json(g) : write_edge_list(g));
    return kExitOk;
}

int run_decide(const DecideArgs& args) {
    Graph g = parse_edge_list(read_input(args.input));
    DecideOptions options;
    auto strategy = strategy_from_string(args.strategy);
    if (!strategy) throw CLI::ValidationError("decide", "unknown strategy '" + args.strategy + "'");
    options.strategy = *strategy;
    options.k_max = args.k_max;
    options.orientation_budget = args.orientation_budget;
    options.word_budget = args.word_budget;
    Certificate cert = decide_representable(g, options);
    write_output(args.output, args.json ? certificate_json(cert) + "\n" : certificate_text(cert));
    switch (cert.verdict) {
        case Verdict::representable: return kExitOk;
        case Verdict::non_representable: return kExitNonRepresentable;
        case Verdict::unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

int run_verify(const VerifyArgs& args) {
    SuiteOptions options;
    options.orientation_budget = args.orientation_budget;
    options.word_budget = args.word_budget;
    options.embed_budget = args.embed_budget;
    options.vertex_budget = args.vertex_budget;
    options.trials = args.trials;
    options.seed = args.seed;
    options.threads = args.threads;

    std::vector<std::string> names;
    if (args.suite == "all") {
        names = default_suite_names();
    } else {
        names = {args.suite};
        bool known = false;
        for (const auto& n : all_suite_names()) known = known || n == args.suite;
        if (!known) throw CLI::ValidationError("verify", "unknown suite '" + args.suite + "'");
    }

    bool failed = false, skipped = false;
    std::string out;
    nlohmann::ordered_json jreports = nlohmann::ordered_json::array();
    for (const auto& name : names) {
        SuiteReport report = run_suite(name, options);
        failed = failed || report.any_failed();
        skipped = skipped || report.any_skipped();
        if (args.json)
            jreports.push_back(nlohmann::ordered_json::parse(suite_report_json(report)));
        else
            out += suite_report_text(report) + "\n";
    }
    write_output(args.output, args.json ? jreports.dump(2) + "\n" : out);
    if (failed) return kExitFailure;
    if (skipped) return kExitSkipped;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"word-representable graph toolkit"};
    app.require_subcommand(1);
    app.footer(
        "Exit codes:\n"
        "  0  success / representable / all checks pass\n"
        "  1  non-representable / failed checks\n"
        "  2  usage error or malformed input\n"
        "  3  transform exceeded its vertex budget\n"
        "  4  decision unknown (budget exhausted)\n"
        "  5  checks skipped for budget (none failed)\n"
        "Environment: WORDREP_ORIENTATION_BUDGET, WORDREP_WORD_BUDGET,\n"
        "WORDREP_EMBED_BUDGET, WORDREP_VERTEX_BUDGET override the defaults.");

    const std::uint64_t default_orientation =
        env_budget("WORDREP_ORIENTATION_BUDGET", kDefaultOrientationBudget);
    const std::uint64_t default_word = env_budget("WORDREP_WORD_BUDGET", kDefaultWordSearchBudget);
    const std::uint64_t default_embed = env_budget("WORDREP_EMBED_BUDGET", kDefaultEmbedBudget);
    const int default_vertex =
        static_cast<int>(env_budget("WORDREP_VERTEX_BUDGET", kDefaultVertexBudget));

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
    gen->add_option("family", gen_args.family,
                    "cycle|path|clique|star|claw|wheel|petersen|minimal-nonrep|fig6")
        ->required();
    gen->add_option("params", gen_args.params, "family parameters");
    gen->add_option("-o,--output", gen_args.output, "output file ('-' = stdout)");
    gen->add_flag("--json", gen_args.json, "structured output");

    TransformArgs line_args;
    line_args.vertex_budget = default_vertex;
    auto* lg = app.add_subcommand("linegraph", "apply the line graph k times");
    lg->add_option("input", line_args.input, "edge-list file ('-' = stdin)");
    lg->add_option("-k,--repetitions", line_args.repetitions, "iterations (default 1)")
        ->check(CLI::PositiveNumber);
    lg->add_option("--vertex-budget", line_args.vertex_budget, "max intermediate vertices");
    lg->add_option("-o,--output", line_args.output, "output file ('-' = stdout)");
    lg->add_flag("--json", line_args.json, "structured output");

    AltgraphArgs alt_args;
    auto* alt = app.add_subcommand("altgraph", "alternation graph of a word");
    alt->add_option("word", alt_args.word, "word text ('-' or omitted = stdin)");
    alt->add_option("-o,--output", alt_args.output, "output file ('-' = stdout)");
    alt->add_flag("--json", alt_args.json, "structured output");

    DecideArgs decide_args;
    decide_args.orientation_budget = default_orientation;
    decide_args.word_budget = default_word;
    auto* dec = app.add_subcommand("decide", "decide representability, print a certificate");
    dec->add_option("input", decide_args.input, "edge-list file ('-' = stdin)");
    dec->add_option("--strategy", decide_args.strategy, "orientation|word-search|auto");
    dec->add_option("--k-max", decide_args.k_max, "uniformity ceiling for word search")
        ->check(CLI::PositiveNumber);
    dec->add_option("--budget", decide_args.orientation_budget,
                    "expansion budget for the orientation search");
    dec->add_option("--word-budget", decide_args.word_budget,
                    "expansion budget for the word search");
    dec->add_option("-o,--output", decide_args.output, "output file ('-' = stdout)");
    dec->add_flag("--json", decide_args.json, "structured output");

    VerifyArgs verify_args;
    verify_args.orientation_budget = default_orientation;
    verify_args.word_budget = default_word;
    verify_args.embed_budget = default_embed;
    verify_args.vertex_budget = default_vertex;
    auto* ver = app.add_subcommand("verify", "run named verification suites");
    ver->add_option("--suite", verify_args.suite,
                    "all|figure1|figure2|wheels|cliques|iteration|cycle-lemma|propositions|"
                    "petersen-2uniform");
    ver->add_option("--budget", verify_args.orientation_budget, "orientation expansion budget");
    ver->add_option("--word-budget", verify_args.word_budget, "word-search expansion budget");
    ver->add_option("--embed-budget", verify_args.embed_budget, "embedding expansion budget");
    ver->add_option("--vertex-budget", verify_args.vertex_budget, "line-graph vertex budget");
    ver->add_option("--trials", verify_args.trials, "trials per randomized property");
    ver->add_option("--seed", verify_args.seed, "seed for randomized properties");
    ver->add_option("--threads", verify_args.threads, "worker cap (0 = machine parallelism)");
    ver->add_option("-o,--output", verify_args.output, "output file ('-' = stdout)");
    ver->add_flag("--json", verify_args.json, "structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args);
        if (lg->parsed()) return run_linegraph(line_args);
        if (alt->parsed()) return run_altgraph(alt_args);
        if (dec->parsed()) return run_decide(decide_args);
        if (ver->parsed()) return run_verify(verify_args);
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
