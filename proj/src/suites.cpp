#include "wordrep/suites.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "wordrep/decide.hpp"
#include "wordrep/generators.hpp"
#include "wordrep/line_graph.hpp"
#include "wordrep/subgraph.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::pass; });
}

bool SuiteReport::any_skipped() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::skipped_budget; });
}

bool SuiteReport::any_failed() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

namespace {

constexpr const char* kPetersenWord = "027618596382430172965749083451";

CheckResult check(std::string name, bool ok, std::string detail = "") {
    return CheckResult{std::move(name), ok ? CheckStatus::pass : CheckStatus::fail,
                       std::move(detail)};
}

CheckResult skipped(std::string name, std::string detail) {
    return CheckResult{std::move(name), CheckStatus::skipped_budget, std::move(detail)};
}

void touch(SuiteReport& r, std::initializer_list<const char*> names) {
    for (const char* n : names) r.touched.push_back(n);
}

void finish(SuiteReport& r) {
    std::sort(r.touched.begin(), r.touched.end());
    r.touched.erase(std::unique(r.touched.begin(), r.touched.end()), r.touched.end());
}

std::string render_map(const LabelMap& map) {
    std::ostringstream out;
    out << "label-map:";
    for (size_t i = 0; i < map.to_host.size(); ++i) out << ' ' << i << "->" << map.to_host[i];
    return out.str();
}

std::string render_orientation(const Orientation& o) {
    std::ostringstream out;
    out << "orientation:";
    for (auto [a, b] : o.directed_edges()) out << ' ' << a << "->" << b;
    return out.str();
}

std::string one_line_edges(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.vertex_count() << " edges:";
    for (auto [u, v] : g.edges()) out << ' ' << u << '-' << v;
    return out.str();
}

// Records a non-representability decision; an unexpected verdict carries
// the full certificate as the counterexample.
void expect_nonrepresentable(SuiteReport& r, const std::string& name, const Graph& g,
                             std::uint64_t budget) {
    Certificate cert = has_semi_transitive_orientation(g, budget);
    r.expansions += cert.stats.expansions;
    if (cert.verdict == Verdict::unknown) {
        r.checks.push_back(skipped(name, "orientation budget exhausted after " +
                                             std::to_string(cert.stats.expansions) +
                                             " expansions"));
        return;
    }
    bool ok = cert.verdict == Verdict::non_representable && cert.stats.exhausted;
    std::string detail = ok ? "exhausted search, " + std::to_string(cert.stats.expansions) +
                                  " expansions, cycle prunes " +
                                  std::to_string(cert.stats.cycle_prunes) + ", shortcut prunes " +
                                  std::to_string(cert.stats.shortcut_prunes)
                            : certificate_text(cert);
    r.checks.push_back(check(name, ok, detail));
}

// Boundary data are reported, never asserted: the check passes when the
// decider reaches a definitive verdict whose witness re-verifies.
void report_boundary(SuiteReport& r, const std::string& name, const Graph& g,
                     const DecideOptions& options) {
    Certificate cert = decide_representable(g, options);
    r.expansions += cert.stats.expansions;
    if (cert.verdict == Verdict::unknown) {
        r.checks.push_back(skipped(name, "budget exhausted"));
        return;
    }
    bool witness_ok = true;
    if (cert.witness_word) witness_ok = is_representant(*cert.witness_word, g);
    if (cert.witness_orientation) witness_ok = is_semi_transitive(*cert.witness_orientation);
    std::string detail = std::string(to_string(cert.verdict)) + " (boundary datum, reported only)";
    r.checks.push_back(check(name, witness_ok, detail));
    if (cert.witness_word && witness_ok)
        r.artifacts.push_back(name + " witness-word: " + format_word_tokens(*cert.witness_word));
    if (cert.witness_orientation && witness_ok)
        r.artifacts.push_back(name + " " + render_orientation(*cert.witness_orientation));
}

}  // namespace

Graph figure1_left_graph() {
    return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}, {"1", "2", "3", "4"});
}

SuiteReport verify_figure1(const SuiteOptions& options) {
    SuiteReport r;
    r.name = "figure1";
    Graph left = figure1_left_graph();

    Word w1 = parse_word("12312434");
    RepresentantReport rep1 = check_representant(w1, left);
    r.checks.push_back(check("left-word-represents", rep1.ok, rep1.diagnostic));
    r.checks.push_back(check("left-word-uniformity-2", uniformity(w1) == std::optional<int>(2)));

    Word wp = parse_word(kPetersenWord);
    RepresentantReport rep2 = check_representant(wp, petersen());
    r.checks.push_back(check("petersen-word-represents", rep2.ok, rep2.diagnostic));
    r.checks.push_back(
        check("petersen-word-uniformity-3", uniformity(wp) == std::optional<int>(3)));

    DecideOptions d;
    d.strategy = Strategy::word_search;
    d.k_max = 2;
    d.word_budget = options.word_budget;
    Certificate cert = decide_representable(left, d);
    r.expansions += cert.stats.expansions;
    if (cert.verdict == Verdict::unknown && !cert.stats.exhausted) {
        r.checks.push_back(skipped("left-fresh-2uniform-witness", "word budget exhausted"));
    } else {
        bool ok = cert.verdict == Verdict::representable && cert.witness_word &&
                  is_representant(*cert.witness_word, left);
        r.checks.push_back(check("left-fresh-2uniform-witness", ok,
                                 ok ? format_word_tokens(*cert.witness_word)
                                    : certificate_text(cert)));
        if (ok) r.artifacts.push_back("witness-word: " + format_word_tokens(*cert.witness_word));
    }

    touch(r, {"petersen", "word-search"});
    finish(r);
    return r;
}

SuiteReport verify_figure2(const SuiteOptions& options) {
    SuiteReport r;
    r.name = "figure2";
    for (int i = 1; i <= 4; ++i)
        expect_nonrepresentable(r, "minimal-nonrep-" + std::to_string(i) + "-nonrepresentable",
                                minimal_nonrep(i), options.orientation_budget);
    touch(r, {"minimal-nonrep", "orientation"});
    finish(r);
    return r;
}

SuiteReport verify_wheel_theorem(const std::vector<int>& ns, const SuiteOptions& options) {
    SuiteReport r;
    r.name = "wheels";
    for (int n : ns)
        if (n < 4) throw std::invalid_argument("verify_wheel_theorem: wheel index must be >= 4");
    for (int n : ns)
        expect_nonrepresentable(r, "linegraph-wheel-" + std::to_string(n) + "-nonrepresentable",
                                line_graph(wheel(n)), options.orientation_budget);
    DecideOptions d;
    d.strategy = Strategy::auto_select;
    d.orientation_budget = options.orientation_budget;
    d.word_budget = options.word_budget;
    report_boundary(r, "boundary-linegraph-wheel-3", line_graph(wheel(3)), d);
    touch(r, {"wheel", "orientation", "auto"});
    finish(r);
    return r;
}

SuiteReport verify_clique_theorem(const SuiteOptions& options) {
    SuiteReport r;
    r.name = "cliques";
    expect_nonrepresentable(r, "linegraph-clique-5-nonrepresentable", line_graph(clique(5)),
                            options.orientation_budget);

    Graph pattern = line_graph(clique(5));
    Graph host = line_graph(clique(6));
    EmbedResult embed = contains_induced(host, pattern, options.embed_budget);
    r.expansions += embed.stats.expansions;
    if (embed.status == SearchStatus::unknown) {
        r.checks.push_back(skipped("linegraph-clique-6-contains-induced-l-k5",
                                   "embedding budget exhausted"));
    } else {
        bool ok = embed.status == SearchStatus::found && embed.witness &&
                  verify_induced_embedding(host, pattern, *embed.witness);
        r.checks.push_back(check("linegraph-clique-6-contains-induced-l-k5", ok,
                                 ok ? render_map(*embed.witness) : "no embedding found"));
        if (ok) r.artifacts.push_back("l-k6 " + render_map(*embed.witness));
    }

    DecideOptions d;
    d.strategy = Strategy::auto_select;
    d.orientation_budget = options.orientation_budget;
    d.word_budget = options.word_budget;
    report_boundary(r, "boundary-linegraph-clique-4", line_graph(clique(4)), d);
    touch(r, {"clique", "orientation", "auto"});
    finish(r);
    return r;
}

namespace {

struct SweepOutcome {
    CheckResult result;
    std::uint64_t expansions = 0;
};

SweepOutcome sweep_one(const Graph& g, const Graph& pattern, const SuiteOptions& options,
                       const std::string& name) {
    SweepOutcome out;
    try {
        Graph l4 = iterate_line_graph(g, 4, options.vertex_budget);
        EmbedResult embed = contains_induced(l4, pattern, options.embed_budget);
        out.expansions = embed.stats.expansions;
        if (embed.status == SearchStatus::unknown) {
            out.result = skipped(name, "embedding budget exhausted; " + one_line_edges(g));
        } else {
            bool ok = embed.status == SearchStatus::found && embed.witness &&
                      verify_induced_embedding(l4, pattern, *embed.witness);
            out.result = check(name, ok,
                               ok ? one_line_edges(g) + "; l4 n=" + std::to_string(l4.vertex_count())
                                  : "no induced copy inside L^4; " + one_line_edges(g));
        }
    } catch (const ResourceLimitError& e) {
        out.result = skipped(name, std::string(e.what()) + "; " + one_line_edges(g));
    }
    return out;
}

bool matches_any_excluded(const Graph& g) {
    int n = g.vertex_count();
    if (is_isomorphic(g, path(n)).status == SearchStatus::found) return true;
    if (n >= 3 && is_isomorphic(g, cycle(n)).status == SearchStatus::found) return true;
    if (n == 4 && is_isomorphic(g, claw()).status == SearchStatus::found) return true;
    return false;
}

}  // namespace

SuiteReport verify_iteration_theorem(const SuiteOptions& options) {
    SuiteReport r;
    r.name = "iteration";

    for (int i = 1; i <= 3; ++i) {
        Graph lhs = line_graph(fig6_graph(i));
        Graph rhs = fig6_graph(i + 1);
        EmbedResult iso = is_isomorphic(lhs, rhs, options.embed_budget);
        bool ok = iso.status == SearchStatus::found && iso.witness &&
                  verify_isomorphism(lhs, rhs, *iso.witness);
        std::string name = "chain-l-fig6-" + std::to_string(i) + "-iso-fig6-" + std::to_string(i + 1);
        r.checks.push_back(check(name, ok, ok ? render_map(*iso.witness) : "not isomorphic"));
        if (ok) r.artifacts.push_back(name + " " + render_map(*iso.witness));
    }
    {
        EmbedResult iso = is_isomorphic(fig6_graph(4), wheel(4), options.embed_budget);
        bool ok = iso.status == SearchStatus::found;
        r.checks.push_back(check("chain-fig6-4-is-wheel-4", ok));
    }
    {
        EmbedResult iso = is_isomorphic(line_graph(star(4)), clique(4), options.embed_budget);
        r.checks.push_back(check("star-4-linegraph-is-clique-4",
                                 iso.status == SearchStatus::found));
    }

    Graph pattern = line_graph(wheel(4));
    expect_nonrepresentable(r, "linegraph-wheel-4-nonrepresentable", pattern,
                            options.orientation_budget);

    // Sweep every connected graph on <= 5 vertices that is not a path,
    // cycle, or claw; each L^4 must contain an induced copy of L(W4).
    std::vector<Graph> sweep;
    for (const Graph& g : small_connected_graphs(5))
        if (!matches_any_excluded(g)) sweep.push_back(g);
    r.checks.push_back(check("sweep-size-22", sweep.size() == 22,
                             "qualifying graphs: " + std::to_string(sweep.size())));

    std::vector<SweepOutcome> outcomes(sweep.size());
    int threads = options.threads > 0 ? options.threads
                                      : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(sweep.size())));
    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
        for (size_t i = cursor.fetch_add(1); i < sweep.size(); i = cursor.fetch_add(1)) {
            std::string name = "sweep-" + std::to_string(i) + "-n" +
                               std::to_string(sweep[i].vertex_count()) + "-m" +
                               std::to_string(sweep[i].edge_count());
            outcomes[i] = sweep_one(sweep[i], pattern, options, name);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& o : outcomes) {
        r.expansions += o.expansions;
        r.checks.push_back(std::move(o.result));
    }

    touch(r, {"fig6", "wheel", "star", "claw", "path", "cycle", "orientation"});
    finish(r);
    return r;
}

SuiteReport verify_cycle_lemma(int n, const std::vector<int>& ks, const SuiteOptions& options) {
    if (n < 3) throw std::invalid_argument("verify_cycle_lemma: need n >= 3");
    SuiteReport r;
    r.name = "cycle-lemma";
    Graph target = cycle(n + 1);

    std::vector<int> ascending(n + 1);
    for (int i = 0; i <= n; ++i) ascending[i] = i;
    Word factor(ascending);

    for (int k : ks) {
        if (k < 1) throw std::invalid_argument("verify_cycle_lemma: need k >= 1");
        std::uint64_t enumerated = 0, violations = 0;
        std::string example;
        SearchStats stats = enumerate_k_uniform_representants(
            target, k, options.word_budget, [&](const Word& w) {
                ++enumerated;
                if (occurs_as_factor(w, factor)) {
                    ++violations;
                    if (example.empty()) example = format_word_tokens(w);
                }
                return true;
            });
        r.expansions += stats.expansions;
        std::string name = "no-ascending-factor-k" + std::to_string(k);
        if (!stats.exhausted) {
            r.checks.push_back(skipped(name, "word budget exhausted"));
            continue;
        }
        std::ostringstream detail;
        detail << "enumerated " << enumerated << " " << k << "-uniform representants of the "
               << (n + 1) << "-cycle starting with 0; violations: " << violations;
        if (violations) detail << "; first: " << example;
        r.checks.push_back(check(name, violations == 0, detail.str()));
    }

    // Control: the ascending factor does occur in a word over the same
    // alphabet that is not a representant of the cycle, so the enumeration
    // filter is doing real work.
    {
        std::vector<int> twice = ascending;
        twice.insert(twice.end(), ascending.begin(), ascending.end());
        Word control(twice);
        bool ok = occurs_as_factor(control, factor) && !is_representant(control, target) &&
                  alternating_graph(control) == clique(n + 1);
        r.checks.push_back(check("control-factor-in-complete-word", ok,
                                 "word " + format_word_tokens(control)));
    }

    touch(r, {"cycle", "clique"});
    finish(r);
    return r;
}

namespace {

struct Trials {
    std::mt19937_64 rng;
    explicit Trials(std::uint64_t seed) : rng(seed) {}

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    Word uniform_word(int smin, int smax, int mmin, int mmax) {
        int s = pick(smin, smax), m = pick(mmin, mmax);
        std::vector<int> letters;
        letters.reserve(size_t(s) * m);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < m; ++j) letters.push_back(i);
        std::shuffle(letters.begin(), letters.end(), rng);
        return Word(std::move(letters));
    }
};

// All m-uniform words over s letters, lexicographic.
void enumerate_uniform_words(int s, int m, std::vector<int>& word, std::vector<int>& counts,
                             const std::function<void(const std::vector<int>&)>& visit) {
    if (static_cast<int>(word.size()) == s * m) {
        visit(word);
        return;
    }
    for (int a = 0; a < s; ++a) {
        if (counts[a] == m) continue;
        ++counts[a];
        word.push_back(a);
        enumerate_uniform_words(s, m, word, counts, visit);
        word.pop_back();
        --counts[a];
    }
}

}  // namespace

SuiteReport verify_propositions(const SuiteOptions& options) {
    SuiteReport r;
    r.name = "propositions";
    const std::uint64_t trials = options.trials;
    Trials t(options.seed);

    {  // cyclic shift preserves the alternating graph of uniform words
        std::uint64_t failures = 0;
        std::string example;
        for (std::uint64_t i = 0; i < trials; ++i) {
            Word w = t.uniform_word(2, 6, 1, 3);
            if (alternating_graph(cyclic_shift(w)) != alternating_graph(w)) {
                ++failures;
                if (example.empty()) example = format_word_tokens(w);
            }
        }
        r.checks.push_back(check("cyclic-shift-invariance", failures == 0,
                                 failures ? "counterexample: " + example
                                          : std::to_string(trials) + " trials"));
    }

    {  // soundness: word-generated graphs decide representable
        std::uint64_t failures = 0;
        std::string example;
        for (std::uint64_t i = 0; i < trials; ++i) {
            Word w = t.uniform_word(2, 6, 1, 3);
            Certificate cert =
                has_semi_transitive_orientation(alternating_graph(w), options.orientation_budget);
            r.expansions += cert.stats.expansions;
            if (cert.verdict != Verdict::representable) {
                ++failures;
                if (example.empty()) example = format_word_tokens(w);
            }
        }
        r.checks.push_back(check("word-graphs-decide-representable", failures == 0,
                                 failures ? "counterexample: " + example
                                          : std::to_string(trials) + " trials"));
    }

    {  // clique representants are powers of a 1-uniform word
        std::uint64_t complete = 0, violations = 0;
        for (int s = 2; s <= 4; ++s) {
            for (int m = 2; m <= 3; ++m) {
                if (s == 4 && m == 3) continue;  // 369k words adds nothing
                std::vector<int> word, counts(s, 0);
                enumerate_uniform_words(s, m, word, counts, [&](const std::vector<int>& letters) {
                    Word w(letters);
                    if (alternating_graph(w) != clique(s)) return;
                    ++complete;
                    std::vector<int> prefix(letters.begin(), letters.begin() + s);
                    std::set<int> distinct(prefix.begin(), prefix.end());
                    std::vector<int> power;
                    for (int rep = 0; rep < m; ++rep)
                        power.insert(power.end(), prefix.begin(), prefix.end());
                    if (static_cast<int>(distinct.size()) != s || power != letters) ++violations;
                });
            }
        }
        r.checks.push_back(check("clique-representants-are-powers", complete > 0 && violations == 0,
                                 "complete-graph words: " + std::to_string(complete) +
                                     ", violations: " + std::to_string(violations)));
    }

    {  // adjacent/non-adjacent triples: both orders appear for a non-edge
        std::uint64_t checked = 0, failures = 0;
        std::string example;
        for (std::uint64_t i = 0; i < trials; ++i) {
            Word w = t.uniform_word(3, 6, 2, 3);
            Graph g = alternating_graph(w);
            int s = g.vertex_count();
            for (int a = 0; a < s; ++a)
                for (int b = 0; b < s; ++b)
                    for (int c = b + 1; c < s; ++c) {
                        if (a == b || a == c) continue;
                        if (!g.has_edge(a, b) || !g.has_edge(a, c) || g.has_edge(b, c)) continue;
                        ++checked;
                        OrderStatement bc{a, {b}, {c}, Quantifier::exists};
                        OrderStatement cb{a, {c}, {b}, Quantifier::exists};
                        if (!order_statement_holds(w, bc) || !order_statement_holds(w, cb)) {
                            ++failures;
                            if (example.empty())
                                example = format_word_tokens(w) + " a=" + std::to_string(a) +
                                          " b=" + std::to_string(b) + " c=" + std::to_string(c);
                        }
                    }
        }
        r.checks.push_back(check("nonadjacent-pair-both-orders", checked > 0 && failures == 0,
                                 failures ? "counterexample: " + example
                                          : std::to_string(checked) + " triples"));
    }

    {  // adjacent triples: exactly one of the two universal statements
        std::uint64_t checked = 0, failures = 0;
        std::string example;
        for (std::uint64_t i = 0; i < trials; ++i) {
            Word w = t.uniform_word(3, 6, 1, 3);
            Graph g = alternating_graph(w);
            int s = g.vertex_count();
            for (int a = 0; a < s; ++a)
                for (int b = 0; b < s; ++b)
                    for (int c = b + 1; c < s; ++c) {
                        if (a == b || a == c) continue;
                        if (!g.has_edge(a, b) || !g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                        ++checked;
                        OrderStatement bc{a, {b}, {c}, Quantifier::forall};
                        OrderStatement cb{a, {c}, {b}, Quantifier::forall};
                        if (order_statement_holds(w, bc) == order_statement_holds(w, cb)) {
                            ++failures;
                            if (example.empty())
                                example = format_word_tokens(w) + " a=" + std::to_string(a) +
                                          " b=" + std::to_string(b) + " c=" + std::to_string(c);
                        }
                    }
        }
        r.checks.push_back(check("adjacent-pair-exactly-one-order", checked > 0 && failures == 0,
                                 failures ? "counterexample: " + example
                                          : std::to_string(checked) + " triples"));
    }

    {  // the universal statement implies the existential one
        std::uint64_t checked = 0, failures = 0;
        std::string example;
        for (std::uint64_t i = 0; i < trials; ++i) {
            Word w = t.uniform_word(3, 6, 2, 3);
            std::vector<int> alpha = w.alphabet();
            int a = alpha[t.pick(0, static_cast<int>(alpha.size()) - 1)];
            std::vector<int> rest;
            for (int l : alpha)
                if (l != a) rest.push_back(l);
            std::shuffle(rest.begin(), rest.end(), t.rng);
            int s0 = t.pick(0, std::min<int>(2, static_cast<int>(rest.size())));
            int s1 = t.pick(0, std::min<int>(2, static_cast<int>(rest.size()) - s0));
            OrderStatement forall{a,
                                  {rest.begin(), rest.begin() + s0},
                                  {rest.begin() + s0, rest.begin() + s0 + s1},
                                  Quantifier::forall};
            if (!order_statement_holds(w, forall)) continue;
            ++checked;
            OrderStatement exists = forall;
            exists.quantifier = Quantifier::exists;
            if (!order_statement_holds(w, exists)) {
                ++failures;
                if (example.empty()) example = format_word_tokens(w);
            }
        }
        r.checks.push_back(check("forall-implies-exists", checked > 0 && failures == 0,
                                 failures ? "counterexample: " + example
                                          : std::to_string(checked) + " held statements"));
    }

    {  // erasing is a morphism over concatenation
        std::uint64_t failures = 0;
        std::string example;
        for (std::uint64_t i = 0; i < trials; ++i) {
            Word w = t.uniform_word(2, 6, 1, 3);
            const auto& letters = w.letters();
            int cut = t.pick(0, static_cast<int>(letters.size()));
            std::vector<int> keep;
            for (int l : w.alphabet())
                if (t.pick(0, 1)) keep.push_back(l);
            Word left(std::vector<int>(letters.begin(), letters.begin() + cut));
            Word right(std::vector<int>(letters.begin() + cut, letters.end()));
            std::vector<int> glued = erase(left, keep).letters();
            const auto& tail = erase(right, keep).letters();
            glued.insert(glued.end(), tail.begin(), tail.end());
            if (glued != erase(w, keep).letters()) {
                ++failures;
                if (example.empty()) example = format_word_tokens(w);
            }
        }
        r.checks.push_back(check("erase-is-morphism", failures == 0,
                                 failures ? "counterexample: " + example
                                          : std::to_string(trials) + " trials"));
    }

    {  // alternation is symmetric
        std::uint64_t failures = 0;
        for (std::uint64_t i = 0; i < trials; ++i) {
            Word w = t.uniform_word(2, 6, 1, 3);
            std::vector<int> alpha = w.alphabet();
            int x = alpha[t.pick(0, static_cast<int>(alpha.size()) - 1)];
            int y = alpha[t.pick(0, static_cast<int>(alpha.size()) - 1)];
            if (x == y) continue;
            if (alternates(w, x, y) != alternates(w, y, x)) ++failures;
        }
        r.checks.push_back(check("alternates-symmetry", failures == 0,
                                 std::to_string(trials) + " trials"));
    }

    {  // representability is hereditary on induced subgraphs
        std::uint64_t failures = 0;
        std::string example;
        DecideOptions d;
        d.strategy = Strategy::auto_select;
        d.orientation_budget = options.orientation_budget;
        d.word_budget = options.word_budget;
        for (std::uint64_t i = 0; i < trials; ++i) {
            Word w = t.uniform_word(2, 6, 1, 3);
            Graph g = alternating_graph(w);
            std::vector<int> vs;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (t.pick(0, 1)) vs.push_back(v);
            if (vs.empty()) vs.push_back(t.pick(0, g.vertex_count() - 1));
            Certificate cert = decide_representable(induced_subgraph(g, vs), d);
            r.expansions += cert.stats.expansions;
            if (cert.verdict != Verdict::representable) {
                ++failures;
                if (example.empty()) example = format_word_tokens(w);
            }
        }
        r.checks.push_back(check("hereditary-representability", failures == 0,
                                 failures ? "counterexample: " + example
                                          : std::to_string(trials) + " trials"));
    }

    touch(r, {"orientation", "auto", "word-search"});
    finish(r);
    return r;
}

SuiteReport verify_petersen_two_uniform(const SuiteOptions& options) {
    SuiteReport r;
    r.name = "petersen-2uniform";
    WordSearchResult res = find_k_uniform_representant(petersen(), 2, options.word_budget);
    r.expansions = res.stats.expansions;
    switch (res.status) {
        case SearchStatus::absent:
            r.checks.push_back(check("no-2-uniform-representant", true,
                                     "search exhausted after " +
                                         std::to_string(res.stats.expansions) + " expansions"));
            break;
        case SearchStatus::found:
            r.checks.push_back(check("no-2-uniform-representant", false,
                                     "found " + format_word_tokens(*res.word)));
            break;
        case SearchStatus::unknown:
            r.checks.push_back(skipped("no-2-uniform-representant",
                                       "budget exhausted after " +
                                           std::to_string(res.stats.expansions) + " expansions"));
            break;
    }
    touch(r, {"petersen", "word-search"});
    finish(r);
    return r;
}

std::vector<std::string> default_suite_names() {
    return {"figure1", "figure2", "wheels", "cliques", "iteration", "cycle-lemma", "propositions"};
}

std::vector<std::string> all_suite_names() {
    auto names = default_suite_names();
    names.push_back("petersen-2uniform");
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    if (name == "figure1") return verify_figure1(options);
    if (name == "figure2") return verify_figure2(options);
    if (name == "wheels") return verify_wheel_theorem({4, 5}, options);
    if (name == "cliques") return verify_clique_theorem(options);
    if (name == "iteration") return verify_iteration_theorem(options);
    if (name == "cycle-lemma") return verify_cycle_lemma(3, {2, 3}, options);
    if (name == "propositions") return verify_propositions(options);
    if (name == "petersen-2uniform") return verify_petersen_two_uniform(options);
    throw std::invalid_argument("unknown suite: " + name);
}

namespace {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped_budget: return "skipped-budget";
    }
    return "?";
}

const char* result_string(const SuiteReport& r) {
    if (r.any_failed()) return "fail";
    if (r.any_skipped()) return "skipped-budget";
    return "pass";
}

}  // namespace

std::string suite_report_text(const SuiteReport& report) {
    std::ostringstream out;
    out << "suite: " << report.name << '\n';
    for (const auto& c : report.checks) {
        out << "check: " << c.name << ": " << to_string(c.status);
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << '\n';
    }
    out << "expansions: " << report.expansions << '\n';
    for (const auto& a : report.artifacts) out << "artifact: " << a << '\n';
    out << "result: " << result_string(report) << '\n';
    return out.str();
}

std::string suite_report_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.name;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = to_string(c.status);
        jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    j["expansions"] = report.expansions;
    j["artifacts"] = report.artifacts;
    j["touched"] = report.touched;
    j["result"] = result_string(report);
    return j.dump(2);
}

std::vector<Graph> small_connected_graphs(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Edge> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
        std::vector<Graph> classes;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs.size()); ++mask) {
            std::vector<Edge> edges;
            for (size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1) edges.push_back(pairs[i]);
            Graph g(n, std::move(edges));

            std::vector<char> seen(n, 0);
            std::vector<int> stack{0};
            seen[0] = 1;
            int visited = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : g.neighbors(v))
                    if (!seen[w]) {
                        seen[w] = 1;
                        ++visited;
                        stack.push_back(w);
                    }
            }
            if (visited != n) continue;

            bool fresh = true;
            for (const Graph& kept : classes)
                if (is_isomorphic(g, kept).status == SearchStatus::found) {
                    fresh = false;
                    break;
                }
            if (fresh) classes.push_back(std::move(g));
        }
        for (auto& g : classes) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace wordrep
