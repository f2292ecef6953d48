#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/search.hpp"

namespace wordrep {

enum class CheckStatus { pass, fail, skipped_budget };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    std::string detail;  // failing checks carry the concrete counterexample
};

struct SuiteReport {
    std::string name;
    std::vector<CheckResult> checks;
    std::uint64_t expansions = 0;
    std::vector<std::string> artifacts;  // verified witness words, orientations, maps
    std::vector<std::string> touched;    // generator families and strategies exercised
    bool passed() const;
    bool any_skipped() const;
    bool any_failed() const;
};

struct SuiteOptions {
    std::uint64_t orientation_budget = kDefaultOrientationBudget;
    std::uint64_t word_budget = kDefaultWordSearchBudget;
    std::uint64_t embed_budget = kDefaultEmbedBudget;
    int vertex_budget = kDefaultVertexBudget;
    std::uint64_t trials = 10'000;
    std::uint64_t seed = 20240515;
    int threads = 0;  // 0 = machine parallelism
};

// The 4-vertex graph representable by the 2-uniform word 12312434:
// triangle {1,2,3} plus the pendant edge 3-4, labeled as drawn.
Graph figure1_left_graph();

// Known example words: 12312434 verifies against figure1_left_graph() and
// the 30-letter word against petersen(); a fresh 2-uniform witness is also
// searched for the left graph.
SuiteReport verify_figure1(const SuiteOptions& options = {});

// All four minimal non-representable graphs decided non-representable by
// exhaustive orientation search.
SuiteReport verify_figure2(const SuiteOptions& options = {});

// L(wheel(n)) non-representable for each n in ns (every n must be >= 4);
// the n = 3 boundary (L of wheel(3) = K4) is reported as a datum, never
// asserted.
SuiteReport verify_wheel_theorem(const std::vector<int>& ns, const SuiteOptions& options = {});

// L(clique(5)) non-representable; L(clique(6)) contains an induced
// L(clique(5)); L(clique(4)) reported as a boundary datum.
SuiteReport verify_clique_theorem(const SuiteOptions& options = {});

// The fig6 chain under the line graph, the non-representability of
// L(wheel(4)), and the sweep: every connected graph on <= 5 vertices that
// is not a path, cycle, or claw has an induced L(wheel(4)) inside its
// fourth iterated line graph.
SuiteReport verify_iteration_theorem(const SuiteOptions& options = {});

// Full enumeration: no k-uniform representant of cycle(n+1) contains the
// factor 0 1 ... n; plus a sanity control showing the enumeration filter
// does real work.
SuiteReport verify_cycle_lemma(int n, const std::vector<int>& ks,
                               const SuiteOptions& options = {});

// Randomized property suites with a fixed seed: cyclic-shift invariance,
// clique representants as powers, order-statement dichotomy and duality,
// erase morphism, alternation symmetry, hereditary representability, and
// the soundness cross-check that word-generated graphs decide
// representable.
SuiteReport verify_propositions(const SuiteOptions& options = {});

// Opt-in exhaustion: the canonicalized 2-uniform search over ten letters
// terminates with no representant of petersen(). Budget overruns downgrade
// to skipped-budget, never to a silent pass.
SuiteReport verify_petersen_two_uniform(const SuiteOptions& options = {});

// Suites run by `all` (everything except the opt-in petersen-2uniform).
std::vector<std::string> default_suite_names();
std::vector<std::string> all_suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

std::string suite_report_text(const SuiteReport& report);
std::string suite_report_json(const SuiteReport& report);

// All connected graphs on 1..max_n vertices, one per isomorphism class,
// in a deterministic order. Desk scale only (max_n <= 7 or so).
std::vector<Graph> small_connected_graphs(int max_n);

}  // namespace wordrep
