#pragma once

#include <functional>
#include <optional>
#include <string>

#include "wordrep/graph.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/search.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

enum class Verdict { representable, non_representable, unknown };
enum class Strategy { orientation, word_search, auto_select };

const char* to_string(Verdict v);
const char* to_string(Strategy s);
std::optional<Strategy> strategy_from_string(const std::string& name);

// Machine-checkable evidence for a representability verdict.
//  - representable: either a verified uniform word witness, or (from the
//    orientation search alone) a semi-transitive orientation, which is
//    non-constructive evidence.
//  - non-representable: the orientation search space was fully exhausted;
//    stats carry node and prune counts with exhausted = true.
//  - unknown: the expansion budget ran out; stats carry the budget.
struct Certificate {
    Verdict verdict = Verdict::unknown;
    Strategy strategy = Strategy::orientation;
    std::optional<Word> witness_word;
    std::optional<Orientation> witness_orientation;
    SearchStats stats;

    bool constructive() const { return witness_word.has_value(); }
};

// Exhaustive backtracking over edge orientations with incremental cycle
// and shortcut pruning. Edges are branched in descending max-endpoint-
// degree order (ties by endpoints), low->high before high->low, so the
// witness and the statistics are reproducible.
Certificate has_semi_transitive_orientation(const Graph& g,
                                            std::uint64_t budget = kDefaultOrientationBudget);

struct WordSearchResult {
    SearchStatus status = SearchStatus::unknown;
    std::optional<Word> word;
    SearchStats stats;
};

// Searches k-uniform words whose alternating graph equals g. The first
// letter is pinned to vertex 0 (a cyclic shift loses nothing) and any
// prefix that breaks a required alternation, or that seals a non-edge
// pair into full alternation, is pruned. The returned word is the
// lexicographically least in this canonical order and always passes
// is_representant.
WordSearchResult find_k_uniform_representant(const Graph& g, int k,
                                             std::uint64_t budget = kDefaultWordSearchBudget);

// Same search, but every representant found is handed to `visit`;
// returning false stops early (status becomes `found`). Exhausting the
// space yields `absent`.
SearchStats enumerate_k_uniform_representants(const Graph& g, int k, std::uint64_t budget,
                                              const std::function<bool(const Word&)>& visit);

struct DecideOptions {
    Strategy strategy = Strategy::auto_select;
    int k_max = 3;
    std::uint64_t orientation_budget = kDefaultOrientationBudget;
    std::uint64_t word_budget = kDefaultWordSearchBudget;
};

// Facade over the two procedures. orientation: complete decision.
// word-search: representable when a witness exists for some k <= k_max,
// otherwise unknown (word search alone never proves non-representability).
// auto: word search first for the constructive witness, then orientation
// for the decision.
Certificate decide_representable(const Graph& g, const DecideOptions& options = {});

// Key-value text document with stable field order.
std::string certificate_text(const Certificate& c);
std::string certificate_json(const Certificate& c);

}  // namespace wordrep
