#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// Finite word over an integer letter alphabet. Letters usually name the
// vertices of some graph; a side table maps letters to display text so
// both compact strings ("12312434") and tokenized words round-trip
// through I/O. Word values are immutable; all operations on them are
// pure functions.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}
    Word(std::vector<int> letters, std::map<int, std::string> display)
        : letters_(std::move(letters)), display_(std::move(display)) {}

    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    // Distinct letters actually present, ascending.
    std::vector<int> alphabet() const;
    bool contains(int letter) const;

    // Display text for a letter; decimal value when none was declared.
    std::string display(int letter) const;
    const std::map<int, std::string>& display_table() const { return display_; }

    bool operator==(const Word& other) const;
    bool operator!=(const Word& other) const { return !(*this == other); }

private:
    std::vector<int> letters_;
    std::map<int, std::string> display_;
};

// Subsequence of w retaining exactly the letters in `keep`; a morphism.
Word erase(const Word& w, const std::vector<int>& keep);

// True iff x and y both occur in w and restricting w to {x,y} strictly
// alternates between them. Throws std::invalid_argument when x == y.
bool alternates(const Word& w, int x, int y);

// Graph on alphabet(w), densely relabeled in ascending letter order, with
// an edge exactly for each alternating pair; labels preserve the letters.
Graph alternating_graph(const Word& w);

// m when every letter occurs exactly m times; absent for the empty word
// and for non-uniform words.
std::optional<int> uniformity(const Word& w);

// First letter moved to the end; the empty word maps to itself.
Word cyclic_shift(const Word& w);

// True iff f occurs contiguously in w; the empty word occurs everywhere.
bool occurs_as_factor(const Word& w, const Word& f);

enum class Quantifier { forall, exists };

// The statement (anchor - before < after - anchor): between cyclically
// consecutive occurrences of the anchor, every symbol of before+after
// occurs exactly once, with all of `before` ahead of all of `after`.
struct OrderStatement {
    int anchor = 0;
    std::vector<int> before;
    std::vector<int> after;
    Quantifier quantifier = Quantifier::forall;
};

// Evaluates the statement on the cyclic word; an anchor occurring m times
// has m cyclic gaps. Requires w uniform with the anchor present and the
// symbol sets inside alphabet(w); throws std::invalid_argument otherwise.
bool order_statement_holds(const Word& w, const OrderStatement& s);

struct RepresentantReport {
    bool ok = false;
    std::string diagnostic;  // distinguishes alphabet mismatches from wrong edges
};

// True iff alternating_graph(w) equals g exactly. Letters are identified
// with vertices through display text vs. vertex labels; when g's labels
// are not unique, letters identify with vertex ids directly.
RepresentantReport check_representant(const Word& w, const Graph& g);
bool is_representant(const Word& w, const Graph& g);

// Text format: a compact string when every letter displays as one
// character, or whitespace-separated tokens; a leading '#' line may
// declare the alphabet (token i gets letter id i). Throws
// std::runtime_error on malformed input.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);          // compact when possible
std::string format_word_tokens(const Word& w);   // always tokenized

}  // namespace wordrep
