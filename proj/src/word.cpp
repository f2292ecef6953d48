#include "wordrep/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wordrep {

std::vector<int> Word::alphabet() const {
    std::vector<int> letters = letters_;
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    return letters;
}

bool Word::contains(int letter) const {
    return std::find(letters_.begin(), letters_.end(), letter) != letters_.end();
}

std::string Word::display(int letter) const {
    auto it = display_.find(letter);
    if (it != display_.end()) return it->second;
    return std::to_string(letter);
}

bool Word::operator==(const Word& other) const {
    if (letters_ != other.letters_) return false;
    for (int a : alphabet())
        if (display(a) != other.display(a)) return false;
    return true;
}

Word erase(const Word& w, const std::vector<int>& keep) {
    std::set<int> kept(keep.begin(), keep.end());
    std::vector<int> letters;
    for (int l : w.letters())
        if (kept.count(l)) letters.push_back(l);
    std::map<int, std::string> display;
    for (const auto& [l, d] : w.display_table())
        if (kept.count(l)) display[l] = d;
    return Word(std::move(letters), std::move(display));
}

bool alternates(const Word& w, int x, int y) {
    if (x == y) throw std::invalid_argument("alternates: letters must differ");
    int prev = -1;
    bool saw_x = false, saw_y = false;
    for (int l : w.letters()) {
        if (l != x && l != y) continue;
        if (l == prev) return false;
        prev = l;
        (l == x ? saw_x : saw_y) = true;
    }
    return saw_x && saw_y;
}

Graph alternating_graph(const Word& w) {
    std::vector<int> alpha = w.alphabet();
    const int n = static_cast<int>(alpha.size());
    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[alpha[i]] = i;

    // last[a][b]: which of the pair occurred most recently; broken once a
    // letter repeats within the pair's subsequence.
    std::vector<int> last(size_t(n) * n, -1);
    std::vector<char> broken(size_t(n) * n, 0);
    for (int l : w.letters()) {
        int a = index[l];
        for (int b = 0; b < n; ++b) {
            if (b == a) continue;
            size_t p = size_t(a) * n + b, q = size_t(b) * n + a;
            if (last[p] == a) broken[p] = broken[q] = 1;
            last[p] = last[q] = a;
        }
    }

    std::vector<int> count(n, 0);
    for (int l : w.letters()) ++count[index[l]];

    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (count[a] > 0 && count[b] > 0 && !broken[size_t(a) * n + b])
                edges.push_back({a, b});

    std::vector<std::string> labels;
    labels.reserve(n);
    for (int l : alpha) labels.push_back(w.display(l));
    return Graph(n, std::move(edges), std::move(labels));
}

std::optional<int> uniformity(const Word& w) {
    if (w.empty()) return std::nullopt;
    std::map<int, int> counts;
    for (int l : w.letters()) ++counts[l];
    int m = counts.begin()->second;
    for (const auto& [l, c] : counts)
        if (c != m) return std::nullopt;
    return m;
}

Word cyclic_shift(const Word& w) {
    if (w.empty()) return w;
    std::vector<int> letters(w.letters().begin() + 1, w.letters().end());
    letters.push_back(w.letters().front());
    return Word(std::move(letters), w.display_table());
}

bool occurs_as_factor(const Word& w, const Word& f) {
    const auto& hay = w.letters();
    const auto& needle = f.letters();
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

bool order_statement_holds(const Word& w, const OrderStatement& s) {
    if (!uniformity(w))
        throw std::invalid_argument("order_statement_holds: word must be uniform");
    std::set<int> before(s.before.begin(), s.before.end());
    std::set<int> after(s.after.begin(), s.after.end());
    if (before.size() != s.before.size() || after.size() != s.after.size())
        throw std::invalid_argument("order_statement_holds: duplicate symbols in a set");
    if (before.count(s.anchor) || after.count(s.anchor))
        throw std::invalid_argument("order_statement_holds: anchor inside a symbol set");
    for (int b : before)
        if (after.count(b))
            throw std::invalid_argument("order_statement_holds: symbol sets must be disjoint");
    std::set<int> alpha_set;
    for (int l : w.letters()) alpha_set.insert(l);
    if (!alpha_set.count(s.anchor))
        throw std::invalid_argument("order_statement_holds: anchor does not occur");
    for (int l : s.before)
        if (!alpha_set.count(l))
            throw std::invalid_argument("order_statement_holds: symbol not in alphabet");
    for (int l : s.after)
        if (!alpha_set.count(l))
            throw std::invalid_argument("order_statement_holds: symbol not in alphabet");

    const auto& letters = w.letters();
    const int len = static_cast<int>(letters.size());
    std::vector<int> anchors;
    for (int i = 0; i < len; ++i)
        if (letters[i] == s.anchor) anchors.push_back(i);
    const int m = static_cast<int>(anchors.size());

    const size_t want = before.size() + after.size();
    auto gap_ok = [&](int from) {
        // Walk the cyclic gap starting after position `from` up to the next
        // anchor; each required symbol must appear exactly once, all of
        // `before` ahead of all of `after`.
        std::map<int, int> seen;
        bool after_started = false;
        for (int j = (from + 1) % len; letters[j] != s.anchor; j = (j + 1) % len) {
            int l = letters[j];
            bool in_before = before.count(l) > 0;
            bool in_after = after.count(l) > 0;
            if (!in_before && !in_after) continue;
            if (++seen[l] > 1) return false;
            if (in_after) after_started = true;
            if (in_before && after_started) return false;
        }
        return seen.size() == want;
    };

    if (s.quantifier == Quantifier::forall) {
        for (int i = 0; i < m; ++i)
            if (!gap_ok(anchors[i])) return false;
        return true;
    }
    for (int i = 0; i < m; ++i)
        if (gap_ok(anchors[i])) return true;
    return false;
}

RepresentantReport check_representant(const Word& w, const Graph& g) {
    RepresentantReport report;
    std::vector<int> alpha = w.alphabet();
    const int n = g.vertex_count();

    bool labels_unique = true;
    std::map<std::string, int> by_label;
    for (int v = 0; v < n; ++v)
        if (!by_label.emplace(g.label(v), v).second) labels_unique = false;

    std::map<int, int> vertex_of;
    std::vector<std::string> problems;
    std::vector<char> covered(n, 0);
    for (int l : alpha) {
        int v = -1;
        if (labels_unique) {
            auto it = by_label.find(w.display(l));
            if (it != by_label.end()) v = it->second;
        } else if (l >= 0 && l < n) {
            v = l;
        }
        if (v < 0) {
            problems.push_back("letter '" + w.display(l) + "' matches no vertex");
        } else if (covered[v]) {
            problems.push_back("letter '" + w.display(l) + "' collides with another letter");
        } else {
            covered[v] = 1;
            vertex_of[l] = v;
        }
    }
    for (int v = 0; v < n; ++v)
        if (!covered[v]) problems.push_back("vertex '" + g.label(v) + "' missing from word");
    if (!problems.empty()) {
        report.ok = false;
        report.diagnostic = "alphabet mismatch: " + problems.front();
        for (size_t i = 1; i < problems.size() && i < 4; ++i)
            report.diagnostic += "; " + problems[i];
        return report;
    }

    for (size_t i = 0; i < alpha.size(); ++i) {
        for (size_t j = i + 1; j < alpha.size(); ++j) {
            int x = alpha[i], y = alpha[j];
            bool alt = alternates(w, x, y);
            bool edge = g.has_edge(vertex_of[x], vertex_of[y]);
            if (alt == edge) continue;
            std::string pair = "(" + w.display(x) + "," + w.display(y) + ")";
            problems.push_back(alt ? "pair " + pair + " alternates but is not an edge"
                                   : "pair " + pair + " is an edge but does not alternate");
        }
    }
    if (!problems.empty()) {
        report.ok = false;
        report.diagnostic = "wrong edges: " + problems.front();
        for (size_t i = 1; i < problems.size() && i < 4; ++i)
            report.diagnostic += "; " + problems[i];
        return report;
    }
    report.ok = true;
    return report;
}

bool is_representant(const Word& w, const Graph& g) {
    return check_representant(w, g).ok;
}

namespace {

[[noreturn]] void bad_word(const std::string& msg) {
    throw std::runtime_error("word: " + msg);
}

int compact_letter(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
    if (c >= 'A' && c <= 'Z') return 36 + (c - 'A');
    bad_word(std::string("unsupported character '") + c + "' in compact word");
}

bool is_number(const std::string& tok) {
    if (tok.empty()) return false;
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Word parse_word(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> alphabet;
    bool have_alphabet = false;
    std::string content;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') {
            if (have_alphabet) bad_word("multiple alphabet lines");
            have_alphabet = true;
            std::istringstream ls(line.substr(1));
            std::string tok;
            while (ls >> tok) alphabet.push_back(tok);
            continue;
        }
        if (!content.empty()) content += ' ';
        content += line;
    }

    std::vector<std::string> tokens;
    {
        std::istringstream cs(content);
        std::string tok;
        while (cs >> tok) tokens.push_back(tok);
    }

    if (have_alphabet) {
        std::map<std::string, int> id;
        std::map<int, std::string> display;
        for (size_t i = 0; i < alphabet.size(); ++i) {
            if (!id.emplace(alphabet[i], static_cast<int>(i)).second)
                bad_word("duplicate alphabet token '" + alphabet[i] + "'");
            display[static_cast<int>(i)] = alphabet[i];
        }
        std::vector<int> letters;
        for (const auto& tok : tokens) {
            auto it = id.find(tok);
            if (it == id.end()) bad_word("token '" + tok + "' not in declared alphabet");
            letters.push_back(it->second);
        }
        return Word(std::move(letters), std::move(display));
    }

    if (tokens.empty()) return Word();

    if (tokens.size() == 1) {
        // Single run of characters: the compact form.
        std::vector<int> letters;
        std::map<int, std::string> display;
        for (char c : tokens[0]) {
            int l = compact_letter(c);
            letters.push_back(l);
            if (l >= 10) display[l] = std::string(1, c);
        }
        return Word(std::move(letters), std::move(display));
    }

    bool all_numeric = true;
    for (const auto& tok : tokens)
        if (!is_number(tok)) all_numeric = false;

    std::vector<int> letters;
    if (all_numeric) {
        for (const auto& tok : tokens) {
            try {
                letters.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                bad_word("numeric token '" + tok + "' out of range");
            }
        }
        return Word(std::move(letters));
    }

    // Mixed or symbolic tokens: ids in first-appearance order.
    std::map<std::string, int> id;
    std::map<int, std::string> display;
    for (const auto& tok : tokens) {
        auto it = id.find(tok);
        if (it == id.end()) {
            int next = static_cast<int>(id.size());
            it = id.emplace(tok, next).first;
            display[next] = tok;
        }
        letters.push_back(it->second);
    }
    return Word(std::move(letters), std::move(display));
}

std::string format_word(const Word& w) {
    bool compact = true;
    for (int l : w.alphabet())
        if (w.display(l).size() != 1) compact = false;
    std::string out;
    for (size_t i = 0; i < w.letters().size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += w.display(w.letters()[i]);
    }
    return out;
}

std::string format_word_tokens(const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.letters().size(); ++i) {
        if (i > 0) out += ' ';
        out += w.display(w.letters()[i]);
    }
    return out;
}

}  // namespace wordrep
