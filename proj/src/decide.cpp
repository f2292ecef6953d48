#include "wordrep/decide.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace wordrep {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::representable: return "representable";
        case Verdict::non_representable: return "non-representable";
        case Verdict::unknown: return "unknown";
    }
    return "?";
}

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::orientation: return "orientation";
        case Strategy::word_search: return "word-search";
        case Strategy::auto_select: return "auto";
    }
    return "?";
}

std::optional<Strategy> strategy_from_string(const std::string& name) {
    if (name == "orientation") return Strategy::orientation;
    if (name == "word-search") return Strategy::word_search;
    if (name == "auto") return Strategy::auto_select;
    return std::nullopt;
}

namespace {

// Backtracking over edge orientations. State is a growing DAG; after each
// assignment the partial orientation is rechecked: a directed cycle or a
// directed u->v edge with non-adjacent x, y satisfying u => x => y => v
// can never be repaired by orienting more edges, so the subtree is cut.
class OrientationSearch {
public:
    OrientationSearch(const Graph& g, std::uint64_t budget)
        : g_(g),
          n_(g.vertex_count()),
          m_(g.edge_count()),
          stride_((n_ + 63) / 64),
          budget_(budget) {
        stats_.budget = budget;
        out_.assign(size_t(n_) * stride_, 0);
        nonadj_.assign(size_t(n_) * stride_, 0);
        for (int v = 0; v < n_; ++v)
            for (int w = 0; w < n_; ++w)
                if (w != v && !g.has_edge(v, w)) set_bit(nonadj_, v, w);
        order_.resize(m_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            const auto& ea = g.edges()[a];
            const auto& eb = g.edges()[b];
            int da = std::max(g.degree(ea.first), g.degree(ea.second));
            int db = std::max(g.degree(eb.first), g.degree(eb.second));
            if (da != db) return da > db;
            return ea < eb;
        });
        oriented_.reserve(m_);
        reach_.assign(size_t(n_) * stride_, 0);
        reach_to_.assign(size_t(n_) * stride_, 0);
        indeg_.assign(n_, 0);
        topo_.reserve(n_);
        assigned_dir_.assign(m_, 0);
        witness_.assign(m_, false);
    }

    Certificate run() {
        bool found = dfs(0);
        Certificate cert;
        cert.strategy = Strategy::orientation;
        cert.stats = stats_;
        if (found) {
            cert.verdict = Verdict::representable;
            cert.witness_orientation = Orientation(g_, witness_);
        } else if (out_of_budget_) {
            cert.verdict = Verdict::unknown;
        } else {
            cert.verdict = Verdict::non_representable;
            cert.stats.exhausted = true;
        }
        return cert;
    }

private:
    void set_bit(std::vector<std::uint64_t>& rows, int v, int w) {
        rows[size_t(v) * stride_ + w / 64] |= std::uint64_t(1) << (w % 64);
    }

    // 0 = consistent, 1 = directed cycle, 2 = shortcut.
    int violation() {
        std::fill(indeg_.begin(), indeg_.end(), 0);
        for (const auto& [a, b] : oriented_) ++indeg_[b];
        topo_.clear();
        for (int v = 0; v < n_; ++v)
            if (indeg_[v] == 0) topo_.push_back(v);
        for (size_t head = 0; head < topo_.size(); ++head) {
            int v = topo_[head];
            for (int j = 0; j < stride_; ++j) {
                std::uint64_t bits = out_[size_t(v) * stride_ + j];
                while (bits) {
                    int w = j * 64 + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    if (--indeg_[w] == 0) topo_.push_back(w);
                }
            }
        }
        if (static_cast<int>(topo_.size()) != n_) return 1;

        std::fill(reach_.begin(), reach_.end(), 0);
        for (int i = n_ - 1; i >= 0; --i) {
            int v = topo_[i];
            auto* rv = reach_.data() + size_t(v) * stride_;
            for (int j = 0; j < stride_; ++j) {
                std::uint64_t bits = out_[size_t(v) * stride_ + j];
                rv[j] |= bits;
                while (bits) {
                    int w = j * 64 + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    const auto* rw = reach_.data() + size_t(w) * stride_;
                    for (int jj = 0; jj < stride_; ++jj) rv[jj] |= rw[jj];
                }
            }
        }
        std::fill(reach_to_.begin(), reach_to_.end(), 0);
        for (int v = 0; v < n_; ++v) {
            const auto* rv = reach_.data() + size_t(v) * stride_;
            for (int j = 0; j < stride_; ++j) {
                std::uint64_t bits = rv[j];
                while (bits) {
                    int w = j * 64 + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    set_bit(reach_to_, w, v);
                }
            }
        }

        for (const auto& [a, b] : oriented_) {
            const auto* ra = reach_.data() + size_t(a) * stride_;
            const auto* tb = reach_to_.data() + size_t(b) * stride_;
            for (int j = 0; j < stride_; ++j) {
                std::uint64_t between = ra[j] | (j == a / 64 ? std::uint64_t(1) << (a % 64) : 0);
                between &= tb[j] | (j == b / 64 ? std::uint64_t(1) << (b % 64) : 0);
                while (between) {
                    int x = j * 64 + __builtin_ctzll(between);
                    between &= between - 1;
                    const auto* rx = reach_.data() + size_t(x) * stride_;
                    const auto* nx = nonadj_.data() + size_t(x) * stride_;
                    for (int jj = 0; jj < stride_; ++jj) {
                        std::uint64_t to_b =
                            tb[jj] | (jj == b / 64 ? std::uint64_t(1) << (b % 64) : 0);
                        if (rx[jj] & to_b & nx[jj]) return 2;
                    }
                }
            }
        }
        return 0;
    }

    bool dfs(int depth) {
        if (depth == m_) {
            for (int d = 0; d < m_; ++d) witness_[order_[d]] = (assigned_dir_[d] == 2);
            return true;
        }
        const int e = order_[depth];
        const auto& [u, v] = g_.edges()[e];
        for (int dir = 1; dir <= 2; ++dir) {
            ++stats_.expansions;
            if (stats_.expansions > budget_) {
                out_of_budget_ = true;
                return false;
            }
            int a = dir == 1 ? u : v;
            int b = dir == 1 ? v : u;
            set_bit(out_, a, b);
            oriented_.push_back({a, b});
            int bad = violation();
            if (bad == 0) {
                assigned_dir_[depth] = dir;
                if (dfs(depth + 1)) return true;
            } else if (bad == 1) {
                ++stats_.cycle_prunes;
            } else {
                ++stats_.shortcut_prunes;
            }
            oriented_.pop_back();
            out_[size_t(a) * stride_ + b / 64] &= ~(std::uint64_t(1) << (b % 64));
            if (out_of_budget_) return false;
        }
        return false;
    }

    const Graph& g_;
    int n_, m_, stride_;
    std::uint64_t budget_;
    std::vector<int> order_;
    std::vector<std::uint64_t> out_, nonadj_, reach_, reach_to_;
    std::vector<int> indeg_, topo_;
    std::vector<std::pair<int, int>> oriented_;
    std::vector<std::int8_t> assigned_dir_;
    std::vector<bool> witness_;
    SearchStats stats_;
    bool out_of_budget_ = false;
};

}  // namespace

Certificate has_semi_transitive_orientation(const Graph& g, std::uint64_t budget) {
    OrientationSearch search(g, budget);
    Certificate cert = search.run();
    if (cert.verdict == Verdict::representable && cert.witness_orientation &&
        !is_semi_transitive(*cert.witness_orientation))
        throw std::logic_error("orientation search returned an invalid witness");
    return cert;
}

namespace {

// DFS over k-uniform words with the first letter pinned to vertex 0.
// Pair state tracks, for every letter pair, which letter occurred last
// and whether its alternation is already broken; candidates that break a
// required alternation, starve it of occurrences, or seal a non-edge
// pair into full alternation are rejected before recursing, so every
// leaf reached is a representant.
class UniformWordSearch {
public:
    UniformWordSearch(const Graph& g, int k, std::uint64_t budget)
        : n_(g.vertex_count()), k_(k), len_(n_ * k), budget_(budget) {
        if (n_ < 1) throw std::invalid_argument("word search: graph needs a vertex");
        if (k < 1) throw std::invalid_argument("word search: need k >= 1");
        stats_.budget = budget;
        adj_.assign(size_t(n_) * n_, 0);
        for (const auto& [u, v] : g.edges())
            adj_[size_t(u) * n_ + v] = adj_[size_t(v) * n_ + u] = 1;
        counts_.assign(n_, 0);
        word_.assign(len_, 0);
        last_.assign(size_t(n_) * n_, -1);
        broken_.assign(size_t(n_) * n_, 0);
        undo_last_.assign(size_t(len_) * n_, 0);
        undo_broken_.assign(size_t(len_) * n_, 0);
        bool unique = true;
        std::vector<std::string> seen;
        for (int v = 0; v < n_; ++v) seen.push_back(g.label(v));
        std::sort(seen.begin(), seen.end());
        unique = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
        if (g.has_labels() && unique)
            for (int v = 0; v < n_; ++v) display_[v] = g.label(v);
    }

    SearchStatus run(const std::function<bool(const Word&)>& visit) {
        visit_ = &visit;
        place(0, 0);
        if (!stopped_ && !out_of_budget_) dfs(1);
        unplace(0, 0);
        if (stopped_) return SearchStatus::found;
        if (out_of_budget_) return SearchStatus::unknown;
        stats_.exhausted = true;
        return SearchStatus::absent;
    }

    const SearchStats& stats() const { return stats_; }

private:
    bool candidate_ok(int a) {
        if (counts_[a] == k_) return false;
        const int ra = k_ - counts_[a] - 1;
        for (int b = 0; b < n_; ++b) {
            if (b == a) continue;
            const size_t p = size_t(a) * n_ + b;
            const int rb = k_ - counts_[b];
            if (adj_[p]) {
                if (last_[p] == a || (rb != ra && rb != ra + 1)) {
                    ++stats_.alternation_prunes;
                    return false;
                }
            } else if (!broken_[p] && last_[p] != a && ra == 0 && rb <= 1) {
                ++stats_.alternation_prunes;
                return false;
            }
        }
        return true;
    }

    void place(int pos, int a) {
        for (int b = 0; b < n_; ++b) {
            if (b == a) continue;
            const size_t p = size_t(a) * n_ + b, q = size_t(b) * n_ + a;
            undo_last_[size_t(pos) * n_ + b] = last_[p];
            undo_broken_[size_t(pos) * n_ + b] = broken_[p];
            if (last_[p] == a) broken_[p] = broken_[q] = 1;
            last_[p] = last_[q] = a;
        }
        ++counts_[a];
        word_[pos] = a;
    }

    void unplace(int pos, int a) {
        --counts_[a];
        for (int b = 0; b < n_; ++b) {
            if (b == a) continue;
            const size_t p = size_t(a) * n_ + b, q = size_t(b) * n_ + a;
            last_[p] = last_[q] = undo_last_[size_t(pos) * n_ + b];
            broken_[p] = broken_[q] = undo_broken_[size_t(pos) * n_ + b];
        }
    }

    void dfs(int pos) {
        if (pos == len_) {
            Word w(word_, display_);
            if (!(*visit_)(w)) stopped_ = true;
            return;
        }
        for (int a = 0; a < n_; ++a) {
            ++stats_.expansions;
            if (stats_.expansions > budget_) {
                out_of_budget_ = true;
                return;
            }
            if (!candidate_ok(a)) continue;
            place(pos, a);
            dfs(pos + 1);
            unplace(pos, a);
            if (stopped_ || out_of_budget_) return;
        }
    }

    int n_, k_, len_;
    std::uint64_t budget_;
    std::vector<char> adj_, broken_, undo_broken_;
    std::vector<int> counts_, word_, last_, undo_last_;
    std::map<int, std::string> display_;
    const std::function<bool(const Word&)>* visit_ = nullptr;
    SearchStats stats_;
    bool stopped_ = false, out_of_budget_ = false;
};

}  // namespace

SearchStats enumerate_k_uniform_representants(const Graph& g, int k, std::uint64_t budget,
                                              const std::function<bool(const Word&)>& visit) {
    UniformWordSearch search(g, k, budget);
    search.run(visit);
    return search.stats();
}

WordSearchResult find_k_uniform_representant(const Graph& g, int k, std::uint64_t budget) {
    UniformWordSearch search(g, k, budget);
    WordSearchResult result;
    std::optional<Word> found;
    result.status = search.run([&](const Word& w) {
        found = w;
        return false;
    });
    result.stats = search.stats();
    if (result.status == SearchStatus::found) {
        if (!found || !is_representant(*found, g))
            throw std::logic_error("word search returned an invalid witness");
        result.word = std::move(found);
    }
    return result;
}

namespace {

Certificate decide_trivial(const Graph& g, Strategy strategy) {
    Certificate cert;
    cert.strategy = strategy;
    cert.verdict = Verdict::representable;
    cert.stats.exhausted = true;
    if (g.vertex_count() == 0) {
        cert.witness_word = Word();
    } else {
        std::map<int, std::string> display;
        if (g.has_labels()) display[0] = g.label(0);
        cert.witness_word = Word({0}, std::move(display));
    }
    return cert;
}

}  // namespace

Certificate decide_representable(const Graph& g, const DecideOptions& options) {
    if (g.vertex_count() <= 1) return decide_trivial(g, options.strategy);

    if (options.strategy == Strategy::orientation) {
        Certificate cert = has_semi_transitive_orientation(g, options.orientation_budget);
        return cert;
    }

    // Word phase, shared by word-search and auto: cumulative budget over
    // the uniformities 1..k_max.
    Certificate cert;
    cert.strategy = options.strategy;
    cert.stats.budget = options.word_budget;
    bool all_exhausted = true;
    for (int k = 1; k <= options.k_max; ++k) {
        std::uint64_t remaining = options.word_budget > cert.stats.expansions
                                      ? options.word_budget - cert.stats.expansions
                                      : 0;
        WordSearchResult r = find_k_uniform_representant(g, k, remaining);
        cert.stats.expansions += r.stats.expansions;
        cert.stats.alternation_prunes += r.stats.alternation_prunes;
        if (r.status == SearchStatus::found) {
            cert.verdict = Verdict::representable;
            cert.witness_word = r.word;
            return cert;
        }
        if (r.status == SearchStatus::unknown) all_exhausted = false;
    }

    if (options.strategy == Strategy::word_search) {
        // Word search alone never proves non-representability.
        cert.verdict = Verdict::unknown;
        cert.stats.exhausted = all_exhausted;
        return cert;
    }

    Certificate oc = has_semi_transitive_orientation(g, options.orientation_budget);
    oc.strategy = Strategy::auto_select;
    oc.stats.expansions += cert.stats.expansions;
    oc.stats.alternation_prunes = cert.stats.alternation_prunes;
    oc.stats.budget = options.word_budget + options.orientation_budget;
    return oc;
}

std::string certificate_text(const Certificate& c) {
    std::ostringstream out;
    out << "verdict: " << to_string(c.verdict) << '\n';
    out << "strategy: " << to_string(c.strategy) << '\n';
    out << "witness-word: ";
    if (c.witness_word)
        out << (c.witness_word->empty() ? "(empty)" : format_word_tokens(*c.witness_word));
    else
        out << "(none)";
    out << '\n';
    out << "witness-orientation: ";
    if (c.witness_orientation) {
        const auto pairs = c.witness_orientation->directed_edges();
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (i) out << ' ';
            out << pairs[i].first << "->" << pairs[i].second;
        }
        if (pairs.empty()) out << "(empty)";
    } else {
        out << "(none)";
    }
    out << '\n';
    out << "constructive: " << (c.constructive() ? "yes" : "no") << '\n';
    out << "expansions: " << c.stats.expansions << '\n';
    out << "budget: " << c.stats.budget << '\n';
    out << "exhausted: " << (c.stats.exhausted ? "yes" : "no") << '\n';
    out << "cycle-prunes: " << c.stats.cycle_prunes << '\n';
    out << "shortcut-prunes: " << c.stats.shortcut_prunes << '\n';
    out << "alternation-prunes: " << c.stats.alternation_prunes << '\n';
    return out.str();
}

std::string certificate_json(const Certificate& c) {
    nlohmann::ordered_json j;
    j["verdict"] = to_string(c.verdict);
    j["strategy"] = to_string(c.strategy);
    if (c.witness_word)
        j["witness_word"] = format_word_tokens(*c.witness_word);
    else
        j["witness_word"] = nullptr;
    if (c.witness_orientation) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (auto [a, b] : c.witness_orientation->directed_edges())
            arr.push_back({a, b});
        j["witness_orientation"] = arr;
    } else {
        j["witness_orientation"] = nullptr;
    }
    j["constructive"] = c.constructive();
    j["expansions"] = c.stats.expansions;
    j["budget"] = c.stats.budget;
    j["exhausted"] = c.stats.exhausted;
    j["cycle_prunes"] = c.stats.cycle_prunes;
    j["shortcut_prunes"] = c.stats.shortcut_prunes;
    j["alternation_prunes"] = c.stats.alternation_prunes;
    return j.dump(2);
}

}  // namespace wordrep
