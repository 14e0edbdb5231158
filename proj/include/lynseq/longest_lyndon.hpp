#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lynseq/lyndon.hpp"
#include "lynseq/order_trie.hpp"
#include "lynseq/succinct.hpp"
#include "lynseq/text.hpp"

namespace lynseq {

struct traversal_stats {
    std::uint64_t nodes_visited = 0;
    std::uint64_t nodes_pruned = 0;
    std::uint64_t prune_table_lowerings = 0;  // updates of the per-length best table
    std::uint64_t range_queries = 0;          // wavelet tree queries (fast variant)
};

struct lyndon_result {
    int length = 0;
    position_seq positions;
    traversal_stats stats;
};

class node_cap_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

struct frame {
    int pos;     // text position of the last chosen character
    int period;  // smallest period of the implied pre-Lyndon string
    int ch;      // rank of the character at pos (the edge label)
};

// Debug check: the stack spells a pre-Lyndon word whose tracked period is
// the real smallest period (its period-length prefix must be Lyndon).
inline void validate_stack(const text& t, const std::vector<frame>& st) {
    lex_string s;
    for (const auto& f : st) s.ranks.push_back(t.rank_at(f.pos));
    int p = naive_period(s);
    if (p != st.back().period)
        throw std::logic_error("traversal: tracked period diverged from naive period");
    lex_string head = lex_string::of(std::vector<int>(s.ranks.begin(), s.ranks.begin() + p));
    if (!is_lyndon(head))
        throw std::logic_error("traversal: stack state is not pre-Lyndon");
}

}  // namespace detail

/// Longest Lyndon subsequence via a simulated preorder traversal of the
/// trie of pre-Lyndon subsequences. Children are enumerated in character
/// order through next-occurrence tables, each at its leftmost possible
/// position; a subtree is skipped when an already-explored (hence
/// lexicographically smaller) Lyndon subsequence of the same length ends
/// at or before the current end position.
template <bool Validate = false>
lyndon_result longest_lyndon_basic(const text& t) {
    int n = t.size();
    if (n < 1) throw std::invalid_argument("longest_lyndon: empty text");
    int sigma = t.sigma;
    next_occurrence_table nxt(t);

    lyndon_result res;
    std::vector<detail::frame> st;
    std::vector<int> prune(static_cast<std::size_t>(n) + 2, n + 1);  // n+1 = unexplored

    // first child of the current stack state with edge label >= start_c
    auto push_child = [&](int start_c) -> bool {
        int l = static_cast<int>(st.size());
        int from = l ? st.back().pos : 0;
        int lpc = l ? t.rank_at(st[static_cast<std::size_t>(l - st.back().period)].pos) : 0;
        for (int c = std::max(start_c, 1); c <= sigma; ++c) {
            int j = nxt.next(from, c);
            if (j > n) continue;
            int period = l == 0 ? 1 : (c == lpc ? st.back().period : l + 1);
            st.push_back({j, period, c});
            return true;
        }
        return false;
    };

    if (!push_child(1)) return res;
    while (true) {
        int l = static_cast<int>(st.size());
        const auto& top = st.back();
        ++res.stats.nodes_visited;
        if constexpr (Validate) detail::validate_stack(t, st);

        bool relevant = prune[static_cast<std::size_t>(l)] > top.pos;
        if (top.period == l) {  // Lyndon node
            if (prune[static_cast<std::size_t>(l)] > top.pos) {
                prune[static_cast<std::size_t>(l)] = top.pos;
                ++res.stats.prune_table_lowerings;
            }
            if (l > res.length) {
                res.length = l;
                res.positions.clear();
                for (const auto& f : st) res.positions.push_back(f.pos);
            }
        }

        bool descended = false;
        if (relevant) {
            int lpc = t.rank_at(st[static_cast<std::size_t>(l - top.period)].pos);
            descended = push_child(lpc);
        } else {
            ++res.stats.nodes_pruned;
        }
        if (!descended) {
            bool advanced = false;
            while (!st.empty()) {
                detail::frame f = st.back();
                st.pop_back();
                if (push_child(f.ch + 1)) { advanced = true; break; }
            }
            if (!advanced) break;
        }
    }
    return res;
}

/// Same answer as the basic variant, but children are located with a
/// range-maximum gate plus wavelet-tree range successor queries over the
/// window (i_l, prune[l+1]), so irrelevant nodes are never visited and
/// the returned witness is the lexicographically smallest longest Lyndon
/// subsequence.
template <bool Validate = false>
lyndon_result longest_lyndon_fast(const text& t) {
    int n = t.size();
    if (n < 1) throw std::invalid_argument("longest_lyndon: empty text");
    wavelet_tree wt(t);
    rmq_index rmq(t);

    lyndon_result res;
    std::vector<detail::frame> st;
    std::vector<int> prune(static_cast<std::size_t>(n) + 2, n + 1);

    // Smallest extension character above `threshold` whose occurrence
    // falls inside the open window (from, prune[l+1]); the RMQ gate
    // rejects windows whose largest character cannot extend the current
    // pre-Lyndon word, so every wavelet query yields a child.
    auto push_child = [&](int threshold) -> bool {
        int l = static_cast<int>(st.size());
        int from = l ? st.back().pos : 0;
        int lpc = l ? t.rank_at(st[static_cast<std::size_t>(l - st.back().period)].pos) : 1;
        int hi = prune[static_cast<std::size_t>(l + 1)] - 1;
        if (from + 1 > hi) return false;
        auto m = rmq.range_max_pos(from + 1, hi);
        if (!m) return false;
        int cmax = rmq.value_at(*m);
        if (cmax <= threshold || cmax < lpc) return false;
        auto r = wt.range_successor(from + 1, hi, threshold);
        ++res.stats.range_queries;
        assert(r && r->ch >= lpc);  // the gate guarantees a successor
        if (!r) return false;
        int period = l == 0 ? 1 : (r->ch == lpc ? st.back().period : l + 1);
        st.push_back({r->pos, period, r->ch});
        return true;
    };

    if (!push_child(0)) return res;
    while (true) {
        int l = static_cast<int>(st.size());
        const auto& top = st.back();
        ++res.stats.nodes_visited;
        if constexpr (Validate) detail::validate_stack(t, st);
        assert(prune[static_cast<std::size_t>(l)] > top.pos);  // windowing admits only relevant nodes

        if (top.period == l) {
            if (prune[static_cast<std::size_t>(l)] > top.pos) {
                prune[static_cast<std::size_t>(l)] = top.pos;
                ++res.stats.prune_table_lowerings;
            }
            if (l > res.length) {
                res.length = l;
                res.positions.clear();
                for (const auto& f : st) res.positions.push_back(f.pos);
            }
        }

        int lpc = t.rank_at(st[static_cast<std::size_t>(l - top.period)].pos);
        bool descended = push_child(lpc - 1);
        if (!descended) {
            bool advanced = false;
            while (!st.empty()) {
                detail::frame f = st.back();
                st.pop_back();
                if (push_child(f.ch)) { advanced = true; break; }
            }
            if (!advanced) break;
        }
    }
    return res;
}

/// Streaming computation over a pre-declared alphabet [1..sigma]. The
/// explored part of the pre-Lyndon subsequence trie is materialized
/// lazily; per character class c a list of pending nodes records where
/// the traversal resumes when the next c arrives. best[l] tracks the
/// lexicographically smallest length-l Lyndon subsequence of the prefix
/// consumed so far.
class online_lyndon {
public:
    explicit online_lyndon(int sigma, std::uint64_t node_cap = default_node_cap)
        : sigma_(sigma), node_cap_(node_cap) {
        if (sigma < 1) throw std::invalid_argument("online_lyndon: sigma must be positive");
        lists_.assign(static_cast<std::size_t>(sigma) + 1, {});
        for (int c = 1; c <= sigma; ++c)
            lists_[static_cast<std::size_t>(c)].push_back({order_trie::root(), 1});
        best_.push_back(std::nullopt);  // index 0 unused
    }

    static constexpr std::uint64_t default_node_cap = 1'000'000;

    /// Consume one character (rank in [1..sigma]); returns the longest
    /// Lyndon subsequence length of the prefix read so far.
    int push(int c) {
        if (c < 1 || c > sigma_)
            throw std::invalid_argument("online_lyndon: character outside [1..sigma]");
        ++consumed_;
        best_.resize(static_cast<std::size_t>(consumed_) + 1, std::nullopt);

        auto events = std::move(lists_[static_cast<std::size_t>(c)]);
        lists_[static_cast<std::size_t>(c)].clear();

        // grow leaves and update the per-length minima
        new_leaves_.clear();
        for (const auto& ev : events) {
            if (trie_.size() > node_cap_)
                throw node_cap_exceeded("online_lyndon: trie node cap exceeded");
            node_handle leaf = trie_.insert(ev.parent, c, consumed_);
            ++stats_.nodes_visited;
            new_leaves_.push_back({leaf, ev.child_period});
            int len = trie_.depth(leaf);
            if (ev.child_period == len) {  // leaf string is Lyndon
                auto& slot = best_[static_cast<std::size_t>(len)];
                if (!slot || trie_.precedes(leaf, *slot)) {
                    slot = leaf;
                    ++stats_.prune_table_lowerings;
                    if (len > best_len_) best_len_ = len;
                }
            }
        }

        // re-enlist the relevant leaves; a leaf whose string is already
        // beaten at its length can never contribute again
        for (const auto& [leaf, period] : new_leaves_) {
            int len = trie_.depth(leaf);
            const auto& slot = best_[static_cast<std::size_t>(len)];
            if (slot && trie_.precedes(*slot, leaf)) {
                ++stats_.nodes_pruned;
                continue;
            }
            int lpc = trie_.label(trie_.level_anc(leaf, len - period + 1));
            for (int c2 = lpc; c2 <= sigma_; ++c2)
                lists_[static_cast<std::size_t>(c2)].push_back({leaf, c2 == lpc ? period : len + 1});
        }
        return best_len_;
    }

    int consumed() const { return consumed_; }
    int current_length() const { return best_len_; }

    /// Smallest length-l Lyndon subsequence seen so far, bottom if none.
    lex_string best_string(int l) const {
        if (l < 1 || l > consumed_) return lex_string::bottom();
        const auto& slot = best_[static_cast<std::size_t>(l)];
        return slot ? trie_.string_of(*slot) : lex_string::bottom();
    }

    lyndon_result result() const {
        lyndon_result r;
        r.length = best_len_;
        if (best_len_ > 0) r.positions = trie_.positions_of(*best_[static_cast<std::size_t>(best_len_)]);
        r.stats = stats_;
        return r;
    }

    const order_trie& trie() const { return trie_; }
    const traversal_stats& stats() const { return stats_; }

private:
    struct event {
        node_handle parent;
        int child_period;  // period the child will carry (precomputed at enlist time)
    };

    int sigma_;
    std::uint64_t node_cap_;
    int consumed_ = 0;
    int best_len_ = 0;
    order_trie trie_;
    std::vector<std::vector<event>> lists_;
    std::vector<std::optional<node_handle>> best_;
    std::vector<std::pair<node_handle, int>> new_leaves_;
    traversal_stats stats_;
};

/// Offline wrapper: feed a whole text through the online algorithm.
inline lyndon_result longest_lyndon_online(const text& t,
                                           std::uint64_t node_cap = online_lyndon::default_node_cap) {
    if (t.size() < 1) throw std::invalid_argument("longest_lyndon: empty text");
    online_lyndon ol(t.sigma, node_cap);
    for (int r : t.ranks) ol.push(r);
    return ol.result();
}

/// Per-prefix lengths reported by the online algorithm.
inline std::vector<int> online_prefix_lengths(const text& t,
                                              std::uint64_t node_cap = online_lyndon::default_node_cap) {
    online_lyndon ol(t.sigma == 0 ? 1 : t.sigma, node_cap);
    std::vector<int> out;
    out.reserve(t.ranks.size());
    for (int r : t.ranks) out.push_back(ol.push(r));
    return out;
}

}  // namespace lynseq
