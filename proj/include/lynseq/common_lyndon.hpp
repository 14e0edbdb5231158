#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lynseq/longest_lyndon.hpp"
#include "lynseq/lyndon.hpp"
#include "lynseq/succinct.hpp"
#include "lynseq/text.hpp"

namespace lynseq {

/// Pairwise non-dominated end-position pairs (x, y) of common Lyndon
/// subsequences of one length, with a constant-time dominance index:
/// r[i] = min{ y : (x, y) stored, x <= i }. Pairs are kept sorted by x
/// with strictly decreasing y.
class pair_list {
public:
    static constexpr int inf = std::numeric_limits<int>::max();

    explicit pair_list(int nx) : r_(static_cast<std::size_t>(nx) + 1, inf) {}

    int universe() const { return static_cast<int>(r_.size()) - 1; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    const std::vector<int>& dominance() const { return r_; }

    /// True iff some stored pair (x', y') has x' <= x and y' <= y.
    bool is_dominated(int x, int y) const {
        if (x < 1 || x > universe())
            throw std::invalid_argument("pair_list: x out of range");
        return r_[static_cast<std::size_t>(x)] <= y;
    }

    /// Insert a non-dominated pair, evict pairs it dominates, and patch
    /// the dominance index from x forward until an existing smaller
    /// value stops the propagation.
    void insert(int x, int y) {
        if (is_dominated(x, y))
            throw std::invalid_argument("pair_list::insert: pair is dominated");
        auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::pair<int, int>{x, 0});
        auto last = it;
        while (last != pairs_.end() && last->second >= y) ++last;
        it = pairs_.erase(it, last);
        pairs_.insert(it, {x, y});
        for (std::size_t i = static_cast<std::size_t>(x); i < r_.size() && r_[i] > y; ++i)
            r_[i] = y;
    }

    /// Full recomputation check of the dominance index (test hook).
    bool index_consistent() const {
        int nx = universe();
        for (int i = 1; i <= nx; ++i) {
            int want = inf;
            for (const auto& [px, py] : pairs_)
                if (px <= i) want = std::min(want, py);
            if (r_[static_cast<std::size_t>(i)] != want) return false;
            if (i > 1 && r_[static_cast<std::size_t>(i)] > r_[static_cast<std::size_t>(i - 1)]) return false;
        }
        return true;
    }

private:
    std::vector<std::pair<int, int>> pairs_;  // sorted by x, y strictly decreasing
    std::vector<int> r_;
};

struct common_lyndon_result {
    int length = 0;
    position_seq positions_x;
    position_seq positions_y;
    traversal_stats stats;
    std::uint64_t pair_insertions = 0;
};

namespace detail {

struct pair_frame {
    int x, y;    // leftmost end positions of the common string in X and Y
    int period;  // smallest period of the common string
    int ch;      // rank of the last character
};

}  // namespace detail

/// Longest common subsequence of X and Y that is a Lyndon word, by
/// depth-first search over common pre-Lyndon subsequences in character
/// order with leftmost embeddings in both strings. A subtree is skipped
/// when the current end-position pair is dominated at its length.
template <bool Validate = false>
common_lyndon_result longest_common_lyndon(const text& x, const text& y) {
    if (x.size() < 1 || y.size() < 1)
        throw std::invalid_argument("longest_common_lyndon: empty text");
    if (x.sigma != y.sigma)
        throw std::invalid_argument("longest_common_lyndon: texts must share one normalized alphabet");
    int sigma = x.sigma;
    int max_len = std::min(x.size(), y.size());
    next_occurrence_table nex_x(x), nex_y(y);

    common_lyndon_result res;
    std::vector<detail::pair_frame> st;
    std::vector<pair_list> lists;
    lists.reserve(static_cast<std::size_t>(max_len) + 1);
    for (int l = 0; l <= max_len; ++l) lists.emplace_back(x.size());

    auto push_child = [&](int start_c) -> bool {
        int l = static_cast<int>(st.size());
        if (l == max_len) return false;  // cannot extend a common subsequence further
        int fx = l ? st.back().x : 0;
        int fy = l ? st.back().y : 0;
        int lpc = l ? x.rank_at(st[static_cast<std::size_t>(l - st.back().period)].x) : 0;
        for (int c = std::max(start_c, 1); c <= sigma; ++c) {
            int px = nex_x.next(fx, c);
            int py = nex_y.next(fy, c);
            if (px > x.size() || py > y.size()) continue;
            int period = l == 0 ? 1 : (c == lpc ? st.back().period : l + 1);
            st.push_back({px, py, period, c});
            return true;
        }
        return false;
    };

    if (!push_child(1)) return res;
    while (true) {
        int l = static_cast<int>(st.size());
        const auto& top = st.back();
        ++res.stats.nodes_visited;
        if constexpr (Validate) {
            lex_string sx, sy;
            for (const auto& f : st) {
                sx.ranks.push_back(x.rank_at(f.x));
                sy.ranks.push_back(y.rank_at(f.y));
            }
            if (!(sx == sy)) throw std::logic_error("common traversal: embeddings spell different strings");
            if (naive_period(sx) != top.period)
                throw std::logic_error("common traversal: tracked period diverged");
        }

        bool relevant = !lists[static_cast<std::size_t>(l)].is_dominated(top.x, top.y);
        if (relevant && top.period == l) {  // new non-dominated Lyndon pair
            lists[static_cast<std::size_t>(l)].insert(top.x, top.y);
            ++res.pair_insertions;
            if constexpr (Validate) {
                if (!lists[static_cast<std::size_t>(l)].index_consistent())
                    throw std::logic_error("pair_list: dominance index inconsistent");
            }
            if (l > res.length) {
                res.length = l;
                res.positions_x.clear();
                res.positions_y.clear();
                for (const auto& f : st) {
                    res.positions_x.push_back(f.x);
                    res.positions_y.push_back(f.y);
                }
            }
        }

        bool descended = false;
        if (relevant) {
            int lpc = x.rank_at(st[static_cast<std::size_t>(l - top.period)].x);
            descended = push_child(lpc);
        } else {
            ++res.stats.nodes_pruned;
        }
        if (!descended) {
            bool advanced = false;
            while (!st.empty()) {
                detail::pair_frame f = st.back();
                st.pop_back();
                if (push_child(f.ch + 1)) { advanced = true; break; }
            }
            if (!advanced) break;
        }
    }
    return res;
}

}  // namespace lynseq
