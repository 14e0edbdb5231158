#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lynseq/order_trie.hpp"
#include "lynseq/text.hpp"

namespace lynseq {

/// Table of lexicographically smallest subsequences per prefix and
/// length, naive variant: cells are handles into a shared string arena
/// and comparisons are plain character-wise compares. Characters are
/// consumed one at a time; after push(c) the answers for the prefix read
/// so far are final.
class lex_table_naive {
public:
    lex_table_naive() { pool_.emplace_back(); }  // arena slot 0 = empty string

    explicit lex_table_naive(const text& t) : lex_table_naive() {
        for (int r : t.ranks) push(r);
    }

    /// Consume the next character (a rank).
    void push(int c) {
        int i = n() + 1;
        std::vector<std::int32_t> col(static_cast<std::size_t>(i));
        for (int l = 1; l <= i; ++l) {
            std::int32_t u = l == 1 ? 0 : cols_.back()[static_cast<std::size_t>(l - 2)];
            std::vector<int> cand = pool_[static_cast<std::size_t>(u)];
            cand.push_back(c);
            if (l == i) {
                col[static_cast<std::size_t>(l - 1)] = put(std::move(cand));
            } else {
                std::int32_t v = cols_.back()[static_cast<std::size_t>(l - 1)];
                if (cand < pool_[static_cast<std::size_t>(v)])
                    col[static_cast<std::size_t>(l - 1)] = put(std::move(cand));
                else
                    col[static_cast<std::size_t>(l - 1)] = v;
            }
        }
        cols_.push_back(std::move(col));
    }

    int n() const { return static_cast<int>(cols_.size()); }

    /// Smallest length-l subsequence of the first i characters; bottom
    /// where l > i.
    lex_string smallest(int i, int l) const {
        check(i, l);
        if (l > i) return lex_string::bottom();
        return lex_string::of(pool_[static_cast<std::size_t>(cols_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(l - 1)])]);
    }

private:
    void check(int i, int l) const {
        if (i < 1 || i > n() || l < 1)
            throw std::invalid_argument("lex_table: index out of range");
    }

    std::int32_t put(std::vector<int> s) {
        pool_.push_back(std::move(s));
        return static_cast<std::int32_t>(pool_.size() - 1);
    }

    std::vector<std::vector<int>> pool_;
    std::vector<std::vector<std::int32_t>> cols_;
};

/// Same table, fast variant: cells are order_trie nodes and every
/// comparison goes through `precedes`. Copying an existing cell is
/// always preferred over creating a node, which keeps the trie free of
/// duplicate strings.
class lex_table_fast {
public:
    lex_table_fast() = default;

    explicit lex_table_fast(const text& t) {
        for (int r : t.ranks) push(r);
    }

    void push(int c) {
        int i = n() + 1;
        std::vector<node_handle> col(static_cast<std::size_t>(i));
        for (int l = 1; l <= i; ++l) {
            node_handle u = l == 1 ? order_trie::root() : cols_.back()[static_cast<std::size_t>(l - 2)];
            if (l == i) {
                col[static_cast<std::size_t>(l - 1)] = trie_.insert(u, c, i);
                continue;
            }
            node_handle v = cols_.back()[static_cast<std::size_t>(l - 1)];
            node_handle pv = trie_.parent(v);
            bool extend;
            if (pv == u)
                extend = c < trie_.label(v);  // equal label means equal strings: copy
            else
                extend = trie_.precedes(u, pv);
            col[static_cast<std::size_t>(l - 1)] = extend ? trie_.insert(u, c, i) : v;
        }
        cols_.push_back(std::move(col));
    }

    int n() const { return static_cast<int>(cols_.size()); }

    lex_string smallest(int i, int l) const {
        return trie_.string_of(handle_at(i, l));
    }

    /// Trie node backing cell (i, l); root where the cell is bottom.
    node_handle handle_at(int i, int l) const {
        if (i < 1 || i > n() || l < 1)
            throw std::invalid_argument("lex_table: index out of range");
        if (l > i) return order_trie::root();
        return cols_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(l - 1)];
    }

    const order_trie& trie() const { return trie_; }

private:
    order_trie trie_;
    std::vector<std::vector<node_handle>> cols_;
};

/// Positions of the lexicographically smallest length-len subsequence of
/// the whole text; one left-to-right pass over a stack. A position is
/// popped only while enough text remains to refill the stack.
inline position_seq most_competitive(const text& t, int len) {
    int n = t.size();
    if (len < 1 || len > n)
        throw std::invalid_argument("most_competitive: length out of range");
    position_seq st;
    st.reserve(static_cast<std::size_t>(len));
    for (int i = 1; i <= n; ++i) {
        while (!st.empty() && t.rank_at(st.back()) > t.rank_at(i) &&
               static_cast<int>(st.size()) - 1 + (n - i + 1) >= len)
            st.pop_back();
        if (static_cast<int>(st.size()) < len) st.push_back(i);
    }
    return st;
}

/// Smallest common subsequence of X and Y per length, as a cube of trie
/// handles indexed by (length, x-prefix, y-prefix). The root node plays
/// the empty word at level 0 and the infeasible marker (bottom) at
/// levels >= 1; levels are stratified so the two never mix.
class common_lex_cube {
public:
    common_lex_cube(const text& x, const text& y, bool retain_levels = true)
        : nx_(x.size()), ny_(y.size()), retain_(retain_levels) {
        if (nx_ < 1 || ny_ < 1)
            throw std::invalid_argument("common_lex_cube: texts must be non-empty");
        max_len_ = std::min(nx_, ny_);
        results_.assign(static_cast<std::size_t>(max_len_) + 1, order_trie::root());
        grid prev(cells(), order_trie::root());  // level 0: the empty word everywhere
        if (retain_) levels_.push_back(prev);
        for (int l = 1; l <= max_len_; ++l) {
            grid cur(cells(), order_trie::root());
            for (int xi = 1; xi <= nx_; ++xi) {
                for (int yi = 1; yi <= ny_; ++yi) {
                    node_handle left = cur[idx(xi - 1, yi)];
                    node_handle up = cur[idx(xi, yi - 1)];
                    node_handle copy = better(left, up);
                    node_handle cell = copy;
                    if (x.rank_at(xi) == y.rank_at(yi)) {
                        node_handle base = prev[idx(xi - 1, yi - 1)];
                        bool base_ok = l == 1 || !(base == order_trie::root());
                        if (base_ok) {
                            int c = x.rank_at(xi);
                            if (copy == order_trie::root()) {
                                cell = trie_.insert(base, c);
                            } else if (trie_.parent(copy) == base && trie_.label(copy) == c) {
                                cell = copy;  // extension equals the copied string
                            } else {
                                node_handle pc = trie_.parent(copy);
                                bool ext_smaller = base == pc ? c < trie_.label(copy)
                                                              : trie_.precedes(base, pc);
                                cell = ext_smaller ? trie_.insert(base, c) : copy;
                            }
                        }
                    }
                    cur[idx(xi, yi)] = cell;
                }
            }
            results_[static_cast<std::size_t>(l)] = cur[idx(nx_, ny_)];
            if (retain_) levels_.push_back(cur);
            prev = std::move(cur);
        }
    }

    int max_len() const { return max_len_; }

    /// Smallest common subsequence of length l, bottom when none exists.
    lex_string result(int l) const { return trie_.string_of(result_handle(l)); }

    node_handle result_handle(int l) const {
        if (l < 1 || l > max_len_)
            throw std::invalid_argument("common_lex_cube: length out of range");
        return results_[static_cast<std::size_t>(l)];
    }

    /// Cell inspection; requires retain_levels.
    node_handle cell(int l, int xi, int yi) const {
        if (!retain_) throw std::logic_error("common_lex_cube: levels not retained");
        return levels_[static_cast<std::size_t>(l)][idx(xi, yi)];
    }

    const order_trie& trie() const { return trie_; }

private:
    using grid = std::vector<node_handle>;

    std::size_t cells() const { return static_cast<std::size_t>(nx_ + 1) * static_cast<std::size_t>(ny_ + 1); }
    std::size_t idx(int xi, int yi) const { return static_cast<std::size_t>(xi) * static_cast<std::size_t>(ny_ + 1) + static_cast<std::size_t>(yi); }

    node_handle better(node_handle a, node_handle b) const {
        if (a == b) return a;
        if (a == order_trie::root()) return b;
        if (b == order_trie::root()) return a;
        return trie_.precedes(a, b) ? a : b;
    }

    int nx_, ny_;
    bool retain_;
    int max_len_ = 0;
    order_trie trie_;
    std::vector<node_handle> results_;
    std::vector<grid> levels_;
};

/// Convenience: the per-length results of the cube, indices 1..min(|x|,|y|).
inline std::vector<lex_string> lex_smallest_common_per_length(const text& x, const text& y) {
    common_lex_cube cube(x, y, /*retain_levels=*/false);
    std::vector<lex_string> out(static_cast<std::size_t>(cube.max_len()) + 1, lex_string::bottom());
    for (int l = 1; l <= cube.max_len(); ++l) out[static_cast<std::size_t>(l)] = cube.result(l);
    return out;
}

}  // namespace lynseq
