#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lynseq/text.hpp"

namespace lynseq {

/// Character/position result of a range successor query.
struct char_pos {
    int ch = 0;
    int pos = 0;
    bool operator==(const char_pos&) const = default;
};

/// Plain bitvector with a cumulative popcount per 64-bit word.
class bit_vector_rank {
public:
    bit_vector_rank() = default;
    explicit bit_vector_rank(const std::vector<bool>& bits) : n_(bits.size()) {
        words_.assign(n_ / 64 + 1, 0);
        for (std::size_t i = 0; i < n_; ++i)
            if (bits[i]) words_[i / 64] |= std::uint64_t{1} << (i % 64);
        cum_.assign(words_.size() + 1, 0);
        for (std::size_t w = 0; w < words_.size(); ++w)
            cum_[w + 1] = cum_[w] + static_cast<std::uint32_t>(std::popcount(words_[w]));
    }

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

    /// Number of one bits in [0..i), 0 <= i <= size().
    std::size_t rank1(std::size_t i) const {
        std::size_t w = i / 64, r = i % 64;
        std::size_t res = cum_[w];
        if (r) res += static_cast<std::size_t>(std::popcount(words_[w] & ((std::uint64_t{1} << r) - 1)));
        return res;
    }

    std::size_t rank0(std::size_t i) const { return i - rank1(i); }

    /// Position of the k-th one bit (k >= 1), found by binary search on
    /// rank; no select acceleration structures are kept.
    std::size_t select1(std::size_t k) const {
        std::size_t lo = 0, hi = n_;  // smallest i with rank1(i) >= k
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (rank1(mid + 1) >= k) hi = mid; else lo = mid + 1;
        }
        return lo;
    }

    std::size_t select0(std::size_t k) const {
        std::size_t lo = 0, hi = n_;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (rank0(mid + 1) >= k) hi = mid; else lo = mid + 1;
        }
        return lo;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint32_t> cum_;
};

/// Wavelet tree over the rank alphabet [1..sigma] of a text, supporting
/// access and range successor queries (smallest character above a
/// threshold inside a position range, with its leftmost occurrence).
class wavelet_tree {
public:
    wavelet_tree() = default;

    explicit wavelet_tree(const text& t) : n_(t.size()), sigma_(t.sigma) {
        if (n_ == 0 || sigma_ == 0) return;
        root_ = build(t.ranks, 1, sigma_);
    }

    int size() const { return n_; }

    /// Rank value at 1-based position i.
    int access(int i) const {
        int cur = root_;
        std::size_t idx = static_cast<std::size_t>(i);  // 1-based within node sequence
        while (nodes_[static_cast<std::size_t>(cur)].lo != nodes_[static_cast<std::size_t>(cur)].hi) {
            const auto& nd = nodes_[static_cast<std::size_t>(cur)];
            if (!nd.bits.get(idx - 1)) {
                idx = nd.bits.rank0(idx);
                cur = nd.left;
            } else {
                idx = nd.bits.rank1(idx);
                cur = nd.right;
            }
        }
        return nodes_[static_cast<std::size_t>(cur)].lo;
    }

    /// Smallest character c > b occurring in positions [i..j] together
    /// with the leftmost position of c there; empty or inverted ranges
    /// yield no result.
    std::optional<char_pos> range_successor(int i, int j, int b) const {
        if (n_ == 0 || i > j) return std::nullopt;
        i = std::max(i, 1);
        j = std::min(j, n_);
        if (i > j || b >= sigma_) return std::nullopt;
        return succ(root_, static_cast<std::size_t>(i), static_cast<std::size_t>(j), b);
    }

private:
    struct node {
        int lo = 0, hi = 0;
        int left = -1, right = -1;
        bit_vector_rank bits;  // empty for leaves
    };

    int build(const std::vector<int>& seq, int lo, int hi) {
        int id = static_cast<int>(nodes_.size());
        nodes_.push_back({});
        nodes_[static_cast<std::size_t>(id)].lo = lo;
        nodes_[static_cast<std::size_t>(id)].hi = hi;
        if (lo == hi) return id;
        int mid = lo + (hi - lo) / 2;
        std::vector<bool> bits(seq.size());
        std::vector<int> ls, rs;
        for (std::size_t k = 0; k < seq.size(); ++k) {
            bool right = seq[k] > mid;
            bits[k] = right;
            (right ? rs : ls).push_back(seq[k]);
        }
        nodes_[static_cast<std::size_t>(id)].bits = bit_vector_rank(bits);
        int l = build(ls, lo, mid);
        int r = build(rs, mid + 1, hi);
        nodes_[static_cast<std::size_t>(id)].left = l;
        nodes_[static_cast<std::size_t>(id)].right = r;
        return id;
    }

    // range [i..j] is 1-based within the node's own sequence
    std::optional<char_pos> succ(int node_id, std::size_t i, std::size_t j, int b) const {
        const auto& nd = nodes_[static_cast<std::size_t>(node_id)];
        if (i > j || nd.hi <= b) return std::nullopt;
        if (nd.lo == nd.hi) return char_pos{nd.lo, static_cast<int>(i)};
        int mid = nd.lo + (nd.hi - nd.lo) / 2;
        if (b < mid) {
            std::size_t li = nd.bits.rank0(i - 1) + 1;
            std::size_t lj = nd.bits.rank0(j);
            if (auto r = succ(nd.left, li, lj, b))
                return char_pos{r->ch, static_cast<int>(nd.bits.select0(static_cast<std::size_t>(r->pos)) + 1)};
        }
        std::size_t ri = nd.bits.rank1(i - 1) + 1;
        std::size_t rj = nd.bits.rank1(j);
        if (auto r = succ(nd.right, ri, rj, b))
            return char_pos{r->ch, static_cast<int>(nd.bits.select1(static_cast<std::size_t>(r->pos)) + 1)};
        return std::nullopt;
    }

    int n_ = 0;
    int sigma_ = 0;
    int root_ = 0;
    std::vector<node> nodes_;
};

/// Sparse table answering leftmost-argmax queries over the text ranks
/// in constant time.
class rmq_index {
public:
    rmq_index() = default;

    explicit rmq_index(const text& t) : ranks_(t.ranks), n_(t.size()) {
        if (n_ == 0) return;
        int levels = 1;
        while ((1 << levels) <= n_) ++levels;
        table_.assign(static_cast<std::size_t>(levels), std::vector<int>(static_cast<std::size_t>(n_)));
        for (int i = 0; i < n_; ++i) table_[0][static_cast<std::size_t>(i)] = i;
        for (int k = 1; k < levels; ++k)
            for (int i = 0; i + (1 << k) <= n_; ++i)
                table_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                    pick(table_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)],
                         table_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i + (1 << (k - 1)))]);
    }

    /// Leftmost position of the maximum rank in [i..j] (1-based), or
    /// nothing when the range is empty.
    std::optional<int> range_max_pos(int i, int j) const {
        i = std::max(i, 1);
        j = std::min(j, n_);
        if (i > j) return std::nullopt;
        int len = j - i + 1;
        int k = std::bit_width(static_cast<unsigned>(len)) - 1;
        int a = table_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i - 1)];
        int b = table_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j - (1 << k))];
        return pick(a, b) + 1;
    }

    /// Rank value at the position returned by range_max_pos.
    int value_at(int pos) const { return ranks_[static_cast<std::size_t>(pos - 1)]; }

private:
    int pick(int a, int b) const {
        if (ranks_[static_cast<std::size_t>(a)] == ranks_[static_cast<std::size_t>(b)]) return std::min(a, b);
        return ranks_[static_cast<std::size_t>(a)] > ranks_[static_cast<std::size_t>(b)] ? a : b;
    }

    std::vector<int> ranks_;
    int n_ = 0;
    std::vector<std::vector<int>> table_;
};

/// next(i, c) = smallest position j > i with rank c, or n+1. Classic
/// subsequence-automaton table, O(n sigma) space.
class next_occurrence_table {
public:
    next_occurrence_table() = default;

    explicit next_occurrence_table(const text& t) : n_(t.size()), sigma_(t.sigma) {
        table_.assign(static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(sigma_ + 1), n_ + 1);
        for (int i = n_ - 1; i >= 0; --i) {
            for (int c = 1; c <= sigma_; ++c)
                at(i, c) = at(i + 1, c);
            at(i, t.ranks[static_cast<std::size_t>(i)]) = i + 1;
        }
    }

    int n() const { return n_; }
    int sigma() const { return sigma_; }

    /// Smallest j > i with T[j] = c, or n+1 when absent. i in [0..n].
    int next(int i, int c) const { return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(sigma_ + 1) + static_cast<std::size_t>(c)]; }

private:
    int& at(int i, int c) { return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(sigma_ + 1) + static_cast<std::size_t>(c)]; }

    int n_ = 0;
    int sigma_ = 0;
    std::vector<int> table_;
};

/// Per-character sorted occurrence lists. Second range-successor backend
/// (O(sigma log n) per query) used for differential testing, and a
/// compact next-occurrence substitute.
class pos_list_index {
public:
    pos_list_index() = default;

    explicit pos_list_index(const text& t) : n_(t.size()), sigma_(t.sigma) {
        occ_.assign(static_cast<std::size_t>(sigma_ + 1), {});
        for (int i = 1; i <= n_; ++i)
            occ_[static_cast<std::size_t>(t.rank_at(i))].push_back(i);
    }

    std::optional<char_pos> range_successor(int i, int j, int b) const {
        i = std::max(i, 1);
        j = std::min(j, n_);
        if (i > j) return std::nullopt;
        for (int c = b + 1; c <= sigma_; ++c) {
            const auto& v = occ_[static_cast<std::size_t>(c)];
            auto it = std::lower_bound(v.begin(), v.end(), i);
            if (it != v.end() && *it <= j) return char_pos{c, *it};
        }
        return std::nullopt;
    }

    /// Smallest j > i with rank c, or n+1.
    int next(int i, int c) const {
        const auto& v = occ_[static_cast<std::size_t>(c)];
        auto it = std::upper_bound(v.begin(), v.end(), i);
        return it == v.end() ? n_ + 1 : *it;
    }

private:
    int n_ = 0;
    int sigma_ = 0;
    std::vector<std::vector<int>> occ_;
};

}  // namespace lynseq
