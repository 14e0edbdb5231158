#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "lynseq/common_lyndon.hpp"
#include "lynseq/lex_smallest.hpp"
#include "lynseq/longest_lyndon.hpp"
#include "lynseq/oracle.hpp"
#include "lynseq/order_trie.hpp"
#include "lynseq/succinct.hpp"
#include "lynseq/text.hpp"

// Differential verification suites backing the `verify` CLI command and
// the acceptance checks: every algorithm against the brute-force oracle
// or a linear-scan reference, plus the counting-argument instrumentation.

namespace lynseq {
namespace verify {

struct summary {
    std::uint64_t cases = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t bound_violations = 0;

    bool ok() const { return mismatches == 0 && bound_violations == 0; }
    void merge(const summary& o) {
        cases += o.cases;
        mismatches += o.mismatches;
        bound_violations += o.bound_violations;
    }
};

/// All strings over {1..sigma} of length 1..max_len.
inline std::vector<std::vector<int>> enumerate_strings(int sigma, int max_len) {
    std::vector<std::vector<int>> out, cur{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& p : cur)
            for (int c = 1; c <= sigma; ++c) {
                auto q = p;
                q.push_back(c);
                next.push_back(std::move(q));
            }
        out.insert(out.end(), next.begin(), next.end());
        cur = std::move(next);
    }
    return out;
}

namespace detail {

template <typename Fn>
summary parallel_cases(std::size_t count, unsigned threads, Fn&& per_case) {
    if (threads == 0) threads = 1;
    std::atomic<std::size_t> next{0};
    std::vector<summary> parts(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                per_case(i, parts[w]);
        });
    }
    for (auto& th : pool) th.join();
    summary total;
    for (const auto& p : parts) total.merge(p);
    return total;
}

inline std::optional<char_pos> scan_successor(const text& t, int i, int j, int b) {
    i = std::max(i, 1);
    j = std::min(j, t.size());
    std::optional<char_pos> best;
    for (int k = i; k <= j; ++k) {
        int c = t.rank_at(k);
        if (c <= b) continue;
        if (!best || c < best->ch) best = char_pos{c, k};
    }
    return best;
}

inline std::optional<int> scan_max_pos(const text& t, int i, int j) {
    i = std::max(i, 1);
    j = std::min(j, t.size());
    std::optional<int> best;
    for (int k = i; k <= j; ++k)
        if (!best || t.rank_at(k) > t.rank_at(*best)) best = k;
    return best;
}

inline text prefix_text(const text& t, int i) {
    text p;
    p.ranks.assign(t.ranks.begin(), t.ranks.begin() + i);
    p.sigma = t.sigma;
    p.symbol_of_rank = t.symbol_of_rank;
    if (static_cast<int>(t.symbols.size()) >= i)
        p.symbols.assign(t.symbols.begin(), t.symbols.begin() + i);
    return p;
}

}  // namespace detail

/// basic/fast/online lengths against the oracle on every string over
/// {1..sigma} up to max_n; the fast witness must be the oracle's
/// lexicographically smallest longest. Also enforces the n^2 bound on
/// prune-table lowering events.
inline summary longest_lyndon_suite(int sigma, int max_n, unsigned threads = 2) {
    auto inputs = enumerate_strings(sigma, max_n);
    return detail::parallel_cases(inputs.size(), threads, [&](std::size_t i, summary& s) {
        auto t = normalize(inputs[i]);
        int n = t.size();
        ++s.cases;
        auto [want_len, want_wit] = oracle::longest_lyndon(t);
        auto basic = longest_lyndon_basic(t);
        auto fast = longest_lyndon_fast(t);
        auto online = longest_lyndon_online(t);
        if (basic.length != want_len || fast.length != want_len || online.length != want_len)
            ++s.mismatches;
        if (extract(t, fast.positions) != want_wit) ++s.mismatches;
        auto bw = extract(t, basic.positions);
        if (bw.size() != want_len || !is_lyndon(bw)) ++s.mismatches;
        auto nn = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
        if (basic.stats.prune_table_lowerings > nn || fast.stats.prune_table_lowerings > nn)
            ++s.bound_violations;
    });
}

/// Naive and fast tables against the oracle for every prefix and length.
inline summary lex_smallest_suite(int sigma, int max_n, unsigned threads = 2) {
    auto inputs = enumerate_strings(sigma, max_n);
    return detail::parallel_cases(inputs.size(), threads, [&](std::size_t i, summary& s) {
        auto t = normalize(inputs[i]);
        ++s.cases;
        lex_table_naive naive(t);
        lex_table_fast fast(t);
        for (int p = 1; p <= t.size(); ++p) {
            auto want = oracle::lex_smallest_all(detail::prefix_text(t, p));
            for (int l = 1; l <= p; ++l) {
                if (naive.smallest(p, l) != want[static_cast<std::size_t>(l)]) ++s.mismatches;
                if (fast.smallest(p, l) != want[static_cast<std::size_t>(l)]) ++s.mismatches;
            }
        }
    });
}

/// Cube results against the oracle on all pairs of strings over
/// {1..sigma} up to max_n.
inline summary lcls_suite(int sigma, int max_n, unsigned threads = 2) {
    auto inputs = enumerate_strings(sigma, max_n);
    std::size_t m = inputs.size();
    return detail::parallel_cases(m * m, threads, [&](std::size_t k, summary& s) {
        const auto& xs = inputs[k / m];
        const auto& ys = inputs[k % m];
        ++s.cases;
        auto [x, y] = normalize_union(xs, ys);
        auto got = lex_smallest_common_per_length(x, y);
        auto want = oracle::common_lex_smallest_all(x, y);
        for (std::size_t l = 1; l < want.size(); ++l)
            if (got[l] != want[l]) ++s.mismatches;
    });
}

/// Longest common Lyndon subsequence against the oracle on all pairs;
/// witnesses must embed in both strings and spell the same Lyndon word.
/// Also enforces the n^3 bound on pair-list insertions.
inline summary common_lyndon_suite(int sigma, int max_n, unsigned threads = 2) {
    auto inputs = enumerate_strings(sigma, max_n);
    std::size_t m = inputs.size();
    return detail::parallel_cases(m * m, threads, [&](std::size_t k, summary& s) {
        const auto& xs = inputs[k / m];
        const auto& ys = inputs[k % m];
        ++s.cases;
        auto [x, y] = normalize_union(xs, ys);
        auto got = longest_common_lyndon(x, y);
        auto [want_len, want_wit] = oracle::common_longest_lyndon(x, y);
        if (got.length != want_len) ++s.mismatches;
        if (want_len > 0) {
            auto wx = extract(x, got.positions_x);
            auto wy = extract(y, got.positions_y);
            if (!(wx == wy) || wx.size() != want_len || !is_lyndon(wx)) ++s.mismatches;
        }
        auto n = static_cast<std::uint64_t>(std::max(x.size(), y.size()));
        if (got.pair_insertions > n * n * n) ++s.bound_violations;
    });
}

/// Stack algorithm against the table answer for every length on random
/// texts.
inline summary most_competitive_suite(std::uint64_t seed, int count, int max_n = 40, int max_sigma = 5) {
    std::mt19937_64 rng(seed);
    summary s;
    for (int it = 0; it < count; ++it) {
        int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
        int sigma = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_sigma));
        std::vector<int> raw(static_cast<std::size_t>(n));
        for (auto& v : raw) v = 1 + static_cast<int>(rng() % static_cast<unsigned>(sigma));
        auto t = normalize(raw);
        ++s.cases;
        lex_table_fast d(t);
        for (int l = 1; l <= n; ++l) {
            auto p = most_competitive(t, l);
            if (!strictly_increasing(p) || extract(t, p) != d.smallest(n, l)) ++s.mismatches;
        }
    }
    return s;
}

/// Online per-prefix reports against the offline fast algorithm on
/// random streams.
inline summary online_prefix_suite(std::uint64_t seed, int count, int max_n = 60, int max_sigma = 4,
                                   unsigned threads = 2) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, std::vector<int>>> streams;
    for (int it = 0; it < count; ++it) {
        int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
        int sigma = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_sigma));
        std::vector<int> raw(static_cast<std::size_t>(n));
        for (auto& v : raw) v = 1 + static_cast<int>(rng() % static_cast<unsigned>(sigma));
        streams.emplace_back(sigma, std::move(raw));
    }
    return detail::parallel_cases(streams.size(), threads, [&](std::size_t i, summary& s) {
        const auto& [sigma, raw] = streams[i];
        ++s.cases;
        text t;
        t.symbols = raw;
        t.ranks = raw;  // stream symbols are already ranks over the declared alphabet
        t.sigma = sigma;
        auto reports = online_prefix_lengths(t);
        for (int p = 1; p <= t.size(); ++p) {
            auto pref = detail::prefix_text(t, p);
            if (reports[static_cast<std::size_t>(p - 1)] != longest_lyndon_fast(pref).length)
                ++s.mismatches;
        }
    });
}

/// Wavelet-tree range successor, the position-list backend, and the RMQ
/// index against linear scans on random texts and ranges.
inline summary succinct_suite(std::uint64_t seed, int queries, int max_n = 64, int max_sigma = 8) {
    std::mt19937_64 rng(seed);
    summary s;
    while (s.cases < static_cast<std::uint64_t>(queries)) {
        int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
        int sigma = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_sigma));
        std::vector<int> raw(static_cast<std::size_t>(n));
        for (auto& v : raw) v = 1 + static_cast<int>(rng() % static_cast<unsigned>(sigma));
        auto t = normalize(raw);
        wavelet_tree wt(t);
        rmq_index rq(t);
        pos_list_index pl(t);
        for (int q = 0; q < 25 && s.cases < static_cast<std::uint64_t>(queries); ++q) {
            ++s.cases;
            int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
            int j = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
            int b = static_cast<int>(rng() % static_cast<unsigned>(t.sigma + 2));
            auto want = detail::scan_successor(t, i, j, b);
            if (wt.range_successor(i, j, b) != want) ++s.mismatches;
            if (pl.range_successor(i, j, b) != want) ++s.mismatches;
            if (rq.range_max_pos(i, j) != detail::scan_max_pos(t, i, j)) ++s.mismatches;
        }
    }
    return s;
}

/// Trie `precedes` against explicit string comparison on random tries.
inline summary precedes_suite(std::uint64_t seed, int rounds, int max_nodes = 200) {
    std::mt19937_64 rng(seed);
    summary s;
    for (int round = 0; round < rounds; ++round) {
        order_trie tr;
        std::vector<node_handle> nodes{order_trie::root()};
        int sigma = 2 + static_cast<int>(rng() % 3);
        int target = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_nodes - 1));
        while (static_cast<int>(nodes.size()) < target) {
            auto v = nodes[rng() % nodes.size()];
            int c = 1 + static_cast<int>(rng() % static_cast<unsigned>(sigma));
            bool dup = false;
            for (auto ch : tr.children(v))
                if (tr.label({ch}) == c) dup = true;
            if (dup) continue;
            nodes.push_back(tr.insert(v, c));
        }
        for (auto u : nodes)
            for (auto v : nodes) {
                ++s.cases;
                if (tr.precedes(u, v) != lex_less(tr.string_of(u), tr.string_of(v))) ++s.mismatches;
            }
    }
    return s;
}

}  // namespace verify
}  // namespace lynseq
