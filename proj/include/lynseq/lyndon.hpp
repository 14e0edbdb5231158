#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "lynseq/text.hpp"

namespace lynseq {

/// Length and smallest period of a pre-Lyndon word built so far.
/// period == length exactly when the word is Lyndon.
struct period_state {
    int length = 0;
    int period = 0;
};

enum class extension_class {
    same_period_pre_lyndon,  // appended char continues the period
    new_lyndon,              // appended char makes the word Lyndon (period = length+1)
    not_pre_lyndon,          // appended char leaves the pre-Lyndon trie
};

/// Classifies extending a pre-Lyndon word S (described by st) with c,
/// where last_period_char = S[|S|-p+1], the character continuing the
/// period. Constant time; callers that keep S implicit supply that
/// character from their own bookkeeping.
inline extension_class classify_extension(const period_state& st, int last_period_char, int c) {
    (void)st;
    if (c == last_period_char) return extension_class::same_period_pre_lyndon;
    if (c > last_period_char) return extension_class::new_lyndon;
    return extension_class::not_pre_lyndon;
}

/// Period after appending: unchanged for a same-period extension,
/// length+1 for a fresh Lyndon word.
inline int extended_period(const period_state& st, int last_period_char, int c) {
    return c == last_period_char ? st.period : st.length + 1;
}

/// Reference routine: true iff s is strictly smaller than each of its
/// proper non-empty suffixes. Quadratic; oracle-grade on purpose.
inline bool is_lyndon(const lex_string& s) {
    if (s.is_bottom()) throw std::invalid_argument("is_lyndon: bottom input");
    const auto& r = s.ranks;
    int n = s.size();
    for (int i = 1; i < n; ++i) {
        // compare r[0..] against suffix r[i..]
        bool suffix_larger = false;
        int m = n - i;
        int k = 0;
        for (; k < m; ++k) {
            if (r[static_cast<std::size_t>(i + k)] != r[static_cast<std::size_t>(k)]) {
                suffix_larger = r[static_cast<std::size_t>(i + k)] > r[static_cast<std::size_t>(k)];
                break;
            }
        }
        if (k == m) suffix_larger = false;  // suffix is a proper prefix, so it is smaller
        if (!suffix_larger) return false;
    }
    return true;
}

/// Reference routine: smallest p with S[i] = S[i+p] for all valid i.
inline int naive_period(const lex_string& s) {
    if (s.is_bottom()) throw std::invalid_argument("naive_period: bottom input");
    int n = s.size();
    for (int p = 1; p < n; ++p) {
        bool ok = true;
        for (int i = 0; i + p < n; ++i)
            if (s.ranks[static_cast<std::size_t>(i)] != s.ranks[static_cast<std::size_t>(i + p)]) { ok = false; break; }
        if (ok) return p;
    }
    return n;
}

/// Lyndon factorization: factors are Lyndon, lexicographically
/// non-increasing, and their concatenation is t. Returns 1-based
/// inclusive spans. Linear time (Duval's algorithm).
inline std::vector<std::pair<int, int>> duval_factorize(const text& t) {
    std::vector<std::pair<int, int>> out;
    const auto& s = t.ranks;
    int n = t.size();
    int k = 0;
    while (k < n) {
        int i = k, j = k + 1;
        while (j < n && s[static_cast<std::size_t>(i)] <= s[static_cast<std::size_t>(j)]) {
            i = s[static_cast<std::size_t>(i)] < s[static_cast<std::size_t>(j)] ? k : i + 1;
            ++j;
        }
        while (k <= i) {
            out.emplace_back(k + 1, k + (j - i));
            k += j - i;
        }
    }
    return out;
}

/// Span of a longest factor of the Lyndon factorization, leftmost on ties.
inline std::pair<int, int> longest_lyndon_substring(const text& t) {
    if (t.empty()) throw std::invalid_argument("longest_lyndon_substring: empty text");
    auto factors = duval_factorize(t);
    std::pair<int, int> best = factors.front();
    for (const auto& f : factors)
        if (f.second - f.first > best.second - best.first) best = f;
    return best;
}

}  // namespace lynseq
