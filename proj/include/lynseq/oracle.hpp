#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "lynseq/lyndon.hpp"
#include "lynseq/text.hpp"

namespace lynseq {
namespace oracle {

inline constexpr int max_single_n = 16;
inline constexpr int max_common_n = 12;

inline void guard(const text& t, int cap) {
    if (t.size() > cap)
        throw std::invalid_argument("oracle: text too long for exhaustive enumeration");
}

/// All distinct non-empty subsequence strings of t (rank strings),
/// optionally only those of length <= max_len. Exponential; inputs are
/// capped hard.
inline std::set<std::vector<int>> subseq_set(const text& t, int max_len = max_single_n) {
    guard(t, max_single_n);
    std::set<std::vector<int>> out;
    int n = t.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > max_len) continue;
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(t.ranks[static_cast<std::size_t>(i)]);
        out.insert(std::move(s));
    }
    return out;
}

/// Minimum over all length-len subsequences of t; bottom if len > n.
inline lex_string lex_smallest(const text& t, int len) {
    guard(t, max_single_n);
    int n = t.size();
    if (len < 1 || len > n) return lex_string::bottom();
    std::optional<std::vector<int>> best;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != len) continue;
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(t.ranks[static_cast<std::size_t>(i)]);
        if (!best || s < *best) best = std::move(s);
    }
    return lex_string::of(std::move(*best));
}

/// Per-length minima for all lengths 1..n in one enumeration pass.
inline std::vector<lex_string> lex_smallest_all(const text& t) {
    guard(t, max_single_n);
    int n = t.size();
    std::vector<std::optional<std::vector<int>>> best(static_cast<std::size_t>(n) + 1);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(t.ranks[static_cast<std::size_t>(i)]);
        auto& slot = best[s.size()];
        if (!slot || s < *slot) slot = std::move(s);
    }
    std::vector<lex_string> out(static_cast<std::size_t>(n) + 1, lex_string::bottom());
    for (int l = 1; l <= n; ++l)
        if (best[static_cast<std::size_t>(l)]) out[static_cast<std::size_t>(l)] = lex_string::of(std::move(*best[static_cast<std::size_t>(l)]));
    return out;
}

/// Longest Lyndon subsequence by full enumeration: its length and the
/// lexicographically smallest witness string of that length.
inline std::pair<int, lex_string> longest_lyndon(const text& t) {
    guard(t, max_single_n);
    int n = t.size();
    int best_len = 0;
    std::optional<std::vector<int>> best;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(t.ranks[static_cast<std::size_t>(i)]);
        int len = static_cast<int>(s.size());
        if (len < best_len) continue;
        if (len == best_len && best && !(s < *best)) continue;
        if (!is_lyndon(lex_string::of(s))) continue;
        if (len > best_len) { best_len = len; best = std::move(s); }
        else best = std::move(s);
    }
    if (!best) return {0, lex_string::bottom()};
    return {best_len, lex_string::of(std::move(*best))};
}

/// Common subsequence strings of x and y (set intersection).
inline std::set<std::vector<int>> common_subseq_set(const text& x, const text& y) {
    guard(x, max_common_n);
    guard(y, max_common_n);
    auto sx = subseq_set(x, max_common_n);
    auto sy = subseq_set(y, max_common_n);
    std::set<std::vector<int>> out;
    for (const auto& s : sx)
        if (sy.count(s)) out.insert(s);
    return out;
}

/// Per-length minima over the common subsequences, indices 1..min(|x|,|y|).
inline std::vector<lex_string> common_lex_smallest_all(const text& x, const text& y) {
    int cap = std::min(x.size(), y.size());
    std::vector<lex_string> out(static_cast<std::size_t>(cap) + 1, lex_string::bottom());
    for (const auto& s : common_subseq_set(x, y)) {
        int len = static_cast<int>(s.size());
        if (len > cap) continue;
        auto& slot = out[static_cast<std::size_t>(len)];
        if (slot.is_bottom() || s < slot.ranks) slot = lex_string::of(s);
    }
    return out;
}

/// Longest common Lyndon subsequence: length plus the lexicographically
/// smallest witness string at that length; (0, bottom) when none exists.
inline std::pair<int, lex_string> common_longest_lyndon(const text& x, const text& y) {
    int best_len = 0;
    lex_string best = lex_string::bottom();
    for (const auto& s : common_subseq_set(x, y)) {
        int len = static_cast<int>(s.size());
        if (len < best_len) continue;
        if (!is_lyndon(lex_string::of(s))) continue;
        if (len > best_len || (len == best_len && (best.is_bottom() || s < best.ranks))) {
            best_len = len;
            best = lex_string::of(s);
        }
    }
    return {best_len, best};
}

}  // namespace oracle
}  // namespace lynseq
