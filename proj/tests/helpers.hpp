#pragma once

#include <random>
#include <string>
#include <vector>

#include "lynseq/text.hpp"

namespace testutil {

inline lynseq::text T(const std::string& s) { return lynseq::normalize_bytes(s); }

/// Rank string literal: 'a' -> 1, 'b' -> 2, ... so fixtures written as
/// different strings still share one alphabet. Compares correctly against
/// extract() results whenever the text's letters are contiguous from 'a'.
inline lynseq::lex_string S(const std::string& s) {
    if (s.empty()) return lynseq::lex_string::bottom();
    std::vector<int> r;
    r.reserve(s.size());
    for (char c : s) r.push_back(c - 'a' + 1);
    return lynseq::lex_string::of(std::move(r));
}

/// All symbol sequences over {1..sigma} with length in [1..max_len],
/// shorter first, lexicographic within a length.
inline std::vector<std::vector<int>> all_strings(int sigma, int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> cur{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& p : cur)
            for (int c = 1; c <= sigma; ++c) {
                auto q = p;
                q.push_back(c);
                next.push_back(std::move(q));
            }
        for (const auto& q : next) out.push_back(q);
        cur = std::move(next);
    }
    return out;
}

inline std::vector<int> random_symbols(std::mt19937_64& rng, int n, int sigma) {
    std::uniform_int_distribution<int> d(1, sigma);
    std::vector<int> out(static_cast<std::size_t>(n));
    for (auto& v : out) v = d(rng);
    return out;
}

}  // namespace testutil
