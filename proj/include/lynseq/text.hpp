#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lynseq {

/// 1-based, strictly increasing positions into a text.
using position_seq = std::vector<int>;

inline bool strictly_increasing(const position_seq& p) {
    for (std::size_t k = 1; k < p.size(); ++k)
        if (p[k - 1] >= p[k]) return false;
    return true;
}

/// A string over the rank alphabet [1..sigma], or bottom (the empty
/// string), which compares greater than every non-empty string.
/// An empty rank vector always means bottom; non-bottom values are
/// non-empty by construction.
struct lex_string {
    std::vector<int> ranks;

    static lex_string bottom() { return {}; }
    static lex_string of(std::vector<int> r) { return {std::move(r)}; }

    bool is_bottom() const { return ranks.empty(); }
    int size() const { return static_cast<int>(ranks.size()); }

    bool operator==(const lex_string&) const = default;
};

/// Total order with the bottom-is-largest convention; non-empty strings
/// compare lexicographically, a proper prefix before its extension.
inline std::strong_ordering lex_compare(const lex_string& a, const lex_string& b) {
    if (a.is_bottom() && b.is_bottom()) return std::strong_ordering::equal;
    if (a.is_bottom()) return std::strong_ordering::greater;
    if (b.is_bottom()) return std::strong_ordering::less;
    return std::lexicographical_compare_three_way(a.ranks.begin(), a.ranks.end(),
                                                  b.ranks.begin(), b.ranks.end());
}

inline bool lex_less(const lex_string& a, const lex_string& b) {
    return lex_compare(a, b) == std::strong_ordering::less;
}

/// A text after alphabet reduction: original symbols plus their dense
/// order-preserving ranks in [1..sigma].
struct text {
    std::vector<int> symbols;         // original symbols (byte values or tokens)
    std::vector<int> ranks;           // ranks[i] in [1..sigma], same order as symbols
    std::vector<int> symbol_of_rank;  // inverse map, index 1..sigma
    int sigma = 0;
    bool token_mode = false;          // symbols came from integer tokens, not bytes

    int size() const { return static_cast<int>(ranks.size()); }
    bool empty() const { return ranks.empty(); }

    /// Rank at 1-based position i.
    int rank_at(int i) const { return ranks[static_cast<std::size_t>(i) - 1]; }
};

/// Dense order-preserving relabeling of an arbitrary integer symbol
/// sequence; equal symbols get equal ranks, ranks run over [1..sigma].
inline text normalize(const std::vector<int>& raw) {
    text t;
    t.symbols = raw;
    std::map<int, int> rank_of;
    for (int s : raw) rank_of[s] = 0;
    t.symbol_of_rank.assign(rank_of.size() + 1, 0);
    int next = 1;
    for (auto& [sym, rk] : rank_of) {
        rk = next;
        t.symbol_of_rank[next] = sym;
        ++next;
    }
    t.sigma = next - 1;
    t.ranks.reserve(raw.size());
    for (int s : raw) t.ranks.push_back(rank_of[s]);
    return t;
}

/// Normalizes two symbol sequences over their union alphabet so that both
/// texts share one rank space.
inline std::pair<text, text> normalize_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::map<int, int> rank_of;
    for (int s : a) rank_of[s] = 0;
    for (int s : b) rank_of[s] = 0;
    std::vector<int> inv(rank_of.size() + 1, 0);
    int next = 1;
    for (auto& [sym, rk] : rank_of) {
        rk = next;
        inv[next] = sym;
        ++next;
    }
    auto make = [&](const std::vector<int>& raw) {
        text t;
        t.symbols = raw;
        t.symbol_of_rank = inv;
        t.sigma = static_cast<int>(rank_of.size());
        t.ranks.reserve(raw.size());
        for (int s : raw) t.ranks.push_back(rank_of[s]);
        return t;
    };
    return {make(a), make(b)};
}

/// Ranks at the given positions; the empty position sequence yields bottom.
inline lex_string extract(const text& t, const position_seq& p) {
    if (p.empty()) return lex_string::bottom();
    if (!strictly_increasing(p))
        throw std::invalid_argument("extract: positions must be strictly increasing");
    lex_string s;
    s.ranks.reserve(p.size());
    for (int i : p) {
        if (i < 1 || i > t.size())
            throw std::invalid_argument("extract: position out of range");
        s.ranks.push_back(t.rank_at(i));
    }
    return s;
}

inline std::vector<int> bytes_to_symbols(std::string_view data) {
    std::vector<int> out;
    out.reserve(data.size());
    for (unsigned char c : data) out.push_back(static_cast<int>(c));
    return out;
}

/// Parses whitespace-separated decimal integer tokens.
inline std::vector<int> tokens_to_symbols(std::string_view data) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < data.size()) {
        while (i < data.size() && std::isspace(static_cast<unsigned char>(data[i]))) ++i;
        if (i >= data.size()) break;
        std::size_t start = i;
        while (i < data.size() && !std::isspace(static_cast<unsigned char>(data[i]))) ++i;
        std::string tok(data.substr(start, i - start));
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("token mode: not a decimal integer: '" + tok + "'");
        }
    }
    return out;
}

inline text normalize_bytes(std::string_view data) { return normalize(bytes_to_symbols(data)); }

inline text normalize_tokens(std::string_view data) {
    text t = normalize(tokens_to_symbols(data));
    t.token_mode = true;
    return t;
}

/// Maps a rank string back to the text's original symbols for display.
/// Byte-alphabet texts render as characters, token texts space-separated.
inline std::string display(const text& t, const lex_string& s) {
    if (s.is_bottom()) return "";
    bool bytes = !t.token_mode;
    for (int r : s.ranks) {
        if (!bytes) break;
        int sym = t.symbol_of_rank[static_cast<std::size_t>(r)];
        if (sym < 0 || sym > 255) { bytes = false; break; }
    }
    std::string out;
    for (std::size_t k = 0; k < s.ranks.size(); ++k) {
        int sym = t.symbol_of_rank[static_cast<std::size_t>(s.ranks[k])];
        if (bytes) {
            out.push_back(static_cast<char>(sym));
        } else {
            if (k) out.push_back(' ');
            out += std::to_string(sym);
        }
    }
    return out;
}

}  // namespace lynseq
