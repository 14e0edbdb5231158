#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "lynseq/text.hpp"

using namespace lynseq;
using testutil::all_strings;

TEST_CASE("normalize assigns dense order-preserving ranks") {
    auto t = normalize_bytes("bca");
    CHECK(t.ranks == std::vector<int>{2, 3, 1});
    CHECK(t.sigma == 3);

    auto u = normalize_bytes("aaaa");
    CHECK(u.ranks == std::vector<int>{1, 1, 1, 1});
    CHECK(u.sigma == 1);

    auto e = normalize_bytes("");
    CHECK(e.size() == 0);
    CHECK(e.sigma == 0);
}

TEST_CASE("normalize is idempotent on dense rank sequences") {
    for (const auto& raw : all_strings(3, 5)) {
        auto t = normalize(raw);
        auto again = normalize(t.ranks);
        CHECK(again.ranks == t.ranks);
        CHECK(again.sigma == t.sigma);
    }
}

TEST_CASE("normalize invariants hold on random inputs") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        auto raw = testutil::random_symbols(rng, 1 + static_cast<int>(rng() % 30), 300);
        auto t = normalize(raw);
        int n = t.size();
        REQUIRE(t.sigma <= n);
        for (int i = 0; i < n; ++i) {
            REQUIRE(t.ranks[i] >= 1);
            REQUIRE(t.ranks[i] <= t.sigma);
            for (int j = 0; j < n; ++j) {
                bool rank_less = t.ranks[i] < t.ranks[j];
                bool sym_less = raw[i] < raw[j];
                REQUIRE(rank_less == sym_less);
            }
        }
    }
}

TEST_CASE("extract returns rank sequences and bottom for empty positions") {
    auto t = normalize_bytes("aba");
    CHECK(extract(t, {1, 2}) == testutil::S("ab"));
    CHECK(extract(t, {1, 3}) == testutil::S("aa"));
    CHECK(extract(t, {}).is_bottom());

    CHECK_THROWS_AS(extract(t, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(extract(t, {3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(extract(t, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(extract(t, {4}), std::invalid_argument);
}

TEST_CASE("extract is monotone under extension") {
    auto t = normalize_bytes("abacbc");
    position_seq p;
    lex_string prev = extract(t, p);
    for (int i : {1, 3, 4, 6}) {
        p.push_back(i);
        auto cur = extract(t, p);
        REQUIRE(cur.size() == static_cast<int>(p.size()));
        if (!prev.is_bottom())
            REQUIRE(std::equal(prev.ranks.begin(), prev.ranks.end(), cur.ranks.begin()));
        prev = cur;
    }
}

TEST_CASE("lex_compare follows the bottom-is-largest convention") {
    CHECK(lex_compare(testutil::S("ab"), testutil::S("b")) == std::strong_ordering::less);
    CHECK(lex_compare(testutil::S("a"), testutil::S("ab")) == std::strong_ordering::less);
    CHECK(lex_compare(lex_string::bottom(), testutil::S("a")) == std::strong_ordering::greater);
    CHECK(lex_compare(lex_string::bottom(), lex_string::bottom()) == std::strong_ordering::equal);
}

// character-by-character reference comparator
static std::strong_ordering naive_compare(const lex_string& a, const lex_string& b) {
    if (a.is_bottom() && b.is_bottom()) return std::strong_ordering::equal;
    if (a.is_bottom()) return std::strong_ordering::greater;
    if (b.is_bottom()) return std::strong_ordering::less;
    std::size_t i = 0;
    while (i < a.ranks.size() && i < b.ranks.size()) {
        if (a.ranks[i] != b.ranks[i])
            return a.ranks[i] < b.ranks[i] ? std::strong_ordering::less : std::strong_ordering::greater;
        ++i;
    }
    if (a.ranks.size() == b.ranks.size()) return std::strong_ordering::equal;
    return a.ranks.size() < b.ranks.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

TEST_CASE("lex_compare agrees with the naive comparator exhaustively") {
    auto strings = all_strings(3, 6);
    std::vector<lex_string> pool;
    pool.push_back(lex_string::bottom());
    for (const auto& s : strings) pool.push_back(lex_string::of(s));
    std::size_t mismatches = 0;
    for (const auto& a : pool)
        for (const auto& b : pool)
            if (lex_compare(a, b) != naive_compare(a, b)) ++mismatches;
    REQUIRE(mismatches == 0);
}

TEST_CASE("token parsing accepts integers and rejects junk") {
    auto v = tokens_to_symbols("  12 7\n 7  900 ");
    CHECK(v == std::vector<int>{12, 7, 7, 900});
    CHECK(tokens_to_symbols("").empty());
    CHECK_THROWS_AS(tokens_to_symbols("3 x 4"), std::invalid_argument);
    CHECK_THROWS_AS(tokens_to_symbols("12a"), std::invalid_argument);
}

TEST_CASE("display maps ranks back to original symbols") {
    auto t = normalize_bytes("bca");
    CHECK(display(t, extract(t, {1, 2, 3})) == "bca");
    CHECK(display(t, lex_string::bottom()).empty());

    auto tok = normalize(std::vector<int>{400, 2, 400});
    CHECK(display(tok, extract(tok, {1, 2})) == "400 2");

    // small token values must not be mistaken for bytes
    auto small = normalize_tokens("3 1 2");
    CHECK(display(small, extract(small, {1, 2, 3})) == "3 1 2");
}

TEST_CASE("normalize_union shares one rank space") {
    auto [x, y] = normalize_union(testutil::T("ab").symbols, testutil::T("cd").symbols);
    CHECK(x.sigma == 4);
    CHECK(y.sigma == 4);
    CHECK(x.ranks == std::vector<int>{1, 2});
    CHECK(y.ranks == std::vector<int>{3, 4});
}
