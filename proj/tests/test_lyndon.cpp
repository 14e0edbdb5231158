#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "lynseq/lyndon.hpp"
#include "lynseq/oracle.hpp"

using namespace lynseq;
using testutil::S;
using testutil::T;
using testutil::all_strings;

TEST_CASE("is_lyndon on fixtures") {
    CHECK(is_lyndon(S("a")));
    CHECK_FALSE(is_lyndon(S("aba")));
    CHECK(is_lyndon(S("aab")));
    CHECK_FALSE(is_lyndon(S("aa")));
    CHECK(is_lyndon(S("ab")));
    CHECK_THROWS_AS(is_lyndon(lex_string::bottom()), std::invalid_argument);
}

static bool smaller_than_all_rotations(const lex_string& s) {
    int n = s.size();
    for (int r = 1; r < n; ++r) {
        std::vector<int> rot(s.ranks.begin() + r, s.ranks.end());
        rot.insert(rot.end(), s.ranks.begin(), s.ranks.begin() + r);
        if (!(s.ranks < rot)) return false;
    }
    return n > 0;
}

TEST_CASE("is_lyndon equals the cyclic-rotation characterization") {
    std::size_t mismatches = 0;
    for (const auto& raw : all_strings(2, 10)) {
        auto s = lex_string::of(raw);
        if (is_lyndon(s) != smaller_than_all_rotations(s)) ++mismatches;
    }
    REQUIRE(mismatches == 0);
}

TEST_CASE("naive_period fixtures") {
    CHECK(naive_period(S("abab")) == 2);
    CHECK(naive_period(S("aab")) == 3);
    CHECK(naive_period(S("aaaa")) == 1);
    CHECK_THROWS_AS(naive_period(lex_string::bottom()), std::invalid_argument);
}

TEST_CASE("classify_extension fixtures") {
    // S = "ab", period 2, continuation char S[1] = 'a'
    period_state ab{2, 2};
    CHECK(classify_extension(ab, 1, 1) == extension_class::same_period_pre_lyndon);
    CHECK(extended_period(ab, 1, 1) == 2);
    CHECK(classify_extension(ab, 1, 2) == extension_class::new_lyndon);
    CHECK(extended_period(ab, 1, 2) == 3);
    // S = "b", period 1, continuation char 'b'; extending with 'a' leaves the trie
    period_state b{1, 1};
    CHECK(classify_extension(b, 2, 1) == extension_class::not_pre_lyndon);
}

TEST_CASE("tracked periods match naive_period along every pre-Lyndon build") {
    // grow every string character by character, tracking period via the
    // extension rules while the word stays pre-Lyndon
    std::size_t checked = 0, mismatches = 0;
    for (const auto& raw : all_strings(3, 8)) {
        period_state st{1, 1};
        std::vector<int> w{raw[0]};
        if (naive_period(lex_string::of(w)) != st.period) ++mismatches;
        bool pre_lyndon = true;
        for (std::size_t k = 1; k < raw.size() && pre_lyndon; ++k) {
            int lpc = w[w.size() - static_cast<std::size_t>(st.period)];  // w[|w|-p+1] one-based
            int c = raw[k];
            switch (classify_extension(st, lpc, c)) {
                case extension_class::not_pre_lyndon:
                    pre_lyndon = false;
                    break;
                case extension_class::same_period_pre_lyndon:
                case extension_class::new_lyndon:
                    st = {st.length + 1, extended_period(st, lpc, c)};
                    w.push_back(c);
                    ++checked;
                    if (naive_period(lex_string::of(w)) != st.period) ++mismatches;
                    // Lyndon iff tracked period equals length
                    if (is_lyndon(lex_string::of(w)) != (st.period == st.length)) ++mismatches;
                    break;
            }
        }
    }
    REQUIRE(checked > 1000);
    REQUIRE(mismatches == 0);
}

// a word is pre-Lyndon iff its period-length prefix is Lyndon
static bool is_pre_lyndon(const lex_string& s) {
    int p = naive_period(s);
    return is_lyndon(lex_string::of(std::vector<int>(s.ranks.begin(), s.ranks.begin() + p)));
}

TEST_CASE("replacing a pre-Lyndon prefix by a smaller Lyndon word keeps Lyndon-ness") {
    // for Lyndon V, pre-Lyndon U with V < U, |V| >= |U|, and W with UW
    // Lyndon: VW is Lyndon and VW < UW
    auto strings = all_strings(2, 8);
    std::vector<std::vector<int>> lyndon, pre;
    for (const auto& s : strings) {
        auto ls = lex_string::of(s);
        if (is_lyndon(ls)) lyndon.push_back(s);
        if (is_pre_lyndon(ls)) pre.push_back(s);
    }
    std::size_t checked = 0, violations = 0;
    for (const auto& v : lyndon) {
        for (const auto& u : pre) {
            if (u.size() > v.size() || !(v < u)) continue;
            for (const auto& w : strings) {
                if (v.size() + w.size() > 8) continue;
                auto uw = u;
                uw.insert(uw.end(), w.begin(), w.end());
                if (!is_lyndon(lex_string::of(uw))) continue;
                auto vw = v;
                vw.insert(vw.end(), w.begin(), w.end());
                ++checked;
                if (!is_lyndon(lex_string::of(vw)) || !(vw < uw)) ++violations;
            }
        }
    }
    REQUIRE(checked > 100);
    REQUIRE(violations == 0);
}

TEST_CASE("duval_factorize fixtures") {
    auto t = T("banana");
    auto f = duval_factorize(t);
    REQUIRE(f.size() == 4);
    CHECK(f[0] == std::pair<int, int>{1, 1});  // b
    CHECK(f[1] == std::pair<int, int>{2, 3});  // an
    CHECK(f[2] == std::pair<int, int>{4, 5});  // an
    CHECK(f[3] == std::pair<int, int>{6, 6});  // a

    CHECK(duval_factorize(T("aaa")).size() == 3);
    CHECK(duval_factorize(T("abc")) == std::vector<std::pair<int, int>>{{1, 3}});
    CHECK(duval_factorize(T("")).empty());
}

TEST_CASE("duval factors are Lyndon, non-increasing, and cover the text") {
    std::mt19937_64 rng(11);
    auto check_one = [&](const text& t) {
        auto f = duval_factorize(t);
        int expect_start = 1;
        lex_string prev = lex_string::bottom();
        for (auto [s, e] : f) {
            REQUIRE(s == expect_start);
            expect_start = e + 1;
            position_seq p;
            for (int i = s; i <= e; ++i) p.push_back(i);
            auto fac = extract(t, p);
            REQUIRE(is_lyndon(fac));
            if (!prev.is_bottom()) REQUIRE(lex_compare(prev, fac) != std::strong_ordering::less);
            prev = fac;
        }
        REQUIRE(expect_start == t.size() + 1);
    };
    for (const auto& raw : all_strings(2, 9)) check_one(normalize(raw));
    for (int it = 0; it < 300; ++it)
        check_one(normalize(testutil::random_symbols(rng, 1 + static_cast<int>(rng() % 50), 4)));
}

TEST_CASE("longest_lyndon_substring picks the leftmost longest factor") {
    auto t = T("banana");
    CHECK(longest_lyndon_substring(t) == std::pair<int, int>{2, 3});
    CHECK(longest_lyndon_substring(T("abc")) == std::pair<int, int>{1, 3});
    CHECK(longest_lyndon_substring(T("cba")) == std::pair<int, int>{1, 1});
    CHECK_THROWS_AS(longest_lyndon_substring(T("")), std::invalid_argument);
}
