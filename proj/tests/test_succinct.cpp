#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <random>

#include "helpers.hpp"
#include "lynseq/succinct.hpp"

using namespace lynseq;
using testutil::T;

// linear-scan reference: smallest c > b in ranks[i..j], leftmost occurrence
static std::optional<char_pos> scan_successor(const text& t, int i, int j, int b) {
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

static std::optional<int> scan_max_pos(const text& t, int i, int j) {
    i = std::max(i, 1);
    j = std::min(j, t.size());
    std::optional<int> best;
    for (int k = i; k <= j; ++k)
        if (!best || t.rank_at(k) > t.rank_at(*best)) best = k;
    return best;
}

TEST_CASE("bit_vector_rank rank and select") {
    std::vector<bool> bits{1, 0, 0, 1, 1, 0, 1, 0, 0, 0, 1};
    bit_vector_rank bv(bits);
    std::size_t ones = 0;
    for (std::size_t i = 0; i <= bits.size(); ++i) {
        CHECK(bv.rank1(i) == ones);
        CHECK(bv.rank0(i) == i - ones);
        if (i < bits.size() && bits[i]) ++ones;
    }
    CHECK(bv.select1(1) == 0);
    CHECK(bv.select1(3) == 4);
    CHECK(bv.select1(5) == 10);
    CHECK(bv.select0(1) == 1);
    CHECK(bv.select0(6) == 9);
}

TEST_CASE("wavelet tree reconstructs the text") {
    auto t = T("bacdb");
    wavelet_tree wt(t);
    for (int i = 1; i <= t.size(); ++i) CHECK(wt.access(i) == t.rank_at(i));
}

TEST_CASE("range_successor fixtures") {
    auto t = T("bacdb");  // ranks: b=2 a=1 c=3 d=4 -> 2 1 3 4 2
    wavelet_tree wt(t);
    auto r = wt.range_successor(2, 5, 2);  // successor of 'b' in [2..5]
    REQUIRE(r.has_value());
    CHECK(r->ch == 3);  // 'c'
    CHECK(r->pos == 3);

    r = wt.range_successor(2, 5, 1);  // successor of 'a'
    REQUIRE(r.has_value());
    CHECK(r->ch == 2);  // 'b'
    CHECK(r->pos == 5);

    CHECK_FALSE(wt.range_successor(4, 3, 0).has_value());  // empty range

    auto unary = T("aaa");
    wavelet_tree wu(unary);
    CHECK_FALSE(wu.range_successor(1, 3, 1).has_value());  // no larger symbol

    wavelet_tree we(T(""));
    CHECK_FALSE(we.range_successor(1, 1, 0).has_value());
}

TEST_CASE("range_max_pos fixtures") {
    rmq_index r(T("aba"));
    CHECK(r.range_max_pos(1, 3) == 2);
    CHECK(r.range_max_pos(1, 1) == 1);
    CHECK_FALSE(r.range_max_pos(3, 2).has_value());
}

TEST_CASE("randomized agreement with linear scans") {
    std::mt19937_64 rng(101);
    std::size_t succ_mismatch = 0, max_mismatch = 0, gate_violations = 0;
    for (int round = 0; round < 200; ++round) {
        int n = 1 + static_cast<int>(rng() % 64);
        int sigma = 1 + static_cast<int>(rng() % 8);
        auto t = normalize(testutil::random_symbols(rng, n, sigma));
        wavelet_tree wt(t);
        rmq_index rq(t);
        pos_list_index pl(t);
        for (int q = 0; q < 50; ++q) {
            int i = 1 + static_cast<int>(rng() % n);
            int j = 1 + static_cast<int>(rng() % n);
            int b = static_cast<int>(rng() % (t.sigma + 2));
            auto want = scan_successor(t, i, j, b);
            if (wt.range_successor(i, j, b) != want) ++succ_mismatch;
            if (pl.range_successor(i, j, b) != want) ++succ_mismatch;
            auto wmax = scan_max_pos(t, i, j);
            auto gmax = rq.range_max_pos(i, j);
            if (gmax != wmax) ++max_mismatch;
            // gating consistency: if the range maximum is <= b, there is no successor
            if (gmax && t.rank_at(*gmax) <= b && wt.range_successor(i, j, b).has_value())
                ++gate_violations;
        }
    }
    REQUIRE(succ_mismatch == 0);
    REQUIRE(max_mismatch == 0);
    REQUIRE(gate_violations == 0);
}

TEST_CASE("next_occurrence_table agrees with scans and the position-list backend") {
    std::mt19937_64 rng(300);
    for (int round = 0; round < 100; ++round) {
        int n = 1 + static_cast<int>(rng() % 40);
        int sigma = 1 + static_cast<int>(rng() % 5);
        auto t = normalize(testutil::random_symbols(rng, n, sigma));
        next_occurrence_table nxt(t);
        pos_list_index pl(t);
        for (int i = 0; i <= n; ++i) {
            for (int c = 1; c <= t.sigma; ++c) {
                int want = n + 1;
                for (int j = i + 1; j <= n; ++j)
                    if (t.rank_at(j) == c) { want = j; break; }
                REQUIRE(nxt.next(i, c) == want);
                REQUIRE(pl.next(i, c) == want);
            }
        }
    }
}
