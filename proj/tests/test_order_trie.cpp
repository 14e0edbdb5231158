#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "lynseq/order_trie.hpp"

using namespace lynseq;

TEST_CASE("insert keeps creation order and rejects duplicate labels") {
    order_trie tr;
    auto a = tr.insert(order_trie::root(), 1);
    auto b = tr.insert(order_trie::root(), 2);
    REQUIRE(tr.children(order_trie::root()) == std::vector<std::uint32_t>{a.id, b.id});

    CHECK_THROWS_AS(tr.insert(order_trie::root(), 1), duplicate_edge);

    auto ab = tr.insert(a, 2);
    CHECK(tr.depth(ab) == 2);
    CHECK(tr.depth(order_trie::root()) == 0);
    CHECK(tr.parent(ab) == a);
    CHECK(tr.label(ab) == 2);
}

TEST_CASE("lca and level ancestors on a small trie") {
    order_trie tr;
    auto a = tr.insert(order_trie::root(), 1);
    auto ab = tr.insert(a, 2);
    auto ac = tr.insert(a, 3);
    auto abc = tr.insert(ab, 3);

    CHECK(tr.lca(ab, ac) == a);
    CHECK(tr.lca(abc, order_trie::root()) == order_trie::root());
    CHECK(tr.lca(abc, abc) == abc);
    CHECK(tr.lca(abc, ac) == a);

    CHECK(tr.level_anc(abc, 1) == a);
    CHECK(tr.level_anc(abc, 3) == abc);
    CHECK(tr.level_anc(abc, 0) == order_trie::root());
    CHECK_THROWS_AS(tr.level_anc(ab, 3), std::invalid_argument);
}

TEST_CASE("precedes on fixtures") {
    order_trie tr;
    auto a = tr.insert(order_trie::root(), 1);
    auto ab = tr.insert(a, 2);
    auto b = tr.insert(order_trie::root(), 2);

    CHECK(tr.precedes(ab, b));         // "ab" < "b"
    CHECK(tr.precedes(a, ab));         // prefix case
    CHECK_FALSE(tr.precedes(ab, ab));  // strict
    CHECK_FALSE(tr.precedes(order_trie::root(), a));  // bottom largest
    CHECK(tr.precedes(a, order_trie::root()));
}

TEST_CASE("precedes matches explicit string comparison on random tries") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 40; ++round) {
        order_trie tr;
        std::vector<node_handle> nodes{order_trie::root()};
        int sigma = 2 + static_cast<int>(rng() % 3);
        int target = 20 + static_cast<int>(rng() % 181);  // up to ~200 nodes
        while (static_cast<int>(nodes.size()) < target) {
            auto v = nodes[rng() % nodes.size()];
            int c = 1 + static_cast<int>(rng() % sigma);
            bool dup = false;
            for (auto ch : tr.children(v))
                if (tr.label({ch}) == c) dup = true;
            if (dup) continue;
            nodes.push_back(tr.insert(v, c));
        }
        std::size_t mismatches = 0, trichotomy = 0;
        for (auto u : nodes) {
            for (auto v : nodes) {
                bool got = tr.precedes(u, v);
                bool want = lex_less(tr.string_of(u), tr.string_of(v));
                if (got != want) ++mismatches;
                if (!(u == v) && !tr.string_of(u).is_bottom() && !tr.string_of(v).is_bottom()) {
                    int holds = (tr.precedes(u, v) ? 1 : 0) + (tr.precedes(v, u) ? 1 : 0);
                    if (holds != 1) ++trichotomy;
                }
            }
        }
        REQUIRE(mismatches == 0);
        REQUIRE(trichotomy == 0);
    }
}

TEST_CASE("deep chain stresses the ancestor tables") {
    order_trie tr;
    auto v = order_trie::root();
    std::vector<node_handle> chain{v};
    for (int d = 1; d <= 300; ++d) {
        v = tr.insert(v, 1, d);
        chain.push_back(v);
    }
    for (int d = 0; d <= 300; d += 37) CHECK(tr.level_anc(v, d) == chain[static_cast<std::size_t>(d)]);
    CHECK(tr.lca(chain[120], chain[260]) == chain[120]);
    CHECK(tr.precedes(chain[5], chain[6]));   // prefix
    CHECK_FALSE(tr.precedes(chain[6], chain[5]));
    CHECK(tr.positions_of(chain[3]) == position_seq{1, 2, 3});
}
