#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "lynseq/text.hpp"

namespace lynseq {

/// Opaque, stable identifier of an order_trie node. Nodes are never
/// deleted, so handles never dangle. Handle 0 is the root (bottom).
struct node_handle {
    std::uint32_t id = 0;
    bool operator==(const node_handle&) const = default;
};

class duplicate_edge : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Grow-only trie over rank strings. Children are kept in creation
/// order, edge labels out of one node are pairwise distinct, and every
/// node carries a binary-lifting ancestor table so that level-ancestor,
/// LCA and lexicographic `precedes` run in O(log depth).
class order_trie {
public:
    order_trie() {
        parent_.push_back(0);
        label_.push_back(0);
        depth_.push_back(0);
        created_pos_.push_back(0);
        children_.emplace_back();
        child_labels_.emplace_back();
        up_.emplace_back();  // root has no ancestors
    }

    static node_handle root() { return {0}; }

    std::size_t size() const { return parent_.size(); }

    int depth(node_handle u) const { return depth_[u.id]; }
    node_handle parent(node_handle u) const { return {parent_[u.id]}; }
    int label(node_handle u) const { return label_[u.id]; }

    /// Text position recorded at insertion (0 if none was supplied);
    /// lets callers that build subsequence tries recover witnesses.
    int created_pos(node_handle u) const { return created_pos_[u.id]; }

    const std::vector<std::uint32_t>& children(node_handle u) const { return children_[u.id]; }

    /// Appends a new leaf under v with edge label c. The leaf becomes the
    /// last child of v. Inserting a second edge with the same label at
    /// the same node is a caller bug and throws.
    node_handle insert(node_handle v, int c, int pos = 0) {
        if (!child_labels_[v.id].insert(c).second)
            throw duplicate_edge("order_trie::insert: duplicate edge label at node");
        std::uint32_t id = static_cast<std::uint32_t>(parent_.size());
        parent_.push_back(v.id);
        label_.push_back(c);
        depth_.push_back(depth_[v.id] + 1);
        created_pos_.push_back(pos);
        children_.emplace_back();
        child_labels_.emplace_back();
        children_[v.id].push_back(id);
        // ancestor jump table: up[k] = 2^k-th ancestor
        std::vector<std::uint32_t> up;
        up.push_back(v.id);
        for (std::size_t k = 0; k + 1 <= up_[v.id].size(); ++k) {
            std::uint32_t half = up.back();
            if (k >= up_[half].size()) break;
            up.push_back(up_[half][k]);
        }
        up_.push_back(std::move(up));
        return {id};
    }

    /// Ancestor of u at depth d (0 = root, depth(u) = u itself).
    node_handle level_anc(node_handle u, int d) const {
        if (d < 0 || d > depth(u))
            throw std::invalid_argument("order_trie::level_anc: depth out of range");
        std::uint32_t v = u.id;
        int climb = depth_[v] - d;
        for (int k = 0; climb; ++k, climb >>= 1)
            if (climb & 1) v = up_[v][static_cast<std::size_t>(k)];
        return {v};
    }

    node_handle lca(node_handle u, node_handle v) const {
        int d = std::min(depth(u), depth(v));
        std::uint32_t a = level_anc(u, d).id;
        std::uint32_t b = level_anc(v, d).id;
        if (a == b) return {a};
        for (int k = static_cast<int>(up_[a].size()) - 1; k >= 0; --k) {
            if (k < static_cast<int>(up_[a].size()) && k < static_cast<int>(up_[b].size()) &&
                up_[a][static_cast<std::size_t>(k)] != up_[b][static_cast<std::size_t>(k)]) {
                a = up_[a][static_cast<std::size_t>(k)];
                b = up_[b][static_cast<std::size_t>(k)];
            }
        }
        return {up_[a][0]};
    }

    /// True iff string(u) is strictly smaller than string(v). The root
    /// represents bottom and compares greater than every other node; a
    /// proper ancestor (prefix) compares smaller.
    bool precedes(node_handle u, node_handle v) const {
        if (u == v) return false;
        if (u.id == 0) return false;  // bottom is largest
        if (v.id == 0) return true;
        node_handle w = lca(u, v);
        if (w == u) return true;   // u is a proper prefix of v
        if (w == v) return false;  // v is a proper prefix of u
        int d = depth(w) + 1;
        return label(level_anc(u, d)) < label(level_anc(v, d));
    }

    /// String represented by u, rebuilt by walking parent links.
    /// Root yields bottom. Debug/test helper, linear in depth.
    lex_string string_of(node_handle u) const {
        if (u.id == 0) return lex_string::bottom();
        std::vector<int> r(static_cast<std::size_t>(depth(u)));
        std::uint32_t v = u.id;
        for (int d = depth(u); d > 0; --d) {
            r[static_cast<std::size_t>(d - 1)] = label_[v];
            v = parent_[v];
        }
        return lex_string::of(std::move(r));
    }

    /// Positions recorded on the path from root to u.
    position_seq positions_of(node_handle u) const {
        position_seq p(static_cast<std::size_t>(depth(u)));
        std::uint32_t v = u.id;
        for (int d = depth(u); d > 0; --d) {
            p[static_cast<std::size_t>(d - 1)] = created_pos_[v];
            v = parent_[v];
        }
        return p;
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<int> label_;
    std::vector<int> depth_;
    std::vector<int> created_pos_;
    std::vector<std::vector<std::uint32_t>> children_;
    std::vector<std::unordered_set<int>> child_labels_;
    std::vector<std::vector<std::uint32_t>> up_;
};

}  // namespace lynseq
