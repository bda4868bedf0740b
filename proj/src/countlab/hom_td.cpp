#include "countlab/hom_td.hpp"

#include "countlab/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace countlab {

namespace {

struct NiceNode {
    enum Kind { leaf, introduce, forget, join } kind = leaf;
    std::vector<int> bag; // sorted
    int child1 = -1, child2 = -1;
    int vertex = -1; // introduced or forgotten
};

// Builds a rooted nice decomposition ending in an empty root bag.
// Returns the index of the root node.
struct NiceBuilder {
    std::vector<NiceNode> nodes;

    int add(NiceNode n) {
        nodes.push_back(std::move(n));
        return static_cast<int>(nodes.size()) - 1;
    }

    // chain of introduces from an empty leaf up to `bag`
    int build_leaf_chain(const std::vector<int>& bag) {
        int cur = add({NiceNode::leaf, {}, -1, -1, -1});
        std::vector<int> sofar;
        for (int v : bag) {
            sofar.push_back(v);
            std::sort(sofar.begin(), sofar.end());
            cur = add({NiceNode::introduce, sofar, cur, -1, v});
        }
        return cur;
    }

    // morph node `cur` (with bag `from`) into bag `to` by forgets then introduces
    int morph(int cur, std::vector<int> from, const std::vector<int>& to) {
        for (int v : std::vector<int>(from)) {
            if (std::binary_search(to.begin(), to.end(), v)) continue;
            from.erase(std::find(from.begin(), from.end(), v));
            cur = add({NiceNode::forget, from, cur, -1, v});
        }
        for (int v : to) {
            if (std::binary_search(from.begin(), from.end(), v)) continue;
            from.insert(std::upper_bound(from.begin(), from.end(), v), v);
            cur = add({NiceNode::introduce, from, cur, -1, v});
        }
        return cur;
    }
};

} // namespace

BigCount count_hom_td(const Graph& pattern, const TreeDecomposition& td, const Graph& host,
                      unsigned long long table_guard) {
    validate_tree_decomposition(pattern, td);
    const int ng = host.vertex_count();
    if (pattern.vertex_count() == 0) return 1;
    if (ng == 0) return 0;

    // table size guard: ng^(max bag size)
    {
        BigCount cells = 1;
        for (const auto& bag : td.bags) {
            BigCount c = 1;
            for (std::size_t i = 0; i < bag.size(); ++i) c *= ng;
            if (c > cells) cells = c;
        }
        if (cells > BigCount(static_cast<unsigned long>(table_guard)))
            throw GuardError("count_hom_td: table size " + cells.get_str() + " exceeds guard " +
                             std::to_string(table_guard));
    }

    // orient the decomposition tree at bag 0 and binarize into a nice form
    const int b = static_cast<int>(td.bags.size());
    std::vector<std::vector<int>> tadj(b);
    for (auto [x, y] : td.tree_edges) {
        tadj[x].push_back(y);
        tadj[y].push_back(x);
    }
    NiceBuilder nb;
    auto build = [&](auto&& self, int bag_idx, int parent) -> int {
        std::vector<int> morphed;
        for (int y : tadj[bag_idx]) {
            if (y == parent) continue;
            int sub = self(self, y, bag_idx);
            morphed.push_back(nb.morph(sub, td.bags[y], td.bags[bag_idx]));
        }
        if (morphed.empty()) return nb.build_leaf_chain(td.bags[bag_idx]);
        int cur = morphed[0];
        for (std::size_t i = 1; i < morphed.size(); ++i)
            cur = nb.add({NiceNode::join, td.bags[bag_idx], cur, morphed[i], -1});
        return cur;
    };
    int top = build(build, 0, -1);
    // forget everything above the root bag
    int root = nb.morph(top, td.bags[0], {});

    // evaluate tables bottom-up; nodes are created children-first, so a
    // single pass in creation order suffices
    std::vector<std::vector<BigCount>> tables(nb.nodes.size());
    auto table_size = [&](const std::vector<int>& bag) {
        std::size_t s = 1;
        for (std::size_t i = 0; i < bag.size(); ++i) s *= static_cast<std::size_t>(ng);
        return s;
    };
    // digit helpers: assignment of bag[i] is digit i (base ng)
    for (std::size_t t = 0; t < nb.nodes.size(); ++t) {
        const NiceNode& node = nb.nodes[t];
        switch (node.kind) {
            case NiceNode::leaf: {
                tables[t] = {BigCount(1)};
                break;
            }
            case NiceNode::introduce: {
                const auto& bag = node.bag;
                auto& out = tables[t];
                out.assign(table_size(bag), BigCount(0));
                const int p = static_cast<int>(
                    std::lower_bound(bag.begin(), bag.end(), node.vertex) - bag.begin());
                // pattern neighbours of the new vertex inside the bag
                std::vector<int> nb_pos;
                for (std::size_t i = 0; i < bag.size(); ++i)
                    if (bag[i] != node.vertex && pattern.has_edge(bag[i], node.vertex))
                        nb_pos.push_back(static_cast<int>(i));
                std::vector<int> digits(bag.size(), 0);
                for (std::size_t idx = 0; idx < out.size(); ++idx) {
                    // decode digits of idx
                    std::size_t rest = idx;
                    for (std::size_t i = 0; i < bag.size(); ++i) {
                        digits[i] = static_cast<int>(rest % ng);
                        rest /= ng;
                    }
                    bool ok = true;
                    for (int q : nb_pos)
                        if (!host.has_edge(digits[q], digits[p])) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                    // child index: drop digit p
                    std::size_t cidx = 0, mul = 1;
                    for (std::size_t i = 0; i < bag.size(); ++i) {
                        if (static_cast<int>(i) == p) continue;
                        cidx += mul * static_cast<std::size_t>(digits[i]);
                        mul *= ng;
                    }
                    out[idx] = tables[node.child1][cidx];
                }
                tables[node.child1].clear();
                break;
            }
            case NiceNode::forget: {
                const auto& bag = node.bag;
                const auto& cbag = nb.nodes[node.child1].bag;
                auto& out = tables[t];
                out.assign(table_size(bag), BigCount(0));
                const int p = static_cast<int>(
                    std::lower_bound(cbag.begin(), cbag.end(), node.vertex) - cbag.begin());
                const auto& ct = tables[node.child1];
                for (std::size_t cidx = 0; cidx < ct.size(); ++cidx) {
                    if (ct[cidx] == 0) continue;
                    // drop digit p from cidx
                    std::size_t idx = 0, mul = 1, rest = cidx;
                    for (std::size_t i = 0; i < cbag.size(); ++i) {
                        int digit = static_cast<int>(rest % ng);
                        rest /= ng;
                        if (static_cast<int>(i) == p) continue;
                        idx += mul * static_cast<std::size_t>(digit);
                        mul *= ng;
                    }
                    out[idx] += ct[cidx];
                }
                tables[node.child1].clear();
                break;
            }
            case NiceNode::join: {
                auto& out = tables[t];
                const auto& t1 = tables[node.child1];
                const auto& t2 = tables[node.child2];
                out.assign(t1.size(), BigCount(0));
                for (std::size_t i = 0; i < t1.size(); ++i)
                    if (t1[i] != 0 && t2[i] != 0) out[i] = t1[i] * t2[i];
                tables[node.child1].clear();
                tables[node.child2].clear();
                break;
            }
        }
    }
    return tables[root][0];
}

} // namespace countlab
