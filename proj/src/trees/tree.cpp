#include "rooks/tree.hpp"

#include <algorithm>
#include <string>

namespace rooks {

PlaneKaryTree::PlaneKaryTree(int n, int k, int root, std::vector<Attachment> attachments)
    : n_(n), k_(k), root_(root), attachments_(std::move(attachments))
{
    if (n < 1) throw InvalidArgument("a tree needs at least one node");
    if (k < 1) throw InvalidArgument("arity k must be positive");
    if (root < 1 || root > n) throw InvalidArgument("root label out of range");
    if (static_cast<int>(attachments_.size()) != n)
        throw InvalidArgument("expected one attachment entry per label");
    attachments_[static_cast<std::size_t>(root - 1)] = {0, 0};
    children_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0);
    for (int label = 1; label <= n; ++label) {
        if (label == root) continue;
        const auto [p, s] = attachments_[static_cast<std::size_t>(label - 1)];
        if (p < 1 || p > n || p == label)
            throw InvalidArgument("node " + std::to_string(label) + " has an invalid parent");
        if (s < 1 || s > k) throw InvalidArgument("node " + std::to_string(label) + " has an invalid slot");
        int& cell = children_[static_cast<std::size_t>(p - 1) * static_cast<std::size_t>(k) + static_cast<std::size_t>(s - 1)];
        if (cell != 0)
            throw InvalidArgument("slot " + std::to_string(s) + " of node " + std::to_string(p) + " is used twice");
        cell = label;
    }
    // Every label must reach the root; n-1 edges then force a tree.
    std::vector<int> state(static_cast<std::size_t>(n) + 1, 0);  // 0 unknown, 1 on path, 2 reaches root
    state[static_cast<std::size_t>(root)] = 2;
    for (int start = 1; start <= n; ++start) {
        std::vector<int> path;
        int v = start;
        while (state[static_cast<std::size_t>(v)] == 0) {
            state[static_cast<std::size_t>(v)] = 1;
            path.push_back(v);
            v = attachments_[static_cast<std::size_t>(v - 1)].parent;
        }
        if (state[static_cast<std::size_t>(v)] == 1) throw InvalidArgument("parent pointers contain a cycle");
        for (int u : path) state[static_cast<std::size_t>(u)] = 2;
    }
}

PlaneKaryTree PlaneKaryTree::singleton(int k) { return PlaneKaryTree(1, k, 1, {{0, 0}}); }

int PlaneKaryTree::parent(int label) const
{
    if (label < 1 || label > n_) throw InvalidArgument("label out of range");
    return attachments_[static_cast<std::size_t>(label - 1)].parent;
}

int PlaneKaryTree::slot(int label) const
{
    if (label < 1 || label > n_) throw InvalidArgument("label out of range");
    return attachments_[static_cast<std::size_t>(label - 1)].slot;
}

int PlaneKaryTree::child(int label, int slot) const
{
    if (label < 1 || label > n_ || slot < 1 || slot > k_) throw InvalidArgument("label or slot out of range");
    return children_[static_cast<std::size_t>(label - 1) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(slot - 1)];
}

TreeStatistics statistics(const PlaneKaryTree& tree)
{
    TreeStatistics out{WeakComposition(static_cast<std::size_t>(tree.k())),
                       WeakComposition(static_cast<std::size_t>(tree.k()))};
    for (int v = 1; v <= tree.n(); ++v) {
        if (v == tree.root()) continue;
        const auto slot_index = static_cast<std::size_t>(tree.slot(v) - 1);
        if (tree.parent(v) > v) ++out.dsc[slot_index];
        else ++out.asc[slot_index];
    }
    return out;
}

std::vector<int> spine(const PlaneKaryTree& tree)
{
    std::vector<int> path;
    for (int v = tree.n(); v != 0; v = tree.parent(v)) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> left_to_right_maxima(const std::vector<int>& sequence)
{
    if (sequence.empty()) throw InvalidArgument("left-to-right maxima of an empty sequence");
    std::vector<int> out;
    for (std::size_t i = 0; i < sequence.size(); ++i)
        if (out.empty() || sequence[i] > sequence[static_cast<std::size_t>(out.back() - 1)])
            out.push_back(static_cast<int>(i) + 1);
    return out;
}

std::string_view to_string(TreeClass c)
{
    switch (c) {
    case TreeClass::all: return "all";
    case TreeClass::increasing: return "increasing";
    case TreeClass::right_increasing: return "right-increasing";
    case TreeClass::ltree: return "ltree";
    case TreeClass::ltree_b: return "ltree-b";
    }
    return "unknown";
}

std::optional<TreeClass> parse_tree_class(std::string_view name)
{
    for (auto c : {TreeClass::all, TreeClass::increasing, TreeClass::right_increasing, TreeClass::ltree,
                   TreeClass::ltree_b})
        if (to_string(c) == name) return c;
    return std::nullopt;
}

bool is_in_class(const PlaneKaryTree& tree, TreeClass c)
{
    if (c == TreeClass::all) return true;
    const int k = tree.k();
    if (k < 2) throw InvalidArgument("tree classes need k >= 2");
    const auto stats = statistics(tree);
    switch (c) {
    case TreeClass::increasing: return stats.dsc.total() == 0;
    case TreeClass::right_increasing: return stats.dsc[static_cast<std::size_t>(k - 1)] == 0;
    case TreeClass::ltree: return stats.asc[0] == 0 && stats.dsc[static_cast<std::size_t>(k - 1)] == 0;
    case TreeClass::ltree_b:
        return tree.n() > 1 && stats.asc[0] == 0 && stats.dsc[static_cast<std::size_t>(k - 1)] == 0 && tree.child(1, k) == 0 &&
               tree.child(tree.n(), 1) == 0;
    case TreeClass::all: break;
    }
    return true;
}

}  // namespace rooks
