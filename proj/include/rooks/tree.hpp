#pragma once

#include "rooks/errors.hpp"
#include "rooks/multivariate.hpp"
#include "rooks/numeric.hpp"

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace rooks {

/// Labeled rooted plane k-ary tree on labels 1..n. Every non-root node sits in
/// one of its parent's k child slots; slot 1 is the left child and slot k the
/// right child.
class PlaneKaryTree {
public:
    struct Attachment {
        int parent = 0;
        int slot = 0;
        friend bool operator==(const Attachment&, const Attachment&) = default;
        friend auto operator<=>(const Attachment&, const Attachment&) = default;
    };

    /// attachments[label - 1] gives the parent and slot of each label; the
    /// entry for the root is ignored. Throws InvalidArgument unless the data
    /// describe a tree rooted at root with distinct slots per parent.
    PlaneKaryTree(int n, int k, int root, std::vector<Attachment> attachments);

    /// Single node.
    static PlaneKaryTree singleton(int k);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    int root() const noexcept { return root_; }
    /// 0 for the root.
    int parent(int label) const;
    /// 0 for the root.
    int slot(int label) const;
    /// Child of label in slot (1-based), or 0 if empty.
    int child(int label, int slot) const;

    const std::vector<Attachment>& attachments() const noexcept { return attachments_; }

    friend bool operator==(const PlaneKaryTree& a, const PlaneKaryTree& b)
    {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.root_ == b.root_ && a.attachments_ == b.attachments_;
    }

private:
    int n_ = 0;
    int k_ = 0;
    int root_ = 0;
    std::vector<Attachment> attachments_;  // index label-1; root entry is {0, 0}
    std::vector<int> children_;            // (label-1)*k + (slot-1)
};

struct TreeStatistics {
    WeakComposition dsc;  // dsc[i-1]: slot-i children smaller than their parent
    WeakComposition asc;  // asc[i-1]: slot-i children larger than their parent
};

TreeStatistics statistics(const PlaneKaryTree& tree);

/// Path from the root to the node labeled n.
std::vector<int> spine(const PlaneKaryTree& tree);

/// 1-based indices i with a_i greater than every earlier entry. The first and
/// (for a spine, which ends at its maximum) the last index are always included.
std::vector<int> left_to_right_maxima(const std::vector<int>& sequence);

enum class TreeClass { all, increasing, right_increasing, ltree, ltree_b };

std::string_view to_string(TreeClass c);
std::optional<TreeClass> parse_tree_class(std::string_view name);

/// A single node is never in the ltree-b class.
bool is_in_class(const PlaneKaryTree& tree, TreeClass c);

/// Number of trees in T^pl_{n,k}: (kn)(kn-1)...(kn-n+2).
BigInt plane_tree_count(int n, int k);

/// Visits the trees of the class in lexicographic order of (root, attachment
/// list). Throws ResourceLimit when plane_tree_count(n, k) > limits.max_enum.
void for_each_plane_tree(int n, int k, TreeClass c, const std::function<void(const PlaneKaryTree&)>& visit,
                         const Limits& limits = {});
std::vector<PlaneKaryTree> enumerate_plane_trees(int n, int k, const Limits& limits = {});

/// (1/2^n) sum_j C(n,j) (1 + (k-2)n + j)^(n-1).
BigInt ltree_count_formula(int n, int k);
/// prod_{i=1}^{n-1} (1 + i(k-1)).
BigInt increasing_count_formula(int n, int k);

/// Counts a class. ltree and increasing have closed forms and are cross-checked
/// against enumeration when it fits under the cap (VerificationFailure on
/// mismatch); other classes need enumeration. For n = 1, ltree-b counts 0
/// (no bounded regions for a single coordinate).
BigInt count_class(int n, int k, TreeClass c, const Limits& limits = {});

/// Sum over all trees of u^dsc v^asc.
MultivariatePolynomial tree_statistic_polynomial(int n, int k, const Limits& limits = {});

}  // namespace rooks
