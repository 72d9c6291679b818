#include "rooks/tree.hpp"

#include <map>
#include <string>

namespace rooks {
namespace {

// Class membership is a conjunction of per-edge conditions, so the search can
// reject a (parent, slot) choice as soon as it is made.
bool edge_allowed(TreeClass c, int n, int k, int parent, int child, int slot)
{
    switch (c) {
    case TreeClass::all: return true;
    case TreeClass::increasing: return child > parent;
    case TreeClass::right_increasing: return slot != k || child > parent;
    case TreeClass::ltree: return !(slot == 1 && child > parent) && !(slot == k && child < parent);
    case TreeClass::ltree_b:
        return !(slot == 1 && child > parent) && !(slot == k && child < parent) && !(parent == 1 && slot == k) &&
               !(parent == n && slot == 1);
    }
    return false;
}

void check_cap(int n, int k, const Limits& limits)
{
    const BigInt total = plane_tree_count(n, k);
    if (total > limits.max_enum)
        throw ResourceLimit("enumerating " + total.str() + " plane " + std::to_string(k) + "-ary trees on " +
                            std::to_string(n) + " nodes exceeds the cap of " + std::to_string(limits.max_enum));
}

using Attachment = PlaneKaryTree::Attachment;

// Depth-first search over attachment lists. on_tree receives (root, attachments)
// for each complete tree; returns the number of trees found.
template <class OnTree>
std::uint64_t search(int n, int k, TreeClass c, OnTree&& on_tree)
{
    std::uint64_t found = 0;
    std::vector<Attachment> attachments(static_cast<std::size_t>(n));
    std::vector<char> slot_used(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0);

    for (int root = 1; root <= n; ++root) {
        attachments.assign(static_cast<std::size_t>(n), Attachment{});
        const auto recurse = [&](auto&& self, int label) -> void {
            if (label > n) {
                ++found;
                on_tree(root, attachments);
                return;
            }
            if (label == root) {
                self(self, label + 1);
                return;
            }
            for (int p = 1; p <= n; ++p) {
                if (p == label) continue;
                // Parent pointers assigned so far form a forest; walking up from p
                // must not come back to label.
                bool cycle = false;
                for (int v = p; v != 0; v = attachments[static_cast<std::size_t>(v - 1)].parent) {
                    if (v == label) {
                        cycle = true;
                        break;
                    }
                }
                if (cycle) continue;
                for (int s = 1; s <= k; ++s) {
                    char& used = slot_used[static_cast<std::size_t>(p - 1) * static_cast<std::size_t>(k) +
                                           static_cast<std::size_t>(s - 1)];
                    if (used || !edge_allowed(c, n, k, p, label, s)) continue;
                    used = 1;
                    attachments[static_cast<std::size_t>(label - 1)] = {p, s};
                    self(self, label + 1);
                    attachments[static_cast<std::size_t>(label - 1)] = {};
                    used = 0;
                }
            }
        };
        recurse(recurse, 1);
    }
    return found;
}

void check_args(int n, int k, TreeClass c)
{
    if (n < 1) throw InvalidArgument("tree enumeration needs n >= 1");
    if (k < 1) throw InvalidArgument("tree enumeration needs k >= 1");
    if (c != TreeClass::all && k < 2) throw InvalidArgument("tree classes need k >= 2");
}

}  // namespace

BigInt plane_tree_count(int n, int k)
{
    if (n < 1 || k < 1) throw InvalidArgument("plane tree count needs n >= 1 and k >= 1");
    BigInt total = 1;
    for (int i = 0; i <= n - 2; ++i) total *= BigInt(k) * n - i;
    return total;
}

void for_each_plane_tree(int n, int k, TreeClass c, const std::function<void(const PlaneKaryTree&)>& visit,
                         const Limits& limits)
{
    check_args(n, k, c);
    check_cap(n, k, limits);
    if (c == TreeClass::ltree_b && n == 1) return;
    search(n, k, c, [&](int root, const std::vector<Attachment>& attachments) {
        visit(PlaneKaryTree(n, k, root, attachments));
    });
}

std::vector<PlaneKaryTree> enumerate_plane_trees(int n, int k, const Limits& limits)
{
    std::vector<PlaneKaryTree> out;
    for_each_plane_tree(n, k, TreeClass::all, [&](const PlaneKaryTree& t) { out.push_back(t); }, limits);
    return out;
}

BigInt ltree_count_formula(int n, int k)
{
    if (n < 1 || k < 2) throw InvalidArgument("ltree formula needs n >= 1 and k >= 2");
    BigInt sum = 0;
    for (int j = 0; j <= n; ++j)
        sum += binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) *
               pow(BigInt(1 + (k - 2) * n + j), static_cast<unsigned>(n - 1));
    const BigInt denominator = pow(BigInt(2), static_cast<unsigned>(n));
    if (sum % denominator != 0) throw InternalConsistencyError("ltree formula is not integral");
    return sum / denominator;
}

BigInt increasing_count_formula(int n, int k)
{
    if (n < 1 || k < 1) throw InvalidArgument("increasing-tree formula needs n >= 1 and k >= 1");
    BigInt product = 1;
    for (int i = 1; i <= n - 1; ++i) product *= 1 + i * (k - 1);
    return product;
}

BigInt count_class(int n, int k, TreeClass c, const Limits& limits)
{
    check_args(n, k, c);
    if (c == TreeClass::ltree_b && n == 1) return 0;

    std::optional<BigInt> closed_form;
    if (c == TreeClass::all) closed_form = plane_tree_count(n, k);
    if (c == TreeClass::ltree) closed_form = ltree_count_formula(n, k);
    if (c == TreeClass::increasing) closed_form = increasing_count_formula(n, k);

    if (plane_tree_count(n, k) > limits.max_enum) {
        if (closed_form) return *closed_form;
        check_cap(n, k, limits);
    }
    const BigInt enumerated = search(n, k, c, [](int, const std::vector<Attachment>&) {});
    if (closed_form && *closed_form != enumerated)
        throw VerificationFailure("count of " + std::string(to_string(c)) + " trees: closed form " +
                                  closed_form->str() + " but enumeration found " + enumerated.str());
    return enumerated;
}

MultivariatePolynomial tree_statistic_polynomial(int n, int k, const Limits& limits)
{
    check_args(n, k, TreeClass::all);
    check_cap(n, k, limits);
    std::map<MultivariatePolynomial::Exponents, std::uint64_t> tally;
    MultivariatePolynomial::Exponents exponents(2 * static_cast<std::size_t>(k));
    search(n, k, TreeClass::all, [&](int root, const std::vector<Attachment>& attachments) {
        std::fill(exponents.begin(), exponents.end(), 0);
        for (int v = 1; v <= n; ++v) {
            if (v == root) continue;
            const auto [p, s] = attachments[static_cast<std::size_t>(v - 1)];
            const auto offset = p > v ? 0 : static_cast<std::size_t>(k);
            ++exponents[offset + static_cast<std::size_t>(s - 1)];
        }
        ++tally[exponents];
    });
    MultivariatePolynomial out(k);
    for (const auto& [e, count] : tally) out.add_term(e, BigInt(count));
    return out;
}

}  // namespace rooks
