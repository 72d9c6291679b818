#include "rooks/bijection.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace rooks {
namespace {

void check_shape(int n, int k)
{
    if (n < 1) throw InvalidArgument("placements need n >= 1");
    if (k < 1) throw InvalidArgument("placements need k >= 1");
}

void check_cap(int n, int k, const Limits& limits)
{
    const BigInt total = colored_placement_count(n, k);
    if (total > limits.max_enum)
        throw ResourceLimit("enumerating " + total.str() + " colored placements exceeds the cap of " +
                            std::to_string(limits.max_enum));
}

}  // namespace

void FlatPlacement::validate() const
{
    check_shape(n, k);
    if (static_cast<int>(f.size()) != n - 1) throw InvalidArgument("a flat placement lists exactly n-1 values");
    std::vector<char> seen(static_cast<std::size_t>(k) * static_cast<std::size_t>(n) + 1, 0);
    for (int value : f) {
        if (value < 1 || value > k * n) throw InvalidArgument("flat placement value out of range [1, kn]");
        if (seen[static_cast<std::size_t>(value)]) throw InvalidArgument("flat placement is not injective");
        seen[static_cast<std::size_t>(value)] = 1;
    }
}

void ColoredPlacement::validate() const
{
    check_shape(n, k);
    if (static_cast<int>(g.size()) != n - 1) throw InvalidArgument("a colored placement lists exactly n-1 cells");
    std::vector<char> seen(static_cast<std::size_t>(k) * static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : g) {
        if (a < 1 || a > n || b < 1 || b > k) throw InvalidArgument("colored placement cell out of range");
        char& cell = seen[static_cast<std::size_t>(b - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(a - 1)];
        if (cell) throw InvalidArgument("colored placement is not injective");
        cell = 1;
    }
}

ColoredPlacement phi(const FlatPlacement& f)
{
    f.validate();
    ColoredPlacement out{f.n, f.k, {}};
    out.g.reserve(f.f.size());
    for (int value : f.f) {
        const int block = (value - 1) / f.n;  // floor((f(i)-1)/n); ceil(f(i)/n) = block + 1
        out.g.push_back({value - f.n * block, block + 1});
    }
    return out;
}

FlatPlacement phi_inverse(const ColoredPlacement& g)
{
    g.validate();
    FlatPlacement out{g.n, g.k, {}};
    out.f.reserve(g.g.size());
    for (const auto& [a, b] : g.g) out.f.push_back(a + (b - 1) * g.n);
    return out;
}

ExcSub exc_sub(const ColoredPlacement& g)
{
    g.validate();
    ExcSub out{WeakComposition(static_cast<std::size_t>(g.k)), WeakComposition(static_cast<std::size_t>(g.k))};
    for (std::size_t idx = 0; idx < g.g.size(); ++idx) {
        const int i = static_cast<int>(idx) + 1;
        const auto [a, b] = g.g[idx];
        if (a > i) ++out.exc[static_cast<std::size_t>(b - 1)];
        else ++out.sub[static_cast<std::size_t>(b - 1)];
    }
    return out;
}

DecoratedDigraph::DecoratedDigraph(const ColoredPlacement& g) : n_(g.n)
{
    g.validate();
    target_.assign(static_cast<std::size_t>(n_) + 1, 0);
    label_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (std::size_t idx = 0; idx < g.g.size(); ++idx) {
        target_[idx + 1] = g.g[idx].column;
        label_[idx + 1] = g.g[idx].color;
    }
}

std::vector<std::vector<int>> DecoratedDigraph::cycles() const
{
    // 0 unvisited, 1 on the current walk, 2 finished.
    std::vector<int> state(static_cast<std::size_t>(n_) + 1, 0);
    std::vector<std::vector<int>> out;
    for (int start = 1; start <= n_; ++start) {
        std::vector<int> walk;
        int v = start;
        while (v != 0 && state[static_cast<std::size_t>(v)] == 0) {
            state[static_cast<std::size_t>(v)] = 1;
            walk.push_back(v);
            v = target_[static_cast<std::size_t>(v)];
        }
        if (v != 0 && state[static_cast<std::size_t>(v)] == 1) {
            const auto first = std::find(walk.begin(), walk.end(), v);
            std::vector<int> cycle(first, walk.end());
            std::rotate(cycle.begin(), std::max_element(cycle.begin(), cycle.end()), cycle.end());
            out.push_back(std::move(cycle));
        }
        for (int u : walk) state[static_cast<std::size_t>(u)] = 2;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

int DecoratedDigraph::component_count() const
{
    std::vector<int> parent(static_cast<std::size_t>(n_) + 1);
    for (int v = 0; v <= n_; ++v) parent[static_cast<std::size_t>(v)] = v;
    const auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    int components = n_;
    for (int v = 1; v <= n_; ++v) {
        const int w = target_[static_cast<std::size_t>(v)];
        if (w == 0) continue;
        const int a = find(v), b = find(w);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components;
}

PlaneKaryTree psi(const ColoredPlacement& g)
{
    const DecoratedDigraph digraph(g);
    const int n = g.n;
    const auto cycles = digraph.cycles();

    std::vector<int> target(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v < n; ++v) {
        target[static_cast<std::size_t>(v)] = digraph.target(v);
        label[static_cast<std::size_t>(v)] = digraph.label(v);
    }

    // Open cycle i at its maximum a_i (edge a_i -> b_i labeled c_i) and hang the
    // next piece's root a_{i+1} (or n) from b_i with the same label.
    int root = n;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const int a = cycles[i].front();
        const int b = digraph.target(a);
        const int c = digraph.label(a);
        if (i == 0) {
            root = a;
            target[static_cast<std::size_t>(a)] = 0;
        }
        const int next = i + 1 < cycles.size() ? cycles[i + 1].front() : n;
        target[static_cast<std::size_t>(next)] = b;
        label[static_cast<std::size_t>(next)] = c;
    }

    std::vector<PlaneKaryTree::Attachment> attachments(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        if (v != root) attachments[static_cast<std::size_t>(v - 1)] = {target[static_cast<std::size_t>(v)], label[static_cast<std::size_t>(v)]};
    return PlaneKaryTree(n, g.k, root, std::move(attachments));
}

ColoredPlacement psi_inverse(const PlaneKaryTree& tree)
{
    const int n = tree.n();
    std::vector<int> target(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        target[static_cast<std::size_t>(v)] = tree.parent(v);
        label[static_cast<std::size_t>(v)] = tree.slot(v);
    }

    // For consecutive records j_s, j_t of the spine: cut j_t from j_{t-1} and
    // close the cycle j_s -> j_{t-1} with the label of the removed edge.
    const auto path = spine(tree);
    const auto records = left_to_right_maxima(path);
    for (std::size_t r = 0; r + 1 < records.size(); ++r) {
        const int js = path[static_cast<std::size_t>(records[r] - 1)];
        const int jt = path[static_cast<std::size_t>(records[r + 1] - 1)];
        const int before_jt = path[static_cast<std::size_t>(records[r + 1] - 2)];
        target[static_cast<std::size_t>(js)] = before_jt;
        label[static_cast<std::size_t>(js)] = tree.slot(jt);
    }

    ColoredPlacement out{n, tree.k(), {}};
    out.g.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) out.g.push_back({target[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(i)]});
    out.validate();
    return out;
}

BigInt colored_placement_count(int n, int k)
{
    check_shape(n, k);
    BigInt total = 1;
    for (int i = 0; i <= n - 2; ++i) total *= BigInt(k) * n - i;
    return total;
}

void for_each_colored_placement(int n, int k, const std::function<void(const ColoredPlacement&)>& visit,
                                const Limits& limits)
{
    check_shape(n, k);
    check_cap(n, k, limits);
    ColoredPlacement current{n, k, std::vector<ColoredCell>(static_cast<std::size_t>(n - 1))};
    std::vector<char> used(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0);
    const auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == current.g.size()) {
            visit(current);
            return;
        }
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= k; ++b) {
                char& cell = used[static_cast<std::size_t>(b - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(a - 1)];
                if (cell) continue;
                cell = 1;
                current.g[i] = {a, b};
                self(self, i + 1);
                cell = 0;
            }
    };
    recurse(recurse, 0);
}

MultivariatePolynomial gessel_polynomial(int n, int k, const Limits& limits)
{
    check_shape(n, k);
    check_cap(n, k, limits);
    std::map<MultivariatePolynomial::Exponents, std::uint64_t> tally;
    MultivariatePolynomial::Exponents exponents(2 * static_cast<std::size_t>(k), 0);
    std::vector<char> used(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0);
    const auto recurse = [&](auto&& self, int i) -> void {
        if (i == n) {
            ++tally[exponents];
            return;
        }
        for (int a = 1; a <= n; ++a) {
            // u_b for an excedance (a > i), v_b otherwise.
            const std::size_t offset = a > i ? 0 : static_cast<std::size_t>(k);
            for (int b = 1; b <= k; ++b) {
                char& cell = used[static_cast<std::size_t>(b - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(a - 1)];
                if (cell) continue;
                cell = 1;
                ++exponents[offset + static_cast<std::size_t>(b - 1)];
                self(self, i + 1);
                --exponents[offset + static_cast<std::size_t>(b - 1)];
                cell = 0;
            }
        }
    };
    recurse(recurse, 1);
    MultivariatePolynomial out(k);
    for (const auto& [e, count] : tally) out.add_term(e, BigInt(count));
    return out;
}

}  // namespace rooks
