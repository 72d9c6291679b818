#include "rooks/graph.hpp"

#include <bit>
#include <map>
#include <string>

namespace rooks {
namespace {

using Mask = SimpleGraph::Mask;
using Adjacency = std::vector<Mask>;

/// Removes bit `index` and shifts the higher bits down by one.
Mask drop_bit(Mask m, int index)
{
    const Mask low = m & ((Mask{1} << index) - 1);
    const Mask high = index + 1 >= 64 ? 0 : (m >> (index + 1)) << index;
    return low | high;
}

Adjacency remove_vertex(const Adjacency& adj, int v)
{
    Adjacency out;
    out.reserve(adj.size() - 1);
    for (std::size_t i = 0; i < adj.size(); ++i)
        if (static_cast<int>(i) != v) out.push_back(drop_bit(adj[i], v));
    return out;
}

/// Identifies v with u (u < v), dropping the loop.
Adjacency contract(Adjacency adj, int u, int v)
{
    const Mask merged = (adj[static_cast<std::size_t>(u)] | adj[static_cast<std::size_t>(v)]) &
                        ~(Mask{1} << u) & ~(Mask{1} << v);
    for (std::size_t w = 0; w < adj.size(); ++w) {
        if ((merged >> w) & 1u) adj[w] |= Mask{1} << u;
    }
    adj[static_cast<std::size_t>(u)] = merged;
    return remove_vertex(adj, v);
}

class ChromaticSolver {
public:
    IntegerPolynomial solve(const Adjacency& adj)
    {
        const int n = static_cast<int>(adj.size());
        if (n == 0) return IntegerPolynomial::constant(1);
        std::size_t twice_edges = 0;
        for (Mask m : adj) twice_edges += static_cast<std::size_t>(std::popcount(m));
        const std::size_t edges = twice_edges / 2;
        const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
        if (edges == 0) return IntegerPolynomial::monomial(BigInt(1), static_cast<unsigned>(n));
        if (edges == pairs) return falling_factorial(static_cast<unsigned>(n));

        if (auto it = memo_.find(adj); it != memo_.end()) return it->second;

        IntegerPolynomial result;
        const int universal = find_vertex(adj, n - 1);
        const int isolated = find_vertex(adj, 0);
        if (isolated >= 0) {
            result = IntegerPolynomial::monomial(BigInt(1), 1) * solve(remove_vertex(adj, isolated));
        } else if (universal >= 0) {
            // A vertex adjacent to everything takes its own colour.
            result = IntegerPolynomial::monomial(BigInt(1), 1) *
                     compose_linear(solve(remove_vertex(adj, universal)), BigInt(1), BigInt(-1));
        } else if (2 * edges > pairs) {
            // P(G) = P(G + uv) + P(G / uv) on a non-edge uv.
            const auto [u, v] = pick_pair(adj, false);
            Adjacency added = adj;
            added[static_cast<std::size_t>(u)] |= Mask{1} << v;
            added[static_cast<std::size_t>(v)] |= Mask{1} << u;
            result = solve(added) + solve(contract(adj, u, v));
        } else {
            // P(G) = P(G - uv) - P(G / uv) on an edge uv.
            const auto [u, v] = pick_pair(adj, true);
            Adjacency removed = adj;
            removed[static_cast<std::size_t>(u)] &= ~(Mask{1} << v);
            removed[static_cast<std::size_t>(v)] &= ~(Mask{1} << u);
            result = solve(removed) - solve(contract(adj, u, v));
        }
        memo_.emplace(adj, result);
        return result;
    }

private:
    static int find_vertex(const Adjacency& adj, int degree)
    {
        for (std::size_t v = 0; v < adj.size(); ++v)
            if (std::popcount(adj[v]) == degree) return static_cast<int>(v);
        return -1;
    }

    /// First (u, v), u < v, in lexicographic order that is an edge (or a
    /// non-edge when `edge` is false).
    static std::pair<int, int> pick_pair(const Adjacency& adj, bool edge)
    {
        const int n = static_cast<int>(adj.size());
        const Mask all = (Mask{1} << n) - 1;
        for (int u = 0; u < n; ++u) {
            Mask candidates = edge ? adj[static_cast<std::size_t>(u)] : (~adj[static_cast<std::size_t>(u)] & all);
            candidates &= ~((Mask{2} << u) - 1);
            if (candidates != 0) return {u, std::countr_zero(candidates)};
        }
        throw InternalConsistencyError("chromatic polynomial: no pair to branch on");
    }

    std::map<Adjacency, IntegerPolynomial> memo_;
};

}  // namespace

IntegerPolynomial chromatic_polynomial(const SimpleGraph& g)
{
    if (g.vertex_count() > kChromaticMaxVertices)
        throw ResourceLimit("chromatic polynomial is capped at " + std::to_string(kChromaticMaxVertices) +
                            " vertices");
    Adjacency adj;
    for (int v = 1; v <= g.vertex_count(); ++v) adj.push_back(g.neighbours(v));
    ChromaticSolver solver;
    return solver.solve(adj);
}

}  // namespace rooks
