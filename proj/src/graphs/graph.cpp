#include "rooks/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace rooks {
namespace {

void check_vertex(int v, int vertex_count)
{
    if (v < 1 || v > vertex_count) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

SimpleGraph::SimpleGraph(int vertex_count) : vertex_count_(vertex_count)
{
    if (vertex_count < 0 || vertex_count > kMaxVertices)
        throw InvalidArgument("graphs support 0.." + std::to_string(kMaxVertices) + " vertices");
    adjacency_.assign(static_cast<std::size_t>(vertex_count), 0);
}

SimpleGraph::SimpleGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges) : SimpleGraph(vertex_count)
{
    for (const auto& [u, v] : edges) {
        if (has_edge(u, v)) throw InvalidArgument("duplicate edge");
        add_edge(u, v);
    }
}

bool SimpleGraph::has_edge(int u, int v) const
{
    check_vertex(u, vertex_count_);
    check_vertex(v, vertex_count_);
    return (adjacency_[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1u;
}

void SimpleGraph::add_edge(int u, int v)
{
    check_vertex(u, vertex_count_);
    check_vertex(v, vertex_count_);
    if (u == v) throw InvalidArgument("self-loops are not allowed");
    adjacency_[static_cast<std::size_t>(u - 1)] |= Mask{1} << (v - 1);
    adjacency_[static_cast<std::size_t>(v - 1)] |= Mask{1} << (u - 1);
}

SimpleGraph::Mask SimpleGraph::neighbours(int v) const
{
    check_vertex(v, vertex_count_);
    return adjacency_[static_cast<std::size_t>(v - 1)];
}

int SimpleGraph::degree(int v) const { return std::popcount(neighbours(v)); }

std::size_t SimpleGraph::edge_count() const
{
    std::size_t twice = 0;
    for (Mask m : adjacency_) twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= vertex_count_; ++u)
        for (int v = u + 1; v <= vertex_count_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

SimpleGraph linial_graph(int t, int n)
{
    if (n < 2 || t < 0) throw InvalidArgument("Linial graphs need n >= 2 and t >= 0");
    if (n - 2 + t < 1) throw InvalidArgument("Linial graph G_{t,n} has no column vertices for t = 0, n = 2");
    const int columns = 2 * n - 4 + t;
    SimpleGraph g(3 * n - 5 + t);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 3 + t + i; ++j) g.add_edge(columns + i, j);
    return g;
}

SimpleGraph complement(const SimpleGraph& g)
{
    SimpleGraph out(g.vertex_count());
    for (int u = 1; u <= g.vertex_count(); ++u)
        for (int v = u + 1; v <= g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

SimpleGraph complete_graph(int vertex_count) { return complement(SimpleGraph(vertex_count)); }

std::optional<std::vector<int>> bipartite_small_side(const SimpleGraph& g)
{
    const int n = g.vertex_count();
    std::vector<int> colour(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> side;
    for (int start = 1; start <= n; ++start) {
        if (colour[static_cast<std::size_t>(start)] != -1) continue;
        std::vector<int> parts[2];
        std::vector<int> stack{start};
        colour[static_cast<std::size_t>(start)] = 0;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            const int c = colour[static_cast<std::size_t>(v)];
            parts[c].push_back(v);
            for (SimpleGraph::Mask m = g.neighbours(v); m != 0; m &= m - 1) {
                const int w = std::countr_zero(m) + 1;
                int& cw = colour[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - c;
                    stack.push_back(w);
                } else if (cw == c) {
                    return std::nullopt;
                }
            }
        }
        const auto& chosen = parts[0].size() < parts[1].size() ? parts[0] : parts[1];
        side.insert(side.end(), chosen.begin(), chosen.end());
    }
    std::sort(side.begin(), side.end());
    return side;
}

MatchingProfile matching_profile_bipartite(const SimpleGraph& g, const std::vector<int>& side)
{
    if (static_cast<int>(side.size()) > kBipartiteMatchingMaxSide)
        throw ResourceLimit("row-by-row matching search is capped at " + std::to_string(kBipartiteMatchingMaxSide) +
                            " rows");
    SimpleGraph::Mask side_mask = 0;
    for (int v : side) {
        check_vertex(v, g.vertex_count());
        side_mask |= SimpleGraph::Mask{1} << (v - 1);
    }
    for (int v : side)
        if (g.neighbours(v) & side_mask) throw InvalidArgument("matching side is not an independent set");
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (!((side_mask >> (v - 1)) & 1u) && (g.neighbours(v) & ~side_mask))
            throw InvalidArgument("matching side does not cover every edge");

    std::vector<std::uint64_t> profile(side.size() + 1, 0);
    const auto recurse = [&](auto&& self, std::size_t row, SimpleGraph::Mask used, std::size_t size) -> void {
        if (row == side.size()) {
            ++profile[size];
            return;
        }
        self(self, row + 1, used, size);
        for (SimpleGraph::Mask m = g.neighbours(side[row]) & ~used; m != 0; m &= m - 1)
            self(self, row + 1, used | (m & (~m + 1)), size + 1);
    };
    recurse(recurse, 0, 0, 0);
    MatchingProfile out;
    for (auto c : profile) out.emplace_back(c);
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

MatchingProfile matching_profile_generic(const SimpleGraph& g)
{
    const int n = g.vertex_count();
    if (n > kGenericMatchingMaxVertices)
        throw ResourceLimit("generic matching enumeration is capped at " +
                            std::to_string(kGenericMatchingMaxVertices) + " vertices");
    std::vector<std::uint64_t> profile(static_cast<std::size_t>(n / 2) + 1, 0);
    const auto recurse = [&](auto&& self, SimpleGraph::Mask available, std::size_t size) -> void {
        if (available == 0) {
            ++profile[size];
            return;
        }
        const int v = std::countr_zero(available) + 1;
        const SimpleGraph::Mask rest = available & (available - 1);
        self(self, rest, size);
        for (SimpleGraph::Mask m = g.neighbours(v) & rest; m != 0; m &= m - 1)
            self(self, rest & ~(m & (~m + 1)), size + 1);
    };
    const SimpleGraph::Mask all = n == 64 ? ~SimpleGraph::Mask{0} : (SimpleGraph::Mask{1} << n) - 1;
    recurse(recurse, all, 0);
    MatchingProfile out;
    for (auto c : profile) out.emplace_back(c);
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

MatchingCount count_maximum_matchings(const SimpleGraph& g)
{
    MatchingProfile profile;
    const auto side = bipartite_small_side(g);
    if (side && static_cast<int>(side->size()) <= kBipartiteMatchingMaxSide)
        profile = matching_profile_bipartite(g, *side);
    else if (g.vertex_count() <= kGenericMatchingMaxVertices)
        profile = matching_profile_generic(g);
    else
        throw ResourceLimit("graph too large for matching enumeration");
    return {static_cast<int>(profile.size()) - 1, profile.back()};
}

}  // namespace rooks
