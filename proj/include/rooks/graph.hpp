#pragma once

#include "rooks/errors.hpp"
#include "rooks/numeric.hpp"
#include "rooks/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rooks {

/// Simple undirected graph on vertices 1..vertex_count (at most 64), stored as
/// adjacency bitmasks.
class SimpleGraph {
public:
    using Mask = std::uint64_t;
    static constexpr int kMaxVertices = 64;

    explicit SimpleGraph(int vertex_count = 0);
    /// Edges as 1-based pairs; throws InvalidArgument on loops, duplicates or
    /// out-of-range endpoints.
    SimpleGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const noexcept { return vertex_count_; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    /// Neighbours of v as a bitmask; bit i-1 stands for vertex i.
    Mask neighbours(int v) const;
    int degree(int v) const;
    std::size_t edge_count() const;
    /// Sorted pairs (i, j) with i < j.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    int vertex_count_ = 0;
    std::vector<Mask> adjacency_;
};

/// Bipartite graph of the board L_{t,n}: A_1 = {v_1..v_{2n-4+t}} (columns 2..
/// 2n-3+t), A_2 = {v_{2n-3+t}..v_{3n-5+t}} (rows bottom to top), with
/// v_{2n-4+t+i} ~ v_j for i <= j <= n-3+t+i.
SimpleGraph linial_graph(int t, int n);

SimpleGraph complement(const SimpleGraph& g);
SimpleGraph complete_graph(int vertex_count);

inline constexpr int kChromaticMaxVertices = 14;

/// Chromatic polynomial by deletion-contraction, memoized on the exact
/// adjacency encoding.
IntegerPolynomial chromatic_polynomial(const SimpleGraph& g);

struct MatchingCount {
    int size = 0;
    BigInt count;
    friend bool operator==(const MatchingCount&, const MatchingCount&) = default;
};

/// Number of matchings of each size, index = size.
using MatchingProfile = std::vector<BigInt>;

inline constexpr int kBipartiteMatchingMaxSide = 8;
inline constexpr int kGenericMatchingMaxVertices = 12;

/// 2-colouring of the graph, or nullopt if it is not bipartite. Takes the
/// smaller colour class of each component (ties: the class without the
/// component's least vertex) and returns the union, sorted.
std::optional<std::vector<int>> bipartite_small_side(const SimpleGraph& g);

/// Row-by-row assignment on the given side; every edge must have exactly one
/// endpoint in it.
MatchingProfile matching_profile_bipartite(const SimpleGraph& g, const std::vector<int>& side);
/// Brute force over all matchings.
MatchingProfile matching_profile_generic(const SimpleGraph& g);

/// Maximum matching size and number of maximum matchings. Bipartite graphs
/// with a side of at most 8 vertices use the row-by-row search, others need at
/// most 12 vertices.
MatchingCount count_maximum_matchings(const SimpleGraph& g);

}  // namespace rooks
