#pragma once

// Deliberately naive reference computations. They share no code with the
// library beyond the number types, so agreement is evidence of correctness.

#include "rooks/numeric.hpp"

#include <map>
#include <utility>
#include <vector>

namespace oracle {

using rooks::BigInt;
using rooks::Rational;

/// r_k for every k, by trying every subset of cells.
std::vector<BigInt> rook_numbers(const std::vector<std::pair<int, int>>& cells, int row_count);

/// x (x-1) ... (x-j+1) at an integer.
BigInt falling(const BigInt& x, int j);

/// All set partitions of {1..m} as block-label vectors (labels 0-based, in
/// order of first appearance).
std::vector<std::vector<int>> set_partitions(int m);

/// mu(0, sigma) on the partition lattice from the recursive definition.
BigInt mobius_recursive(const std::vector<int>& labels);

/// Coefficients (low degree first) of the polynomial through (xs[i], ys[i]).
std::vector<Rational> lagrange(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys);

/// chi(q) of the truncated affine arrangement by counting all of (Z_q)^n and
/// dividing by q.
BigInt arrangement_points(int n, int a, int b, int q);

/// Characteristic polynomial via arrangement_points at n primes above (a+b)n.
std::vector<Rational> arrangement_charpoly(int n, int a, int b);

/// Map (descents, ascents) -> number of permutations of [n].
std::map<std::pair<int, int>, BigInt> eulerian(int n);

/// Proper colourings of a graph (0-based edge list) with q colours.
BigInt colourings(int vertices, const std::vector<std::pair<int, int>>& edges, int q);

/// (maximum matching size, number of maximum matchings) over edge subsets.
std::pair<int, BigInt> maximum_matchings(int vertices, const std::vector<std::pair<int, int>>& edges);

struct RawTree {
    int root = 0;
    std::vector<int> parent;  // index label-1, 0 for the root
    std::vector<int> slot;
};

/// Every labeled plane k-ary tree on n nodes, by trying every parent/slot
/// assignment.
std::vector<RawTree> all_trees(int n, int k);

bool increasing(const RawTree& t);
bool right_increasing(const RawTree& t, int k);
bool local_search(const RawTree& t, int k);
bool local_search_bounded(const RawTree& t, int k);

/// Catalan number C_n.
BigInt catalan(int n);

}  // namespace oracle
