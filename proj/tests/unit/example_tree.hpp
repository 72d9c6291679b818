#pragma once

#include "rooks/bijection.hpp"
#include "rooks/tree.hpp"

// The 21-node, 3-colour worked example: a placement and the tree it maps to.

inline rooks::ColoredPlacement example_placement()
{
    return {21, 3, {{3, 1}, {5, 2}, {4, 3}, {5, 3}, {3, 3}, {21, 2}, {7, 1}, {12, 2}, {1, 3}, {4, 2},
                    {4, 1}, {20, 2}, {19, 3}, {19, 1}, {6, 2}, {1, 2}, {16, 1}, {6, 3}, {7, 2}, {12, 3}}};
}

inline rooks::PlaneKaryTree example_tree()
{
    std::vector<rooks::PlaneKaryTree::Attachment> at(21);
    const auto put = [&](int label, int parent, int slot) { at[static_cast<std::size_t>(label - 1)] = {parent, slot}; };
    put(2, 5, 2);
    put(4, 5, 3);
    put(11, 4, 1);
    put(10, 4, 2);
    put(3, 4, 3);
    put(1, 3, 1);
    put(7, 3, 3);
    put(20, 7, 1);
    put(19, 7, 2);
    put(12, 20, 2);
    put(8, 12, 2);
    put(21, 12, 3);
    put(6, 21, 2);
    put(15, 6, 2);
    put(18, 6, 3);
    put(16, 1, 2);
    put(9, 1, 3);
    put(17, 16, 1);
    put(14, 19, 1);
    put(13, 19, 3);
    return rooks::PlaneKaryTree(21, 3, 5, at);
}
