#pragma once

#include "rooks/errors.hpp"
#include "rooks/numeric.hpp"

#include <functional>
#include <string>
#include <vector>

namespace rooks {

/// A set partition of [m] = {1..m}. Blocks are sorted internally and ordered
/// by their smallest element, so equal partitions compare equal.
class SetPartition {
public:
    using Block = std::vector<int>;

    /// Validates disjointness and coverage of [m]; throws InvalidArgument.
    SetPartition(int m, std::vector<Block> blocks);

    /// From a restricted growth string: labels[i] is the block of element i+1.
    static SetPartition from_labels(const std::vector<int>& labels);

    int ground_size() const noexcept { return m_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }

    /// Every block of *this lies inside a block of other.
    bool refines(const SetPartition& other) const;

    /// Compact "12/3" style, matching the usual Hasse-diagram notation.
    std::string to_string() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
    int m_ = 0;
    std::vector<Block> blocks_;
};

/// Visits every set partition of [m] in restricted-growth-string order.
void for_each_set_partition(int m, const std::function<void(const SetPartition&)>& visit,
                            const Limits& limits = {});

std::vector<SetPartition> enumerate_set_partitions(int m, const Limits& limits = {});

/// mu(0, sigma) in the partition lattice: prod over blocks of (-1)^(|A|-1) (|A|-1)!.
BigInt mobius_bottom(const SetPartition& sigma);

BigInt bell_number(int m);

}  // namespace rooks
