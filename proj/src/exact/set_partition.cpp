#include "rooks/set_partition.hpp"

#include <algorithm>

namespace rooks {

SetPartition::SetPartition(int m, std::vector<Block> blocks) : m_(m), blocks_(std::move(blocks))
{
    if (m < 0) throw InvalidArgument("set partition ground size must be nonnegative");
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    int covered = 0;
    for (auto& block : blocks_) {
        if (block.empty()) throw InvalidArgument("set partition blocks must be nonempty");
        std::sort(block.begin(), block.end());
        for (int e : block) {
            if (e < 1 || e > m) throw InvalidArgument("set partition element out of range");
            if (seen[static_cast<std::size_t>(e)]) throw InvalidArgument("set partition blocks overlap");
            seen[static_cast<std::size_t>(e)] = true;
            ++covered;
        }
    }
    if (covered != m) throw InvalidArgument("set partition blocks do not cover the ground set");
    std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels)
{
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto label = static_cast<std::size_t>(labels[i]);
        if (label >= blocks.size()) blocks.resize(label + 1);
        blocks[label].push_back(static_cast<int>(i) + 1);
    }
    std::erase_if(blocks, [](const Block& b) { return b.empty(); });
    return SetPartition(static_cast<int>(labels.size()), std::move(blocks));
}

bool SetPartition::refines(const SetPartition& other) const
{
    if (m_ != other.m_) return false;
    std::vector<int> owner(static_cast<std::size_t>(m_) + 1, -1);
    for (std::size_t b = 0; b < other.blocks_.size(); ++b)
        for (int e : other.blocks_[b]) owner[static_cast<std::size_t>(e)] = static_cast<int>(b);
    return std::all_of(blocks_.begin(), blocks_.end(), [&](const Block& block) {
        const int target = owner[static_cast<std::size_t>(block.front())];
        return std::all_of(block.begin(), block.end(),
                           [&](int e) { return owner[static_cast<std::size_t>(e)] == target; });
    });
}

std::string SetPartition::to_string() const
{
    std::string out;
    for (const auto& block : blocks_) {
        if (!out.empty()) out += '/';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i > 0 && m_ >= 10) out += ',';
            out += std::to_string(block[i]);
        }
    }
    return out;
}

void for_each_set_partition(int m, const std::function<void(const SetPartition&)>& visit, const Limits& limits)
{
    if (m < 1) throw InvalidArgument("set partitions are enumerated for m >= 1");
    if (m > limits.max_partition_size)
        throw ResourceLimit("set partition enumeration of [" + std::to_string(m) + "] exceeds the cap of " +
                            std::to_string(limits.max_partition_size));
    // Restricted growth strings: labels[0] = 0, labels[i] <= 1 + max(labels[0..i-1]).
    std::vector<int> labels(static_cast<std::size_t>(m), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(m), 0);
    const auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == labels.size()) {
            visit(SetPartition::from_labels(labels));
            return;
        }
        const int bound = prefix_max[i - 1] + 1;
        for (int label = 0; label <= bound; ++label) {
            labels[i] = label;
            prefix_max[i] = std::max(prefix_max[i - 1], label);
            self(self, i + 1);
        }
    };
    recurse(recurse, 1);
}

std::vector<SetPartition> enumerate_set_partitions(int m, const Limits& limits)
{
    std::vector<SetPartition> out;
    for_each_set_partition(m, [&](const SetPartition& p) { out.push_back(p); }, limits);
    return out;
}

BigInt mobius_bottom(const SetPartition& sigma)
{
    BigInt result = 1;
    for (const auto& block : sigma.blocks()) {
        const auto size = static_cast<unsigned>(block.size());
        result *= factorial(size - 1);
        if (size % 2 == 0) result = -result;
    }
    return result;
}

BigInt bell_number(int m)
{
    if (m < 0) throw InvalidArgument("Bell numbers are defined for m >= 0");
    // Bell triangle.
    std::vector<BigInt> row{1};
    for (int i = 0; i < m; ++i) {
        std::vector<BigInt> next{row.back()};
        for (const auto& value : row) next.push_back(next.back() + value);
        row = std::move(next);
    }
    return row.front();
}

}  // namespace rooks
