#pragma once

#include <vector>

namespace thresh {

/// Partition of {1..n} into blocks; blocks ordered by their minima, elements
/// sorted within each block.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// All set partitions of {1..n}, generated from restricted growth strings.
std::vector<SetPartition> enumerate_set_partitions(int n);

} // namespace thresh
