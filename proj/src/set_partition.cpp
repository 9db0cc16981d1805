#include "thresh/set_partition.hpp"

#include <algorithm>

namespace thresh {

std::vector<SetPartition> enumerate_set_partitions(int n)
{
    std::vector<SetPartition> out;
    if (n < 0) return out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    while (true) {
        const int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        SetPartition p;
        p.blocks.resize(static_cast<std::size_t>(blocks));
        for (int i = 0; i < n; ++i) {
            p.blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
        }
        out.push_back(std::move(p));

        int i = n - 1;
        for (; i > 0; --i) {
            const int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[static_cast<std::size_t>(i)] <= prefix_max) {
                ++rgs[static_cast<std::size_t>(i)];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                break;
            }
        }
        if (i == 0) break;
    }
    return out;
}

} // namespace thresh
