#include "thresh/rsk.hpp"

#include <vector>

namespace thresh {

YoungDiagram StandardTableau::shape() const
{
    std::vector<int> lengths;
    for (const auto& r : rows) lengths.push_back(static_cast<int>(r.size()));
    return YoungDiagram(std::move(lengths));
}

bool StandardTableau::is_valid() const
{
    std::size_t n = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty() || (r > 0 && rows[r].size() > rows[r - 1].size())) {
            return false;
        }
        n += rows[r].size();
    }
    std::vector<bool> seen(n + 1, false);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const int v = rows[r][c];
            if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
                return false;
            }
            seen[static_cast<std::size_t>(v)] = true;
            if (c > 0 && rows[r][c - 1] >= v) return false;
            if (r > 0 && rows[r - 1][c] >= v) return false;
        }
    }
    return true;
}

} // namespace thresh
