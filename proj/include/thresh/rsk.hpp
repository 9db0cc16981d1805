#pragma once

#include "thresh/diagram.hpp"
#include "thresh/errors.hpp"
#include "thresh/rational.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace thresh {

/// Position of a box, 1-based, row counted from the bottom.
struct Box {
    int row = 0;
    int col = 0;

    int u() const { return col - row; }
    friend bool operator==(const Box&, const Box&) = default;
};

/// Boxes whose content changes during one row insertion, bottom row first.
/// The last box is the newly created one.
struct BumpingRoute {
    std::vector<Box> boxes;
};

/// Filling of a Young diagram with entries in [0,1]; rows weakly increase to
/// the right and columns strictly increase upwards. `Entry` is Rational for
/// exact work and double inside the Monte Carlo sampler.
template <class Entry>
class BasicTableau {
public:
    BasicTableau() = default;
    /// Throws InvalidTableau if the filling breaks the ordering or range rules.
    explicit BasicTableau(std::vector<std::vector<Entry>> rows) : rows_(std::move(rows)) { validate(); }

    const std::vector<std::vector<Entry>>& rows() const { return rows_; }
    std::size_t num_rows() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    const Entry& at(int row, int col) const { return rows_[row - 1][col - 1]; }

    YoungDiagram shape() const
    {
        std::vector<int> lengths;
        for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
        return YoungDiagram(std::move(lengths));
    }

    /// All entries in row-major order.
    std::vector<Entry> entries() const
    {
        std::vector<Entry> out;
        for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
        return out;
    }

    /// Schensted row insertion in place. Returns the new box; the bumping route
    /// is written to `route` when given. Equal entries are never bumped.
    Box insert_in_place(Entry z, BumpingRoute* route = nullptr)
    {
        check_unit_interval(z);
        if (route != nullptr) route->boxes.clear();
        for (std::size_t r = 0;; ++r) {
            if (r == rows_.size()) rows_.emplace_back();
            auto& row = rows_[r];
            const auto it = std::upper_bound(row.begin(), row.end(), z);
            const int col = static_cast<int>(it - row.begin()) + 1;
            if (route != nullptr) route->boxes.push_back({static_cast<int>(r) + 1, col});
            if (it == row.end()) {
                row.push_back(std::move(z));
                return {static_cast<int>(r) + 1, col};
            }
            std::swap(*it, z);
        }
    }

    /// New box that insert_in_place(z) would create, without modifying the tableau.
    Box probe(const Entry& z) const
    {
        check_unit_interval(z);
        const Entry* current = &z;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto& row = rows_[r];
            const auto it = std::upper_bound(row.begin(), row.end(), *current);
            if (it == row.end()) {
                return {static_cast<int>(r) + 1, static_cast<int>(row.size()) + 1};
            }
            current = &*it;
        }
        return {static_cast<int>(rows_.size()) + 1, 1};
    }

    friend bool operator==(const BasicTableau&, const BasicTableau&) = default;

private:
    static void check_unit_interval(const Entry& z)
    {
        if (z < Entry(0) || z > Entry(1)) {
            throw DomainError("inserted value must lie in [0,1]");
        }
    }

    void validate() const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto& row = rows_[r];
            if (row.empty()) {
                throw InvalidTableau("empty row in tableau");
            }
            if (r > 0 && row.size() > rows_[r - 1].size()) {
                throw InvalidTableau("row lengths must be weakly decreasing");
            }
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (row[c] < Entry(0) || row[c] > Entry(1)) {
                    throw InvalidTableau("tableau entries must lie in [0,1]");
                }
                if (c > 0 && row[c] < row[c - 1]) {
                    throw InvalidTableau("rows must be weakly increasing");
                }
                if (r > 0 && !(rows_[r - 1][c] < row[c])) {
                    throw InvalidTableau("columns must be strictly increasing upwards");
                }
            }
        }
    }

    std::vector<std::vector<Entry>> rows_;
};

using PoissonizedTableau = BasicTableau<Rational>;

/// Filling of a diagram with 1..n, each used once, rows and columns strictly increasing.
struct StandardTableau {
    std::vector<std::vector<int>> rows;

    YoungDiagram shape() const;
    bool is_valid() const;
    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

template <class Entry>
struct InsertionResult {
    BasicTableau<Entry> tableau;
    BumpingRoute route;
    Box new_box;
};

/// Schensted row insertion T <- z. Throws DomainError when z is outside [0,1].
template <class Entry>
InsertionResult<Entry> insert(const BasicTableau<Entry>& tableau, const Entry& z)
{
    InsertionResult<Entry> result{tableau, {}, {}};
    result.new_box = result.tableau.insert_in_place(z, &result.route);
    return result;
}

template <class Entry>
struct RskResult {
    BasicTableau<Entry> insertion;
    StandardTableau recording;
};

/// Robinson-Schensted: fold of insert over `word` starting from the empty tableau.
template <class Entry>
RskResult<Entry> rsk(std::span<const Entry> word)
{
    RskResult<Entry> result;
    int step = 0;
    for (const auto& w : word) {
        const Box b = result.insertion.insert_in_place(w);
        ++step;
        auto& q = result.recording.rows;
        if (static_cast<int>(q.size()) < b.row) q.emplace_back();
        q[static_cast<std::size_t>(b.row - 1)].push_back(step);
    }
    return result;
}

/// u-coordinate of the box created by T <- z.
template <class Entry>
int u_ins(const BasicTableau<Entry>& tableau, const Entry& z)
{
    return tableau.probe(z).u();
}

/// inf { z in [0,1] : u_ins(T, z) > u0 }, or 1 when the set is empty.
///
/// The insertion function is a right-continuous step function whose jumps sit
/// at entries of T, so the result is always 0, 1 or an entry of T. It is found
/// by binary search over the ordered probes p_0 < m_0 < p_1 < ... < p_last
/// where p_i are the breakpoints {0, entries, 1} and m_i the midpoints.
template <class Entry>
Entry threshold(const BasicTableau<Entry>& tableau, const Rational& u0)
{
    std::vector<Entry> points = tableau.entries();
    points.push_back(Entry(0));
    points.push_back(Entry(1));
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    const std::size_t probes = 2 * points.size() - 1;
    const auto probe_value = [&](std::size_t i) -> Entry {
        if (i % 2 == 0) return points[i / 2];
        return (points[i / 2] + points[i / 2 + 1]) / Entry(2);
    };
    const auto exceeds = [&](std::size_t i) { return Rational(u_ins(tableau, probe_value(i))) > u0; };

    std::size_t lo = 0;
    std::size_t hi = probes;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (exceeds(mid)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    if (lo == probes) {
        return Entry(1);
    }
    return points[lo / 2];
}

} // namespace thresh
