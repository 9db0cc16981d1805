#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thresh/errors.hpp"
#include "thresh/graphs.hpp"
#include "thresh/set_partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace thresh;

namespace {

using Arc = std::pair<int, int>;

// All non-crossing alternating trees on 1..n by brute force over edge subsets.
std::set<std::vector<Arc>> brute_force_trees(int n)
{
    std::vector<Arc> arcs;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) arcs.emplace_back(i, j);
    }
    std::set<std::vector<Arc>> out;
    const int m = static_cast<int>(arcs.size());
    const int k = n - 1;
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::vector<Arc> chosen;
        for (int i : pick) chosen.push_back(arcs[static_cast<std::size_t>(i)]);

        std::vector<int> parent(static_cast<std::size_t>(n + 1));
        std::iota(parent.begin(), parent.end(), 0);
        const auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
            return v;
        };
        bool ok = true;
        std::vector<int> as_left(static_cast<std::size_t>(n + 1)), as_right(static_cast<std::size_t>(n + 1));
        for (const auto& [a, b] : chosen) {
            const int ra = find(a), rb = find(b);
            if (ra == rb) ok = false;
            parent[static_cast<std::size_t>(ra)] = rb;
            ++as_left[static_cast<std::size_t>(a)];
            ++as_right[static_cast<std::size_t>(b)];
        }
        for (int v = 1; v <= n && ok; ++v) {
            if (as_left[static_cast<std::size_t>(v)] > 0 && as_right[static_cast<std::size_t>(v)] > 0) ok = false;
        }
        for (const auto& [a, b] : chosen) {
            for (const auto& [c, d] : chosen) {
                if (a < c && c < b && b < d) ok = false;
            }
        }
        if (ok) out.insert(chosen);

        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<Arc> arcs_of(const ColoredDigraph& g)
{
    std::vector<Arc> out;
    for (const auto& e : g.edges()) out.emplace_back(e.from, e.to);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("tree counts are Catalan numbers")
{
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (int n = 1; n <= 10; ++n) CHECK(enumerate_nca_trees(n).size() == catalan[n - 1]);
    CHECK_THROWS_AS(enumerate_nca_trees(0), DomainError);
}

TEST_CASE("tree enumeration matches brute force")
{
    for (int n = 1; n <= 7; ++n) {
        std::set<std::vector<Arc>> mine;
        for (const auto& t : enumerate_nca_trees(n)) {
            mine.insert(arcs_of(t));
            CHECK(t.has_label_weights());
            CHECK(t.color(1) == Color::black);
            if (n >= 2) CHECK(t.color(n) == Color::white);
            for (const auto& e : t.edges()) {
                CHECK(t.color(e.from) == Color::black);
                CHECK(t.color(e.to) == Color::white);
            }
        }
        CHECK(mine.size() == enumerate_nca_trees(n).size());
        CHECK(mine == brute_force_trees(n));
    }
    const auto one = enumerate_nca_trees(1);
    CHECK(one[0].edges().empty());
    CHECK(one[0].color(1) == Color::black);
}

TEST_CASE("caterpillars")
{
    CHECK(enumerate_caterpillars(1).size() == 1);
    CHECK(enumerate_caterpillars(2).size() == 2);
    CHECK(enumerate_caterpillars(6).size() == 32);
    const auto two = enumerate_caterpillars(2);
    CHECK(std::count_if(two.begin(), two.end(), [](const auto& g) { return g.count(Color::red) == 1; }) == 1);

    const auto c = caterpillar_from_black_set(5, {1, 2, 4});
    CHECK(arcs_of(c) == std::vector<Arc>{{1, 2}, {2, 3}, {2, 4}, {4, 5}});
    CHECK(c.colors() == std::vector<Color>{Color::black, Color::black, Color::red, Color::black, Color::red});
    CHECK(c.has_label_weights());

    const auto c7 = caterpillar_from_black_set(7, {1, 3, 6});
    CHECK(arcs_of(c7) == std::vector<Arc>{{1, 2}, {1, 3}, {3, 4}, {3, 5}, {3, 6}, {6, 7}});
    CHECK(c7.count(Color::black) == 3);

    CHECK_THROWS_AS(caterpillar_from_black_set(4, {2, 3}), InvalidGraph);
    CHECK_THROWS_AS(caterpillar_from_black_set(4, {1, 5}), InvalidGraph);
}

TEST_CASE("spines and multi-spines")
{
    CHECK(enumerate_spines({1, 2}).size() == 2);
    CHECK(enumerate_spines({1, 2, 3}).size() == 6);
    const std::size_t lah_sums[] = {1, 3, 13, 73, 501};
    for (int n = 1; n <= 5; ++n) CHECK(enumerate_multispines(n).size() == lah_sums[n - 1]);
    for (const auto& ms : enumerate_multispines(4)) {
        std::vector<int> seen;
        for (const auto& p : ms.paths) seen.insert(seen.end(), p.begin(), p.end());
        std::sort(seen.begin(), seen.end());
        CHECK(seen == std::vector<int>{1, 2, 3, 4});
        CHECK(ms.edges().size() == 4 - ms.paths.size());
    }
}

TEST_CASE("set partitions")
{
    const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
    for (int n = 0; n <= 7; ++n) CHECK(enumerate_set_partitions(n).size() == bell[n]);
    const auto three = enumerate_set_partitions(3);
    CHECK(std::find(three.begin(), three.end(), SetPartition{{{1, 3}, {2}}}) != three.end());
}

TEST_CASE("decorations")
{
    const std::vector<Rational> atoms{-1, 1};
    const ColoredDigraph black(1, {Color::black}, {});
    const auto d1 = decorations(black, atoms, 0);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0][1] == -1);

    const ColoredDigraph edge(2, {Color::black, Color::white}, {labeled_edge(1, 2)});
    const auto d2 = decorations(edge, atoms, 0);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].values == std::vector<Rational>{-1, 1});

    CHECK(decorations(black, atoms, -2).empty());

    const ColoredDigraph red(2, {Color::black, Color::red}, {labeled_edge(1, 2)});
    CHECK(decorations(red, atoms, 0).size() == 2);

    for (const auto& d : decorations(edge, std::vector<Rational>{-3, -1, 2, 5}, Rational(1, 2))) {
        CHECK(is_decoration(edge, d.values, Rational(1, 2)));
    }
    CHECK_FALSE(is_decoration(edge, std::vector<Rational>{1, 1}, 0));
}

TEST_CASE("f_G evaluation")
{
    const ColoredDigraph isolated(2, {Color::black, Color::white}, {});
    CHECK(eval_f(isolated, std::vector<Rational>{3, 7}) == 1);
    const ColoredDigraph edge(2, {Color::black, Color::white}, {labeled_edge(1, 2)});
    CHECK(eval_f(edge, std::vector<Rational>{-1, 1}) == Rational(1, 3));
    CHECK_THROWS_AS(eval_f(edge, std::vector<Rational>{2, 1}), ZeroDenominator);

    const ColoredDigraph weighted(3, {Color::black, Color::white, Color::white},
                                  {Edge{1, 2, Rational(5, 2)}, Edge{1, 3, Rational(-1, 3)}});
    const std::vector<Rational> x{0, 1, 2};
    CHECK(eval_f(weighted, x) == Rational(1) / ((Rational(1) + Rational(5, 2)) * (Rational(2) - Rational(1, 3))));
    CHECK_FALSE(weighted.has_label_weights());
}

TEST_CASE("graph validation and disjoint union")
{
    CHECK_THROWS_AS(ColoredDigraph(2, {Color::black}, {}), InvalidGraph);
    CHECK_THROWS_AS(ColoredDigraph(2, {Color::black, Color::white}, {labeled_edge(1, 3)}), InvalidGraph);
    CHECK_THROWS_AS(ColoredDigraph(2, {Color::black, Color::white}, {labeled_edge(1, 2), labeled_edge(1, 2)}),
                    InvalidGraph);
    CHECK_THROWS_AS(ColoredDigraph(2, {Color::black, Color::white}, {labeled_edge(1, 2), labeled_edge(2, 1)}),
                    InvalidGraph);
    const ColoredDigraph a(2, {Color::black, Color::white}, {labeled_edge(1, 2)});
    const auto u = disjoint_union(a, a);
    CHECK(u.size() == 4);
    CHECK(arcs_of(u) == std::vector<Arc>{{1, 2}, {3, 4}});
    CHECK(to_string(Color::red) == "red");
    CHECK(color_from_string("white") == Color::white);
    CHECK_THROWS_AS(color_from_string("blue"), ParseError);
}
