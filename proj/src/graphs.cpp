#include "thresh/graphs.hpp"

#include "thresh/errors.hpp"
#include "thresh/set_partition.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace thresh {

std::string to_string(Color c)
{
    switch (c) {
    case Color::black: return "black";
    case Color::red: return "red";
    case Color::white: return "white";
    }
    return "?";
}

Color color_from_string(const std::string& s)
{
    if (s == "black") return Color::black;
    if (s == "red") return Color::red;
    if (s == "white") return Color::white;
    throw ParseError("unknown vertex color '" + s + "'");
}

ColoredDigraph::ColoredDigraph(int n, std::vector<Color> colors, std::vector<Edge> edges)
    : n_(n), colors_(std::move(colors)), edges_(std::move(edges))
{
    if (n_ < 0 || colors_.size() != static_cast<std::size_t>(n_)) {
        throw InvalidGraph("one color per vertex is required");
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges_) {
        if (e.from < 1 || e.from > n_ || e.to < 1 || e.to > n_) {
            throw InvalidGraph("edge endpoint out of range");
        }
        if (!seen.emplace(e.from, e.to).second) {
            throw InvalidGraph("duplicate edge");
        }
        if (e.from != e.to && seen.count({e.to, e.from}) != 0) {
            throw InvalidGraph("opposite edges between the same vertices");
        }
    }
}

int ColoredDigraph::count(Color c) const
{
    return static_cast<int>(std::count(colors_.begin(), colors_.end(), c));
}

bool ColoredDigraph::has_label_weights() const
{
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.weight == Rational(e.to - e.from); });
}

Edge labeled_edge(int from, int to) { return Edge{from, to, Rational(to - from)}; }

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Every tree on l..r with at least two vertices contains the arc (l, r);
// removing it leaves trees on l..i-1 and i..r.
std::vector<EdgeList> nca_edge_sets(int l, int r)
{
    if (l == r) {
        return {EdgeList{}};
    }
    std::vector<EdgeList> out;
    for (int i = l + 1; i <= r; ++i) {
        const auto left = nca_edge_sets(l, i - 1);
        const auto right = nca_edge_sets(i, r);
        for (const auto& t1 : left) {
            for (const auto& t2 : right) {
                EdgeList edges{{l, r}};
                edges.insert(edges.end(), t1.begin(), t1.end());
                edges.insert(edges.end(), t2.begin(), t2.end());
                std::sort(edges.begin(), edges.end());
                out.push_back(std::move(edges));
            }
        }
    }
    return out;
}

} // namespace

std::vector<ColoredDigraph> enumerate_nca_trees(int n)
{
    if (n < 1) {
        throw DomainError("trees need at least one vertex");
    }
    std::vector<ColoredDigraph> trees;
    for (const auto& edge_set : nca_edge_sets(1, n)) {
        std::vector<Color> colors(static_cast<std::size_t>(n), Color::black);
        std::vector<Edge> edges;
        for (const auto& [b, w] : edge_set) {
            colors[static_cast<std::size_t>(w - 1)] = Color::white;
            edges.push_back(labeled_edge(b, w));
        }
        trees.emplace_back(n, std::move(colors), std::move(edges));
    }
    return trees;
}

ColoredDigraph caterpillar_from_black_set(int n, const std::vector<int>& black)
{
    std::vector<int> b = black;
    std::sort(b.begin(), b.end());
    if (b.empty() || b.front() != 1 || b.back() > n || std::adjacent_find(b.begin(), b.end()) != b.end()) {
        throw InvalidGraph("black set must be distinct vertices of 1..n containing 1");
    }
    std::vector<Color> colors(static_cast<std::size_t>(n), Color::red);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < b.size(); ++i) {
        colors[static_cast<std::size_t>(b[i] - 1)] = Color::black;
        const int next = i + 1 < b.size() ? b[i + 1] : n + 1;
        if (i + 1 < b.size()) {
            edges.push_back(labeled_edge(b[i], next));
        }
        for (int v = b[i] + 1; v < next; ++v) {
            edges.push_back(labeled_edge(b[i], v));
        }
    }
    return ColoredDigraph(n, std::move(colors), std::move(edges));
}

std::vector<ColoredDigraph> enumerate_caterpillars(int n)
{
    if (n < 1) {
        throw DomainError("caterpillars need at least one vertex");
    }
    std::vector<ColoredDigraph> out;
    const unsigned long subsets = 1UL << (n - 1);
    for (unsigned long mask = 0; mask < subsets; ++mask) {
        std::vector<int> black{1};
        for (int v = 2; v <= n; ++v) {
            if ((mask >> (v - 2)) & 1UL) black.push_back(v);
        }
        out.push_back(caterpillar_from_black_set(n, black));
    }
    return out;
}

std::vector<std::vector<int>> enumerate_spines(const std::vector<int>& vertices)
{
    std::vector<int> order = vertices;
    std::sort(order.begin(), order.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

std::vector<std::pair<int, int>> MultiSpine::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (const auto& path : paths) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            out.emplace_back(path[i], path[i + 1]);
        }
    }
    return out;
}

std::vector<MultiSpine> enumerate_multispines(int n)
{
    std::vector<MultiSpine> out;
    for (const auto& partition : enumerate_set_partitions(n)) {
        std::vector<std::vector<std::vector<int>>> choices;
        for (const auto& block : partition.blocks) {
            choices.push_back(enumerate_spines(block));
        }
        std::vector<std::size_t> pick(choices.size(), 0);
        while (true) {
            MultiSpine ms;
            for (std::size_t i = 0; i < choices.size(); ++i) {
                ms.paths.push_back(choices[i][pick[i]]);
            }
            out.push_back(std::move(ms));
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == choices[i].size()) {
                pick[i] = 0;
                ++i;
            }
            if (i == pick.size()) break;
        }
    }
    return out;
}

void for_each_decoration(const ColoredDigraph& graph, std::span<const Rational> atoms, const Rational& u0,
                         const std::function<void(std::span<const std::size_t>)>& visit)
{
    std::vector<std::size_t> small;
    std::vector<std::size_t> big;
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        (atoms[i] <= u0 ? small : big).push_back(i);
        all.push_back(i);
    }
    const int n = graph.size();
    std::vector<const std::vector<std::size_t>*> domain;
    for (int v = 1; v <= n; ++v) {
        switch (graph.color(v)) {
        case Color::black: domain.push_back(&small); break;
        case Color::white: domain.push_back(&big); break;
        case Color::red: domain.push_back(&all); break;
        }
        if (domain.back()->empty()) return;
    }
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> chosen(static_cast<std::size_t>(n));
    while (true) {
        for (std::size_t v = 0; v < pick.size(); ++v) chosen[v] = (*domain[v])[pick[v]];
        visit(chosen);
        std::size_t v = 0;
        while (v < pick.size() && ++pick[v] == domain[v]->size()) {
            pick[v] = 0;
            ++v;
        }
        if (v == pick.size()) return;
    }
}

std::vector<Decoration> decorations(const ColoredDigraph& graph, std::span<const Rational> atoms,
                                    const Rational& u0)
{
    std::vector<Decoration> out;
    for_each_decoration(graph, atoms, u0, [&](std::span<const std::size_t> idx) {
        Decoration d;
        for (std::size_t i : idx) d.values.push_back(atoms[i]);
        out.push_back(std::move(d));
    });
    return out;
}

bool is_decoration(const ColoredDigraph& graph, std::span<const Rational> x, const Rational& u0)
{
    for (int v = 1; v <= graph.size(); ++v) {
        const Rational& value = x[static_cast<std::size_t>(v - 1)];
        if (graph.color(v) == Color::black && value > u0) return false;
        if (graph.color(v) == Color::white && value <= u0) return false;
    }
    return true;
}

Rational eval_f(const ColoredDigraph& graph, std::span<const Rational> x)
{
    Rational denominator = 1;
    for (const auto& e : graph.edges()) {
        const Rational factor =
            x[static_cast<std::size_t>(e.to - 1)] - x[static_cast<std::size_t>(e.from - 1)] + e.weight;
        if (factor.is_zero()) {
            throw ZeroDenominator("f_G has a vanishing factor on edge (" + std::to_string(e.from) + "," +
                                  std::to_string(e.to) + ")");
        }
        denominator *= factor;
    }
    return Rational(1) / denominator;
}

ColoredDigraph disjoint_union(const ColoredDigraph& a, const ColoredDigraph& b)
{
    std::vector<Color> colors = a.colors();
    colors.insert(colors.end(), b.colors().begin(), b.colors().end());
    std::vector<Edge> edges = a.edges();
    for (const auto& e : b.edges()) {
        edges.push_back(Edge{e.from + a.size(), e.to + a.size(), e.weight});
    }
    return ColoredDigraph(a.size() + b.size(), std::move(colors), std::move(edges));
}

} // namespace thresh
