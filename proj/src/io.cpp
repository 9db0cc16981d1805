#include "thresh/io.hpp"

#include "thresh/errors.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace thresh {

namespace {

Json rational_array(const std::vector<Rational>& values)
{
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_json(v));
    return out;
}

Json number_or_null(double v)
{
    if (std::isfinite(v)) return v;
    return nullptr;
}

} // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected a rational string such as \"3/4\"");
}

Json to_json(const YoungDiagram& lambda) { return lambda.rows(); }

YoungDiagram diagram_from_json(const Json& j)
{
    if (!j.is_array()) throw ParseError("shape must be an array of row lengths");
    std::vector<int> rows;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("row lengths must be integers");
        rows.push_back(v.get<int>());
    }
    return YoungDiagram(std::move(rows));
}

Json to_json(const PoissonizedTableau& t)
{
    Json rows = Json::array();
    for (const auto& row : t.rows()) rows.push_back(rational_array(row));
    return Json{{"shape", to_json(t.shape())}, {"rows", rows}};
}

PoissonizedTableau tableau_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) {
        throw ParseError("tableau JSON needs a \"rows\" array");
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j["rows"]) {
        if (!row.is_array()) throw ParseError("each tableau row must be an array");
        auto& out = rows.emplace_back();
        for (const auto& v : row) out.push_back(rational_from_json(v));
    }
    PoissonizedTableau t(std::move(rows));
    if (j.contains("shape") && diagram_from_json(j["shape"]) != t.shape()) {
        throw InvalidTableau("\"shape\" does not match the row lengths");
    }
    return t;
}

Json to_json(const ColoredDigraph& g)
{
    Json colors = Json::array();
    for (Color c : g.colors()) colors.push_back(to_string(c));
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back(Json::array({e.from, e.to, to_json(e.weight)}));
    return Json{{"n", g.size()}, {"colors", colors}, {"edges", edges}};
}

ColoredDigraph graph_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("colors") || !j.contains("edges")) {
        throw ParseError("graph JSON needs \"n\", \"colors\" and \"edges\"");
    }
    std::vector<Color> colors;
    for (const auto& c : j["colors"]) colors.push_back(color_from_string(c.get<std::string>()));
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3) throw ParseError("edges are [i, j, \"w\"] triples");
        edges.push_back(Edge{e[0].get<int>(), e[1].get<int>(), rational_from_json(e[2])});
    }
    return ColoredDigraph(j["n"].get<int>(), std::move(colors), std::move(edges));
}

Json to_json(const CumulantReport& report)
{
    Json j{{"shape", to_json(report.shape)},
           {"u0", to_json(report.u0)},
           {"order", report.order},
           {"cumulants", rational_array(report.cumulants)},
           {"moments", rational_array(report.moments)},
           {"bounds", rational_array(report.bounds)}};
    if (report.oracle_moments) j["oracle_moments"] = rational_array(*report.oracle_moments);
    return j;
}

Json to_json(const SampleSummary& s)
{
    Json k = Json::array();
    Json se = Json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        k.push_back(number_or_null(s.k_statistics[i]));
        se.push_back(number_or_null(s.standard_errors[i]));
    }
    return Json{{"count", s.count},
                {"mean", number_or_null(s.mean)},
                {"variance", number_or_null(s.variance)},
                {"skewness", number_or_null(s.skewness)},
                {"excess_kurtosis", number_or_null(s.excess_kurtosis)},
                {"k_statistics", k},
                {"standard_errors", se}};
}

void write_csv(std::ostream& os, const std::string& header, const std::vector<double>& values)
{
    os << header << '\n' << std::setprecision(17);
    for (double v : values) os << v << '\n';
}

} // namespace thresh
