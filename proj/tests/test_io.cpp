#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thresh/errors.hpp"
#include "thresh/io.hpp"

#include <sstream>

using namespace thresh;

TEST_CASE("rationals serialize as strings")
{
    CHECK(to_json(Rational(3, 4)) == "3/4");
    CHECK(to_json(Rational(-2)) == "-2");
    CHECK(rational_from_json(Json("5/10")) == Rational(1, 2));
    CHECK(rational_from_json(Json(7)) == 7);
    CHECK_THROWS_AS(rational_from_json(Json(0.5)), ParseError);
}

TEST_CASE("tableau round trip")
{
    const PoissonizedTableau t({{Rational(1, 10), Rational(1, 2)}, {Rational(3, 4)}});
    const Json j = to_json(t);
    CHECK(j.dump() == R"({"shape":[2,1],"rows":[["1/10","1/2"],["3/4"]]})");
    CHECK(tableau_from_json(j) == t);
    CHECK(tableau_from_json(Json::parse(j.dump())) == t);

    CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"shape":[1],"rows":[["1/2","3/4"]]})")), InvalidTableau);
    CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"rows":[["3/4","1/2"]]})")), InvalidTableau);
    CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"cells":[]})")), ParseError);
    CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"rows":[[0.5]]})")), ParseError);
}

TEST_CASE("graph round trip")
{
    for (const auto& g : enumerate_nca_trees(4)) CHECK(graph_from_json(to_json(g)) == g);
    for (const auto& g : enumerate_caterpillars(4)) CHECK(graph_from_json(to_json(g)) == g);
    const ColoredDigraph g(2, {Color::black, Color::white}, {labeled_edge(1, 2)});
    CHECK(to_json(g).dump() == R"({"n":2,"colors":["black","white"],"edges":[[1,2,"1"]]})");
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":2,"colors":["black"]})")), ParseError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":2,"colors":["black","white"],"edges":[[1,3,"2"]]})")),
                    InvalidGraph);
}

TEST_CASE("cumulant report JSON")
{
    const auto j = to_json(cumulant_report(YoungDiagram({1}), 0, 2, false));
    CHECK(j.dump() ==
          R"({"shape":[1],"u0":"0","order":2,"cumulants":["1/2","1/12"],"moments":["1/2","1/3"],"bounds":["1","1/2"]})");
    const auto with = to_json(cumulant_report(YoungDiagram({1}), 0, 2, true));
    CHECK(with["oracle_moments"] == Json::array({"1/2", "1/3"}));
}

TEST_CASE("sample summary JSON and CSV")
{
    const auto s = summarize(std::vector<double>{0.25, 0.5});
    const Json j = to_json(s);
    CHECK(j["count"] == 2);
    CHECK(j["mean"] == 0.375);
    CHECK(j["k_statistics"][2].is_null());
    CHECK(j["standard_errors"].size() == 4);

    std::ostringstream os;
    write_csv(os, "F", {0.5, 0.125});
    CHECK(os.str() == "F\n0.5\n0.125\n");
}
