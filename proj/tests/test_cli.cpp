#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Outcome {
    int status = -1;
    std::string out;
};

Outcome run(const std::string& args)
{
    const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
    Outcome o;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) o.out.append(buf, n);
    const int raw = pclose(pipe);
    o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return o;
}

} // namespace

TEST_CASE("trees")
{
    CHECK(run("trees --n 4 --count").out == "5\n");
    CHECK(run("trees --n 5 --count").out == "14\n");
    const auto listing = nlohmann::json::parse(run("trees --n 3").out);
    CHECK(listing.size() == 2);
    CHECK(listing[0]["n"] == 3);
}

TEST_CASE("cumulants")
{
    const auto o = run("cumulants --shape 1 --u0 0 --order 2");
    CHECK(o.status == 0);
    const auto j = nlohmann::json::parse(o.out);
    CHECK(j["cumulants"] == nlohmann::json::array({"1/2", "1/12"}));

    const auto big = run("cumulants --shape 4,2,2,2 --u0 1/2 --order 4");
    CHECK(big.status == 0);
    const auto jb = nlohmann::json::parse(big.out);
    CHECK(jb["shape"] == nlohmann::json::array({4, 2, 2, 2}));
    CHECK(jb["u0"] == "1/2");
    CHECK(jb["cumulants"].size() == 4);
    CHECK(run("cumulants --shape 4,2,2,2 --u0 0.5 --order 4").out == big.out);
}

TEST_CASE("moments")
{
    const auto j = nlohmann::json::parse(run("moments --shape 2,1 --u0 1/2 --order 3").out);
    CHECK(j["moments"] == j["oracle_moments"]);
}

TEST_CASE("verify")
{
    const auto o = run("verify --max-boxes 4 --max-order 3");
    CHECK(o.status == 0);
    CHECK(nlohmann::json::parse(o.out)["mismatches"] == 0);
}

TEST_CASE("sampling commands are reproducible")
{
    const auto a = run("sample --shape 2,1 --u0 1/2 --samples 5000 --seed 3 --threads 1");
    const auto b = run("sample --shape 2,1 --u0 1/2 --samples 5000 --seed 3 --threads 4");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["summary"]["count"] == 5000);

    const auto csv = run("sample --shape 1 --u0 0 --samples 10 --seed 1 --csv -");
    CHECK(csv.out.rfind("F\n", 0) == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 11);

    const auto z = nlohmann::json::parse(run("z-estimate --shape 1 --u0 0 --order 2 --samples 2000 --seed 2").out);
    CHECK(z["exact_cumulant"] == "1/12");

    const auto r = nlohmann::json::parse(run("rectangle --p 3 --q 3 --samples 2000 --seed 1").out);
    CHECK(r["sigma2_limit"] == 0.125);
    CHECK(r["corner_variance"] == "1/28");
}

TEST_CASE("threshold of a tableau file")
{
    const std::string path = "cli_test_tableau.json";
    {
        std::ofstream f(path);
        f << R"({"shape":[2,1],"rows":[["1/10","1/2"],["3/4"]]})";
    }
    const auto o = run("threshold --tableau " + path + " --u0 1/2");
    CHECK(o.status == 0);
    CHECK(nlohmann::json::parse(o.out)["threshold"] == "1/2");
    CHECK(nlohmann::json::parse(run("threshold --tableau " + path + " --u0 5").out)["threshold"] == "1");
    {
        std::ofstream f(path);
        f << R"({"rows":[["1/2","1/10"]]})";
    }
    CHECK(run("threshold --tableau " + path + " --u0 0").status == 2);
    std::remove(path.c_str());
}

TEST_CASE("flag errors exit with status 2")
{
    CHECK(run("").status == 2);
    CHECK(run("trees").status == 2);
    CHECK(run("trees --n 3 --bogus").status == 2);
    CHECK(run("cumulants --shape 2,3 --u0 0").status == 2);
    CHECK(run("cumulants --shape 1 --u0 x").status == 2);
    CHECK(run("sample --shape 1 --samples 0").status == 2);
    CHECK(run("nonsense").status == 2);
}
