// threshold-cumulants: exact cumulants of the RSK insertion threshold, the
// verification sweep, and Monte Carlo sampling.

#include "thresh/cumulants.hpp"
#include "thresh/errors.hpp"
#include "thresh/growth.hpp"
#include "thresh/io.hpp"
#include "thresh/montecarlo.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

using namespace thresh;

namespace {

constexpr int kFlagError = 2;
constexpr int kVerifyFailed = 1;

struct Flags {
    std::string shape;
    std::string u0 = "0";
    int order = 4;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    int max_boxes = 6;
    int max_order = 4;
    int n = 4;
    bool count = false;
    int p = 1;
    int q = 1;
    std::string tableau;
    std::string csv;
};

unsigned default_threads()
{
    if (const char* env = std::getenv("THRESHOLD_CUMULANTS_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring THRESHOLD_CUMULANTS_THREADS=" << env << "\n";
    }
    return 1;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

void maybe_write_csv(const Flags& f, const std::string& header, const std::vector<double>& values)
{
    if (f.csv.empty()) return;
    if (f.csv == "-") {
        write_csv(std::cout, header, values);
        return;
    }
    std::ofstream out(f.csv);
    if (!out) throw DomainError("cannot open " + f.csv + " for writing");
    write_csv(out, header, values);
}

SamplingOptions sampling(const Flags& f)
{
    return SamplingOptions{f.samples, f.seed, f.threads, !f.csv.empty()};
}

int run_verify(const Flags& f)
{
    long checked = 0;
    long mismatches = 0;
    Json failures = Json::array();
    for (const auto& lambda : partitions_up_to(f.max_boxes)) {
        const auto profile = corner_profile(lambda);
        const int lo = 2 * profile.concave.front().floor().get_si() - 1;
        const int hi = 2 * profile.concave.back().floor().get_si() + 1;
        for (int h = lo; h <= hi; h += 2) {
            const Rational u0(h, 2);
            std::vector<Rational> kappa;
            for (int n = 1; n <= f.max_order; ++n) kappa.push_back(cumulant_tree_formula(profile, u0, n));
            const auto moments = cumulants_to_moments(kappa);
            for (int n = 1; n <= f.max_order; ++n) {
                ++checked;
                const Rational oracle = moment_oracle(lambda, u0, n);
                if (oracle != moments[static_cast<std::size_t>(n - 1)]) {
                    ++mismatches;
                    failures.push_back(Json{{"shape", to_json(lambda)},
                                            {"u0", to_json(u0)},
                                            {"order", n},
                                            {"tree", to_json(moments[static_cast<std::size_t>(n - 1)])},
                                            {"oracle", to_json(oracle)}});
                }
            }
        }
    }
    print(Json{{"max_boxes", f.max_boxes},
               {"max_order", f.max_order},
               {"checked", checked},
               {"mismatches", mismatches},
               {"failures", failures}});
    return mismatches == 0 ? 0 : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv)
{
    Flags f;
    f.threads = default_threads();

    CLI::App app{"Exact cumulants of the RSK insertion threshold"};
    app.require_subcommand(1);

    const auto add_shape = [&](CLI::App* c) { c->add_option("--shape", f.shape, "row lengths, e.g. 4,2,2,2")->required(); };
    const auto add_u0 = [&](CLI::App* c) { c->add_option("--u0", f.u0, "u-coordinate as p/q or decimal"); };
    const auto add_sampling = [&](CLI::App* c) {
        c->add_option("--samples", f.samples, "number of samples")->check(CLI::PositiveNumber);
        c->add_option("--seed", f.seed, "random seed");
        c->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
        c->add_option("--csv", f.csv, "write one sample per row to this file ('-' for stdout)");
    };

    auto* cumulants = app.add_subcommand("cumulants", "exact cumulants kappa_1..kappa_order as JSON");
    add_shape(cumulants);
    add_u0(cumulants);
    cumulants->add_option("--order", f.order)->check(CLI::Range(1, 12));

    auto* moments = app.add_subcommand("moments", "exact moments from the tree formula and the growth oracle");
    add_shape(moments);
    add_u0(moments);
    moments->add_option("--order", f.order)->check(CLI::Range(1, 12));

    auto* verify = app.add_subcommand("verify", "tree formula vs. growth-process oracle sweep");
    verify->add_option("--max-boxes", f.max_boxes)->check(CLI::Range(0, 10));
    verify->add_option("--max-order", f.max_order)->check(CLI::Range(1, 8));
    verify->add_option("--threads", f.threads)->check(CLI::PositiveNumber);

    auto* trees = app.add_subcommand("trees", "non-crossing alternating trees on 1..n");
    trees->add_option("--n", f.n)->required()->check(CLI::Range(1, 16));
    trees->add_flag("--count", f.count, "print only the number of trees");

    auto* sample = app.add_subcommand("sample", "Monte Carlo summary of F_T(u0)");
    add_shape(sample);
    add_u0(sample);
    add_sampling(sample);

    auto* zest = app.add_subcommand("z-estimate", "Monte Carlo estimate of kappa_order via the tree statistic");
    add_shape(zest);
    add_u0(zest);
    zest->add_option("--order", f.order)->check(CLI::Range(1, 8));
    add_sampling(zest);

    auto* rect = app.add_subcommand("rectangle", "last first-row entry of a random p x q tableau");
    rect->add_option("--p", f.p)->required()->check(CLI::Range(1, 1000));
    rect->add_option("--q", f.q)->required()->check(CLI::Range(1, 1000));
    add_sampling(rect);

    auto* thr = app.add_subcommand("threshold", "exact threshold F_T(u0) of a tableau JSON file");
    thr->add_option("--tableau", f.tableau)->required();
    add_u0(thr);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kFlagError;
    }

    try {
        const Rational u0 = Rational::parse(f.u0);

        if (*cumulants) {
            print(to_json(cumulant_report(YoungDiagram::parse(f.shape), u0, f.order, false)));
        } else if (*moments) {
            const auto lambda = YoungDiagram::parse(f.shape);
            const auto report = cumulant_report(lambda, u0, f.order, true);
            print(Json{{"shape", to_json(lambda)},
                       {"u0", to_json(u0)},
                       {"order", f.order},
                       {"moments", to_json(report).at("moments")},
                       {"oracle_moments", to_json(report).at("oracle_moments")}});
        } else if (*verify) {
            return run_verify(f);
        } else if (*trees) {
            const auto all = enumerate_nca_trees(f.n);
            if (f.count) {
                std::cout << all.size() << "\n";
            } else {
                Json out = Json::array();
                for (const auto& t : all) out.push_back(to_json(t));
                print(out);
            }
        } else if (*sample) {
            const auto lambda = YoungDiagram::parse(f.shape);
            const auto est = estimate_threshold(lambda, u0, sampling(f));
            maybe_write_csv(f, "F", est.samples);
            if (f.csv != "-") {
                print(Json{{"shape", to_json(lambda)}, {"u0", to_json(u0)}, {"seed", f.seed},
                           {"summary", to_json(est.summary)}});
            }
        } else if (*zest) {
            const auto lambda = YoungDiagram::parse(f.shape);
            const auto est = estimate_z(lambda, u0, f.order, sampling(f));
            maybe_write_csv(f, "Z", est.samples);
            if (f.csv != "-") {
                print(Json{{"shape", to_json(lambda)}, {"u0", to_json(u0)}, {"order", f.order}, {"seed", f.seed},
                           {"exact_cumulant", to_json(cumulant_tree_formula(corner_profile(lambda), u0, f.order))},
                           {"summary", to_json(est.summary)}});
            }
        } else if (*rect) {
            const auto res = rectangle_experiment(f.p, f.q, sampling(f));
            maybe_write_csv(f, "Y", res.estimate.samples);
            if (f.csv != "-") {
                print(Json{{"p", f.p}, {"q", f.q}, {"seed", f.seed},
                           {"alpha", res.alpha},
                           {"sigma2_limit", res.sigma2_limit},
                           {"corner_mean", to_json(res.corner_mean)},
                           {"corner_variance", to_json(res.corner_variance)},
                           {"y_variance_exact", res.y_variance},
                           {"summary", to_json(res.estimate.summary)}});
            }
        } else if (*thr) {
            std::ifstream in(f.tableau);
            if (!in) throw ParseError("cannot read " + f.tableau);
            Json j;
            try {
                j = Json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(std::string("invalid JSON: ") + e.what());
            }
            const auto t = tableau_from_json(j);
            print(Json{{"u0", to_json(u0)}, {"threshold", to_json(threshold(t, u0))}});
        }
    } catch (const thresh::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFlagError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFlagError;
    }
    return 0;
}
