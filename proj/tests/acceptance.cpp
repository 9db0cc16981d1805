// Acceptance suite: one [PASS]/[FAIL] line per criterion, non-zero exit if any fails.

#include "thresh/cumulants.hpp"
#include "thresh/errors.hpp"
#include "thresh/growth.hpp"
#include "thresh/montecarlo.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace thresh;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Verdict()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    std::printf("[%s] %2d %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", id, name.c_str(), v.detail.c_str(), secs);
    std::fflush(stdout);
}

int to_int(const Rational& r) { return static_cast<int>(r.numerator().get_si()); }

std::string str(double v)
{
    std::ostringstream os;
    os.precision(5);
    os << v;
    return os.str();
}

Verdict catalan_counts()
{
    const std::size_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    std::string sizes;
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
        const auto got = enumerate_nca_trees(n).size();
        ok = ok && got == expected[n - 1];
        sizes += (n > 1 ? "," : "") + std::to_string(got);
    }
    return {ok, "sizes " + sizes};
}

Verdict main_equivalence()
{
    long checked = 0, bad = 0;
    for (const auto& lambda : partitions_up_to(6)) {
        const auto mu = transition_measure(lambda);
        for (int h = -13; h <= 13; h += 2) {
            const Rational u0(h, 2);
            std::vector<Rational> kappa;
            for (int n = 1; n <= 4; ++n) kappa.push_back(cumulant_tree_formula(mu, u0, n));
            const auto m = cumulants_to_moments(kappa);
            for (int n = 1; n <= 4; ++n) {
                ++checked;
                if (m[static_cast<std::size_t>(n - 1)] != moment_oracle(lambda, u0, n)) ++bad;
            }
        }
    }
    return {bad == 0, std::to_string(checked) + " moment comparisons, " + std::to_string(bad) + " mismatches"};
}

Verdict rectangle_exact()
{
    int bad = 0;
    for (int p = 1; p <= 6; ++p) {
        for (int q = 1; q <= 6; ++q) {
            const auto mu = transition_measure(YoungDiagram::rectangle(p, q));
            const Rational u0 = 0;  // strictly between the atoms -p and q
            if (cumulant_tree_formula(mu, u0, 1) != Rational(q, p + q)) ++bad;
            if (cumulant_tree_formula(mu, u0, 2) != Rational(p * q, (p + q) * (p + q) * (p + q + 1))) ++bad;
        }
    }
    return {bad == 0, "36 rectangles, " + std::to_string(bad) + " mismatches"};
}

Verdict single_box()
{
    const auto mu = transition_measure(YoungDiagram({1}));
    const std::vector<Rational> expected{Rational(1, 2), Rational(1, 12), 0, Rational(-1, 120)};
    std::string got;
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
        const Rational k = cumulant_tree_formula(mu, 0, n);
        ok = ok && k == expected[static_cast<std::size_t>(n - 1)];
        got += (n > 1 ? ", " : "") + k.to_string();
    }
    return {ok, "kappa = (" + got + ")"};
}

Verdict theta_decomposition()
{
    std::mt19937_64 gen(20240101);
    int compared = 0, bad = 0, resampled = 0;
    while (compared < 100) {
        const int l = std::uniform_int_distribution<int>(1, 5)(gen);
        std::set<int> used;
        std::vector<Rational> x, a;
        while (static_cast<int>(x.size()) < l) {
            const int v = std::uniform_int_distribution<int>(-50, 50)(gen);
            if (used.insert(v).second) {
                x.emplace_back(v);
                a.emplace_back(std::uniform_int_distribution<int>(1, 5)(gen));
            }
        }
        Rational expected;
        try {
            expected = theta(x, a);
        } catch (const ZeroDenominator&) {
            ++resampled;
            continue;
        }
        ++compared;
        if (theta_via_multispines(x, a) != expected) ++bad;
    }
    return {bad == 0, "100 inputs (" + std::to_string(resampled) + " singular draws redrawn), " + std::to_string(bad) +
                          " mismatches"};
}

Verdict caterpillar_equals_tree()
{
    long checked = 0, bad = 0;
    const Rational eps(1, 7);
    for (const auto& lambda : partitions_up_to(5)) {
        const auto prof = perturb(corner_profile(lambda), eps);
        const int lo = to_int(Rational(corner_profile(lambda).concave.front()));
        const int hi = to_int(Rational(corner_profile(lambda).concave.back()));
        for (int h = 2 * lo - 1; h <= 2 * hi + 1; h += 2) {
            for (int n = 1; n <= 4; ++n) {
                ++checked;
                if (cumulant_caterpillar_formula(prof, Rational(h, 2), n) != cumulant_tree_formula(prof, Rational(h, 2), n)) {
                    ++bad;
                }
            }
        }
    }
    std::mt19937_64 gen(7);
    int points = 0, point_bad = 0;
    while (points < 200) {
        const int n = std::uniform_int_distribution<int>(1, 6)(gen);
        std::vector<Rational> x;
        for (int i = 0; i < n; ++i) {
            x.emplace_back(static_cast<long>(std::uniform_int_distribution<int>(-40, 40)(gen)),
                           static_cast<long>(std::uniform_int_distribution<int>(1, 7)(gen)));
        }
        const Rational u0(static_cast<long>(std::uniform_int_distribution<int>(-40, 40)(gen)), 7);
        // Points where either sum has a vanishing factor are redrawn.
        Rational t, c;
        try {
            t = frak_T(x, u0);
            c = frak_C(x, u0);
        } catch (const ZeroDenominator&) {
            continue;
        }
        ++points;
        if (c != t) ++point_bad;
    }
    return {bad == 0 && point_bad == 0, std::to_string(checked) + " cumulant pairs with " + std::to_string(bad) +
                                            " mismatches; 200 points with " + std::to_string(point_bad) + " mismatches"};
}

Verdict regularization()
{
    const std::vector<Rational> eps{Rational(1, 10), Rational(1, 100), Rational(1, 1000)};
    int runs = 0, bad = 0;
    double worst = 0;
    for (const auto& rows : {std::vector<int>{1}, std::vector<int>{2, 1}, std::vector<int>{2, 2}}) {
        const YoungDiagram lambda(rows);
        const auto prof = corner_profile(lambda);
        const int lo = to_int(prof.concave.front());
        const int hi = to_int(prof.concave.back());
        // Half-integers strictly inside the corner range, where the gaps are non-trivial.
        for (int h = 2 * lo + 1; h <= 2 * hi - 1; h += 2) {
            for (int n = 1; n <= 3; ++n) {
                const auto r = regularized_moment_limit_check(lambda, Rational(h, 2), n, eps);
                ++runs;
                if (!r.pass) ++bad;
                worst = std::max(worst, r.final_relative_gap);
            }
        }
    }
    return {bad == 0, std::to_string(runs) + " (lambda, u0, n) cases, " + std::to_string(bad) +
                          " failures, worst final relative gap " + str(worst)};
}

Verdict cumulant_bound()
{
    long checked = 0, bad = 0;
    for (const auto& lambda : partitions_up_to(6)) {
        for (int h = -13; h <= 13; h += 2) {
            for (int n = 1; n <= 4; ++n) {
                ++checked;
                if (!cumulant_bound_check(lambda, Rational(h, 2), n).pass) ++bad;
            }
        }
    }
    return {bad == 0, std::to_string(checked) + " bounds checked, " + std::to_string(bad) + " violations"};
}

Verdict monte_carlo_agreement()
{
    bool ok = true;
    std::string detail;
    std::uint64_t seed = 2025;
    for (const auto& lambda : {YoungDiagram({1}), YoungDiagram({2, 1}), YoungDiagram({4, 2, 2, 2}), YoungDiagram::rectangle(3, 3)}) {
        const Rational u0(1, 2);
        const auto est = estimate_threshold(lambda, u0, SamplingOptions{200000, seed++, 4, false});
        const auto mu = transition_measure(lambda);
        double worst = 0;
        for (int n = 1; n <= 3; ++n) {
            const double exact = cumulant_tree_formula(mu, u0, n).to_double();
            const double z = std::fabs(est.summary.k_statistics[static_cast<std::size_t>(n - 1)] - exact) /
                             est.summary.standard_errors[static_cast<std::size_t>(n - 1)];
            worst = std::max(worst, z);
        }
        ok = ok && worst <= 4;
        detail += (detail.empty() ? "" : "; ") + std::string("(") + lambda.to_string() + ") max |z| " + str(worst);
    }
    return {ok, detail};
}

Verdict rectangle_clt()
{
    const auto r = rectangle_experiment(15, 15, SamplingOptions{20000, 1, 4, false});
    const auto& s = r.estimate.summary;
    const double z_mean = std::fabs(s.mean) / s.standard_errors[0];
    const double z_var = std::fabs(s.variance - r.y_variance) / s.standard_errors[1];
    const bool ok = z_mean <= 4 && z_var <= 3 && std::fabs(s.skewness) < 0.15 && std::fabs(s.excess_kurtosis) < 0.3;
    return {ok, "mean " + str(s.mean) + " (|z| " + str(z_mean) + "), var " + str(s.variance) + " vs " + str(r.y_variance) +
                    " (|z| " + str(z_var) + "), skew " + str(s.skewness) + ", exkurt " + str(s.excess_kurtosis) +
                    ", sigma_alpha^2 " + str(r.sigma2_limit)};
}

Verdict first_row_identity()
{
    RngStream rng(11, 0);
    int bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(10));
        const auto shapes = partitions_of(n);
        const auto& lambda = shapes[rng.below(shapes.size())];
        const auto t = sample_poissonized(lambda, rng);
        const int l1 = lambda.row_length(1);
        const int l2 = lambda.row_length(2);
        // u0 uniform on a grid strictly inside (l2 - 1, l1).
        const long steps = 1000;
        const long k = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(steps - 1)));
        const Rational u0 = Rational(l2 - 1) + Rational(k, steps) * Rational(l1 - l2 + 1);
        if (threshold(t, u0) != t.rows()[0].back()) ++bad;
    }
    return {bad == 0, "1000 samples, " + std::to_string(bad) + " mismatches"};
}

Verdict anti_pieri()
{
    long checked = 0, bad = 0;
    for (const auto& lambda : partitions_up_to(6)) {
        std::vector<int> corners;
        for (const auto& x : corner_profile(lambda).concave) corners.insert(corners.begin(), to_int(x));
        for (int k = 1; k <= 4; ++k) {
            for (const auto& a : compositions(k)) {
                std::vector<int> x;
                std::function<void(std::size_t)> choose = [&](std::size_t start) {
                    if (x.size() == a.size()) {
                        if (!condition_x(lambda, x, a)) return;
                        ++checked;
                        if (anti_pieri_formula(lambda, x, a) != path_probability(lambda, expand_runs(x, a))) ++bad;
                        return;
                    }
                    for (std::size_t i = start; i < corners.size(); ++i) {
                        x.push_back(corners[i]);
                        choose(i + 1);
                        x.pop_back();
                    }
                };
                choose(0);
            }
        }
    }
    return {bad == 0, std::to_string(checked) + " admissible (x, a), " + std::to_string(bad) + " mismatches"};
}

Verdict row_bumping()
{
    RngStream rng(13, 0);
    int bad = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = static_cast<int>(rng.below(11));
        const auto shapes = partitions_of(n);
        const auto& lambda = shapes[rng.below(shapes.size())];
        auto t = sample_poissonized_double(lambda, rng);
        const auto entries = t.entries();
        const auto fresh = [&] {
            while (true) {
                const double z = rng.uniform();
                if (std::find(entries.begin(), entries.end(), z) == entries.end()) return z;
            }
        };
        const double z1 = fresh();
        double z2 = fresh();
        while (z2 == z1) z2 = fresh();
        const int u1 = t.insert_in_place(z1).u();
        const int u2 = t.insert_in_place(z2).u();
        if ((u1 > u2) != (z1 > z2)) ++bad;
    }
    return {bad == 0, "10000 trials, " + std::to_string(bad) + " violations"};
}

} // namespace

int main()
{
    criterion(1, "Catalan counts of non-crossing alternating trees", catalan_counts);
    criterion(2, "tree-formula moments equal growth-process moments", main_equivalence);
    criterion(3, "rectangle kappa_1 and kappa_2", rectangle_exact);
    criterion(4, "single-box cumulants", single_box);
    criterion(5, "Theta equals its multi-spine expansion", theta_decomposition);
    criterion(6, "caterpillar sums equal tree sums", caterpillar_equals_tree);
    criterion(7, "regularized moments converge", regularization);
    criterion(8, "cumulant bound", cumulant_bound);
    criterion(9, "Monte Carlo k-statistics", monte_carlo_agreement);
    criterion(10, "15x15 rectangle corner fluctuations", rectangle_clt);
    criterion(11, "first-row identity", first_row_identity);
    criterion(12, "anti-Pieri formula equals path probability", anti_pieri);
    criterion(13, "row bumping order equivalence", row_bumping);
    std::printf("%d of 13 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
