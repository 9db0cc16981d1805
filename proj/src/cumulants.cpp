#include "thresh/cumulants.hpp"

#include "thresh/errors.hpp"
#include "thresh/growth.hpp"

#include <cmath>
#include <functional>

namespace thresh {

Rational theta(std::span<const Rational> x, std::span<const Rational> a)
{
    if (x.size() != a.size()) {
        throw DomainError("theta: x and a differ in length");
    }
    Rational num = 1;
    Rational den = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const Rational d = x[i] - x[j];
            num *= d * (d - a[i] + a[j]);
            den *= (d + a[j]) * (d - a[i]);
        }
    }
    if (den.is_zero()) {
        throw ZeroDenominator("theta has a vanishing denominator factor");
    }
    return num / den;
}

Rational multispine_beta(const MultiSpine& ms, std::span<const Rational> a)
{
    Rational beta = a.size() % 2 == 0 ? 1 : -1;
    for (const auto& ai : a) beta *= ai;
    for (const auto& path : ms.paths) {
        Rational sum = 0;
        for (int v : path) sum += a[static_cast<std::size_t>(v - 1)];
        beta /= -sum;
    }
    return beta;
}

Rational theta_via_multispines(std::span<const Rational> x, std::span<const Rational> a)
{
    if (x.size() != a.size()) {
        throw DomainError("theta: x and a differ in length");
    }
    const std::size_t l = a.size();
    for (unsigned long mask = 1; mask < (1UL << l); ++mask) {
        Rational sum = 0;
        for (std::size_t i = 0; i < l; ++i) {
            if ((mask >> i) & 1UL) sum += a[i];
        }
        if (sum.is_zero()) {
            throw SubsetSumZero("a non-empty subsequence of a sums to zero");
        }
    }
    Rational total = 0;
    for (const auto& ms : enumerate_multispines(static_cast<int>(l))) {
        Rational den = 1;
        for (const auto& [i, j] : ms.edges()) {
            den *= x[static_cast<std::size_t>(j - 1)] - x[static_cast<std::size_t>(i - 1)] +
                   a[static_cast<std::size_t>(i - 1)];
        }
        if (den.is_zero()) {
            throw ZeroDenominator("multi-spine term has a vanishing factor");
        }
        total += multispine_beta(ms, a) / den;
    }
    return total;
}

Rational cauchy_determinant(std::span<const Rational> x, std::span<const Rational> z)
{
    if (x.size() != z.size()) {
        throw DomainError("Cauchy determinant needs square input");
    }
    Rational num = 1;
    Rational den = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (i < j) num *= (x[i] - x[j]) * (z[j] - z[i]);
            den *= x[j] - z[i];
        }
    }
    if (den.is_zero()) {
        throw ZeroDenominator("x_i = z_j in Cauchy determinant");
    }
    return num / den;
}

namespace {

// (n-1)! sum over graphs and decorations of (-1)^{|B|-1} f_G(x) prod mu(x_j).
Rational signed_graph_sum(const std::vector<ColoredDigraph>& graphs, const TransitionMeasure& mu,
                          const Rational& u0, int n)
{
    Rational total = 0;
    std::vector<Rational> x(static_cast<std::size_t>(n));
    for (const auto& g : graphs) {
        const Rational sign = g.count(Color::black) % 2 == 1 ? 1 : -1;
        for_each_decoration(g, mu.atoms, u0, [&](std::span<const std::size_t> idx) {
            Rational weight = sign;
            for (std::size_t v = 0; v < idx.size(); ++v) {
                x[v] = mu.atoms[idx[v]];
                weight *= mu.masses[idx[v]];
            }
            total += weight * eval_f(g, x);
        });
    }
    return factorial(static_cast<unsigned>(n - 1)) * total;
}

void require_order(int n)
{
    if (n < 1) {
        throw DomainError("cumulant order must be positive");
    }
}

} // namespace

Rational cumulant_tree_formula(const TransitionMeasure& mu, const Rational& u0, int n)
{
    require_order(n);
    return signed_graph_sum(enumerate_nca_trees(n), mu, u0, n);
}

Rational cumulant_tree_formula(const InterlacingSequence& profile, const Rational& u0, int n)
{
    return cumulant_tree_formula(transition_measure(profile), u0, n);
}

Rational cumulant_caterpillar_formula(const InterlacingSequence& profile, const Rational& u0, int n)
{
    require_order(n);
    return signed_graph_sum(enumerate_caterpillars(n), transition_measure(profile), u0, n);
}

namespace {

Rational frak_sum(std::span<const ColoredDigraph> graphs, std::span<const Rational> x, const Rational& u0)
{
    Rational total = 0;
    for (const auto& g : graphs) {
        if (!is_decoration(g, x, u0)) continue;
        const Rational f = eval_f(g, x);
        total += g.count(Color::black) % 2 == 0 ? f : -f;
    }
    return total;
}

} // namespace

Rational frak_T(std::span<const ColoredDigraph> trees, std::span<const Rational> x, const Rational& u0)
{
    return frak_sum(trees, x, u0);
}

Rational frak_T(std::span<const Rational> x, const Rational& u0)
{
    return frak_sum(enumerate_nca_trees(static_cast<int>(x.size())), x, u0);
}

Rational frak_C(std::span<const Rational> x, const Rational& u0)
{
    return frak_sum(enumerate_caterpillars(static_cast<int>(x.size())), x, u0);
}

Rational moment_interlacing(const InterlacingSequence& profile, const Rational& u0, int n)
{
    require_order(n);
    if (!has_generic_corners(profile)) {
        throw GenericityViolation("two concave corners differ by an integer");
    }
    const auto mu = transition_measure(profile);
    std::vector<std::size_t> small;  // indices of atoms <= u0, largest first
    for (std::size_t i = mu.atoms.size(); i-- > 0;) {
        if (mu.atoms[i] <= u0) small.push_back(i);
    }

    Rational total = 0;
    for (const auto& a : compositions(n)) {
        std::vector<Rational> ar(a.begin(), a.end());
        std::vector<Rational> x;
        Rational weight = 1;
        std::function<void(std::size_t)> choose = [&](std::size_t start) {
            if (x.size() == a.size()) {
                total += theta(x, ar) * weight;
                return;
            }
            const std::size_t pos = x.size();
            for (std::size_t k = start; k < small.size(); ++k) {
                const std::size_t atom = small[k];
                const Rational sign = (a[pos] - 1) % 2 == 0 ? 1 : -1;
                const Rational factor = sign / ar[pos] * mu.masses[atom] *
                                        falling_cauchy(profile, mu.atoms[atom] - 1, static_cast<unsigned>(a[pos] - 1));
                const Rational saved = weight;
                weight *= factor;
                x.push_back(mu.atoms[atom]);
                choose(k + 1);
                x.pop_back();
                weight = saved;
            }
        };
        choose(0);
    }
    return factorial(static_cast<unsigned>(n)) * total;
}

RegularizationReport regularized_moment_limit_check(const YoungDiagram& lambda, const Rational& u0, int n,
                                                    std::span<const Rational> eps_list)
{
    if (u0.is_integer()) {
        throw DomainError("regularization requires a non-integer u0");
    }
    RegularizationReport report;
    report.oracle = moment_oracle(lambda, u0, n);
    const auto profile = corner_profile(lambda);
    for (const auto& eps : eps_list) {
        if (eps.is_zero()) {
            throw GenericityViolation("eps = 0 leaves the profile non-generic");
        }
        if (eps.sign() < 0) {
            throw DomainError("eps must be positive");
        }
        const Rational value = moment_interlacing(perturb(profile, eps), u0, n);
        report.eps.push_back(eps);
        report.values.push_back(value);
        report.gaps.push_back(abs(value - report.oracle));
    }
    bool decreasing = !report.gaps.empty();
    for (std::size_t i = 1; i < report.gaps.size(); ++i) {
        decreasing = decreasing && report.gaps[i] < report.gaps[i - 1];
    }
    if (!report.gaps.empty()) {
        const Rational last = report.gaps.back();
        report.final_relative_gap =
            report.oracle.is_zero() ? last.to_double() : (last / abs(report.oracle)).to_double();
    }
    report.pass = decreasing && report.final_relative_gap < 1e-2;
    return report;
}

namespace {

Rational binomial(int n, int k)
{
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

} // namespace

std::vector<Rational> cumulants_to_moments(std::span<const Rational> cumulants)
{
    // m_n = sum_{k=1}^{n} C(n-1, k-1) kappa_k m_{n-k}, with m_0 = 1.
    const int n = static_cast<int>(cumulants.size());
    std::vector<Rational> m(static_cast<std::size_t>(n) + 1);
    m[0] = 1;
    for (int j = 1; j <= n; ++j) {
        Rational s = 0;
        for (int k = 1; k <= j; ++k) {
            s += binomial(j - 1, k - 1) * cumulants[static_cast<std::size_t>(k - 1)] * m[static_cast<std::size_t>(j - k)];
        }
        m[static_cast<std::size_t>(j)] = s;
    }
    return {m.begin() + 1, m.end()};
}

std::vector<Rational> moments_to_cumulants(std::span<const Rational> moments)
{
    const int n = static_cast<int>(moments.size());
    std::vector<Rational> m(static_cast<std::size_t>(n) + 1);
    m[0] = 1;
    for (int j = 1; j <= n; ++j) m[static_cast<std::size_t>(j)] = moments[static_cast<std::size_t>(j - 1)];
    std::vector<Rational> kappa(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        Rational s = m[static_cast<std::size_t>(j)];
        for (int k = 1; k < j; ++k) {
            s -= binomial(j - 1, k - 1) * kappa[static_cast<std::size_t>(k - 1)] * m[static_cast<std::size_t>(j - k)];
        }
        kappa[static_cast<std::size_t>(j - 1)] = s;
    }
    return kappa;
}

Rational moment_from_partitions(std::span<const Rational> cumulants, int n)
{
    Rational total = 0;
    for (const auto& p : enumerate_set_partitions(n)) {
        Rational term = 1;
        for (const auto& block : p.blocks) term *= cumulants[block.size() - 1];
        total += term;
    }
    return total;
}

CumulantBound cumulant_bound_check(const YoungDiagram& lambda, const Rational& u0, int n)
{
    const auto mu = transition_measure(lambda);
    CumulantBound result;
    result.abs_cumulant = abs(cumulant_tree_formula(mu, u0, n));
    result.bound = factorial(static_cast<unsigned>(n - 1)) * pow(g_plus(mu, u0), static_cast<unsigned>(n - 1));
    result.pass = result.abs_cumulant <= result.bound;
    return result;
}

CumulantReport cumulant_report(const YoungDiagram& lambda, const Rational& u0, int order, bool with_oracle)
{
    require_order(order);
    const auto mu = transition_measure(lambda);
    CumulantReport report;
    report.shape = lambda;
    report.u0 = u0;
    report.order = order;
    const Rational gp = g_plus(mu, u0);
    for (int n = 1; n <= order; ++n) {
        report.cumulants.push_back(cumulant_tree_formula(mu, u0, n));
        report.bounds.push_back(factorial(static_cast<unsigned>(n - 1)) * pow(gp, static_cast<unsigned>(n - 1)));
    }
    report.moments = cumulants_to_moments(report.cumulants);
    if (with_oracle) {
        std::vector<Rational> oracle;
        for (int n = 1; n <= order; ++n) oracle.push_back(moment_oracle(lambda, u0, n));
        report.oracle_moments = std::move(oracle);
    }
    return report;
}

} // namespace thresh
