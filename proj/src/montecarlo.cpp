#include "thresh/montecarlo.hpp"

#include "thresh/cumulants.hpp"
#include "thresh/errors.hpp"
#include "thresh/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <thread>

namespace thresh {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream)
{
    const std::uint64_t a = splitmix64(seed);
    const std::uint64_t b = splitmix64(stream ^ 0x5851f42d4c957f2dULL);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    engine_.seed(seq);
}

double RngStream::uniform()
{
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t RngStream::below(std::uint64_t n)
{
    if (n == 0) throw DomainError("below(0)");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

StandardTableau sample_syt(const YoungDiagram& lambda, RngStream& rng)
{
    std::vector<int> rows = lambda.rows();
    StandardTableau t;
    for (int len : rows) t.rows.emplace_back(static_cast<std::size_t>(len), 0);

    const auto column_height = [&](int c) {
        int h = 0;
        while (h < static_cast<int>(rows.size()) && rows[static_cast<std::size_t>(h)] >= c) ++h;
        return h;
    };

    for (int k = lambda.size(); k >= 1; --k) {
        std::uint64_t pick = rng.below(static_cast<std::uint64_t>(k));
        int r = 1;
        while (pick >= static_cast<std::uint64_t>(rows[static_cast<std::size_t>(r - 1)])) {
            pick -= static_cast<std::uint64_t>(rows[static_cast<std::size_t>(r - 1)]);
            ++r;
        }
        int c = static_cast<int>(pick) + 1;
        while (true) {
            const int arm = rows[static_cast<std::size_t>(r - 1)] - c;
            const int leg = column_height(c) - r;
            if (arm + leg == 0) break;
            const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(arm + leg)));
            if (j < arm) {
                c += j + 1;
            } else {
                r += j - arm + 1;
            }
        }
        t.rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = k;
        --rows[static_cast<std::size_t>(r - 1)];
        if (rows.back() == 0) rows.pop_back();
    }
    return t;
}

BasicTableau<double> sample_poissonized_double(const YoungDiagram& lambda, RngStream& rng)
{
    const StandardTableau syt = sample_syt(lambda, rng);
    std::vector<double> u(static_cast<std::size_t>(lambda.size()));
    for (auto& v : u) v = rng.uniform();
    std::sort(u.begin(), u.end());
    std::vector<std::vector<double>> rows;
    for (const auto& row : syt.rows) {
        auto& out = rows.emplace_back();
        for (int v : row) out.push_back(u[static_cast<std::size_t>(v - 1)]);
    }
    return BasicTableau<double>(std::move(rows));
}

PoissonizedTableau sample_poissonized(const YoungDiagram& lambda, RngStream& rng)
{
    const auto t = sample_poissonized_double(lambda, rng);
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : t.rows()) {
        auto& out = rows.emplace_back();
        for (double v : row) out.push_back(Rational::from_double(v));
    }
    return PoissonizedTableau(std::move(rows));
}

void MomentAccumulator::add(double x)
{
    const double d = x - center_;
    double p = 1.0;
    for (int k = 0; k <= kMaxPower; ++k) {
        sums_[static_cast<std::size_t>(k)] += p;
        p *= d;
    }
    ++count_;
}

void MomentAccumulator::merge(const MomentAccumulator& other)
{
    if (other.center_ != center_) throw DomainError("merging accumulators with different centers");
    for (std::size_t k = 0; k < sums_.size(); ++k) sums_[k] += other.sums_[k];
    count_ += other.count_;
}

double MomentAccumulator::mean() const
{
    return center_ + sums_[1] / static_cast<double>(count_);
}

double MomentAccumulator::central_moment(int p) const
{
    if (p < 0 || p > kMaxPower) throw DomainError("moment order out of range");
    const double n = static_cast<double>(count_);
    const double delta = sums_[1] / n;
    double total = 0;
    double binom = 1;
    for (int k = 0; k <= p; ++k) {
        total += binom * (sums_[static_cast<std::size_t>(k)] / n) * std::pow(-delta, p - k);
        binom = binom * (p - k) / (k + 1);
    }
    return total;
}

namespace {

// Asymptotic variance of the influence function of kappa_r, from central
// moments mu[0..8].
double influence_variance(int r, const std::array<double, 9>& mu)
{
    std::array<double, 5> c{};
    switch (r) {
    case 1: c = {0, 1, 0, 0, 0}; break;
    case 2: c = {-mu[2], 0, 1, 0, 0}; break;
    case 3: c = {-mu[3], -3 * mu[2], 0, 1, 0}; break;
    case 4: c = {6 * mu[2] * mu[2] - mu[4], -4 * mu[3], -6 * mu[2], 0, 1}; break;
    default: return 0;
    }
    double v = 0;
    for (int i = 0; i <= 4; ++i) {
        for (int j = 0; j <= 4; ++j) v += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j)] * mu[static_cast<std::size_t>(i + j)];
    }
    return std::max(v, 0.0);
}

} // namespace

SampleSummary summarize(const MomentAccumulator& acc)
{
    SampleSummary s;
    s.count = acc.count();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    s.k_statistics.fill(nan);
    s.standard_errors.fill(nan);
    if (s.count == 0) {
        s.mean = s.variance = s.skewness = s.excess_kurtosis = nan;
        return s;
    }
    const double n = static_cast<double>(s.count);
    std::array<double, 9> mu{};
    for (int p = 0; p <= 8; ++p) mu[static_cast<std::size_t>(p)] = acc.central_moment(p);
    mu[1] = 0;
    const double m2 = mu[2], m3 = mu[3], m4 = mu[4];

    s.mean = acc.mean();
    s.k_statistics[0] = s.mean;
    s.variance = s.count >= 2 ? n * m2 / (n - 1) : nan;
    s.k_statistics[1] = s.variance;
    if (s.count >= 3) s.k_statistics[2] = n * n * m3 / ((n - 1) * (n - 2));
    if (s.count >= 4) {
        s.k_statistics[3] = n * n * ((n + 1) * m4 - 3 * (n - 1) * m2 * m2) / ((n - 1) * (n - 2) * (n - 3));
    }
    s.skewness = m2 > 0 ? m3 / std::pow(m2, 1.5) : nan;
    s.excess_kurtosis = m2 > 0 ? m4 / (m2 * m2) - 3 : nan;
    for (int r = 1; r <= 4; ++r) {
        s.standard_errors[static_cast<std::size_t>(r - 1)] = std::sqrt(influence_variance(r, mu) / n);
    }
    return s;
}

SampleSummary summarize(const std::vector<double>& samples)
{
    const double center =
        samples.empty() ? 0.0 : std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
    MomentAccumulator acc(center);
    for (double x : samples) acc.add(x);
    return summarize(acc);
}

namespace {

using ChunkFn = std::function<double(RngStream&)>;

// Runs opts.samples draws split into fixed chunks; chunk c draws from
// RngStream(seed, c). Results are merged in chunk order, so they do not depend
// on the number of threads.
Estimate run_chunks(const SamplingOptions& opts, double center, const std::function<ChunkFn()>& make_draw)
{
    const std::uint64_t chunks = (opts.samples + kChunkSize - 1) / kChunkSize;
    std::vector<MomentAccumulator> accs(chunks, MomentAccumulator(center));
    std::vector<std::vector<double>> kept(opts.keep_samples ? chunks : 0);

    const unsigned threads = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(std::max<std::uint64_t>(chunks, 1))));
    const auto worker = [&](unsigned w) {
        ChunkFn draw = make_draw();
        for (std::uint64_t c = w; c < chunks; c += threads) {
            RngStream rng(opts.seed, c);
            const std::uint64_t begin = c * kChunkSize;
            const std::uint64_t end = std::min(opts.samples, begin + kChunkSize);
            for (std::uint64_t i = begin; i < end; ++i) {
                const double x = draw(rng);
                accs[c].add(x);
                if (opts.keep_samples) kept[c].push_back(x);
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                try {
                    worker(w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    MomentAccumulator total(center);
    Estimate est;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        total.merge(accs[c]);
        if (opts.keep_samples) est.samples.insert(est.samples.end(), kept[c].begin(), kept[c].end());
    }
    est.summary = summarize(total);
    return est;
}

void require_samples(const SamplingOptions& opts)
{
    if (opts.samples == 0) throw DomainError("sample count must be positive");
}

} // namespace

Estimate estimate_threshold(const YoungDiagram& lambda, const Rational& u0, const SamplingOptions& opts)
{
    require_samples(opts);
    return run_chunks(opts, 0.5, [&]() -> ChunkFn {
        return [&](RngStream& rng) { return threshold(sample_poissonized_double(lambda, rng), u0); };
    });
}

Estimate estimate_z(const YoungDiagram& lambda, const Rational& u0, int n, const SamplingOptions& opts)
{
    require_samples(opts);
    if (n < 1) throw DomainError("order must be positive");
    const auto mu = transition_measure(lambda);
    std::vector<double> cdf;
    double acc = 0;
    for (const auto& m : mu.masses) cdf.push_back(acc += m.to_double());
    const auto trees = enumerate_nca_trees(n);
    const Rational scale = -factorial(static_cast<unsigned>(n - 1));

    return run_chunks(opts, 0.0, [&]() -> ChunkFn {
        return [&, x = std::vector<Rational>(static_cast<std::size_t>(n))](RngStream& rng) mutable {
            for (auto& xi : x) {
                const double u = rng.uniform() * acc;
                const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
                const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
                xi = mu.atoms[idx];
            }
            return (scale * frak_T(trees, x, u0)).to_double();
        };
    });
}

RectangleResult rectangle_experiment(int p, int q, const SamplingOptions& opts)
{
    require_samples(opts);
    if (p < 1 || q < 1) throw DomainError("rectangle sides must be positive");
    const YoungDiagram shape = YoungDiagram::rectangle(p, q);
    RectangleResult res;
    res.corner_mean = Rational(q, p + q);
    res.corner_variance = Rational(static_cast<long>(p) * q, static_cast<long>(p + q) * (p + q) * (p + q + 1));
    res.alpha = res.corner_mean.to_double();
    res.sigma2_limit = std::pow(res.alpha * (1 - res.alpha), 1.5);
    const double root_n = std::sqrt(static_cast<double>(p) * q);
    res.y_variance = root_n * res.corner_variance.to_double();
    const double scale = std::sqrt(root_n);
    const double alpha = res.alpha;
    res.estimate = run_chunks(opts, 0.0, [&]() -> ChunkFn {
        return [&](RngStream& rng) {
            const auto t = sample_poissonized_double(shape, rng);
            return scale * (t.rows()[0].back() - alpha);
        };
    });
    return res;
}

double ks_statistic_uniform(std::vector<double> samples)
{
    if (samples.empty()) throw DomainError("KS statistic of an empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = std::clamp(samples[i], 0.0, 1.0);
        d = std::max({d, (static_cast<double>(i) + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

} // namespace thresh
