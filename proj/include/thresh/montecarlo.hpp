#pragma once

#include "thresh/diagram.hpp"
#include "thresh/rational.hpp"
#include "thresh/rsk.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace thresh {

/// Seedable, splittable random stream: a std::mt19937_64 whose state is seeded
/// from SplitMix64(seed) mixed with SplitMix64(stream). Identical
/// (seed, stream, draw index) gives an identical draw.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next() { return engine_(); }
    /// Uniform double in the open interval (0, 1), 53 random bits.
    double uniform();
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Uniform standard Young tableau of shape lambda (hook walk).
StandardTableau sample_syt(const YoungDiagram& lambda, RngStream& rng);

/// Uniform point of the Poissonized-tableau polytope: sorted i.i.d. uniforms
/// placed according to a uniform standard tableau.
BasicTableau<double> sample_poissonized_double(const YoungDiagram& lambda, RngStream& rng);
PoissonizedTableau sample_poissonized(const YoungDiagram& lambda, RngStream& rng);

/// Streaming power sums about a fixed center; merging is plain addition, so
/// a fixed merge order gives bit-identical results.
class MomentAccumulator {
public:
    static constexpr int kMaxPower = 8;

    explicit MomentAccumulator(double center = 0.0) : center_(center) {}

    void add(double x);
    void merge(const MomentAccumulator& other);

    std::uint64_t count() const { return count_; }
    double center() const { return center_; }
    /// Biased central sample moment of order p (p <= kMaxPower).
    double central_moment(int p) const;
    double mean() const;

private:
    double center_;
    std::uint64_t count_ = 0;
    std::array<double, kMaxPower + 1> sums_{};
};

struct SampleSummary {
    std::uint64_t count = 0;
    double mean = 0;
    double variance = 0;  ///< unbiased
    double skewness = 0;
    double excess_kurtosis = 0;
    std::array<double, 4> k_statistics{};  ///< k_1..k_4
    std::array<double, 4> standard_errors{};  ///< of k_1..k_4
};

SampleSummary summarize(const MomentAccumulator& acc);
SampleSummary summarize(const std::vector<double>& samples);

struct SamplingOptions {
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool keep_samples = false;
};

struct Estimate {
    SampleSummary summary;
    std::vector<double> samples;  ///< filled when keep_samples is set
};

/// Number of draws handled by one stream; chunk c uses RngStream(seed, c).
inline constexpr std::uint64_t kChunkSize = 4096;

/// Summary of F_T(u0) over uniformly random Poissonized tableaux of shape lambda.
Estimate estimate_threshold(const YoungDiagram& lambda, const Rational& u0, const SamplingOptions& opts);

/// Summary of Z = (n-1)! sum over trees T decorated by (x_1..x_n) of
/// (-1)^{|B_T|-1} / prod (x_w - x_b + w - b), with x_i i.i.d. from mu_lambda.
/// Its mean is kappa_n.
Estimate estimate_z(const YoungDiagram& lambda, const Rational& u0, int n, const SamplingOptions& opts);

struct RectangleResult {
    Estimate estimate;          ///< of Y = (pq)^{1/4} (corner - q/(p+q))
    double alpha = 0;           ///< q / (p + q)
    double sigma2_limit = 0;    ///< [alpha (1 - alpha)]^{3/2}
    Rational corner_mean;       ///< q / (p + q)
    Rational corner_variance;   ///< qp / ((p+q)^2 (p+q+1))
    double y_variance = 0;      ///< sqrt(pq) * corner_variance
};

/// Samples the last entry of the first row of a uniform p x q Poissonized tableau.
RectangleResult rectangle_experiment(int p, int q, const SamplingOptions& opts);

/// Kolmogorov-Smirnov statistic of `samples` against U(0,1).
double ks_statistic_uniform(std::vector<double> samples);

} // namespace thresh
