#include "thresh/diagram.hpp"

#include "thresh/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace thresh {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows))
{
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0) {
            throw InvalidDiagram("row lengths must be positive");
        }
        if (i > 0 && rows_[i] > rows_[i - 1]) {
            throw InvalidDiagram("row lengths must be weakly decreasing");
        }
    }
}

YoungDiagram YoungDiagram::parse(std::string_view text)
{
    std::vector<int> rows;
    std::size_t pos = 0;
    const auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    if (trim(text).empty() || trim(text) == "0") {
        return {};
    }
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const std::string_view part = trim(text.substr(pos, comma - pos));
        int value = 0;
        const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc{} || end != part.data() + part.size()) {
            throw ParseError("malformed partition '" + std::string(text) + "'");
        }
        rows.push_back(value);
        pos = comma + 1;
    }
    return YoungDiagram(std::move(rows));
}

YoungDiagram YoungDiagram::rectangle(int p, int q)
{
    if (p < 1 || q < 1) {
        throw InvalidDiagram("rectangle sides must be positive");
    }
    return YoungDiagram(std::vector<int>(static_cast<std::size_t>(p), q));
}

int YoungDiagram::size() const
{
    int n = 0;
    for (int r : rows_) n += r;
    return n;
}

int YoungDiagram::column_height(int c) const
{
    int h = 0;
    for (int r : rows_) {
        if (r >= c) ++h;
    }
    return h;
}

std::string YoungDiagram::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i > 0) os << ',';
        os << rows_[i];
    }
    return os.str();
}

bool interlaces(const std::vector<Rational>& concave, const std::vector<Rational>& convex)
{
    if (concave.empty() || convex.size() + 1 != concave.size()) {
        return false;
    }
    for (std::size_t j = 0; j < convex.size(); ++j) {
        if (!(concave[j] < convex[j] && convex[j] < concave[j + 1])) {
            return false;
        }
    }
    return true;
}

InterlacingSequence::InterlacingSequence(std::vector<Rational> concave_corners,
                                         std::vector<Rational> convex_corners)
    : concave(std::move(concave_corners)), convex(std::move(convex_corners))
{
    if (!interlaces(concave, convex)) {
        throw InterlacingViolation("corners do not strictly interlace");
    }
}

Rational TransitionMeasure::mass_at(const Rational& x) const
{
    const auto it = std::lower_bound(atoms.begin(), atoms.end(), x);
    if (it == atoms.end() || *it != x) {
        return 0;
    }
    return masses[static_cast<std::size_t>(it - atoms.begin())];
}

Rational TransitionMeasure::cumulative(const Rational& u0) const
{
    Rational total = 0;
    for (std::size_t i = 0; i < atoms.size() && atoms[i] <= u0; ++i) {
        total += masses[i];
    }
    return total;
}

InterlacingSequence corner_profile(const YoungDiagram& lambda)
{
    const auto& rows = lambda.rows();
    const int height = static_cast<int>(rows.size());
    std::vector<Rational> concave;
    std::vector<Rational> convex;
    // Walk from the top row down so that u-coordinates come out increasing.
    for (int r = height + 1; r >= 1; --r) {
        const int len = lambda.row_length(static_cast<std::size_t>(r));
        if (r == 1 || len < lambda.row_length(static_cast<std::size_t>(r - 1))) {
            concave.emplace_back(len + 1 - r);
        }
        if (r <= height && len > lambda.row_length(static_cast<std::size_t>(r + 1))) {
            convex.emplace_back(len - r);
        }
    }
    return InterlacingSequence(std::move(concave), std::move(convex));
}

Rational cauchy_transform(const InterlacingSequence& profile, const Rational& z)
{
    Rational num = 1;
    Rational den = 1;
    for (const auto& y : profile.convex) num *= z - y;
    for (const auto& x : profile.concave) {
        if (x == z) {
            throw PoleError("Cauchy transform evaluated at concave corner " + z.to_string());
        }
        den *= z - x;
    }
    return num / den;
}

TransitionMeasure transition_measure(const InterlacingSequence& profile)
{
    TransitionMeasure mu;
    mu.atoms = profile.concave;
    mu.masses.reserve(profile.concave.size());
    for (std::size_t i = 0; i < profile.concave.size(); ++i) {
        const Rational& xi = profile.concave[i];
        Rational num = 1;
        Rational den = 1;
        for (const auto& y : profile.convex) num *= xi - y;
        for (std::size_t k = 0; k < profile.concave.size(); ++k) {
            if (k != i) den *= xi - profile.concave[k];
        }
        mu.masses.push_back(num / den);
    }
    return mu;
}

TransitionMeasure transition_measure(const YoungDiagram& lambda)
{
    return transition_measure(corner_profile(lambda));
}

Rational falling_cauchy(const InterlacingSequence& profile, const Rational& x, unsigned k)
{
    Rational result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= cauchy_transform(profile, x - Rational(i));
    }
    return result;
}

Rational g_plus(const TransitionMeasure& mu, const Rational& u0)
{
    Rational total = 0;
    for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
        total += mu.masses[i] / (abs(u0 - mu.atoms[i]) + 1);
    }
    return total;
}

Rational g_plus(const InterlacingSequence& profile, const Rational& u0)
{
    return g_plus(transition_measure(profile), u0);
}

InterlacingSequence perturb(const InterlacingSequence& profile, const Rational& eps)
{
    std::vector<Rational> concave;
    std::vector<Rational> convex;
    for (std::size_t j = 0; j < profile.concave.size(); ++j) {
        concave.push_back(profile.concave[j] + Rational(j) * eps);
    }
    for (std::size_t j = 0; j < profile.convex.size(); ++j) {
        convex.push_back(profile.convex[j] + Rational(j + 1) * eps);
    }
    return InterlacingSequence(std::move(concave), std::move(convex));
}

bool has_generic_corners(const InterlacingSequence& profile)
{
    const auto& x = profile.concave;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            if ((x[i] - x[j]).is_integer()) {
                return false;
            }
        }
    }
    return true;
}

int hook_length(const YoungDiagram& lambda, int r, int c)
{
    const int arm = lambda.row_length(static_cast<std::size_t>(r)) - c;
    const int leg = lambda.column_height(c) - r;
    return arm + leg + 1;
}

BigInt count_syt(const YoungDiagram& lambda)
{
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
    BigInt hooks = 1;
    for (std::size_t r = 1; r <= lambda.num_rows(); ++r) {
        for (int c = 1; c <= lambda.row_length(r); ++c) {
            hooks *= hook_length(lambda, static_cast<int>(r), c);
        }
    }
    return result / hooks;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<YoungDiagram>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<YoungDiagram> partitions_of(int n)
{
    std::vector<YoungDiagram> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

std::vector<YoungDiagram> partitions_up_to(int max_boxes)
{
    std::vector<YoungDiagram> out;
    for (int n = 0; n <= max_boxes; ++n) {
        auto part = partitions_of(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace thresh
