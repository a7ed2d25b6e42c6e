#include "mellin/oracle.hpp"
#include "mellin/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mellin::oracle {

namespace {

struct LaguerreEval {
    long double value;     // L_n(z)
    long double previous;  // L_{n-1}(z)
    long double derivative;
};

LaguerreEval evaluate_laguerre(std::size_t n, long double z)
{
    long double p1 = 1.0L;
    long double p2 = 0.0L;
    for (std::size_t j = 1; j <= n; ++j) {
        const long double p3 = p2;
        p2 = p1;
        p1 = ((2.0L * j - 1.0L - z) * p2 - (j - 1.0L) * p3) / j;
    }
    return {p1, p2, (n * p1 - n * p2) / z};
}

void validate_exponent(std::uint32_t n, std::uint32_t s, std::uint64_t exponent, const Config& config)
{
    if (n < 1 || s < 1)
        throw Error(Errc::invalid_parameter, "oracle requires n >= 1 and s >= 1");
    if (config.max_exponent < 1 || config.max_exponent > Config::hard_limit)
        throw Error(Errc::invalid_parameter,
                    "exactness bound must lie in 1.." + std::to_string(Config::hard_limit));
    if (exponent > config.max_exponent)
        throw Error(Errc::exactness_bound_exceeded,
                    "exponent " + std::to_string(exponent) + " exceeds bound "
                        + std::to_string(config.max_exponent));
}

void validate_tolerance(double tol)
{
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw Error(Errc::invalid_parameter, "tolerance must be a positive finite number");
}

long double log_factorial(std::uint32_t k)
{
    long double sum = 0.0L;
    for (std::uint32_t i = 2; i <= k; ++i)
        sum += std::log(static_cast<long double>(i));
    return sum;
}

long double symmetric_difference(long double lhs, long double rhs)
{
    const long double scale = std::max(std::fabs(lhs), std::fabs(rhs));
    return scale == 0.0L ? 0.0L : std::fabs(lhs - rhs) / scale;
}

} // namespace

LaguerreRule::LaguerreRule(std::size_t count)
{
    if (count == 0 || count > max_nodes)
        throw Error(Errc::invalid_parameter,
                    "node count must lie in 1.." + std::to_string(max_nodes));

    nodes_.resize(count);
    weights_.resize(count);
    const long double n = static_cast<long double>(count);
    const long double eps = 8.0L * std::numeric_limits<long double>::epsilon();

    long double z = 0.0L;
    for (std::size_t i = 0; i < count; ++i) {
        // Initial guesses for the i-th root, ascending.
        if (i == 0) {
            z = 3.0L / (1.0L + 2.4L * n);
        } else if (i == 1) {
            z += 15.0L / (1.0L + 2.5L * n);
        } else {
            const long double ai = static_cast<long double>(i - 1);
            z += (1.0L + 2.55L * ai) / (1.9L * ai) * (z - nodes_[i - 2]);
        }

        LaguerreEval eval{};
        for (int iter = 0; iter < 200; ++iter) {
            eval = evaluate_laguerre(count, z);
            const long double step = eval.value / eval.derivative;
            z -= step;
            if (std::fabs(step) <= eps * std::fabs(z))
                break;
        }
        eval = evaluate_laguerre(count, z);
        nodes_[i] = z;
        weights_[i] = -1.0L / (eval.derivative * n * eval.previous);
    }
}

long double LaguerreRule::integrate(const std::function<long double(long double)>& g,
                                    long double rate) const
{
    long double sum = 0.0L;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        sum += weights_[i] * g(nodes_[i] / rate);
    return sum / rate;
}

long double LaguerreRule::log_moment(std::uint32_t k) const
{
    std::vector<long double> terms(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        terms[i] = std::log(weights_[i]) + k * std::log(nodes_[i]);
    const long double peak = *std::max_element(terms.begin(), terms.end());
    long double sum = 0.0L;
    for (auto t : terms)
        sum += std::exp(t - peak);
    return peak + std::log(sum);
}

std::size_t nodes_for_degree(std::uint32_t degree) noexcept
{
    return (static_cast<std::size_t>(degree) + 2) / 2 + 1;
}

double relative_error(double numeric, const BigInt& exact)
{
    const long double reference = exact.convert_to<long double>();
    if (reference == 0.0L)
        return std::fabs(numeric);
    return static_cast<double>(std::fabs(static_cast<long double>(numeric) - reference) / reference);
}

OracleResult numeric_mellin(std::uint32_t n, std::uint32_t s, const Config& config)
{
    const std::uint64_t exponent = static_cast<std::uint64_t>(s) + n - 1;
    validate_exponent(n, s, exponent, config);
    const auto k = static_cast<std::uint32_t>(exponent);
    const LaguerreRule rule(nodes_for_degree(k));

    OracleResult result;
    result.exact = factorial(k);
    if (k <= Config::direct_limit) {
        const long double integral =
            rule.integrate([k](long double x) { return std::pow(x, static_cast<long double>(k)); });
        result.numeric = static_cast<double>(integral);
        result.relative_error = relative_error(result.numeric, result.exact);
    } else {
        const long double log_numeric = rule.log_moment(k);
        result.log_space = true;
        result.numeric = static_cast<double>(std::exp(log_numeric));
        result.relative_error = static_cast<double>(std::fabs(std::expm1(log_numeric - log_factorial(k))));
    }
    return result;
}

bool within_tolerance(const OracleResult& result, double tol)
{
    validate_tolerance(tol);
    const double error = result.log_space ? result.relative_error
                                          : relative_error(result.numeric, result.exact);
    return std::isfinite(error) && error <= tol;
}

double default_tolerance(std::uint32_t exponent) noexcept
{
    return exponent <= 15 ? 1e-9 : 1e-6;
}

bool gamma_identity_check(std::uint32_t n, std::uint32_t s, double tol, const Config& config)
{
    validate_tolerance(tol);
    return within_tolerance(numeric_mellin(n, s, config), tol);
}

bool scaling_check(double a, std::uint32_t n, std::uint32_t s, double tol, const Config& config)
{
    if (!(a > 0.0) || !std::isfinite(a))
        throw Error(Errc::invalid_scale, "scale factor must be positive and finite");
    validate_tolerance(tol);
    const std::uint64_t exponent = static_cast<std::uint64_t>(s) + n - 1;
    validate_exponent(n, s, exponent, config);

    // f(ax) x^(s-1) = e^(-ax) (ax)^n x^(s-1); the rule absorbs e^(-ax).
    const LaguerreRule rule(nodes_for_degree(static_cast<std::uint32_t>(exponent)));
    const long double scale = a;
    const long double integral = rule.integrate(
        [scale, n, s](long double x) {
            return std::pow(scale * x, static_cast<long double>(n))
                * std::pow(x, static_cast<long double>(s) - 1.0L);
        },
        scale);

    const long double expected = std::pow(scale, -static_cast<long double>(s))
        * factorial(static_cast<std::int64_t>(exponent)).convert_to<long double>();
    const long double error = std::fabs(integral - expected) / expected;
    return std::isfinite(static_cast<double>(error)) && error <= tol;
}

bool shift_check(std::uint32_t a, std::uint32_t n, std::uint32_t s, double tol, const Config& config)
{
    validate_tolerance(tol);
    const std::uint64_t shifted = static_cast<std::uint64_t>(s) + a;
    if (shifted > std::numeric_limits<std::uint32_t>::max())
        throw Error(Errc::exactness_bound_exceeded, "shifted parameter overflows");
    const std::uint64_t exponent = shifted + n - 1;
    validate_exponent(n, s, exponent, config);

    const LaguerreRule rule(nodes_for_degree(static_cast<std::uint32_t>(exponent)));
    const long double lhs = rule.integrate([a, n, s](long double x) {
        return std::pow(x, static_cast<long double>(a)) * std::pow(x, static_cast<long double>(n))
            * std::pow(x, static_cast<long double>(s) - 1.0L);
    });

    const long double rhs = numeric_mellin(n, static_cast<std::uint32_t>(shifted), config).numeric;
    const long double difference = symmetric_difference(lhs, rhs);
    return std::isfinite(static_cast<double>(difference)) && difference <= tol;
}

} // namespace mellin::oracle
