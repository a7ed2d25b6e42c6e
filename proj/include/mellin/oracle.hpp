#pragma once

#include "mellin/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace mellin::oracle {

/// Gauss-Laguerre rule: sum w_i f(x_i) approximates the integral of
/// e^(-x) f(x) over [0, inf), exact for polynomials of degree < 2 * size().
class LaguerreRule {
public:
    /// Throws Errc::invalid_parameter for count == 0 or count > max_nodes.
    explicit LaguerreRule(std::size_t count);

    static constexpr std::size_t max_nodes = 128;

    std::size_t size() const noexcept { return nodes_.size(); }
    const std::vector<long double>& nodes() const noexcept { return nodes_; }
    const std::vector<long double>& weights() const noexcept { return weights_; }

    /// Integral of e^(-rate x) g(x) over [0, inf), with nodes rescaled by
    /// 1/rate. Exact when g is a polynomial of degree < 2 * size().
    long double integrate(const std::function<long double(long double)>& g,
                          long double rate = 1.0L) const;

    /// log of sum w_i x_i^k, evaluated with log-sum-exp.
    long double log_moment(std::uint32_t k) const;

private:
    std::vector<long double> nodes_;
    std::vector<long double> weights_;
};

/// Nodes needed for exact integration of e^(-x) x^degree.
std::size_t nodes_for_degree(std::uint32_t degree) noexcept;

struct Config {
    /// Largest s+n-1 accepted. Above direct_limit, comparisons run in log space.
    std::uint32_t max_exponent = 40;
    static constexpr std::uint32_t direct_limit = 40;
    static constexpr std::uint32_t hard_limit = 160;
};

struct OracleResult {
    double numeric = 0.0;
    BigInt exact;
    double relative_error = 0.0;
    bool log_space = false;
};

/// Quadrature of the Mellin transform of e^(-x) x^n at s, i.e. Gamma(s+n),
/// paired with (s+n-1)!.
OracleResult numeric_mellin(std::uint32_t n, std::uint32_t s, const Config& config = {});

/// |numeric - exact| / exact recomputed from the two fields.
double relative_error(double numeric, const BigInt& exact);

bool within_tolerance(const OracleResult& result, double tol);

/// 1e-9 up to exponent 15, 1e-6 beyond.
double default_tolerance(std::uint32_t exponent) noexcept;

bool gamma_identity_check(std::uint32_t n, std::uint32_t s, double tol,
                          const Config& config = {});

/// Mellin transform of f(ax), f = e^(-x) x^n, against a^(-s) (s+n-1)!.
/// Throws Errc::invalid_scale for a <= 0.
bool scaling_check(double a, std::uint32_t n, std::uint32_t s, double tol,
                   const Config& config = {});

/// Mellin transform of x^a f at s against that of f at s+a.
bool shift_check(std::uint32_t a, std::uint32_t n, std::uint32_t s, double tol,
                 const Config& config = {});

} // namespace mellin::oracle
