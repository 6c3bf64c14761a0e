#pragma once

#include <cmath>
#include <cstdint>

namespace binotrig {

/// True when n is finite and exactly integral. No tolerance: 3 + 1e-9 is
/// not an integer exponent.
inline bool is_integer(double n) noexcept
{
    return std::isfinite(n) && n == std::nearbyint(n);
}

/// True for exponents whose binomial expansion terminates (n = 0, 1, 2, ...).
inline bool is_nonnegative_integer(double n) noexcept
{
    return is_integer(n) && n >= 0.0;
}

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k! for real n.
///
/// Evaluated by the multiplicative recurrence c <- c*(n-k)/(k+1), never via
/// factorials. For integer n the products c*(n-k) are exact integers while
/// they stay below 2^53, so integer coefficients come out exact and
/// binom(n, k) == binom(n, n-k) holds bit for bit.
///
/// Throws std::invalid_argument for k < 0 or non-finite n.
double binom(double n, std::int64_t k);

/// Incremental generator of binom(n, 0), binom(n, 1), ...
class CoefficientStream
{
public:
    /// Throws std::invalid_argument for non-finite n.
    explicit CoefficientStream(double n);

    double exponent() const noexcept { return exponent_; }
    std::int64_t index() const noexcept { return index_; }
    double current() const noexcept { return current_; }

    /// Moves to index + 1 and returns the new coefficient.
    double advance() noexcept
    {
        const double k = static_cast<double>(index_);
        current_ = current_ * (exponent_ - k) / (k + 1.0);
        ++index_;
        return current_;
    }

private:
    double exponent_;
    std::int64_t index_ = 0;
    double current_ = 1.0;
};

} // namespace binotrig
