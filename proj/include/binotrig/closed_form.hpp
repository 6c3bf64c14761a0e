#pragma once

namespace binotrig {

struct OracleValue
{
    /// Meaningless when pole is set.
    double value = 0.0;
    bool pole = false;
};

/// 2^n cos^n(phi/2) cos(n phi/2), the sum of sum_k binom(n,k) cos(k phi).
///
/// cos^n(phi/2) is read as (cos(phi/2))^n. Integer n uses a sign-tracking
/// integer power and accepts any phi; non-integer n goes through
/// exp(n log cos(phi/2)) and requires -pi < phi < pi (DomainError
/// otherwise). For n < 0 and |cos(phi/2)| < 1e-12 the result is a pole.
OracleValue closed_cos(double n, double phi);

/// 2^n cos^n(phi/2) sin(n phi/2), the sum of sum_k binom(n,k) sin(k phi).
OracleValue closed_sin(double n, double phi);

/// Rationalized cosine sums for n = -2 and n = -3:
///   n = -2:  cos phi / (2 (1 + cos phi))
///   n = -3:  (2 cos phi - 1) / (4 (1 + cos phi))
/// Throws std::invalid_argument for other n and NotSummableError at the pole.
double rational_cross_check(int n, double phi);

/// 2^(n/2) cos(n pi/4): the cosine sum at phi = pi/2, which keeps only the
/// even-index coefficients 1 - binom(n,2) + binom(n,4) - ...
double phi90_value(double n);

} // namespace binotrig
