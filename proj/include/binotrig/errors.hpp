#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace binotrig {

/// Input lies outside the region where the series or its closed form is
/// defined (e.g. a non-integer exponent with |phi| >= pi).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Negative exponent at cos(phi/2) = 0: the closed form has a pole and the
/// series has no Abel value.
class NotSummableError : public DomainError
{
public:
    NotSummableError(const std::string& what, double pole_angle)
        : DomainError(what), pole_angle_(pole_angle)
    {
    }

    /// +pi or -pi.
    double pole_angle() const noexcept { return pole_angle_; }

private:
    double pole_angle_;
};

class BudgetExhaustedError : public std::runtime_error
{
public:
    BudgetExhaustedError(const std::string& what, std::int64_t terms)
        : std::runtime_error(what), terms_(terms)
    {
    }

    std::int64_t terms() const noexcept { return terms_; }

private:
    std::int64_t terms_;
};

} // namespace binotrig
