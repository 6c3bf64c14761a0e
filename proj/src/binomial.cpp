#include "binotrig/binomial.hpp"

#include <stdexcept>

namespace binotrig {

CoefficientStream::CoefficientStream(double n) : exponent_(n)
{
    if (!std::isfinite(n))
        throw std::invalid_argument("binomial exponent must be finite");
}

double binom(double n, std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("binomial index must be nonnegative");
    CoefficientStream s(n);
    while (s.index() < k) {
        if (s.advance() == 0.0)
            return 0.0;
    }
    return s.current();
}

} // namespace binotrig
