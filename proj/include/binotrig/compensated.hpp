#pragma once

#include <cmath>

namespace binotrig {

/// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays
/// accurate when an addend is larger in magnitude than the running sum,
/// which is the normal situation for the oscillating series handled here.
template <typename Real>
struct CompensatedSum
{
    Real sum = Real(0);
    Real compensation = Real(0);

    void add(Real value)
    {
        const Real t = sum + value;
        if (abs_(sum) >= abs_(value))
            compensation += (sum - t) + value;
        else
            compensation += (value - t) + sum;
        sum = t;
    }

    CompensatedSum& operator+=(Real value)
    {
        add(value);
        return *this;
    }

    Real value() const { return sum + compensation; }

private:
    static Real abs_(Real x) { return x < Real(0) ? -x : x; }
};

} // namespace binotrig
