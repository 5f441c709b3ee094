#pragma once

#include <cstdint>

namespace jacobidim {

// p_j(s) is the coefficient of x^(j-2) in 1 / (1 - s*x + x^2).  For the
// dimension formulas only even j >= 2 and s = sqrt(u) with u = s^2 in
// {0, 1, 2, 3, 4} occur; there p_j(sqrt(u)) is an integer and satisfies
//   p_j = (u - 2) * p_{j-2} - p_{j-4},   p_2 = 1,  p_4 = u - 1.
// p_even(j, u) evaluates that recurrence.  Out-of-range j or u is a domain
// error.
std::int64_t p_even(std::int64_t j, std::int64_t u);

}  // namespace jacobidim
