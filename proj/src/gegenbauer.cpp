#include "jacobidim/gegenbauer.hpp"

#include <stdexcept>

namespace jacobidim {

std::int64_t p_even(std::int64_t j, std::int64_t u) {
    if (u < 0 || u > 4) throw std::domain_error("p_even: u must be in 0..4");
    if (j < 2 || j % 2 != 0) throw std::domain_error("p_even: j must be even and >= 2");
    std::int64_t prev2 = 1;  // p_2
    if (j == 2) return prev2;
    std::int64_t prev = u - 1;  // p_4
    for (std::int64_t i = 6; i <= j; i += 2) {
        std::int64_t cur = (u - 2) * prev - prev2;
        prev2 = prev;
        prev = cur;
    }
    return prev;
}

}  // namespace jacobidim
