#pragma once

// Independent reference computations for the F-nomial checks. These touch
// none of the library's fnomial code paths: plain recurrences over big
// integers only.

#include <cstddef>
#include <vector>

#include "cobweb/numeric.hpp"

namespace oracle {

using cobweb::Integer;

// Pascal recurrence C(n,k) = C(n-1,k-1) + C(n-1,k).
inline std::vector<std::vector<Integer>> pascal_triangle(std::size_t max_n) {
    std::vector<std::vector<Integer>> rows(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        rows[n].assign(n + 1, Integer(1));
        for (std::size_t k = 1; k < n; ++k)
            rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
    return rows;
}

// q-Pascal recurrence [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q, evaluated at
// integer q.
inline std::vector<std::vector<Integer>> q_pascal_triangle(long q, std::size_t max_n) {
    std::vector<std::vector<Integer>> rows(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        rows[n].assign(n + 1, Integer(1));
        for (std::size_t k = 1; k < n; ++k) {
            Integer qk = boost::multiprecision::pow(Integer(q), static_cast<unsigned>(k));
            rows[n][k] = rows[n - 1][k - 1] + qk * rows[n - 1][k];
        }
    }
    return rows;
}

}  // namespace oracle
