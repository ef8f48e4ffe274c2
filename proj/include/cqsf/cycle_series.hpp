#pragma once

#include <map>

#include "cqsf/qsym.hpp"

namespace cqsf {

/// Truncation of the generating function
///
///   sum_{n >= 2} X_{C_n}(x, t) z^n
///     = t sum_{k >= 2} k [k-1]_t e_k z^k  /  (1 - t sum_{k >= 2} [k-1]_t e_k z^k)
///
/// expanded through z^N. by_degree[n] is X of the directed n-cycle in the
/// elementary basis.
struct ESeries {
    int truncation = 0;
    std::map<int, SymT> by_degree;  // n in [2, truncation]
};

ESeries cycle_e_expansion_series(int max_degree);

/// The coefficient of e_lambda in X of the directed n-cycle, extracted from
/// the series. lambda must be a partition of n, n >= 2.
TPoly cycle_e_coefficient(int n, const Partition& lambda);

}  // namespace cqsf
