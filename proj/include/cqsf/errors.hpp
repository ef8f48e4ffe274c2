#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cqsf {

// Bad arguments: loops, out-of-range vertices, malformed partitions, ...
struct InvalidInputError : std::invalid_argument {
    explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration would exceed the configured budget (factorial sweeps,
// orientation sweeps past the 2^|E| cap).
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A symmetric-function operation was applied to a quasisymmetric input that
// is not symmetric. Carries two compositions in the same rearrangement class
// whose coefficients differ at `t_degree`.
struct NotSymmetricError : std::runtime_error {
    NotSymmetricError(const std::string& what, std::vector<int> a_, std::vector<int> b_,
                      int t_degree_)
        : std::runtime_error(what), a(std::move(a_)), b(std::move(b_)), t_degree(t_degree_) {}

    std::vector<int> a;
    std::vector<int> b;
    int t_degree;
};

}  // namespace cqsf
