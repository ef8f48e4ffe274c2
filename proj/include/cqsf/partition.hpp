#pragma once

#include <vector>

#include "cqsf/rational.hpp"

namespace cqsf {

// Parts of an integer composition (order significant) or partition (weakly
// decreasing). Both are plain part vectors; validators below.
using Composition = std::vector<int>;
using Partition = std::vector<int>;

int weight(const std::vector<int>& parts);
bool is_partition(const std::vector<int>& parts);
bool is_composition(const std::vector<int>& parts);

/// Throws InvalidInputError unless `parts` is weakly decreasing, positive,
/// and sums to n.
void require_partition_of(const Partition& p, int n);

/// Total order used for all term maps and serialized output: lexicographically
/// larger part vectors come first, so (n) precedes ... precedes (1,...,1).
/// A proper prefix sorts after its extensions.
bool revlex_before(const std::vector<int>& a, const std::vector<int>& b);

struct RevLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        return revlex_before(a, b);
    }
};

/// All partitions of n in revlex order, (n) first. partitions_of(0) = { () }.
std::vector<Partition> partitions_of(int n);

/// All 2^{n-1} compositions of n in revlex order. compositions_of(0) = { () }.
std::vector<Composition> compositions_of(int n);

/// Conjugate (transposed) partition.
Partition conjugate(const Partition& p);

/// z_lambda = prod_i i^{m_i} m_i! over part multiplicities; lambda nonempty.
Int z_lambda(const Partition& p);

/// Distinct rearrangements of the parts of p, in revlex order.
std::vector<Composition> rearrangements(const Partition& p);

/// Subsets S of [n-1] correspond to compositions of n by consecutive
/// differences: S = {s_1 < ... < s_k} gives (s_1, s_2-s_1, ..., n-s_k).
Composition composition_from_subset(const std::vector<int>& subset, int n);
std::vector<int> subset_from_composition(const Composition& c);

}  // namespace cqsf
