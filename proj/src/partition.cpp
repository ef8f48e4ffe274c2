#include "cqsf/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cqsf/errors.hpp"

namespace cqsf {

int weight(const std::vector<int>& parts) {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

bool is_partition(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

bool is_composition(const std::vector<int>& parts) {
    return std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 1; });
}

void require_partition_of(const Partition& p, int n) {
    if (!is_partition(p)) {
        std::ostringstream os;
        os << "parts are not weakly decreasing positive integers";
        throw InvalidInputError(os.str());
    }
    if (weight(p) != n) {
        std::ostringstream os;
        os << "partition has weight " << weight(p) << ", expected " << n;
        throw InvalidInputError(os.str());
    }
}

bool revlex_before(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return a.size() > b.size();  // extensions precede their prefix
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw InvalidInputError("partitions_of requires n >= 0");
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, cur, out);
    return out;  // largest-part-first recursion emits revlex order directly
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw InvalidInputError("compositions_of requires n >= 0");
    if (n == 0) return {{}};
    std::vector<Composition> out;
    out.reserve(std::size_t(1) << (n - 1));
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n - 1)); ++mask) {
        Composition c;
        int prev = 0;
        for (int i = 1; i < n; ++i) {
            if ((mask >> (i - 1)) & 1u) {
                c.push_back(i - prev);
                prev = i;
            }
        }
        c.push_back(n - prev);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), RevLexLess{});
    return out;
}

Partition conjugate(const Partition& p) {
    Partition out;
    if (p.empty()) return out;
    for (int i = 1; i <= p[0]; ++i) {
        int count = 0;
        for (int part : p)
            if (part >= i) ++count;
        out.push_back(count);
    }
    return out;
}

Int z_lambda(const Partition& p) {
    if (p.empty()) throw InvalidInputError("z_lambda requires a nonempty partition");
    if (!is_partition(p)) throw InvalidInputError("z_lambda requires a partition");
    Int z = 1;
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        const int mult = static_cast<int>(j - i);
        for (int r = 0; r < mult; ++r) z *= p[i];
        z *= factorial(mult);
        i = j;
    }
    return z;
}

std::vector<Composition> rearrangements(const Partition& p) {
    Composition c = p;
    std::sort(c.begin(), c.end());
    std::vector<Composition> out;
    do {
        out.push_back(c);
    } while (std::next_permutation(c.begin(), c.end()));
    std::sort(out.begin(), out.end(), RevLexLess{});
    return out;
}

Composition composition_from_subset(const std::vector<int>& subset, int n) {
    Composition c;
    int prev = 0;
    for (int s : subset) {
        if (s <= prev || s >= n)
            throw InvalidInputError("descent set must increase strictly within [n-1]");
        c.push_back(s - prev);
        prev = s;
    }
    if (n > 0) c.push_back(n - prev);
    return c;
}

std::vector<int> subset_from_composition(const Composition& c) {
    std::vector<int> s;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        acc += c[i];
        s.push_back(acc);
    }
    return s;
}

}  // namespace cqsf
