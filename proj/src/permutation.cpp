#include "cqsf/permutation.hpp"

#include <numeric>

#include "cqsf/errors.hpp"

namespace cqsf {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    pos_.assign(n, 0);
    for (int i = 1; i <= n; ++i) {
        const int x = word_[i - 1];
        if (x < 1 || x > n) throw InvalidInputError("permutation letter out of range");
        if (pos_[x - 1] != 0) throw InvalidInputError("permutation repeats a letter");
        pos_[x - 1] = i;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

}  // namespace cqsf
