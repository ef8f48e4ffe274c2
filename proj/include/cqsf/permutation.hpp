#pragma once

#include <vector>

namespace cqsf {

/// A permutation of [n] as a word sigma_1 ... sigma_n, with O(1) position
/// lookup (the inverse permutation).
class Permutation {
  public:
    Permutation() = default;
    /// Validates that `word` is a bijection on [n]; throws InvalidInputError.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }
    /// Letter at 1-based position i.
    int at(int i) const { return word_[i - 1]; }
    /// 1-based position of letter x, i.e. sigma^{-1}(x).
    int position(int x) const { return pos_[x - 1]; }

    bool operator==(const Permutation& o) const { return word_ == o.word_; }

  private:
    std::vector<int> word_;
    std::vector<int> pos_;
};

}  // namespace cqsf
