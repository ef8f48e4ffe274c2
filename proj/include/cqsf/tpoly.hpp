#pragma once

#include <string>
#include <vector>

#include "cqsf/rational.hpp"

namespace cqsf {

/// Polynomial in t with exact rational coefficients.
///
/// Invariant: trailing zero coefficients are stripped, so the zero polynomial
/// is the empty coefficient vector and degree() of a nonzero polynomial is the
/// index of its last coefficient.
class TPoly {
  public:
    TPoly() = default;
    TPoly(int constant);                 // NOLINT(google-explicit-constructor)
    TPoly(const Rat& constant);          // NOLINT(google-explicit-constructor)
    explicit TPoly(std::vector<Rat> coeffs_ascending);

    static TPoly monomial(int degree, const Rat& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the highest nonzero term; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Degree of the lowest nonzero term; -1 for the zero polynomial.
    int low_degree() const;

    /// Coefficient of t^k (zero outside the stored range).
    const Rat& coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly operator-() const;
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

    TPoly scaled(const Rat& c) const;
    TPoly divided(const Rat& c) const;
    /// This polynomial times t^k.
    TPoly shifted(int k) const;

    Rat evaluate(const Rat& t) const;
    Rat coeff_sum() const { return evaluate(1); }

    bool operator==(const TPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const TPoly& o) const { return !(*this == o); }

    bool all_coeffs_nonnegative() const;
    /// a_{lo+j} == a_{hi-j} over the nonzero support [lo, hi]; true for zero.
    bool palindromic_over_support() const;

    /// "0", "1 + 4t + t^2", "3t - 1/2t^3", ...
    std::string to_string() const;

  private:
    void strip();
    std::vector<Rat> coeffs_;
};

/// [k]_t = 1 + t + ... + t^{k-1}, for k >= 1.
TPoly t_bracket(int k);

/// Eulerian polynomial A_k(t) = sum over permutations of [k] of t^{descents},
/// with A_0 = A_1 = 1, A_2 = 1 + t. Descent enumeration for k <= 8, the
/// Eulerian-number recurrence beyond.
TPoly eulerian_polynomial(int k);

}  // namespace cqsf
