#include "cqsf/tpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cqsf/errors.hpp"

namespace cqsf {

namespace {
const Rat kZero = 0;
}

TPoly::TPoly(int constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

TPoly::TPoly(const Rat& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

TPoly::TPoly(std::vector<Rat> coeffs_ascending) : coeffs_(std::move(coeffs_ascending)) {
    strip();
}

TPoly TPoly::monomial(int degree, const Rat& c) {
    TPoly p;
    if (c != 0) {
        p.coeffs_.assign(degree + 1, Rat(0));
        p.coeffs_[degree] = c;
    }
    return p;
}

void TPoly::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int TPoly::low_degree() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return static_cast<int>(k);
    return -1;
}

const Rat& TPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[k];
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    strip();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    strip();
    return *this;
}

TPoly TPoly::operator-() const {
    TPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    TPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.strip();
    return r;
}

TPoly TPoly::scaled(const Rat& c) const {
    if (c == 0) return {};
    TPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

TPoly TPoly::divided(const Rat& c) const {
    if (c == 0) throw InvalidInputError("division of TPoly by zero");
    TPoly r = *this;
    for (auto& x : r.coeffs_) x /= c;
    return r;
}

TPoly TPoly::shifted(int k) const {
    if (is_zero()) return {};
    TPoly r;
    r.coeffs_.assign(coeffs_.size() + k, Rat(0));
    std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin() + k);
    return r;
}

Rat TPoly::evaluate(const Rat& t) const {
    Rat v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
    return v;
}

bool TPoly::all_coeffs_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c >= 0; });
}

bool TPoly::palindromic_over_support() const {
    const int lo = low_degree();
    if (lo < 0) return true;
    const int hi = degree();
    for (int j = 0; lo + j <= hi - j; ++j)
        if (coeffs_[lo + j] != coeffs_[hi - j]) return false;
    return true;
}

std::string TPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const Rat& c = coeffs_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const Rat a = abs(c);
        if (a != 1 || k == 0) os << rat_to_string(a);
        if (k >= 1) os << 't';
        if (k >= 2) os << '^' << k;
        first = false;
    }
    return os.str();
}

TPoly t_bracket(int k) {
    if (k < 1) throw InvalidInputError("t_bracket requires k >= 1");
    return TPoly(std::vector<Rat>(k, Rat(1)));
}

namespace {

TPoly eulerian_by_enumeration(int k) {
    std::vector<int> word(k);
    std::iota(word.begin(), word.end(), 1);
    std::vector<Rat> coeffs(std::max(k, 1), Rat(0));
    do {
        int des = 0;
        for (int i = 0; i + 1 < k; ++i)
            if (word[i] > word[i + 1]) ++des;
        coeffs[des] += 1;
    } while (std::next_permutation(word.begin(), word.end()));
    return TPoly(std::move(coeffs));
}

TPoly eulerian_by_recurrence(int k) {
    // Eulerian triangle: E(k, j) = (j+1) E(k-1, j) + (k-j) E(k-1, j-1).
    std::vector<Int> row = {1};
    for (int m = 2; m <= k; ++m) {
        std::vector<Int> next(m, 0);
        for (int j = 0; j < m; ++j) {
            Int v = 0;
            if (j < static_cast<int>(row.size())) v += Int(j + 1) * row[j];
            if (j >= 1) v += Int(m - j) * row[j - 1];
            next[j] = v;
        }
        row = std::move(next);
    }
    std::vector<Rat> coeffs(row.begin(), row.end());
    return TPoly(std::move(coeffs));
}

}  // namespace

TPoly eulerian_polynomial(int k) {
    if (k < 0) throw InvalidInputError("eulerian_polynomial requires k >= 0");
    if (k == 0) return TPoly(1);
    return k <= 8 ? eulerian_by_enumeration(k) : eulerian_by_recurrence(k);
}

}  // namespace cqsf
