#include "cqsf/qsym.hpp"

#include <algorithm>
#include <sstream>

#include "cqsf/errors.hpp"

namespace cqsf {

namespace {

const TPoly kZeroPoly;

std::string index_list(const std::vector<int>& key) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) os << ' ';
        os << key[i];
    }
    os << ']';
    return os.str();
}

template <typename Terms>
std::string render_terms(const Terms& terms, const std::string& tag) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, poly] : terms) {
        if (!first) os << " + ";
        first = false;
        if (poly == TPoly(1))
            os << tag << index_list(key);
        else
            os << '(' << poly.to_string() << ") " << tag << index_list(key);
    }
    return os.str();
}

void check_m_key(const std::vector<int>& key, int n) {
    if (!is_composition(key) || weight(key) != n)
        throw InvalidInputError("M-basis key must be a composition of n");
}

void check_f_key(const std::vector<int>& key, int n) {
    int prev = 0;
    for (int s : key) {
        if (s <= prev || s >= n) throw InvalidInputError("F-basis key must be a subset of [n-1]");
        prev = s;
    }
}

}  // namespace

std::string basis_name(QBasis b) { return b == QBasis::M ? "M" : "F"; }

std::string basis_name(SBasis b) {
    switch (b) {
        case SBasis::m: return "m";
        case SBasis::e: return "e";
        case SBasis::p: return "p";
    }
    return "?";
}

const TPoly& QSymT::coeff(const std::vector<int>& key) const {
    const auto it = terms.find(key);
    return it == terms.end() ? kZeroPoly : it->second;
}

void QSymT::add_term(const std::vector<int>& key, const TPoly& c) {
    if (c.is_zero()) return;
    if (basis == QBasis::M)
        check_m_key(key, n);
    else
        check_f_key(key, n);
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

QSymT& QSymT::operator+=(const QSymT& o) {
    if (n != o.n || basis != o.basis) throw InvalidInputError("mismatched quasisym sum");
    for (const auto& [key, poly] : o.terms) add_term(key, poly);
    return *this;
}

QSymT& QSymT::operator-=(const QSymT& o) {
    if (n != o.n || basis != o.basis) throw InvalidInputError("mismatched quasisym difference");
    for (const auto& [key, poly] : o.terms) add_term(key, -poly);
    return *this;
}

QSymT QSymT::scaled(const TPoly& c) const {
    QSymT out{n, basis, {}};
    if (c.is_zero()) return out;
    for (const auto& [key, poly] : terms) out.terms.emplace(key, poly * c);
    return out;
}

bool QSymT::operator==(const QSymT& o) const {
    return n == o.n && basis == o.basis && terms == o.terms;
}

std::string QSymT::to_string() const { return render_terms(terms, basis_name(basis)); }

const TPoly& SymT::coeff(const Partition& key) const {
    const auto it = terms.find(key);
    return it == terms.end() ? kZeroPoly : it->second;
}

void SymT::add_term(const Partition& key, const TPoly& c) {
    if (c.is_zero()) return;
    require_partition_of(key, n);
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

SymT& SymT::operator+=(const SymT& o) {
    if (n != o.n || basis != o.basis) throw InvalidInputError("mismatched sym sum");
    for (const auto& [key, poly] : o.terms) add_term(key, poly);
    return *this;
}

SymT& SymT::operator-=(const SymT& o) {
    if (n != o.n || basis != o.basis) throw InvalidInputError("mismatched sym difference");
    for (const auto& [key, poly] : o.terms) add_term(key, -poly);
    return *this;
}

SymT SymT::scaled(const TPoly& c) const {
    SymT out{n, basis, {}};
    if (c.is_zero()) return out;
    for (const auto& [key, poly] : terms) out.terms.emplace(key, poly * c);
    return out;
}

bool SymT::operator==(const SymT& o) const {
    return n == o.n && basis == o.basis && terms == o.terms;
}

std::string SymT::to_string() const { return render_terms(terms, basis_name(basis)); }

// ---------------------------------------------------------------------------
// F <-> M
// ---------------------------------------------------------------------------

namespace {

std::uint64_t subset_to_mask(const std::vector<int>& subset) {
    std::uint64_t mask = 0;
    for (int s : subset) mask |= std::uint64_t(1) << (s - 1);
    return mask;
}

std::vector<int> mask_to_subset(std::uint64_t mask) {
    std::vector<int> subset;
    while (mask) {
        subset.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return subset;
}

void require_basis(const QSymT& q, QBasis b, const char* op) {
    if (q.basis != b)
        throw InvalidInputError(std::string(op) + " expects basis " + basis_name(b) +
                                ", got " + basis_name(q.basis));
}

void require_basis(const SymT& s, SBasis b, const char* op) {
    if (s.basis != b)
        throw InvalidInputError(std::string(op) + " expects basis " + basis_name(b) +
                                ", got " + basis_name(s.basis));
}

void require_mask_width(int n, const char* op) {
    if (n > 64)
        throw InvalidInputError(std::string(op) + " supports degrees up to 64, got n = " +
                                std::to_string(n));
}

}  // namespace

QSymT f_to_m(const QSymT& q) {
    require_basis(q, QBasis::F, "f_to_m");
    require_mask_width(q.n, "f_to_m");
    const int n = q.n;
    const std::uint64_t full = n >= 1 ? (std::uint64_t(1) << (n - 1)) - 1 : 0;
    QSymT out{n, QBasis::M, {}};
    for (const auto& [subset, poly] : q.terms) {
        const std::uint64_t base = subset_to_mask(subset);
        const std::uint64_t free = full & ~base;
        std::uint64_t sub = free;
        for (;;) {
            out.add_term(composition_from_subset(mask_to_subset(base | sub), n), poly);
            if (sub == 0) break;
            sub = (sub - 1) & free;
        }
    }
    return out;
}

QSymT m_to_f(const QSymT& q) {
    require_basis(q, QBasis::M, "m_to_f");
    require_mask_width(q.n, "m_to_f");
    const int n = q.n;
    const std::uint64_t full = n >= 1 ? (std::uint64_t(1) << (n - 1)) - 1 : 0;
    QSymT out{n, QBasis::F, {}};
    for (const auto& [comp, poly] : q.terms) {
        const std::uint64_t base = subset_to_mask(subset_from_composition(comp));
        const std::uint64_t free = full & ~base;
        std::uint64_t sub = free;
        for (;;) {
            const int extra = std::popcount(sub);
            out.add_term(mask_to_subset(base | sub), (extra % 2 == 0) ? poly : -poly);
            if (sub == 0) break;
            sub = (sub - 1) & free;
        }
    }
    return out;
}

QSymT omega_f(const QSymT& q) {
    require_basis(q, QBasis::F, "omega_f");
    require_mask_width(q.n, "omega_f");
    // The involution sends F_{n,S} to F_{n, {n-i : i in [n-1] \ S}}. The
    // reversal matters: complementation alone fixes symmetric functions but
    // scrambles the M-expansion of non-symmetric ones.
    const int n = q.n;
    QSymT out{n, QBasis::F, {}};
    for (const auto& [subset, poly] : q.terms) {
        const std::uint64_t mask = subset_to_mask(subset);
        std::vector<int> image;
        for (int i = n - 1; i >= 1; --i)
            if (!((mask >> (i - 1)) & 1u)) image.push_back(n - i);
        out.add_term(image, poly);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Quasi-shuffle product
// ---------------------------------------------------------------------------

namespace {

using ZQSym = std::map<Composition, Int, RevLexLess>;

void qshuffle_rec(const Composition& a, std::size_t i, const Composition& b, std::size_t j,
                  Composition& cur, ZQSym& out) {
    if (i == a.size() && j == b.size()) {
        out[cur] += 1;
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        qshuffle_rec(a, i + 1, b, j, cur, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        qshuffle_rec(a, i, b, j + 1, cur, out);
        cur.pop_back();
    }
    if (i < a.size() && j < b.size()) {
        cur.push_back(a[i] + b[j]);
        qshuffle_rec(a, i + 1, b, j + 1, cur, out);
        cur.pop_back();
    }
}

ZQSym quasi_shuffle(const Composition& a, const Composition& b) {
    ZQSym out;
    Composition cur;
    cur.reserve(a.size() + b.size());
    qshuffle_rec(a, 0, b, 0, cur, out);
    return out;
}

ZQSym zq_product(const ZQSym& a, const ZQSym& b) {
    ZQSym out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            const Int c = ca * cb;
            for (const auto& [key, mult] : quasi_shuffle(ka, kb)) out[key] += c * mult;
        }
    return out;
}

}  // namespace

QSymT qsym_product(const QSymT& a, const QSymT& b) {
    require_basis(a, QBasis::M, "qsym_product");
    require_basis(b, QBasis::M, "qsym_product");
    QSymT out{a.n + b.n, QBasis::M, {}};
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            const TPoly c = ca * cb;
            for (const auto& [key, mult] : quasi_shuffle(ka, kb))
                out.add_term(key, c.scaled(Rat(mult)));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Symmetry
// ---------------------------------------------------------------------------

std::optional<SymmetryWitness> symmetry_witness(const QSymT& q) {
    if (q.basis != QBasis::M)
        throw InvalidInputError("symmetry check expects the M basis");
    for (const Partition& lambda : partitions_of(q.n)) {
        const auto reps = rearrangements(lambda);
        const TPoly& ref = q.coeff(reps.front());
        for (std::size_t i = 1; i < reps.size(); ++i) {
            const TPoly& other = q.coeff(reps[i]);
            if (other == ref) continue;
            int deg = 0;
            const int top = std::max(ref.degree(), other.degree());
            for (int k = 0; k <= top; ++k)
                if (ref.coeff(k) != other.coeff(k)) {
                    deg = k;
                    break;
                }
            return SymmetryWitness{reps.front(), reps[i], deg};
        }
    }
    return std::nullopt;
}

bool is_symmetric(const QSymT& q) { return !symmetry_witness(q).has_value(); }

SymT to_sym_m(const QSymT& q) {
    if (const auto w = symmetry_witness(q)) {
        std::ostringstream os;
        os << "not symmetric: coefficients of M" << index_list(w->a) << " and M"
           << index_list(w->b) << " differ at t^" << w->t_degree;
        throw NotSymmetricError(os.str(), w->a, w->b, w->t_degree);
    }
    SymT out{q.n, SBasis::m, {}};
    for (const Partition& lambda : partitions_of(q.n)) out.add_term(lambda, q.coeff(lambda));
    return out;
}

QSymT sym_to_qsym(const SymT& s) {
    require_basis(s, SBasis::m, "sym_to_qsym");
    QSymT out{s.n, QBasis::M, {}};
    for (const auto& [lambda, poly] : s.terms)
        for (const Composition& alpha : rearrangements(lambda)) out.add_term(alpha, poly);
    return out;
}

// ---------------------------------------------------------------------------
// m <-> e and m <-> p
// ---------------------------------------------------------------------------

std::map<Partition, Int, RevLexLess> elementary_in_m(const Partition& lambda) {
    ZQSym acc{{Composition{}, Int(1)}};
    for (int part : lambda) acc = zq_product(acc, ZQSym{{Composition(part, 1), Int(1)}});
    std::map<Partition, Int, RevLexLess> out;
    for (const auto& [key, c] : acc)
        if (std::is_sorted(key.begin(), key.end(), std::greater<>())) out.emplace(key, c);
    return out;
}

std::map<Partition, Int, RevLexLess> powersum_in_m(const Partition& lambda) {
    ZQSym acc{{Composition{}, Int(1)}};
    for (int part : lambda) acc = zq_product(acc, ZQSym{{Composition{part}, Int(1)}});
    std::map<Partition, Int, RevLexLess> out;
    for (const auto& [key, c] : acc)
        if (std::is_sorted(key.begin(), key.end(), std::greater<>())) out.emplace(key, c);
    return out;
}

SymT e_to_m(const SymT& s) {
    require_basis(s, SBasis::e, "e_to_m");
    SymT out{s.n, SBasis::m, {}};
    for (const auto& [lambda, poly] : s.terms)
        for (const auto& [mu, c] : elementary_in_m(lambda)) out.add_term(mu, poly.scaled(Rat(c)));
    return out;
}

SymT p_to_m(const SymT& s) {
    require_basis(s, SBasis::p, "p_to_m");
    SymT out{s.n, SBasis::m, {}};
    for (const auto& [lambda, poly] : s.terms)
        for (const auto& [mu, c] : powersum_in_m(lambda)) out.add_term(mu, poly.scaled(Rat(c)));
    return out;
}

SymT m_to_e(const SymT& s) {
    require_basis(s, SBasis::m, "m_to_e");
    // e_{mu'} = m_mu + (dominance-lower terms), so eliminating in revlex order
    // ((n) first) reads off one e-coefficient per step.
    SymT residual = s;
    SymT out{s.n, SBasis::e, {}};
    for (const Partition& mu : partitions_of(s.n)) {
        const TPoly c = residual.coeff(mu);
        if (c.is_zero()) continue;
        const Partition lam = conjugate(mu);
        out.add_term(lam, c);
        for (const auto& [nu, k] : elementary_in_m(lam)) residual.add_term(nu, -c.scaled(Rat(k)));
    }
    if (!residual.is_zero()) throw std::logic_error("m_to_e elimination left a residual");
    return out;
}

SymT m_to_p(const SymT& s) {
    require_basis(s, SBasis::m, "m_to_p");
    // p_mu = (prod_i m_i!) m_mu + (dominance-higher terms); eliminate from the
    // dominance-minimal end, i.e. reverse revlex order ((1^n) first).
    const auto parts = partitions_of(s.n);
    SymT residual = s;
    SymT out{s.n, SBasis::p, {}};
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        const Partition& mu = *it;
        const TPoly c = residual.coeff(mu);
        if (c.is_zero()) continue;
        Int diag = 1;
        std::size_t i = 0;
        while (i < mu.size()) {
            std::size_t j = i;
            while (j < mu.size() && mu[j] == mu[i]) ++j;
            diag *= factorial(static_cast<int>(j - i));
            i = j;
        }
        const TPoly coeff = c.divided(Rat(diag));
        out.add_term(mu, coeff);
        for (const auto& [nu, k] : powersum_in_m(mu)) residual.add_term(nu, -coeff.scaled(Rat(k)));
    }
    if (!residual.is_zero()) throw std::logic_error("m_to_p elimination left a residual");
    return out;
}

SymT omega_p(const SymT& s) {
    require_basis(s, SBasis::p, "omega_p");
    SymT out{s.n, SBasis::p, {}};
    for (const auto& [lambda, poly] : s.terms) {
        const int sign_exp = s.n - static_cast<int>(lambda.size());
        out.add_term(lambda, (sign_exp % 2 == 0) ? poly : -poly);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Positivity report
// ---------------------------------------------------------------------------

EPositivityReport e_positivity_report(const SymT& s) {
    require_basis(s, SBasis::e, "e_positivity_report");
    EPositivityReport rep;
    rep.positive = rep.palindromic = rep.unimodal = true;

    int lo = -1, hi = -1;
    for (const auto& [lambda, poly] : s.terms) {
        const int l = poly.low_degree();
        const int h = poly.degree();
        if (lo < 0 || l < lo) lo = l;
        if (h > hi) hi = h;
    }
    if (lo < 0) {  // zero function
        rep.center = 0;
        return rep;
    }
    rep.low_degree = lo;
    rep.high_degree = hi;
    rep.center = Rat(lo + hi, 2);
    const int m = hi - lo;

    for (const auto& [lambda, poly] : s.terms) {
        for (int k = poly.low_degree(); k <= poly.degree(); ++k) {
            if (poly.coeff(k) < 0) {
                rep.positive = false;
                rep.witnesses.push_back({"negative-coefficient", lambda, k});
                break;
            }
        }
        if (!rep.positive) break;
    }

    for (int j = 0; j <= m && rep.palindromic; ++j) {
        for (const auto& [lambda, poly] : s.terms) {
            if (poly.coeff(lo + j) != poly.coeff(hi - j)) {
                rep.palindromic = false;
                rep.witnesses.push_back({"palindromic", lambda, j});
                break;
            }
        }
    }

    for (int j = 0; 2 * j <= m - 2 && rep.unimodal; ++j) {
        for (const auto& [lambda, poly] : s.terms) {
            if (poly.coeff(lo + j + 1) - poly.coeff(lo + j) < 0) {
                rep.unimodal = false;
                rep.witnesses.push_back({"unimodal", lambda, j});
                break;
            }
        }
    }
    return rep;
}

std::string EPositivityReport::to_string() const {
    std::ostringstream os;
    os << "positive=" << (positive ? "yes" : "no") << " palindromic="
       << (palindromic ? "yes" : "no") << " unimodal=" << (unimodal ? "yes" : "no")
       << " support=[" << low_degree << ", " << high_degree << "]";
    for (const auto& w : witnesses)
        os << " witness(" << w.what << ", e" << index_list(w.lambda) << ", " << w.index << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Specialization and quasisymmetric palindromicity
// ---------------------------------------------------------------------------

Rat specialize_ones(const QSymT& q, int k, const Rat& t0) {
    require_basis(q, QBasis::M, "specialize_ones");
    Rat total = 0;
    for (const auto& [alpha, poly] : q.terms)
        total += poly.evaluate(t0) * Rat(binomial(k, static_cast<int>(alpha.size())));
    return total;
}

Rat specialize_ones_e(const SymT& s, int k, const Rat& t0) {
    require_basis(s, SBasis::e, "specialize_ones_e");
    Rat total = 0;
    for (const auto& [lambda, poly] : s.terms) {
        Rat prod = 1;
        for (int part : lambda) prod *= Rat(binomial(k, part));
        total += poly.evaluate(t0) * prod;
    }
    return total;
}

bool is_palindromic_qsym(const QSymT& q) {
    if (q.basis != QBasis::M) throw InvalidInputError("palindromicity check expects the M basis");
    int lo = -1, hi = -1;
    for (const auto& [key, poly] : q.terms) {
        const int l = poly.low_degree();
        const int h = poly.degree();
        if (lo < 0 || l < lo) lo = l;
        if (h > hi) hi = h;
    }
    if (lo < 0) return true;
    for (const auto& [key, poly] : q.terms)
        for (int j = 0; lo + j <= hi; ++j)
            if (poly.coeff(lo + j) != poly.coeff(hi - j)) return false;
    return true;
}

}  // namespace cqsf
