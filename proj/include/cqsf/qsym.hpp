#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cqsf/partition.hpp"
#include "cqsf/tpoly.hpp"

namespace cqsf {

enum class QBasis { M, F };
enum class SBasis { m, e, p };

std::string basis_name(QBasis b);
std::string basis_name(SBasis b);

/// Homogeneous degree-n quasisymmetric function with TPoly coefficients.
/// Basis M: keys are compositions of n. Basis F: keys are descent sets, i.e.
/// strictly increasing subsets of [n-1]. Zero coefficients are never stored.
struct QSymT {
    int n = 0;
    QBasis basis = QBasis::M;
    std::map<std::vector<int>, TPoly, RevLexLess> terms;

    const TPoly& coeff(const std::vector<int>& key) const;
    void add_term(const std::vector<int>& key, const TPoly& c);
    bool is_zero() const { return terms.empty(); }

    QSymT& operator+=(const QSymT& o);
    QSymT& operator-=(const QSymT& o);
    QSymT scaled(const TPoly& c) const;
    bool operator==(const QSymT& o) const;

    std::string to_string() const;
};

/// Homogeneous degree-n symmetric function; keys are partitions of n.
struct SymT {
    int n = 0;
    SBasis basis = SBasis::m;
    std::map<Partition, TPoly, RevLexLess> terms;

    const TPoly& coeff(const Partition& key) const;
    void add_term(const Partition& key, const TPoly& c);
    bool is_zero() const { return terms.empty(); }

    SymT& operator+=(const SymT& o);
    SymT& operator-=(const SymT& o);
    SymT scaled(const TPoly& c) const;
    bool operator==(const SymT& o) const;

    std::string to_string() const;
};

// ---------------------------------------------------------------------------
// Quasisymmetric operations
// ---------------------------------------------------------------------------

/// F_{n,S} = sum over supersets T of S within [n-1] of M_{comp(T)}.
QSymT f_to_m(const QSymT& q);

/// Moebius inverse of f_to_m: M_{comp(S)} = sum_{T >= S} (-1)^{|T \ S|} F_{n,T}.
QSymT m_to_f(const QSymT& q);

/// The involution omega on the F basis: F_{n,S} -> F_{n,[n-1] \ S}.
QSymT omega_f(const QSymT& q);

/// Product of two M-basis expansions (quasi-shuffle of compositions).
QSymT qsym_product(const QSymT& a, const QSymT& b);

struct SymmetryWitness {
    Composition a;
    Composition b;
    int t_degree = 0;
};

/// A rearrangement-class violation if q (in basis M) is not symmetric.
std::optional<SymmetryWitness> symmetry_witness(const QSymT& q);
bool is_symmetric(const QSymT& q);

/// Collapse a symmetric M-expansion to the monomial symmetric basis.
/// Throws NotSymmetricError (with witness) if q is not symmetric.
SymT to_sym_m(const QSymT& q);

/// Re-expand an m-basis symmetric function into the M basis.
QSymT sym_to_qsym(const SymT& s);

// ---------------------------------------------------------------------------
// Symmetric basis transitions (all exact; round trips are identities)
// ---------------------------------------------------------------------------

SymT e_to_m(const SymT& s);
SymT m_to_e(const SymT& s);
SymT p_to_m(const SymT& s);
SymT m_to_p(const SymT& s);

/// omega on the power-sum basis: p_lambda -> (-1)^{n - l(lambda)} p_lambda.
SymT omega_p(const SymT& s);

/// m-basis expansions of e_lambda and p_lambda (integer coefficients).
std::map<Partition, Int, RevLexLess> elementary_in_m(const Partition& lambda);
std::map<Partition, Int, RevLexLess> powersum_in_m(const Partition& lambda);

// ---------------------------------------------------------------------------
// Positivity / palindromicity / unimodality reporting
// ---------------------------------------------------------------------------

struct EPositivityReport {
    bool positive = false;
    bool palindromic = false;
    bool unimodal = false;
    int low_degree = 0;   // lowest nonzero t-degree (0 if the input is zero)
    int high_degree = 0;  // highest nonzero t-degree
    Rat center;           // (low + high) / 2

    struct Witness {
        std::string what;  // "negative-coefficient" | "palindromic" | "unimodal"
        Partition lambda;
        int index = 0;  // t-degree (positivity/palindromicity) or difference index j
    };
    std::vector<Witness> witnesses;

    std::string to_string() const;
};

/// For s = sum_j a_j(x) t^j in the e basis with nonzero support [lo, hi],
/// reindexed so a_0 is the t^lo slice and m = hi - lo:
///   positive:    every coefficient of every e_lambda is >= 0;
///   palindromic: a_j == a_{m-j} for all j;
///   unimodal:    a_{j+1} - a_j is e-positive for 0 <= j < (m-1)/2.
EPositivityReport e_positivity_report(const SymT& s);

// ---------------------------------------------------------------------------
// Principal specialization (convenience evaluation)
// ---------------------------------------------------------------------------

/// Value with x_1 = ... = x_k = 1, other variables 0, and t = t0.
/// M_alpha(1^k) = binom(k, parts(alpha)).
Rat specialize_ones(const QSymT& q, int k, const Rat& t0);
/// e_lambda(1^k) = prod_i binom(k, lambda_i).
Rat specialize_ones_e(const SymT& s, int k, const Rat& t0);

/// Per-t-degree slices of an M-basis expansion are palindromic about the
/// center of the nonzero t-support (quasisymmetric palindromicity).
bool is_palindromic_qsym(const QSymT& q);

}  // namespace cqsf
