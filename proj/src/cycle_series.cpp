#include "cqsf/cycle_series.hpp"

#include <algorithm>

#include "cqsf/errors.hpp"

namespace cqsf {

namespace {

// Graded series in z whose z^n coefficient is an e-basis symmetric function of
// degree n; multiplication concatenates e-index partitions.
using Series = std::map<int, std::map<Partition, TPoly, RevLexLess>>;

Series truncated_product(const Series& a, const Series& b, int max_degree) {
    Series out;
    for (const auto& [da, terms_a] : a) {
        for (const auto& [db, terms_b] : b) {
            if (da + db > max_degree) continue;
            auto& bucket = out[da + db];
            for (const auto& [ka, ca] : terms_a)
                for (const auto& [kb, cb] : terms_b) {
                    Partition key = ka;
                    key.insert(key.end(), kb.begin(), kb.end());
                    std::sort(key.begin(), key.end(), std::greater<>());
                    auto [it, inserted] = bucket.try_emplace(key, ca * cb);
                    if (!inserted) it->second += ca * cb;
                }
        }
    }
    return out;
}

void series_add(Series& into, const Series& from) {
    for (const auto& [deg, terms] : from)
        for (const auto& [key, poly] : terms) {
            auto [it, inserted] = into[deg].try_emplace(key, poly);
            if (!inserted) it->second += poly;
        }
}

}  // namespace

ESeries cycle_e_expansion_series(int max_degree) {
    if (max_degree < 2) throw InvalidInputError("series truncation requires N >= 2");

    // Numerator t sum_{k>=2} k [k-1]_t e_k z^k and denominator tail
    // D = t sum_{k>=2} [k-1]_t e_k z^k.
    Series numerator, tail;
    for (int k = 2; k <= max_degree; ++k) {
        const TPoly base = t_bracket(k - 1).shifted(1);
        numerator[k][{k}] = base.scaled(Rat(k));
        tail[k][{k}] = base;
    }

    // 1 / (1 - D) = sum D^i; D has z-valuation 2, so i <= N/2.
    Series geometric;
    geometric[0][{}] = TPoly(1);
    Series power;
    power[0][{}] = TPoly(1);
    for (int i = 1; 2 * i <= max_degree; ++i) {
        power = truncated_product(power, tail, max_degree);
        series_add(geometric, power);
    }
    const Series full = truncated_product(numerator, geometric, max_degree);

    ESeries out;
    out.truncation = max_degree;
    for (int n = 2; n <= max_degree; ++n) {
        SymT coeff{n, SBasis::e, {}};
        if (const auto it = full.find(n); it != full.end())
            for (const auto& [key, poly] : it->second) coeff.add_term(key, poly);
        out.by_degree.emplace(n, std::move(coeff));
    }
    return out;
}

TPoly cycle_e_coefficient(int n, const Partition& lambda) {
    if (n < 2) throw InvalidInputError("cycle_e_coefficient requires n >= 2");
    require_partition_of(lambda, n);
    const ESeries series = cycle_e_expansion_series(n);
    return series.by_degree.at(n).coeff(lambda);
}

}  // namespace cqsf
