// Command-line front end: compute chromatic quasisymmetric functions, classify
// digraphs, generate family digraphs, and run the theorem-verification suites.
//
// Exit codes: 0 success, 1 usage/parse error, 2 symmetry precondition failed,
// 3 budget exceeded, 4 verification found a counterexample.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "cqsf/cqsf.hpp"
#include "cqsf/cycle_series.hpp"
#include "cqsf/errors.hpp"
#include "cqsf/json_io.hpp"
#include "cqsf/orientation.hpp"

namespace {

using namespace cqsf;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotSymmetric = 2;
constexpr int kExitBudget = 3;
constexpr int kExitCounterexample = 4;

struct OutputMode {
    bool json = false;
    bool pretty = false;
    bool want_json() const { return json || !pretty; }
    bool want_pretty() const { return pretty || !json; }
};

struct PolyResult {
    json machine;
    std::string human;
};

PolyResult render(const QSymT& q) { return {qsym_to_json(q), q.to_string()}; }
PolyResult render(const SymT& s) { return {sym_to_json(s), s.to_string()}; }

void emit(const PolyResult& r, const OutputMode& out) {
    if (out.want_json()) std::cout << r.machine.dump(2) << "\n";
    if (out.want_pretty()) std::cout << r.human << "\n";
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

PolyResult compute_from_m(const QSymT& x, const std::string& basis) {
    if (basis == "M") return render(x);
    if (basis == "F") return render(m_to_f(x));
    const SymT m = to_sym_m(x);  // throws NotSymmetricError with witness
    if (basis == "m") return render(m);
    if (basis == "e") return render(m_to_e(m));
    if (basis == "p") return render(m_to_p(m));
    throw InvalidInputError("unknown basis '" + basis + "'");
}

PolyResult compute_command(const Digraph& d, const std::string& basis,
                           const std::string& method, const SweepOptions& opts) {
    if (method == "direct") return compute_from_m(chromatic_qsym_direct(d, opts), basis);
    if (method == "f-basis") return compute_from_m(chromatic_qsym_via_f(d, opts), basis);
    if (method == "p-basis") {
        const SymT x_p = omega_p(p_expansion_via_n(d, opts));  // omega X -> X
        if (basis == "p") return render(x_p);
        const SymT m = p_to_m(x_p);
        if (basis == "m") return render(m);
        if (basis == "e") return render(m_to_e(m));
        if (basis == "M") return render(sym_to_qsym(m));
        if (basis == "F") return render(m_to_f(sym_to_qsym(m)));
        throw InvalidInputError("unknown basis '" + basis + "'");
    }
    if (method == "series") {
        if (d.n < 2 || !(d == directed_cycle(d.n)))
            throw InvalidInputError(
                "method 'series' requires the directed cycle 1->2->...->n->1");
        const SymT x_e = cycle_e_expansion_series(d.n).by_degree.at(d.n);
        if (basis == "e") return render(x_e);
        const SymT m = e_to_m(x_e);
        if (basis == "m") return render(m);
        if (basis == "p") return render(m_to_p(m));
        if (basis == "M") return render(sym_to_qsym(m));
        if (basis == "F") return render(m_to_f(sym_to_qsym(m)));
        throw InvalidInputError("unknown basis '" + basis + "'");
    }
    throw InvalidInputError("unknown method '" + method + "'");
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

int classify_command(const Digraph& d, const SweepOptions& opts, const OutputMode& out) {
    const auto pca = is_proper_circular_arc(d);
    const QSymT x = chromatic_qsym_direct(d, opts);
    const auto witness = symmetry_witness(x);

    json j;
    j["oriented"] = is_oriented(d);
    j["acyclic"] = is_acyclic(d);
    j["proper_circular_arc"] = pca.ok;
    if (!pca.ok) j["proper_circular_arc_witness"] = pca.witness->describe();
    j["unit_interval"] = is_unit_interval_digraph(d);
    j["symmetric"] = !witness.has_value();
    if (witness) {
        j["symmetry_witness"] = {{"a", witness->a}, {"b", witness->b},
                                 {"t_degree", witness->t_degree}};
    }
    j["palindromic"] = is_palindromic_qsym(x);

    if (out.want_json()) std::cout << j.dump(2) << "\n";
    if (out.want_pretty()) {
        std::cout << "oriented:            " << (j["oriented"].get<bool>() ? "yes" : "no") << "\n"
                  << "acyclic:             " << (j["acyclic"].get<bool>() ? "yes" : "no") << "\n"
                  << "proper circular arc: "
                  << (pca.ok ? "yes" : "no (" + pca.witness->describe() + ")") << "\n"
                  << "unit interval:       "
                  << (j["unit_interval"].get<bool>() ? "yes" : "no") << "\n"
                  << "symmetric:           " << (witness ? "no" : "yes") << "\n"
                  << "palindromic:         "
                  << (j["palindromic"].get<bool>() ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyContext {
    SweepOptions opts;
    int max_n = 0;
    int samples = 0;
    std::uint64_t seed = 20170401;
    std::string family = "both";
    bool quiet = false;

    json report;
    std::optional<json> counterexample;
    long checks = 0;

    void progress(const std::string& line) const {
        if (!quiet) std::cout << "  " << line << "\n";
    }

    bool fail(const Digraph& d, const json& lhs, const json& rhs, const std::string& context) {
        counterexample = json{{"graph", digraph_to_json(d)},
                              {"lhs", lhs},
                              {"rhs", rhs},
                              {"context", context}};
        return false;
    }
};

bool verify_f_basis(VerifyContext& ctx) {
    for (int n = 0; n <= ctx.max_n; ++n) {
        bool ok = true;
        long count = 0;
        for_each_oriented_digraph(n, [&](const Digraph& d) {
            if (!ok) return;
            ++count;
            const QSymT lhs = chromatic_qsym_via_f(d, ctx.opts);
            const QSymT rhs = chromatic_qsym_direct(d, ctx.opts);
            if (!(lhs == rhs))
                ok = ctx.fail(d, qsym_to_json(lhs), qsym_to_json(rhs),
                              "permutation formula vs coloring oracle");
        });
        if (!ok) return false;
        ctx.checks += count;
        ctx.progress("oriented digraphs on " + std::to_string(n) + " vertices: " +
                     std::to_string(count) + " checked");
    }
    std::mt19937_64 rng(ctx.seed);
    for (int i = 0; i < ctx.samples; ++i) {
        const int n = 2 + i % 4;  // 2..5
        const Digraph d = random_digraph_with_bidirected(n, rng);
        const QSymT lhs = chromatic_qsym_via_f(d, ctx.opts);
        const QSymT rhs = chromatic_qsym_direct(d, ctx.opts);
        if (!(lhs == rhs))
            return ctx.fail(d, qsym_to_json(lhs), qsym_to_json(rhs),
                            "permutation formula vs coloring oracle (bidirected sample)");
        ++ctx.checks;
    }
    ctx.progress("bidirected samples: " + std::to_string(ctx.samples) + " checked");
    return true;
}

bool verify_p_basis_one(VerifyContext& ctx, const Digraph& d, const std::string& what) {
    const QSymT oracle = chromatic_qsym_direct(d, ctx.opts);
    const SymT rhs = omega_p(m_to_p(to_sym_m(oracle)));
    const SymT lhs = p_expansion_via_n(d, ctx.opts);
    ++ctx.checks;
    if (lhs == rhs) return true;
    return ctx.fail(d, sym_to_json(lhs), sym_to_json(rhs), what);
}

bool verify_p_basis(VerifyContext& ctx) {
    for (int n = 1; n <= ctx.max_n; ++n) {
        for (int r = 1; r <= (n + 1) / 2; ++r) {
            if (!verify_p_basis_one(ctx, family_digraph(FamilyKind::circular, n, r),
                                    "N_{G,lambda} expansion vs omega of the oracle"))
                return false;
        }
        ctx.progress("circular band digraphs on " + std::to_string(n) + " vertices: ok");
    }
    std::mt19937_64 rng(ctx.seed);
    for (int i = 0; i < ctx.samples; ++i) {
        const int n = 3 + i % 4;  // 3..6
        const Digraph d = random_proper_circular_arc_digraph(n, rng);
        if (!verify_p_basis_one(ctx, d, "N_{G,lambda} expansion vs omega of the oracle (sample)"))
            return false;
    }
    ctx.progress("star-free samples: " + std::to_string(ctx.samples) + " checked");
    return true;
}

bool verify_cycle_p(VerifyContext& ctx) {
    for (int n = 2; n <= ctx.max_n; ++n) {
        const Digraph cn = directed_cycle(n);
        const auto lambdas = partitions_of(n);
        const auto counts =
            kernels::n_lambda_inv_counts(cn, lambdas, ctx.opts.mode, ctx.opts.jobs);
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            std::vector<Rat> coeffs;
            for (auto c : counts[i]) coeffs.emplace_back(Int(c));
            const TPoly swept(std::move(coeffs));
            const TPoly closed = cycle_p_coefficient(n, lambdas[i]);
            ++ctx.checks;
            if (!(swept == closed)) {
                json idx = lambdas[i];
                return ctx.fail(cn, tpoly_to_json(swept), tpoly_to_json(closed),
                                "cycle power-sum factorization at lambda " + idx.dump());
            }
        }
        ctx.progress("cycle on " + std::to_string(n) + " vertices: all partitions ok");
    }
    return true;
}

bool verify_cycle_e(VerifyContext& ctx) {
    const ESeries series = cycle_e_expansion_series(std::max(ctx.max_n, 2));
    for (int n = 2; n <= ctx.max_n; ++n) {
        const Digraph cn = directed_cycle(n);
        const SymT extracted = series.by_degree.at(n);
        const SymT oracle_e = m_to_e(to_sym_m(chromatic_qsym_direct(cn, ctx.opts)));
        ++ctx.checks;
        if (!(extracted == oracle_e))
            return ctx.fail(cn, sym_to_json(extracted), sym_to_json(oracle_e),
                            "series extraction vs oracle e-expansion");
        const auto rep = e_positivity_report(extracted);
        ++ctx.checks;
        if (!rep.positive || !rep.palindromic || !rep.unimodal)
            return ctx.fail(cn, sym_to_json(extracted), json(rep.to_string()),
                            "positivity/palindromicity/unimodality of the cycle");
        ctx.progress("cycle on " + std::to_string(n) + " vertices: series ok, " +
                     rep.to_string());
    }
    return true;
}

std::vector<Digraph> sink_pool(const VerifyContext& ctx) {
    // Proper circular arc digraphs only: that is the hypothesis of the
    // sink-count identity.
    std::vector<Digraph> pool;
    for (int n = 2; n <= ctx.max_n; ++n) {
        for (int r = 1; r <= (n + 1) / 2; ++r)
            pool.push_back(family_digraph(FamilyKind::circular, n, r));
        for (int r = 2; r <= n; ++r) pool.push_back(family_digraph(FamilyKind::interval, n, r));
    }
    std::mt19937_64 rng(ctx.seed + 1);
    for (int i = 0; i < std::max(ctx.samples, 0); ++i)
        pool.push_back(random_proper_circular_arc_digraph(3 + i % 4, rng));
    return pool;
}

bool verify_sinks(VerifyContext& ctx) {
    for (const Digraph& d : sink_pool(ctx)) {
        const SymT e_form = m_to_e(to_sym_m(chromatic_qsym_direct(d, ctx.opts)));
        for (int k = 1; k <= d.n; ++k) {
            TPoly lhs;
            for (const auto& [lambda, coeff] : e_form.terms)
                if (static_cast<int>(lambda.size()) == k) lhs += coeff;
            const TPoly rhs = sink_generating_polynomial(d, k, ctx.opts);
            ++ctx.checks;
            if (!(lhs == rhs))
                return ctx.fail(d, tpoly_to_json(lhs), tpoly_to_json(rhs),
                                "sum of e-coefficients of length k vs sink polynomial, k = " +
                                    std::to_string(k));
        }
    }
    ctx.progress("sink identity: " + std::to_string(ctx.checks) + " (graph, k) pairs ok");
    return true;
}

bool verify_ao_lambda(VerifyContext& ctx) {
    for (int n = 2; n <= ctx.max_n; ++n) {
        const Digraph cn = directed_cycle(n);
        const Digraph pn = directed_path(n);
        const SymT path_e = m_to_e(to_sym_m(chromatic_qsym_direct(pn, ctx.opts)));
        for (const Partition& lambda : partitions_of(n)) {
            const TPoly cycle_lhs = ao_lambda_polynomial(cn, lambda, ctx.opts);
            const TPoly cycle_rhs = cycle_e_coefficient(n, lambda);
            ++ctx.checks;
            if (!(cycle_lhs == cycle_rhs)) {
                json idx = lambda;
                return ctx.fail(cn, tpoly_to_json(cycle_lhs), tpoly_to_json(cycle_rhs),
                                "cycle sink-gap polynomial vs series at lambda " + idx.dump());
            }
            const TPoly path_lhs = ao_lambda_polynomial(pn, lambda, ctx.opts);
            const TPoly path_rhs = path_e.coeff(lambda);
            ++ctx.checks;
            if (!(path_lhs == path_rhs)) {
                json idx = lambda;
                return ctx.fail(pn, tpoly_to_json(path_lhs), tpoly_to_json(path_rhs),
                                "path sink-gap polynomial vs oracle at lambda " + idx.dump());
            }
        }
        ctx.progress("sink-gap polynomials on " + std::to_string(n) + " vertices: ok");
    }
    return true;
}

bool verify_conjecture(VerifyContext& ctx) {
    const auto check_family = [&](FamilyKind kind, int max_n) -> bool {
        for (int n = 1; n <= max_n; ++n) {
            const int max_r = kind == FamilyKind::circular ? (n + 1) / 2 : n;
            for (int r = 1; r <= max_r; ++r) {
                const Digraph d = family_digraph(kind, n, r);
                const SymT e_form = m_to_e(to_sym_m(chromatic_qsym_direct(d, ctx.opts)));
                const auto rep = e_positivity_report(e_form);
                ++ctx.checks;
                if (!rep.positive || !rep.palindromic || !rep.unimodal)
                    return ctx.fail(d, sym_to_json(e_form), json(rep.to_string()),
                                    "e-positivity/e-unimodality of the band family");
            }
            ctx.progress((kind == FamilyKind::circular ? "circular" : "interval") +
                         std::string(" family, n = ") + std::to_string(n) + ": ok");
        }
        return true;
    };
    if (ctx.family == "circular" || ctx.family == "both")
        if (!check_family(FamilyKind::circular, ctx.max_n)) return false;
    // The interval family is one size smaller by default (its sweeps are the
    // costly ones: r ranges up to n rather than n/2).
    if (ctx.family == "interval" || ctx.family == "both")
        if (!check_family(FamilyKind::interval, ctx.max_n - 1)) return false;
    return true;
}

int verify_command(const std::string& suite, VerifyContext& ctx, const OutputMode& out) {
    ctx.quiet = !out.want_pretty();
    if (!ctx.quiet) std::cout << "suite " << suite << "\n";

    bool ok;
    if (suite == "f-basis") {
        if (ctx.max_n == 0) ctx.max_n = 4;
        if (ctx.samples < 0) ctx.samples = 200;
        ok = verify_f_basis(ctx);
    } else if (suite == "p-basis") {
        if (ctx.max_n == 0) ctx.max_n = 7;
        if (ctx.samples < 0) ctx.samples = 50;
        ok = verify_p_basis(ctx);
    } else if (suite == "cycle-p") {
        if (ctx.max_n == 0) ctx.max_n = 8;
        ok = verify_cycle_p(ctx);
    } else if (suite == "cycle-e") {
        if (ctx.max_n == 0) ctx.max_n = 8;
        ok = verify_cycle_e(ctx);
    } else if (suite == "sinks") {
        if (ctx.max_n == 0) ctx.max_n = 6;
        if (ctx.samples < 0) ctx.samples = 10;
        ok = verify_sinks(ctx);
    } else if (suite == "ao-lambda") {
        if (ctx.max_n == 0) ctx.max_n = 8;
        ok = verify_ao_lambda(ctx);
    } else if (suite == "conjecture") {
        if (ctx.max_n == 0) ctx.max_n = 8;
        ok = verify_conjecture(ctx);
    } else {
        throw InvalidInputError("unknown suite '" + suite + "'");
    }

    json report;
    report["suite"] = suite;
    report["params"] = {{"max_n", ctx.max_n},
                        {"samples", std::max(ctx.samples, 0)},
                        {"seed", ctx.seed},
                        {"family", ctx.family},
                        {"checks", ctx.checks}};
    report["status"] = ok ? "pass" : "fail";
    if (ctx.counterexample) report["counterexample"] = *ctx.counterexample;
    if (out.want_json()) std::cout << report.dump(2) << "\n";
    if (!ctx.quiet)
        std::cout << (ok ? "PASS" : "FAIL") << " (" << ctx.checks << " checks)" << "\n";
    return ok ? kExitOk : kExitCounterexample;
}

int run(int argc, char** argv) {
    CLI::App app{"chromatic quasisymmetric functions of directed graphs"};
    app.require_subcommand(1);

    OutputMode out;
    SweepOptions opts;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", out.json, "machine-readable output only");
        cmd->add_flag("--pretty", out.pretty, "human-readable output only");
        cmd->add_option("--jobs", opts.jobs, "worker threads for the sweeps (0 = auto)");
        cmd->add_option("--budget-factorial", opts.factorial_budget,
                        "largest n for factorial-scale sweeps")
            ->check(CLI::Range(0, 13));
    };

    // compute
    auto* compute = app.add_subcommand("compute", "expand X of a digraph in a basis");
    std::string graph_path, basis = "M", method = "direct";
    compute->add_option("--graph", graph_path, "digraph JSON file")->required();
    compute->add_option("--basis", basis, "M, F, m, e or p")
        ->check(CLI::IsMember({"M", "F", "m", "e", "p"}));
    compute->add_option("--method", method, "direct, f-basis, p-basis or series")
        ->check(CLI::IsMember({"direct", "f-basis", "p-basis", "series"}));
    add_common(compute);

    // classify
    auto* classify = app.add_subcommand("classify", "orientation/symmetry report");
    std::string classify_path;
    classify->add_option("--graph", classify_path, "digraph JSON file")->required();
    add_common(classify);

    // family
    auto* family = app.add_subcommand("family", "generate a family digraph");
    std::string kind = "interval", out_path;
    int fam_n = 0, fam_r = 0;
    family->add_option("--kind", kind, "interval, circular, path or cycle")
        ->check(CLI::IsMember({"interval", "circular", "path", "cycle"}));
    family->add_option("--n", fam_n, "vertex count")->required();
    family->add_option("--r", fam_r, "band width (interval/circular)");
    family->add_option("-o,--out", out_path, "write to file instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "run a theorem-verification suite");
    std::string suite;
    VerifyContext ctx;
    ctx.samples = -1;
    verify
        ->add_option("suite", suite,
                     "f-basis, p-basis, cycle-p, cycle-e, sinks, ao-lambda or conjecture")
        ->required();
    verify->add_option("--max-n", ctx.max_n, "largest vertex count to test");
    verify->add_option("--samples", ctx.samples, "number of random samples");
    verify->add_option("--seed", ctx.seed, "seed for the random samples");
    verify->add_option("--family", ctx.family, "conjecture family: interval, circular, both")
        ->check(CLI::IsMember({"interval", "circular", "both"}));
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (compute->parsed()) {
        emit(compute_command(load_digraph(graph_path), basis, method, opts), out);
        return kExitOk;
    }
    if (classify->parsed()) return classify_command(load_digraph(classify_path), opts, out);
    if (family->parsed()) {
        const FamilyKind fk = family_kind_from_string(kind);
        if (fam_r == 0 && (fk == FamilyKind::interval || fk == FamilyKind::circular))
            throw InvalidInputError("--r is required for the interval and circular families");
        const json j = digraph_to_json(family_digraph(fk, fam_n, fam_r));
        if (out_path.empty()) {
            std::cout << j.dump(2) << "\n";
        } else {
            std::ofstream f(out_path);
            if (!f) throw InvalidInputError("cannot write '" + out_path + "'");
            f << j.dump(2) << "\n";
        }
        return kExitOk;
    }
    if (verify->parsed()) {
        ctx.opts = opts;
        return verify_command(suite, ctx, out);
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const NotSymmetricError& e) {
        json j;
        j["error"] = "not-symmetric";
        j["witness"] = {{"a", e.a}, {"b", e.b}, {"t_degree", e.t_degree}};
        std::cerr << j.dump(2) << "\n";
        return kExitNotSymmetric;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
