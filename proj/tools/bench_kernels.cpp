// Times the serial reference kernels against the OpenMP kernels on the three
// hot sweeps (colorings, permutations, orientations) and verifies that both
// produce identical tallies.

#include <chrono>
#include <cstdio>
#include <string>

#include "cqsf/cqsf.hpp"
#include "cqsf/kernels.hpp"

using namespace cqsf;
using kernels::ExecMode;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Fn>
double timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return seconds_since(start);
}

void report(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-22s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0,
                equal ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int color_n = 8;
    int perm_n = 9;
    int orient_n = 8;
    int jobs = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        const auto next = [&] { return std::stoi(argv[++i]); };
        if (arg == "--color-n") color_n = next();
        else if (arg == "--perm-n") perm_n = next();
        else if (arg == "--orient-n") orient_n = next();
        else if (arg == "--jobs") jobs = next();
        else if (arg == "--quick") { color_n = 7; perm_n = 7; orient_n = 6; }
        else {
            std::fprintf(stderr,
                         "usage: %s [--color-n N] [--perm-n N] [--orient-n N] [--jobs J] "
                         "[--quick]\n",
                         argv[0]);
            return 1;
        }
    }

    bool all_equal = true;

    {
        const Digraph d = directed_cycle(color_n);
        const auto contents = compositions_of(d.n);
        std::vector<std::vector<std::uint64_t>> a, b;
        const double ts =
            timed([&] { a = kernels::coloring_ascent_counts(d, contents, ExecMode::serial); });
        const double tp = timed(
            [&] { b = kernels::coloring_ascent_counts(d, contents, ExecMode::parallel, jobs); });
        report("coloring sweep", ts, tp, a == b);
        all_equal &= (a == b);
    }
    {
        const Digraph d = directed_cycle(perm_n);
        std::vector<std::vector<std::uint64_t>> a, b;
        const double ts = timed([&] { a = kernels::descent_inv_counts(d, ExecMode::serial); });
        const double tp =
            timed([&] { b = kernels::descent_inv_counts(d, ExecMode::parallel, jobs); });
        report("permutation sweep", ts, tp, a == b);
        all_equal &= (a == b);

        const auto lambdas = partitions_of(d.n);
        std::vector<std::vector<std::uint64_t>> c, e;
        const double ts2 =
            timed([&] { c = kernels::n_lambda_inv_counts(d, lambdas, ExecMode::serial); });
        const double tp2 = timed(
            [&] { e = kernels::n_lambda_inv_counts(d, lambdas, ExecMode::parallel, jobs); });
        report("block-membership sweep", ts2, tp2, c == e);
        all_equal &= (c == e);
    }
    {
        const Digraph d = family_digraph(FamilyKind::interval, orient_n, 4);
        const Graph g = d.underlying();
        std::vector<std::vector<std::uint64_t>> a, b;
        const double ts = timed([&] { a = kernels::sink_ascent_counts(g, d, ExecMode::serial); });
        const double tp =
            timed([&] { b = kernels::sink_ascent_counts(g, d, ExecMode::parallel, jobs); });
        report("orientation sweep", ts, tp, a == b);
        all_equal &= (a == b);
    }

    return all_equal ? 0 : 1;
}
