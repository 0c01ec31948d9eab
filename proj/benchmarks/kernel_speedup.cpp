// Times the grid evaluators against each other at one order n:
//   - per-point decode reference (serial)
//   - blocked kernel, serial mode
//   - blocked kernel, OpenMP mode
// plus the iterative and recursive routes for scale. All values are checked
// equal before any timing is reported.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "trirec/closedform.hpp"
#include "trirec/convolve.hpp"
#include "trirec/oracle.hpp"
#include "trirec/rsum.hpp"

using namespace trirec;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grid-kernel speedup: serial reference vs blocked/OpenMP kernels"};
    std::int64_t n = 14;
    int reps = 3;
    app.add_option("--n", n, "order (grid grows ~2^(n/2) (n/2)!)");
    app.add_option("--reps", reps, "best-of repetitions");
    CLI11_PARSE(app, argc, argv);

    const auto d = CoefficientSequence::constant(Rational(Integer(3), Integer(7)));
    EvalOptions serial{.max_grid = 1'000'000'000, .mode = ExecMode::serial, .block = 65'536};
    EvalOptions parallel{.max_grid = 1'000'000'000, .mode = ExecMode::parallel, .block = 65'536};

    const Rational expect = iterate_canonical(d, n, Rational(1), Rational(1)).back();
    const Integer grid = closed_form_grid_points(n);
    std::printf("n = %lld, grid points = %s, value = %s\n", static_cast<long long>(n),
                grid.get_str().c_str(), expect.str().c_str());
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not enabled\n");
#endif

    struct Row {
        const char* name;
        int baseline;  // row index whose time this one is compared against, -1 for none
        std::function<Rational()> run;
    };
    const std::vector<Row> rows{
        {"iterative", -1, [&] { return iterate_canonical(d, n, Rational(1), Rational(1)).back(); }},
        {"rsum (recursive)", -1, [&] { return solve_via_rsum(d, n); }},
        {"flat reference (decode/q)", -1,
         [&] {
             Rational total(1);
             for (std::int64_t p = 1; p <= max_power(n); ++p) {
                 total += rsum_reduced_flat_reference(d, n - 2 * p, p, serial);
             }
             return total;
         }},
        {"closed reference (g_term/q)", -1,
         [&] { return solve_closed_form_reference(d, n, serial); }},
        {"flat kernel, serial", 2, [&] { return solve_flat(d, n, serial); }},
        {"flat kernel, OpenMP", 4, [&] { return solve_flat(d, n, parallel); }},
        {"closed kernel, serial", 3, [&] { return solve_closed_form(d, n, serial); }},
        {"closed kernel, OpenMP", 6, [&] { return solve_closed_form(d, n, parallel); }},
    };

    for (const Row& row : rows) {
        if (row.run() != expect) {
            std::printf("MISMATCH in %s\n", row.name);
            return 1;
        }
    }

    std::vector<double> times(rows.size(), 0.0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        times[i] = time_ms([&] { (void)rows[i].run(); }, reps);
        std::printf("%-28s %12.3f ms", rows[i].name, times[i]);
        if (rows[i].baseline >= 0) {
            std::printf("   x%6.2f vs %s", times[static_cast<std::size_t>(rows[i].baseline)] / times[i],
                        rows[static_cast<std::size_t>(rows[i].baseline)].name);
        }
        std::printf("\n");
    }
    return 0;
}
