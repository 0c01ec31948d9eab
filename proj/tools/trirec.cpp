// trirec: evaluate, cross-check, expand and benchmark three-term recurrence
// solutions. Every subcommand prints one JSON report object on stdout.
// Exit codes: 0 success, 1 computation error (reported as JSON), 2 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "trirec/apps.hpp"
#include "trirec/canonical.hpp"
#include "trirec/closedform.hpp"
#include "trirec/convolve.hpp"
#include "trirec/engines.hpp"
#include "trirec/oracle.hpp"
#include "trirec/rsum.hpp"

namespace {

using nlohmann::json;
using namespace trirec;

class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error("IoError", message) {}
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CoefficientSequence load_coefficients(const std::string& path) {
    return parse_coefficient_spec(read_file(path));
}

std::uint64_t now_ns() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

template <class S>
json render(const S& value) {
    if constexpr (std::is_same_v<S, Rational>) {
        return value.str();
    } else {
        return value;
    }
}

void attach_stats(json& row, const EvalStats& stats) {
    row["terms_evaluated"] = stats.terms_evaluated;
    if (stats.has_grid) row["grid_points"] = stats.grid_points;
}

struct CommonArgs {
    std::string coeffs;
    std::int64_t n = 0;
    std::string method = "iter";
    std::string scalar = "rational";
    std::string a0 = "1";
    std::string a1 = "1";
};

template <class S>
json run_eval(const CoefficientSequence& spec, const CommonArgs& args, const EvalOptions& opts) {
    if (args.n < 0) throw InvalidParams("eval needs --n >= 0");
    const auto d = spec.cast<S>();
    const S a0 = ScalarTraits<S>::from_rational(Rational::parse(args.a0));
    const S a1 = ScalarTraits<S>::from_rational(Rational::parse(args.a1));
    const Method method = parse_method(args.method);
    EvalStats stats;
    const std::uint64_t t0 = now_ns();
    S value = ScalarTraits<S>::zero();
    if (args.a0 == "1" && args.a1 == "1") {
        value = canonical_term(method, d, args.n + 1, opts, &stats);
    } else {
        value = canonical_term_general(method, d, args.n + 1, a0, a1, opts, &stats);
    }
    const std::uint64_t t1 = now_ns();
    json row{{"command", "eval"},
             {"method", method_name(method)},
             {"scalar", ScalarTraits<S>::name()},
             {"n", args.n},
             {"a0", render(a0)},
             {"a1", render(a1)},
             {"value", render(value)},
             {"wall_time_ns", t1 - t0}};
    attach_stats(row, stats);
    return row;
}

json run_compare(const CoefficientSequence& d, std::int64_t n_max, const EvalOptions& opts) {
    if (n_max < 1) throw InvalidParams("compare needs --n-max >= 1");
    const auto iter = iterate_canonical(d, n_max, Rational(1), Rational(1));
    json rows = json::array();
    bool all_equal = true;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const Rational& expect = iter[static_cast<std::size_t>(n + 1)];
        const Rational via_rsum = solve_via_rsum(d, n);
        const Rational via_flat = solve_flat(d, n, opts);
        const Rational via_closed = solve_closed_form(d, n, opts);
        all_equal = all_equal && via_rsum == expect && via_flat == expect && via_closed == expect;
        rows.push_back(json{{"n", n},
                            {"iterative", expect.str()},
                            {"rsum", via_rsum.str()},
                            {"flat", via_flat.str()},
                            {"closed", via_closed.str()}});
    }
    return json{{"command", "compare"}, {"n_max", n_max}, {"rows", rows}, {"all_equal", all_equal}};
}

json run_expand(std::int64_t n) {
    const SparsePolynomial poly = symbolic_solve(n);
    return json{{"command", "expand"},
                {"n", n},
                {"expansion", poly.str()},
                {"term_count", poly.term_count()}};
}

json run_bench(const CoefficientSequence& d, std::int64_t n_max, int repeat,
               const EvalOptions& opts) {
    if (n_max < 1) throw InvalidParams("bench needs --n-max >= 1");
    if (repeat < 1) throw InvalidParams("bench needs --repeat >= 1");
    json rows = json::array();
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (const Method method : kAllMethods) {
            json row{{"n", n}, {"method", method_name(method)}};
            try {
                EvalStats stats;
                Rational value;
                std::uint64_t best = UINT64_MAX;
                for (int r = 0; r < repeat; ++r) {
                    EvalStats run_stats;
                    const std::uint64_t t0 = now_ns();
                    value = canonical_term(method, d, n + 1, opts, &run_stats);
                    const std::uint64_t t1 = now_ns();
                    best = std::min(best, t1 - t0);
                    stats = run_stats;
                }
                row["value"] = value.str();
                row["wall_time_ns"] = best;
                attach_stats(row, stats);
            } catch (const GridTooLarge& e) {
                row["skipped"] = "GridTooLarge";
                row["message"] = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return json{{"command", "bench"}, {"n_max", n_max}, {"repeat", repeat}, {"rows", rows}};
}

json run_cf(const std::string& b0_text, const CoefficientSequence& num,
            const CoefficientSequence& den, std::int64_t depth) {
    const Rational b0 = Rational::parse(b0_text);
    const auto conv = cf_convergents(b0, num, den, depth);
    json rows = json::array();
    for (std::size_t i = 0; i < conv.size(); ++i) {
        const auto& [h, k] = conv[i];
        json row{{"i", i}, {"h", h.str()}, {"k", k.str()}};
        if (!k.is_zero()) {
            const Rational value = h / k;
            row["value"] = value.str();
            row["approx"] = value.to_double();
        } else {
            row["value"] = nullptr;
        }
        rows.push_back(std::move(row));
    }
    return json{{"command", "cf"}, {"b0", b0.str()}, {"k", depth}, {"convergents", rows}};
}

template <class S>
json run_ode(const CoefficientSequence& pot_spec, const std::string& x0_text,
             const std::string& h_text, const std::string& f0_text, const std::string& f1_text,
             std::int64_t steps, const std::string& method, const EvalOptions& opts) {
    const auto pot = pot_spec.cast<S>();
    const S x0 = ScalarTraits<S>::from_rational(Rational::parse(x0_text));
    const S h = ScalarTraits<S>::from_rational(Rational::parse(h_text));
    const S f0 = ScalarTraits<S>::from_rational(Rational::parse(f0_text));
    const S f1 = ScalarTraits<S>::from_rational(Rational::parse(f1_text));
    const auto f = ode_solve(pot, x0, h, f0, f1, steps, parse_method(method), opts);
    json rows = json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const S x = x0 + ScalarTraits<S>::from_integer(static_cast<std::int64_t>(i)) * h;
        rows.push_back(json{{"i", i}, {"x", render(x)}, {"f", render(f[i])}});
    }
    return json{{"command", "ode"},
                {"scalar", ScalarTraits<S>::name()},
                {"method", method_name(parse_method(method))},
                {"steps", steps},
                {"nodes", rows}};
}

template <class S>
json run_general(const CoefficientSequence& a_spec, const CoefficientSequence& b_spec,
                 const std::string& c0_text, const std::string& c1_text, std::int64_t n,
                 const std::string& method, const EvalOptions& opts) {
    const GeneralRecurrence<S> rec(a_spec.cast<S>(), b_spec.cast<S>(),
                                   ScalarTraits<S>::from_rational(Rational::parse(c0_text)),
                                   ScalarTraits<S>::from_rational(Rational::parse(c1_text)));
    EvalStats stats;
    const Method m = parse_method(method);
    const std::uint64_t t0 = now_ns();
    const S value = solve_general(rec, n, m, opts, &stats);
    const std::uint64_t t1 = now_ns();
    json row{{"command", "general"}, {"n", n},          {"method", method_name(m)},
             {"scalar", ScalarTraits<S>::name()},       {"value", render(value)},
             {"wall_time_ns", t1 - t0}};
    attach_stats(row, stats);
    return row;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"three-term recurrence solvers: iterative, recursive-sum, flat and closed form"};
    app.require_subcommand(1);

    std::uint64_t max_grid = 100'000'000;
    bool serial = false;
    int threads = 0;
    app.add_option("--max-grid", max_grid, "grid-point guard for flat/closed evaluation");
    app.add_flag("--serial", serial, "disable the OpenMP grid kernels");
    app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");

    CommonArgs args;
    std::int64_t n_max = 8;
    int repeat = 3;
    std::string b0 = "0";
    std::string num_path;
    std::string den_path;
    std::string pot_path;
    std::string x0 = "0";
    std::string h = "1";
    std::string f0 = "1";
    std::string f1 = "1";
    std::int64_t steps = 1;
    std::string a_path;
    std::string b_path;
    std::string c0 = "1";
    std::string c1 = "1";

    const auto scalar_check = CLI::IsMember({"rational", "float64"});
    const auto method_check = CLI::IsMember({"iter", "iterative", "rsum", "flat", "closed"});

    auto* eval = app.add_subcommand("eval", "evaluate a(n+1) of the canonical relation");
    eval->add_option("--coeffs", args.coeffs, "coefficient spec file")->required();
    eval->add_option("--n", args.n, "order n (reports a(n+1))")->required();
    eval->add_option("--method", args.method)->required()->check(method_check);
    eval->add_option("--scalar", args.scalar)->check(scalar_check);
    eval->add_option("--a0", args.a0, "initial value a(0), default 1");
    eval->add_option("--a1", args.a1, "initial value a(1), default 1");

    auto* compare = app.add_subcommand("compare", "run all four methods and check agreement");
    compare->add_option("--coeffs", args.coeffs)->required();
    compare->add_option("--n-max", n_max)->required();

    auto* expand = app.add_subcommand("expand", "symbolic expansion of a(n+1)");
    expand->add_option("--n", args.n)->required();

    auto* bench = app.add_subcommand("bench", "time every method per order");
    bench->add_option("--coeffs", args.coeffs)->required();
    bench->add_option("--n-max", n_max)->required();
    bench->add_option("--repeat", repeat, "take the best of this many runs");

    auto* cf = app.add_subcommand("cf", "continued fraction convergents");
    cf->add_option("--b0", b0, "integer part")->required();
    cf->add_option("--num", num_path, "partial numerators spec file")->required();
    cf->add_option("--den", den_path, "partial denominators spec file")->required();
    cf->add_option("--k", n_max, "number of levels")->required();

    auto* ode = app.add_subcommand("ode", "finite-difference solve of f'' = U f");
    ode->set_help_flag("--help", "print help");  // frees -h for the step size
    ode->add_option("--potential", pot_path, "U by grid node (spec file)")->required();
    ode->add_option("--x0", x0);
    ode->add_option("--h", h, "grid step")->required();
    ode->add_option("--f0", f0, "f at node 0")->required();
    ode->add_option("--f1", f1, "f at node 1")->required();
    ode->add_option("--steps", steps)->required();
    ode->add_option("--method", args.method)->check(method_check);
    ode->add_option("--scalar", args.scalar)->check(scalar_check);

    auto* general = app.add_subcommand("general", "evaluate W(n) of the general recurrence");
    general->add_option("--a", a_path, "A coefficient spec file")->required();
    general->add_option("--b", b_path, "B coefficient spec file")->required();
    general->add_option("--c0", c0, "W(0)");
    general->add_option("--c1", c1, "W(1)");
    general->add_option("--n", args.n)->required();
    general->add_option("--method", args.method)->required()->check(method_check);
    general->add_option("--scalar", args.scalar)->check(scalar_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif
    EvalOptions opts;
    opts.max_grid = max_grid;
    opts.mode = serial ? ExecMode::serial : ExecMode::parallel;

    try {
        json report;
        if (eval->parsed()) {
            const auto spec = load_coefficients(args.coeffs);
            report = args.scalar == "float64" ? run_eval<double>(spec, args, opts)
                                              : run_eval<Rational>(spec, args, opts);
        } else if (compare->parsed()) {
            report = run_compare(load_coefficients(args.coeffs), n_max, opts);
        } else if (expand->parsed()) {
            report = run_expand(args.n);
        } else if (bench->parsed()) {
            report = run_bench(load_coefficients(args.coeffs), n_max, repeat, opts);
        } else if (cf->parsed()) {
            report = run_cf(b0, load_coefficients(num_path), load_coefficients(den_path), n_max);
        } else if (ode->parsed()) {
            const auto pot = load_coefficients(pot_path);
            report = args.scalar == "float64"
                         ? run_ode<double>(pot, x0, h, f0, f1, steps, args.method, opts)
                         : run_ode<Rational>(pot, x0, h, f0, f1, steps, args.method, opts);
        } else if (general->parsed()) {
            const auto a_spec = load_coefficients(a_path);
            const auto b_spec = load_coefficients(b_path);
            report = args.scalar == "float64"
                         ? run_general<double>(a_spec, b_spec, c0, c1, args.n, args.method, opts)
                         : run_general<Rational>(a_spec, b_spec, c0, c1, args.n, args.method, opts);
        }
        std::cout << report.dump(2) << "\n";
        return 0;
    } catch (const Error& e) {
        std::cout << json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error", {{"code", "Error"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 1;
    }
}
