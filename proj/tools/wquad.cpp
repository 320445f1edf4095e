// wquad -- command line front end for the weighted one-point quadrature
// library: registry listing, inequality checks, composite/adaptive
// integration with a-priori bounds, derivation audits, randomized
// verification suites and the closed-form special-means cases.
//
// Exit codes: 0 success; 1 when --strict was given and a violation was
// found; 2 for invalid input or any evaluation error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wquad/bounds.hpp"
#include "wquad/funcspace.hpp"
#include "wquad/interval.hpp"
#include "wquad/kernel.hpp"
#include "wquad/means.hpp"
#include "wquad/quadrature.hpp"
#include "wquad/report_io.hpp"
#include "wquad/verify.hpp"

namespace {

void print(const std::string& text) { std::cout << text; }

wquad::Xi make_xi(const std::string& rule, const wquad::Partition& part,
                  std::uint64_t seed) {
    if (rule == "midpoint") return wquad::Xi::midpoints(part);
    if (rule == "left") return wquad::Xi::left(part);
    if (rule == "right") return wquad::Xi::right(part);
    if (rule == "random") return wquad::Xi::random(part, seed);
    throw std::invalid_argument("unknown evaluation-point rule '" + rule +
                                "' (expected midpoint, left, right or random)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "wquad: weighted one-point quadrature rules, a-priori error bounds "
        "and inequality checking"};
    app.require_subcommand(1);

    // --- list ------------------------------------------------------------
    auto* list_cmd = app.add_subcommand(
        "list", "Print registered functions, weights, inequalities, suites and cases");
    std::string list_format = "json";
    list_cmd->add_option("--format", list_format, "json or csv")
        ->capture_default_str();

    // --- check -----------------------------------------------------------
    auto* check_cmd =
        app.add_subcommand("check", "Evaluate both sides of one inequality instance");
    std::string ck_ineq;
    check_cmd->add_option("--ineq", ck_ineq, "Inequality id, e.g. 2.6 or UNWEIGHTED_2_6")
        ->required();
    std::string ck_fn;
    check_cmd->add_option("--function", ck_fn, "Registered function id")->required();
    std::optional<double> ck_p;
    check_cmd->add_option("--p", ck_p, "Exponent for pow_p_half");
    std::string ck_weight = "unit";
    check_cmd->add_option("--weight", ck_weight, "Registered weight id")
        ->capture_default_str();
    double ck_a = 0.0;
    double ck_b = 0.0;
    check_cmd->add_option("--a", ck_a, "Left endpoint")->required();
    check_cmd->add_option("--b", ck_b, "Right endpoint")->required();
    std::optional<double> ck_x;
    check_cmd->add_option(
        "--x", ck_x,
        "Evaluation point; required by the pointwise inequalities, ignored by 2.7/2.8");
    std::string ck_mode = "paper";
    check_cmd->add_option("--mode", ck_mode, "Correction coefficient: paper or exact")
        ->capture_default_str();
    std::string ck_format = "json";
    check_cmd->add_option("--format", ck_format, "json or csv")->capture_default_str();
    bool ck_strict = false;
    check_cmd->add_flag("--strict", ck_strict, "Exit 1 when the instance is violated");

    // --- integrate --------------------------------------------------------
    auto* int_cmd = app.add_subcommand(
        "integrate",
        "Composite or adaptive weighted integration with the a-priori bound");
    std::string in_fn;
    int_cmd->add_option("--function", in_fn, "Registered function id")->required();
    std::optional<double> in_p;
    int_cmd->add_option("--p", in_p, "Exponent for pow_p_half");
    std::string in_weight = "unit";
    int_cmd->add_option("--weight", in_weight, "Registered weight id")
        ->capture_default_str();
    double in_a = 0.0;
    double in_b = 0.0;
    int_cmd->add_option("--a", in_a, "Left endpoint")->required();
    int_cmd->add_option("--b", in_b, "Right endpoint")->required();
    int in_n = 0;
    double in_tol = 0.0;
    auto* scheme = int_cmd->add_option_group("scheme", "Exactly one of --n / --tol");
    auto* in_n_opt = scheme->add_option("--n", in_n, "Uniform composite rule with n cells");
    auto* in_tol_opt =
        scheme->add_option("--tol", in_tol, "Adaptive refinement down to this bound");
    scheme->require_option(1);
    std::string in_xi = "midpoint";
    int_cmd->add_option("--xi", in_xi,
                        "Evaluation points for --n runs: midpoint, left, right or random")
        ->capture_default_str();
    std::uint64_t in_seed = 0;
    int_cmd->add_option("--seed", in_seed, "Seed for --xi random")->capture_default_str();
    std::string in_mode = "paper";
    int_cmd->add_option("--mode", in_mode, "Correction coefficient: paper or exact")
        ->capture_default_str();
    std::string in_format = "json";
    int_cmd->add_option("--format", in_format, "json or csv")->capture_default_str();

    // --- converge ----------------------------------------------------------
    auto* conv_cmd = app.add_subcommand(
        "converge", "Error-vs-bound table over uniform partitions (midpoint points)");
    std::string cv_fn;
    conv_cmd->add_option("--function", cv_fn, "Registered function id")->required();
    std::optional<double> cv_p;
    conv_cmd->add_option("--p", cv_p, "Exponent for pow_p_half");
    std::string cv_weight = "unit";
    conv_cmd->add_option("--weight", cv_weight, "Registered weight id")
        ->capture_default_str();
    double cv_a = 0.0;
    double cv_b = 0.0;
    conv_cmd->add_option("--a", cv_a, "Left endpoint")->required();
    conv_cmd->add_option("--b", cv_b, "Right endpoint")->required();
    std::vector<int> cv_ns;
    conv_cmd->add_option("--ns", cv_ns, "Comma-separated cell counts, e.g. 1,2,4,8")
        ->required()
        ->delimiter(',');
    std::string cv_mode = "paper";
    conv_cmd->add_option("--mode", cv_mode, "Correction coefficient: paper or exact")
        ->capture_default_str();
    std::string cv_format = "json";
    conv_cmd->add_option("--format", cv_format, "json or csv")->capture_default_str();

    // --- audit -------------------------------------------------------------
    auto* audit_cmd = app.add_subcommand(
        "audit", "Audit the three derivation steps at a concrete (f, w, [a,b], x)");
    std::string au_fn;
    audit_cmd->add_option("--function", au_fn, "Registered function id")->required();
    std::optional<double> au_p;
    audit_cmd->add_option("--p", au_p, "Exponent for pow_p_half");
    std::string au_weight = "unit";
    audit_cmd->add_option("--weight", au_weight, "Registered weight id")
        ->capture_default_str();
    double au_a = 0.0;
    double au_b = 0.0;
    double au_x = 0.0;
    audit_cmd->add_option("--a", au_a, "Left endpoint")->required();
    audit_cmd->add_option("--b", au_b, "Right endpoint")->required();
    audit_cmd->add_option("--x", au_x, "Evaluation point")->required();
    std::string au_format = "json";
    audit_cmd->add_option("--format", au_format, "json or csv")->capture_default_str();

    // --- verify ------------------------------------------------------------
    auto* ver_cmd = app.add_subcommand(
        "verify", "Run a randomized checking suite and tally violations");
    std::string ve_suite;
    ver_cmd->add_option("--suite", ve_suite,
                        "unweighted_default or weighted_invsqrt")
        ->required();
    int ve_samples = 200;
    ver_cmd->add_option("--samples", ve_samples, "Number of random samples")
        ->capture_default_str();
    std::uint64_t ve_seed = 42;
    ver_cmd->add_option("--seed", ve_seed, "RNG seed")->capture_default_str();
    std::string ve_format = "json";
    ver_cmd->add_option("--format", ve_format, "json or csv")->capture_default_str();
    bool ve_strict = false;
    ver_cmd->add_flag("--strict", ve_strict, "Exit 1 when any violation was recorded");

    // --- means -------------------------------------------------------------
    auto* means_cmd = app.add_subcommand(
        "means", "Closed-form special-means instances C3_1 .. C3_6");
    std::string me_case;
    means_cmd->add_option("--case", me_case, "Case id, e.g. C3_4")->required();
    double me_a = 0.0;
    double me_b = 0.0;
    means_cmd->add_option("--a", me_a, "Left endpoint (positive)")->required();
    means_cmd->add_option("--b", me_b, "Right endpoint (positive)")->required();
    std::optional<double> me_x;
    means_cmd->add_option("--x", me_x,
                          "Evaluation point; required by C3_1/C3_3/C3_5, ignored otherwise");
    std::optional<double> me_p;
    means_cmd->add_option("--p", me_p, "Exponent; required by C3_5/C3_6");
    std::string me_format = "json";
    means_cmd->add_option("--format", me_format, "json or csv")->capture_default_str();
    bool me_strict = false;
    means_cmd->add_flag("--strict", me_strict, "Exit 1 when the instance is violated");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        using namespace wquad;
        if (*list_cmd) {
            print(parse_format(list_format) == OutputFormat::Json ? registry_json()
                                                                  : registry_csv());
            return 0;
        }
        if (*check_cmd) {
            const InequalityId id = parse_inequality(ck_ineq);
            const TestFunction fn = function(ck_fn, ck_p);
            const Weight& wt = weight(ck_weight);
            const Interval iv = make_interval(ck_a, ck_b);
            const BoundReport report =
                evaluate_bound(id, fn, wt, iv, ck_x, parse_mode(ck_mode));
            print(parse_format(ck_format) == OutputFormat::Json ? to_json(report)
                                                                : to_csv(report));
            return (ck_strict && !report.holds) ? 1 : 0;
        }
        if (*int_cmd) {
            const TestFunction fn = function(in_fn, in_p);
            const Weight& wt = weight(in_weight);
            const Interval iv = make_interval(in_a, in_b);
            const CorrectionMode mode = parse_mode(in_mode);
            QuadratureResult result;
            if (in_n_opt->count() > 0) {
                const Partition part = Partition::uniform(iv, in_n);
                result = composite_run(fn, wt, part, make_xi(in_xi, part, in_seed), mode);
            } else {
                (void)*in_tol_opt;
                result = adaptive_integrate(fn, wt, iv, in_tol, mode);
            }
            print(parse_format(in_format) == OutputFormat::Json ? to_json(result)
                                                                : to_csv(result));
            return 0;
        }
        if (*conv_cmd) {
            const TestFunction fn = function(cv_fn, cv_p);
            const Weight& wt = weight(cv_weight);
            const Interval iv = make_interval(cv_a, cv_b);
            const std::vector<QuadratureResult> rows =
                convergence_table(fn, wt, iv, cv_ns, parse_mode(cv_mode));
            print(parse_format(cv_format) == OutputFormat::Json ? to_json(rows)
                                                                : to_csv(rows));
            return 0;
        }
        if (*audit_cmd) {
            const TestFunction fn = function(au_fn, au_p);
            const Weight& wt = weight(au_weight);
            const Interval iv = make_interval(au_a, au_b);
            const std::vector<ProofStepAudit> steps =
                audit_proof_steps(fn, wt, iv, au_x);
            print(parse_format(au_format) == OutputFormat::Json ? to_json(steps)
                                                                : to_csv(steps));
            return 0;
        }
        if (*ver_cmd) {
            const SuiteReport report =
                run_suite(parse_suite(ve_suite), ve_samples, ve_seed);
            print(parse_format(ve_format) == OutputFormat::Json ? to_json(report)
                                                                : to_csv(report));
            return (ve_strict && report.violations() > 0) ? 1 : 0;
        }
        if (*means_cmd) {
            const BoundReport report =
                means_case(parse_case(me_case), me_a, me_b, me_x, me_p);
            print(parse_format(me_format) == OutputFormat::Json ? to_json(report)
                                                                : to_csv(report));
            return (me_strict && !report.holds) ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
