#include "classnum/cli.hpp"

#include "classnum/arithmetic.hpp"
#include "classnum/bound.hpp"
#include "classnum/congruence.hpp"
#include "classnum/datasets.hpp"
#include "classnum/expression.hpp"
#include "classnum/towers.hpp"
#include "classnum/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace classnum::cli {

namespace {

Integer parse_integer(const std::string& text, const std::string& what)
{
    std::size_t digits = !text.empty() && (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (digits == text.size() ||
        text.find_first_not_of("0123456789", digits) != std::string::npos)
        throw CLI::ValidationError(what, "'" + text + "' is not an integer");
    return Integer(text);
}

Integer parse_positive(const std::string& text, const std::string& what)
{
    Integer v = parse_integer(text, what);
    if (v < 1)
        throw CLI::ValidationError(what, "must be positive");
    return v;
}

Integer parse_prime(const std::string& text, const std::string& what)
{
    Integer v = parse_positive(text, what);
    if (!is_prime(v))
        throw CLI::ValidationError(what, "'" + text + "' is not prime");
    return v;
}

unsigned parse_small(const std::string& text, const std::string& what)
{
    Integer v = parse_positive(text, what);
    if (v > 1'000'000)
        throw CLI::ValidationError(what, "is implausibly large");
    return static_cast<unsigned>(v.get_ui());
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Congruence checks on prime factors of class numbers"};
    app.name("classnum");
    app.require_subcommand(1);

    std::string arg_n, arg_p, arg_q, arg_expr, arg_rank, arg_n1, arg_degree, arg_disc;
    std::string arg_tower, arg_subfield, arg_family, arg_format = "tsv";
    std::vector<std::string> arg_datasets;
    bool flag_ceil = false;

    auto* c_factor = app.add_subcommand("factor", "Factor an integer n >= 2");
    c_factor->add_option("n", arg_n, "integer to factor")->required();

    auto* c_phi = app.add_subcommand("phi", "Euler totient of n >= 1");
    c_phi->add_option("n", arg_n, "totient argument")->required();

    auto* c_order = app.add_subcommand("order", "Multiplicative order of p modulo q");
    c_order->add_option("p", arg_p, "base")->required();
    c_order->add_option("q", arg_q, "modulus")->required();

    auto* c_eval = app.add_subcommand("eval", "Evaluate a class-number factor expression");
    c_eval->add_option("expr", arg_expr, "expression, e.g. \"2^3.29+1\"")->required();

    auto* c_hbound = app.add_subcommand("hbound", "Geometric class-number bound H_F");
    c_hbound->add_option("--degree", arg_degree, "degree m of F over the rationals")->required();
    c_hbound->add_option("--disc", arg_disc, "discriminant of F (nonzero)")->required();
    c_hbound->add_flag("--ceil", flag_ceil, "print the integer ceiling instead");

    auto* c_check = app.add_subcommand("check", "Coprimality trichotomy for p at rank r");
    c_check->add_option("--p", arg_p, "prime dividing the class number")->required();
    c_check->add_option("--rank", arg_rank, "p-rank of the class group")->required();
    c_check->add_option("--n1", arg_n1, "odd part of the degree")->required();
    auto* opt_subfield = c_check->add_option("--subfield-h", arg_subfield,
                                             "known class number of the 2-power subfield");

    auto* c_descend = app.add_subcommand("descend", "Trace the descent through a cyclic tower");
    c_descend->add_option("--tower", arg_tower, "tower literal base:q1,q2,...")->required();
    c_descend->add_option("--p", arg_p, "prime dividing the class number")->required();
    c_descend->add_option("--rank", arg_rank, "p-rank of the class group")->required();

    auto* c_verify = app.add_subcommand("verify", "Verify datasets against the theorems");
    c_verify->add_option("--dataset", arg_datasets, "dataset file (default: bundled tables)");
    c_verify->add_option("--family", arg_family, "restrict to one family");
    c_verify->add_option("--format", arg_format, "report format")
        ->check(CLI::IsMember({"tsv", "text"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }

    try {
        if (c_factor->parsed()) {
            for (const auto& [p, e] : factor(parse_integer(arg_n, "n")))
                out << to_string(p) << ' ' << e << '\n';
            return exit_ok;
        }
        if (c_phi->parsed()) {
            out << to_string(euler_phi(parse_integer(arg_n, "n"))) << '\n';
            return exit_ok;
        }
        if (c_order->parsed()) {
            Integer p = parse_positive(arg_p, "p");
            Integer q = parse_positive(arg_q, "q");
            out << to_string(multiplicative_order(p, q)) << '\n';
            return exit_ok;
        }
        if (c_eval->parsed()) {
            out << to_string(evaluate_expression(arg_expr).value) << '\n';
            return exit_ok;
        }
        if (c_hbound->parsed()) {
            BoundInput input;
            input.degree = parse_small(arg_degree, "--degree");
            input.discriminant = parse_integer(arg_disc, "--disc");
            BoundValue bound = class_number_bound(input);
            if (bound.degenerate)
                err << "warning: degenerate bound (|D| = 1 with m >= 2 gives H_F = 0)\n";
            if (flag_ceil)
                out << to_string(bound.integer_ceiling) << '\n';
            else
                out << bound.real_value.decimal(12) << '\n';
            return exit_ok;
        }
        if (c_check->parsed()) {
            Integer p = parse_prime(arg_p, "--p");
            unsigned r = parse_small(arg_rank, "--rank");
            Integer n1 = parse_positive(arg_n1, "--n1");
            std::optional<Integer> subfield_h;
            if (opt_subfield->count())
                subfield_h = parse_positive(arg_subfield, "--subfield-h");
            Theorem1Result result = analyze_theorem1(RankData{p, r, r}, n1, subfield_h);
            out << "verdict: " << to_string(result.verdict);
            if (result.verdict.kind() == VerdictKind::SubfieldDivisibility)
                out << (result.subfield_confirmed ? " (confirmed)" : " (h(K) unknown)");
            out << '\n';
            return result.verdict.is_violation() ? exit_violation : exit_ok;
        }
        if (c_descend->parsed()) {
            CyclicTower tower = parse_tower_literal(arg_tower);
            Integer p = parse_prime(arg_p, "--p");
            unsigned r = parse_small(arg_rank, "--rank");
            DescentTrace trace = descend(tower, p, r);
            for (const DescentStep& step : trace.steps) {
                out << "q=" << to_string(step.q) << " f="
                    << (step.order ? to_string(*step.order) : std::string("-")) << ' '
                    << (step.outcome == StepOutcome::WitnessHere ? "witness-here" : "pushed-down")
                    << '\n';
            }
            out << "verdict: " << to_string(trace.final) << '\n';
            return trace.final.is_violation() ? exit_violation : exit_ok;
        }
        if (c_verify->parsed()) {
            std::vector<FieldRecord> records;
            if (arg_datasets.empty()) {
                records = all_bundled_records();
            } else {
                for (const std::string& path : arg_datasets) {
                    std::ifstream in(path);
                    if (!in) {
                        err << "error: cannot open dataset '" << path << "'\n";
                        return exit_error;
                    }
                    auto loaded = parse_dataset(in, path);
                    records.insert(records.end(), std::make_move_iterator(loaded.begin()),
                                   std::make_move_iterator(loaded.end()));
                }
            }
            if (!arg_family.empty()) {
                auto family = family_from_string(arg_family);
                if (!family) {
                    err << "error: unknown family '" << arg_family << "'\n";
                    return exit_error;
                }
                std::erase_if(records,
                              [&](const FieldRecord& r) { return r.family != *family; });
            }
            VerificationReport report = verify_records(records);
            out << (arg_format == "text" ? report_text(report) : report_tsv(report));
            return report.has_violation() ? exit_violation : exit_ok;
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    } catch (const DatasetError& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}

} // namespace classnum::cli
