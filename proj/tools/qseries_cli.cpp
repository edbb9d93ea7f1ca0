// qseries: evaluate expressions, print string functions, run the identity suites.
//
// Exit codes: 0 ok, 1 verify failures, 2 parse error, 3 evaluation error,
// 4 invalid string label, CLI11's own codes for usage errors.

#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include <qseries/expr.hpp>
#include <qseries/render.hpp>
#include <qseries/strings.hpp>
#include <qseries/verify.hpp>

using namespace qseries;
using json = nlohmann::ordered_json;

namespace
{

enum Exit { Ok = 0, VerifyFailed = 1, ParseFailed = 2, EvalFailed = 3, LabelFailed = 4 };

Rational parse_order(const std::string &text)
{
    Rational r;
    if (r.set_str(text, 10) != 0) {
        throw CLI::ValidationError("--order", "not a rational: " + text);
    }
    r.canonicalize();
    if (sgn(r) <= 0) {
        throw CLI::ValidationError("--order", "must be positive");
    }
    return r;
}

void print_caret(const std::string &input, const expr::ParseError &e)
{
    std::cerr << "parse error at " << e.position() << ": expected " << e.expected() << ", found " << e.found()
              << "\n  " << input << "\n  " << std::string(std::min(e.position(), input.size()), ' ') << "^\n";
}

int cmd_eval(const std::string &input, const Rational &order, const std::string &format)
{
    expr::NodePtr ast;
    try {
        ast = expr::parse(input);
    } catch (const expr::ParseError &e) {
        print_caret(input, e);
        return ParseFailed;
    }
    try {
        const QSeries s = expr::evaluate(*ast, order);
        std::cout << (format == "json" ? render_json(s, 2) : render_text(s)) << "\n";
        return Ok;
    } catch (const expr::EvalError &e) {
        std::cerr << "evaluation error in " << e.path() << " (" << e.subexpression() << "): " << e.what() << "\n";
    } catch (const Error &e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
    }
    return EvalFailed;
}

json rational_json(const Rational &r)
{
    return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

int cmd_string(StringLabel lbl, const Rational &order, bool norm, const std::string &format)
{
    std::string note;
    try {
        if (lbl.N >= 1 && lbl.ell >= 0 && lbl.ell <= lbl.N && (lbl.m < 0 || lbl.m >= 2 * lbl.N)) {
            const StringLabel r = symmetry_reduce(lbl);
            note = "label " + to_string(lbl) + " reduced to " + to_string(r) + " by the string symmetries";
            lbl = r;
        }
        const Exponent s = s_exponent(lbl);
        const QSeries series = norm ? normalized(lbl)(order) : calC_hecke(lbl)(order);
        if (format == "json") {
            json out = {{"label", {{"N", lbl.N}, {"ell", lbl.ell}, {"m", lbl.m}}},
                        {"normalized", norm},
                        {"prefactor", norm ? json(nullptr) : rational_json(s)},
                        {"series", json::parse(render_json(series))}};
            if (!note.empty()) {
                out["note"] = note;
            }
            std::cout << out.dump(2) << "\n";
        } else {
            if (!note.empty()) {
                std::cout << "# " << note << "\n";
            }
            const std::string name = "_{" + std::to_string(lbl.m) + "," + std::to_string(lbl.ell) + "}^" +
                                     std::to_string(lbl.N);
            if (norm) {
                std::cout << "q^(-(m^2-l^2)/(4N)) C" << name << " = " << render_text(series) << "\n";
            } else {
                std::cout << "C" << name << " = q^(" << s.get_str() << ") * (" << render_text(series) << ")\n";
            }
        }
        return Ok;
    } catch (const Error &e) {
        std::cerr << e.what() << "\n";
        if (e.kind() == ErrorKind::InvalidLabel || e.kind() == ErrorKind::InvalidParity ||
            e.kind() == ErrorKind::UnsupportedLevel) {
            return LabelFailed;
        }
        return EvalFailed;
    }
}

int cmd_verify(const std::string &suite, const std::string &order, unsigned jobs, const std::string &format,
               const std::string &filter, bool timings)
{
    verify::RunOptions opts;
    if (suite != "all") {
        opts.suite = verify::suite_from_string(suite);
        if (!opts.suite) {
            std::cerr << "unknown suite: " << suite << "\n";
            return static_cast<int>(CLI::ExitCodes::ValidationError);
        }
    }
    if (!order.empty()) {
        opts.order = parse_order(order);
    }
    opts.jobs = jobs;
    opts.filter = filter;
    const auto results = verify::run(opts);
    std::cout << (format == "json" ? verify::report_json(results, timings) : verify::report_text(results, timings));
    long failed = 0;
    for (const auto &r : results) {
        failed += r.status != verify::Status::Pass;
    }
    if (failed > 0) {
        std::cerr << failed << " of " << results.size() << " cases failed\n";
        return VerifyFailed;
    }
    return Ok;
}

int cmd_list(const std::string &filter, const std::string &format)
{
    const auto cases = verify::list_cases(filter);
    if (format == "json") {
        json out = json::array();
        for (const auto &c : cases) {
            out.push_back({{"case_id", c.id}, {"suite", verify::to_string(c.suite)}, {"paper_ref", c.paper_ref}});
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto &c : cases) {
            std::cout << c.id << "\t" << verify::to_string(c.suite) << "\t" << c.paper_ref << "\n";
        }
    }
    return Ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact q-series: theta, Appell-Lerch, Hecke-type sums and A1(1) string functions"};
    app.require_subcommand(1);

    std::string format = "text";
    const auto formats = CLI::IsMember({"text", "json"});

    auto *eval = app.add_subcommand("eval", "Evaluate an expression to a truncated series");
    std::string input, eval_order = "30";
    eval->add_option("expr", input, "Expression, see docs/expr.md")->required();
    eval->add_option("--order", eval_order, "Truncation order (rational > 0)")->capture_default_str();
    eval->add_option("--format", format, "text or json")->check(formats)->capture_default_str();

    auto *str = app.add_subcommand("string", "Print the string function C^N_{m,l}");
    StringLabel lbl{};
    bool norm = false;
    std::string str_order = "30";
    str->add_option("--N", lbl.N, "Level")->required();
    str->add_option("--ell", lbl.ell, "l, 0 <= l <= N")->required();
    str->add_option("--m", lbl.m, "m, m = l mod 2")->required();
    str->add_flag("--normalized", norm, "Print q^(-(m^2-l^2)/(4N)) C instead of q^s * calC");
    str->add_option("--order", str_order, "Truncation order (rational > 0)")->capture_default_str();
    str->add_option("--format", format, "text or json")->check(formats)->capture_default_str();

    auto *ver = app.add_subcommand("verify", "Check the identity registry");
    std::string suite = "all", ver_order, filter;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool timings = false;
    ver->add_option("--suite", suite, "Suite name or all")->capture_default_str();
    ver->add_option("--order", ver_order, "Override every case's order");
    ver->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    ver->add_option("--format", format, "text or json")->check(formats)->capture_default_str();
    ver->add_option("--filter", filter, "Only case ids containing this");
    ver->add_flag("--timings", timings, "Report per-case wall time");

    auto *lst = app.add_subcommand("list", "List registry cases");
    std::string list_filter;
    lst->add_option("--filter", list_filter, "Only case ids containing this");
    lst->add_option("--format", format, "text or json")->check(formats)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) {
            return cmd_eval(input, parse_order(eval_order), format);
        }
        if (*str) {
            return cmd_string(lbl, parse_order(str_order), norm, format);
        }
        if (*ver) {
            return cmd_verify(suite, ver_order, jobs, format, filter, timings);
        }
        return cmd_list(list_filter, format);
    } catch (const CLI::Error &e) {
        return app.exit(e);
    }
}
