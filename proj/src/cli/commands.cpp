#include "cuspgroup/cli.hpp"

#include "cuspgroup/cuspidal_group.hpp"
#include "cuspgroup/divisor_expr.hpp"
#include "cuspgroup/divisor_orders.hpp"
#include "cuspgroup/invariant_suite.hpp"
#include "cuspgroup/number_theory.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <thread>

namespace cuspgroup::cli {

using nlohmann::ordered_json;

namespace {

// Raised for a failed self-check inside a command (exit code 3).
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OutputRecord record_for(const CurveContext& ctx, const std::string& command)
{
    return {ctx.p(), ctx.alpha(), ctx.beta(), command, ordered_json::object()};
}

ordered_json exponents_json(const UnitExponents& u)
{
    ordered_json j;
    if (u.is_integral()) {
        j["e"] = json_integers(to_integers(u.e));
        j["f"] = json_integers(to_integers(u.f));
    } else {
        j["e"] = json_rationals(u.e);
        j["f"] = json_rationals(u.f);
    }
    return j;
}

OutputRecord ctx_record(const CurveContext& ctx)
{
    auto r = record_for(ctx, "ctx");
    r.payload["n"] = ctx.n();
    r.payload["a"] = json_rationals(ctx.a());
    r.payload["small_prime_warning"] = ctx.small_prime_warning();
    return r;
}

OutputRecord units_record(const CurveContext& ctx, const std::string& basis)
{
    const std::size_t n = ctx.n();
    std::vector<UnitExponents> units;
    std::vector<std::string> names;
    if (basis == "full") {
        units = basis_full(ctx);
        for (std::size_t i = 0; i < n; ++i)
            names.push_back("G" + std::to_string(i));
        for (std::size_t i = 1; i < n; ++i)
            names.push_back("H" + std::to_string(i));
    } else {
        units = basis == "infty" ? basis_infty(ctx) : basis_rational(ctx);
        for (std::size_t i = 1; i <= units.size(); ++i)
            names.push_back("I" + std::to_string(i));
    }
    auto r = record_for(ctx, "units");
    r.payload["basis"] = basis;
    auto arr = ordered_json::array();
    for (std::size_t k = 0; k < units.size(); ++k) {
        ordered_json u;
        u["name"] = names[k];
        const auto ex = exponents_json(units[k]);
        u["e"] = ex["e"];
        u["f"] = ex["f"];
        u["divisor"] = format_divisor(to_expr(divisor_of(ctx, units[k])));
        arr.push_back(std::move(u));
    }
    r.payload["units"] = std::move(arr);
    return r;
}

OutputRecord group_record(const CurveContext& ctx, bool rational, const std::string& command)
{
    const auto g = rational ? rational_group_structure(ctx) : group_structure(ctx);
    auto r = record_for(ctx, command);
    r.payload["lattice"] = rational ? "infty" : "full";
    r.payload["invariant_factors"] = json_integers(g.invariant_factors);
    r.payload["order"] = json_integer(g.order);
    return r;
}

OutputRecord order_record(const CurveContext& ctx, const std::string& text, const std::string& method)
{
    const auto expr = parse_divisor(text, ctx.n());
    const auto d = to_cusp_divisor(expr, ctx.n());
    auto r = record_for(ctx, "order");
    r.payload["divisor"] = format_divisor(expr);
    r.payload["method"] = method;

    std::optional<Integer> closed, oracle;
    if (method != "snf") {
        const auto cert = order_closed_form_generic(ctx, d);
        closed = cert.order;
        ordered_json c;
        c["order"] = json_integer(cert.order);
        c["lcm_denominators"] = json_integer(cert.denominator_lcm);
        const auto& cg = *cert.congruences;
        c["D1"] = json_integer(cg.d1);
        c["D2"] = json_integer(cg.d2);
        c["D3"] = json_integer(cg.d3);
        c["n1"] = json_integer(cg.n1);
        c["n2"] = json_integer(cg.n2);
        c["n3"] = json_integer(cg.n3);
        c["witness"] = exponents_json(cert.witness);
        r.payload["closed_form"] = std::move(c);
    }
    if (method != "closed") {
        oracle = order_in_group(ctx, d);
        ordered_json g;
        g["order"] = json_integer(*oracle);
        g["invariant_factors"] = json_integers(group_structure(ctx).invariant_factors);
        g["coordinates"] = json_integers(class_coordinates(ctx, d));
        r.payload["group"] = std::move(g);
    }
    r.payload["order"] = json_integer(closed ? *closed : *oracle);
    if (closed && oracle) {
        r.payload["agree"] = *closed == *oracle;
        if (*closed != *oracle)
            throw CheckFailed("closed-form order " + closed->get_str() + " differs from group order " +
                              oracle->get_str());
    }
    return r;
}

std::vector<OutputRecord> table_records(std::uint64_t from, std::uint64_t to, bool rational)
{
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = std::max<std::uint64_t>(from, 5); p <= to; ++p)
        if (is_prime(p))
            primes.push_back(p);

    std::vector<std::optional<OutputRecord>> slots(primes.size());
    std::vector<std::exception_ptr> errors(primes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < primes.size(); k = next++) {
            try {
                slots[k] = group_record(make_context(primes[k]), rational, "table");
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const std::size_t threads =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(primes.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    std::vector<OutputRecord> out;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        if (errors[k])
            std::rethrow_exception(errors[k]);
        out.push_back(std::move(*slots[k]));
    }
    return out;
}

OutputRecord verify_record(const CurveContext& ctx, bool& all_ok)
{
    auto r = record_for(ctx, "verify");
    auto arr = ordered_json::array();
    all_ok = true;
    for (const auto& c : run_invariant_suite(ctx)) {
        all_ok = all_ok && c.ok;
        arr.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    }
    r.payload["checks"] = std::move(arr);
    r.payload["ok"] = all_ok;
    return r;
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::Usage:
        return 1;
    default:
        return 2;
    }
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cuspidal divisor class groups of X1(p)", "cuspgroup"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string format_name = "text";
    std::string out_path;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "Write output to this file instead of stdout");

    std::uint64_t p = 0;
    std::optional<std::uint64_t> alpha;
    auto add_prime = [&](CLI::App* sub) {
        sub->add_option("--p", p, "Prime level")->required();
        sub->add_option("--alpha", alpha, "Primitive root (default: smallest)");
    };

    auto* ctx_cmd = app.add_subcommand("ctx", "Print the context: n, alpha, beta and the Bernoulli vector");
    add_prime(ctx_cmd);

    std::string basis = "full";
    auto* units_cmd = app.add_subcommand("units", "Print a unit basis with exponents and divisors");
    add_prime(units_cmd);
    units_cmd->add_option("--basis", basis, "full | infty | rational")
        ->check(CLI::IsMember({"full", "infty", "rational"}))
        ->capture_default_str();

    bool rational = false;
    auto* group_cmd = app.add_subcommand("group", "Invariant factors of the cuspidal group");
    add_prime(group_cmd);
    group_cmd->add_flag("--rational", rational, "Use the rational subgroup");

    std::string divisor_text, method = "both";
    auto* order_cmd = app.add_subcommand("order", "Order of a cuspidal divisor class");
    add_prime(order_cmd);
    order_cmd->add_option("--divisor", divisor_text, "Divisor, e.g. \"P0 - Q0\"")->required();
    order_cmd->add_option("--method", method, "closed | snf | both")
        ->check(CLI::IsMember({"closed", "snf", "both"}))
        ->capture_default_str();

    std::uint64_t from = 0, to = 0;
    auto* table_cmd = app.add_subcommand("table", "One group record per prime in a range");
    table_cmd->add_option("--from", from, "First prime")->required();
    table_cmd->add_option("--to", to, "Last prime")->required();
    table_cmd->add_flag("--rational", rational, "Use the rational subgroup");

    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite for one prime");
    add_prime(verify_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    const Format format = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Text;
    int status = 0;
    std::vector<OutputRecord> records;
    try {
        if (*table_cmd) {
            if (from > to)
                throw MathError(ErrorKind::Usage, "--from must not exceed --to");
            records = table_records(from, to, rational);
        } else {
            const auto ctx = make_context(p, alpha);
            if (*ctx_cmd)
                records.push_back(ctx_record(ctx));
            else if (*units_cmd)
                records.push_back(units_record(ctx, basis));
            else if (*group_cmd)
                records.push_back(group_record(ctx, rational, "group"));
            else if (*order_cmd)
                records.push_back(order_record(ctx, divisor_text, method));
            else if (*verify_cmd) {
                bool ok = true;
                records.push_back(verify_record(ctx, ok));
                status = ok ? 0 : 3;
            }
        }
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const CheckFailed& e) {
        err << "check failed: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        err << "invariant violated: " << e.what() << "\n";
        return 3;
    }

    const std::string text = render(records, format);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file || !(file << text)) {
            err << "error: cannot write " << out_path << "\n";
            return 1;
        }
    }
    return status;
}

} // namespace cuspgroup::cli
