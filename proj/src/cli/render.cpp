#include "cuspgroup/cli.hpp"

#include <sstream>

namespace cuspgroup::cli {

using nlohmann::ordered_json;

ordered_json json_integer(const Integer& x)
{
    static const Integer limit = Integer(1) << 53;
    if (abs(x) <= limit)
        return x.get_si();
    return x.get_str();
}

ordered_json json_integers(std::span<const Integer> xs)
{
    auto arr = ordered_json::array();
    for (const auto& x : xs)
        arr.push_back(json_integer(x));
    return arr;
}

ordered_json json_rationals(std::span<const Rational> xs)
{
    auto arr = ordered_json::array();
    for (const auto& x : xs)
        arr.push_back(to_string(x));
    return arr;
}

namespace {

std::string scalar(const ordered_json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

std::string joined(const ordered_json& arr, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i)
            out += sep;
        out += scalar(arr[i]);
    }
    return out;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out += ',';
        out += csv_field(fields[i]);
    }
    return out + "\n";
}

std::string group_label(const ordered_json& factors)
{
    if (factors.empty())
        return "trivial";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i)
        out += (i ? " x Z/" : "Z/") + scalar(factors[i]);
    return out;
}

std::string header_line(const OutputRecord& r)
{
    return "p = " + std::to_string(r.p) + ", alpha = " + std::to_string(r.alpha) + ", beta = " +
           std::to_string(r.beta);
}

void text_record(std::ostringstream& os, const OutputRecord& r)
{
    const auto& pl = r.payload;
    if (r.command == "ctx") {
        os << header_line(r) << ", n = " << scalar(pl["n"]) << "\n";
        os << "a = [" << joined(pl["a"], ", ") << "]\n";
        if (pl["small_prime_warning"].get<bool>())
            os << "warning: p < 11, the curve has genus 0\n";
    } else if (r.command == "units") {
        os << header_line(r) << ", basis " << scalar(pl["basis"]) << "\n";
        for (const auto& u : pl["units"]) {
            os << scalar(u["name"]) << ": e = (" << joined(u["e"], ", ") << "), f = (" << joined(u["f"], ", ")
               << ")\n";
            os << "  div = " << scalar(u["divisor"]) << "\n";
        }
    } else if (r.command == "group" || r.command == "table") {
        os << header_line(r) << ": " << group_label(pl["invariant_factors"]) << ", order "
           << scalar(pl["order"]) << (pl["lattice"] == "infty" ? " (rational)" : "") << "\n";
    } else if (r.command == "order") {
        os << header_line(r) << "\n";
        os << "divisor " << scalar(pl["divisor"]) << ": order " << scalar(pl["order"]) << "\n";
        if (pl.contains("closed_form")) {
            const auto& c = pl["closed_form"];
            os << "  closed form: L = " << scalar(c["lcm_denominators"]);
            for (const char* key : {"D1", "D2", "D3", "n1", "n2", "n3"})
                os << ", " << key << " = " << scalar(c[key]);
            os << "\n  witness e = (" << joined(c["witness"]["e"], ", ") << ")\n";
            os << "  witness f = (" << joined(c["witness"]["f"], ", ") << ")\n";
        }
        if (pl.contains("group"))
            os << "  class coordinates (" << joined(pl["group"]["coordinates"], ", ") << ") in "
               << group_label(pl["group"]["invariant_factors"]) << "\n";
        if (pl.contains("agree"))
            os << "  methods agree: " << (pl["agree"].get<bool>() ? "yes" : "NO") << "\n";
    } else if (r.command == "verify") {
        os << header_line(r) << "\n";
        for (const auto& c : pl["checks"])
            os << (c["ok"].get<bool>() ? "  PASS " : "  FAIL ") << scalar(c["name"]) << ": " << scalar(c["detail"])
               << "\n";
        os << (pl["ok"].get<bool>() ? "all checks passed\n" : "some checks failed\n");
    }
}

void csv_records(std::ostringstream& os, const std::vector<OutputRecord>& records)
{
    const std::string& cmd = records.front().command;
    const std::vector<std::string> base = {"p", "alpha", "beta"};
    auto head = [&](std::vector<std::string> extra) {
        auto cols = base;
        cols.insert(cols.end(), extra.begin(), extra.end());
        os << csv_row(cols);
    };
    auto prefix = [](const OutputRecord& r) {
        return std::vector<std::string>{std::to_string(r.p), std::to_string(r.alpha), std::to_string(r.beta)};
    };
    if (cmd == "ctx")
        head({"n", "a"});
    else if (cmd == "units")
        head({"basis", "name", "e", "f", "divisor"});
    else if (cmd == "group" || cmd == "table")
        head({"lattice", "invariant_factors", "order"});
    else if (cmd == "order")
        head({"divisor", "method", "order", "agree"});
    else if (cmd == "verify")
        head({"check", "ok", "detail"});

    for (const auto& r : records) {
        const auto& pl = r.payload;
        auto row = prefix(r);
        if (cmd == "ctx") {
            row.push_back(scalar(pl["n"]));
            row.push_back(joined(pl["a"], ";"));
            os << csv_row(row);
        } else if (cmd == "units") {
            for (const auto& u : pl["units"]) {
                auto line = row;
                line.insert(line.end(), {scalar(pl["basis"]), scalar(u["name"]), joined(u["e"], ";"),
                                         joined(u["f"], ";"), scalar(u["divisor"])});
                os << csv_row(line);
            }
        } else if (cmd == "group" || cmd == "table") {
            row.insert(row.end(), {scalar(pl["lattice"]), joined(pl["invariant_factors"], "x"), scalar(pl["order"])});
            os << csv_row(row);
        } else if (cmd == "order") {
            row.insert(row.end(), {scalar(pl["divisor"]), scalar(pl["method"]), scalar(pl["order"]),
                                   pl.contains("agree") ? (pl["agree"].get<bool>() ? "true" : "false") : ""});
            os << csv_row(row);
        } else if (cmd == "verify") {
            for (const auto& c : pl["checks"]) {
                auto line = row;
                line.insert(line.end(), {scalar(c["name"]), c["ok"].get<bool>() ? "true" : "false",
                                         scalar(c["detail"])});
                os << csv_row(line);
            }
        }
    }
}

} // namespace

std::string render(const std::vector<OutputRecord>& records, Format format)
{
    std::ostringstream os;
    if (records.empty())
        return {};
    switch (format) {
    case Format::Json:
        for (const auto& r : records) {
            ordered_json j;
            j["schema_version"] = kSchemaVersion;
            j["p"] = r.p;
            j["alpha"] = r.alpha;
            j["beta"] = r.beta;
            j["command"] = r.command;
            j["payload"] = r.payload;
            os << j.dump() << "\n";
        }
        break;
    case Format::Csv:
        csv_records(os, records);
        break;
    case Format::Text:
        for (const auto& r : records)
            text_record(os, r);
        break;
    }
    return os.str();
}

} // namespace cuspgroup::cli
