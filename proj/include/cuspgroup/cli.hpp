#pragma once

#include "cuspgroup/arith.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace cuspgroup::cli {

inline constexpr int kSchemaVersion = 1;

enum class Format { Text, Json, Csv };

/// One emitted record: {schema_version, p, alpha, beta, command, payload}.
struct OutputRecord {
    std::uint64_t p = 0;
    std::uint64_t alpha = 0;
    int beta = 0;
    std::string command;
    nlohmann::ordered_json payload;
};

/// JSON number when |x| <= 2^53, decimal string otherwise.
nlohmann::ordered_json json_integer(const Integer& x);
nlohmann::ordered_json json_integers(std::span<const Integer> xs);
/// Exact rationals are always strings ("-11/60", "5").
nlohmann::ordered_json json_rationals(std::span<const Rational> xs);

/// Renders the records of one command; output ends with a newline.
std::string render(const std::vector<OutputRecord>& records, Format format);

/// Exit codes: 0 success, 1 usage or parse error, 2 math-domain error,
/// 3 failed invariant.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cuspgroup::cli
