#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "stovar/matrix.hpp"

namespace stovar {

// A parsed matrix in whichever scalar domain the input selected.
using AnyMatrix = std::variant<Matrix<Rational>, Matrix<double>>;

enum class Format { Csv, Json };

// Auto picks the rational domain when any entry is written as "p/q" and
// the float domain otherwise. Exact forces rationals, converting decimal
// literals digit by digit. Float forces doubles.
enum class Domain { Auto, Exact, Float };

const char* domain_name(const AnyMatrix& m);

Format format_from_path(const std::filesystem::path& path);

// CSV: one row per line, comma-separated entries. Blank lines are skipped.
// JSON: {"rows": m, "cols": n, "data": [[...], ...]} with entries given as
// numbers or strings. Throws Error(ParseError) on malformed, ragged or
// empty input.
AnyMatrix parse_matrix(std::string_view text, Format format, Domain domain = Domain::Auto);
AnyMatrix read_matrix(const std::filesystem::path& path, std::optional<Format> format = std::nullopt,
                      Domain domain = Domain::Auto);

// Rational entries are always written as "p/q" (including "1/1") so the
// output parses back into the rational domain; doubles use 17 significant
// digits.
std::string write_matrix(const AnyMatrix& m, Format format);

}  // namespace stovar
