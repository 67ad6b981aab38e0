#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gbcode/codes.hpp"

namespace gbcode {

// Code file format (text, '#' starts a comment line):
//
//   q n k
//   poly 1: <f_1 in x1..xk>
//   ...
//   poly n-k: <f_{n-k}>
//
// or, instead of the poly lines,
//
//   words:
//   <q^k rows of n symbols>
//
// Rows are either n digits ("0102") or n integers separated by spaces or
// commas, optionally bracketed ("[0, 1, 0, 2]").

/// Throws Error(kParseError) on malformed text, and the SystematicCode or
/// interpolation errors on semantic problems.
SystematicCode parse_code(std::string_view text);
SystematicCode read_code_file(const std::filesystem::path& path);

/// Always writes the poly form.
std::string format_code(const SystematicCode& code);

}  // namespace gbcode
