#pragma once
// Shared output-format plumbing for reports and tables.

#include <string>

namespace ontolint {

enum class OutputFormat { Text, Json, Csv };

// RFC 4180 field quoting: quote when the value contains comma, quote, or
// newline; embedded quotes are doubled.
std::string csv_field(const std::string& value);

}  // namespace ontolint
