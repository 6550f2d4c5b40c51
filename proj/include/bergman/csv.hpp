#pragma once

// Minimal CSV helpers: fixed 17-significant-digit floats and RFC 4180 quoting.

#include <string>
#include <string_view>
#include <vector>

namespace bergman::csv {

/// %.17g, so a double survives a text round trip bit for bit.
std::string num(double x);

/// Quote a field when it contains a comma, quote or newline.
std::string field(std::string_view s);

std::string join(const std::vector<std::string>& fields);

/// Split text into rows of fields, honouring quotes. Trailing empty line ignored.
std::vector<std::vector<std::string>> parse(std::string_view text);

}  // namespace bergman::csv
