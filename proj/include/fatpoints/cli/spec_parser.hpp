#pragma once

#include <string_view>
#include <vector>

namespace fatpoints::cli {

/// "2,2,2" or "2^3,1^4"; throws ParseError with a 1-based column.
std::vector<int> parse_multiplicities(std::string_view text);

}  // namespace fatpoints::cli
