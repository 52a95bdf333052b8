#include "fatpoints/cli/spec_parser.hpp"

#include <cctype>
#include <string>

#include "fatpoints/errors.hpp"

namespace fatpoints::cli {

std::vector<int> parse_multiplicities(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> int {
    skip();
    std::size_t start = pos;
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000) throw ParseError(start + 1, "integer too large");
      ++pos;
    }
    if (pos == start) throw ParseError(pos + 1, "expected a positive integer");
    return static_cast<int>(v);
  };
  for (;;) {
    skip();
    std::size_t col = pos + 1;
    int m = number();
    if (m < 1) throw ParseError(col, "multiplicity must be positive");
    int e = 1;
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = number();
    }
    if (out.size() + static_cast<std::size_t>(e) > 100000) throw ParseError(col, "too many points");
    out.insert(out.end(), static_cast<std::size_t>(e), m);
    skip();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(pos + 1, "expected ','");
    ++pos;
  }
  if (out.empty()) throw ParseError(1, "no multiplicities");
  return out;
}

}  // namespace fatpoints::cli
